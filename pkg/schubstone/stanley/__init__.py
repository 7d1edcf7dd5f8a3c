from .levels import LevelTracker
from .stable import StableExpansion, stable_expand, stable_product_expand
from .report import StabilityReport, stability_report
from .monk_stable import monk_stable
