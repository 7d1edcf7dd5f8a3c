from .permutation import Permutation, Code, code, perm_from_code, cross, strip_leading_fixed
from .diagram import Diagram, diagram
from .words import reduced_words, reduced_word_count, apply_word
from .stats import PermStats, perm_stats
from .transition import TransitionData, max_transition
from .report import PermReport, perm_report
