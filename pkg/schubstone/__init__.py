import logging

from .errors import (SchubstoneError, NotFoundError, ParseError, InvalidPermutationError, LengthMismatchError,
                     EmptyPolynomialError, NotHomogeneousError, NotSchubertPositiveError, NoDescentError,
                     NotGrassmannianError, VanishingFactorError, BoundError, StabilityError, InternalError,
                     SchubstoneWarning, disable_warnings)
from .perm import *
from .poly import *
from .schubert import *
from .stanley import *
from .mttree import *
from .elem import *
from .formats import *
from .methods import StanleyMethod, METHOD_TRANSITION, METHOD_MT
from .golden import GoldenCheck, GoldenResult, GoldenReport, run_golden


logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)
handler = logging.StreamHandler()
handler.setLevel(logging.DEBUG)
formatter = logging.Formatter('%(name)s: %(levelname)s: %(message)s')
handler.setFormatter(formatter)
logger.addHandler(handler)
