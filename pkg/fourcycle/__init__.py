VERSION = (0, 1, 0)
__version__ = VERSION
__versionstr__ = '.'.join(map(str, VERSION))

from .core import (
    Cycle4, CycleSystem, Colouring, ColouredSystem, ConstructionCase, Params,
    canonicalize, derive_params, order_params,
)
from .constructors import PartLayout, bipartite_family, compose_half, compose_star, cyclic_4cs, starter_blocks
from .decomposer import Decomposition, decompose, enumerate_decompositions, triangle_quad_counts
from .colouring import (
    build, case_for, chromatic_bounds, colour_case_base, colour_case_high,
    colour_case_mid, colour_case_splus1, spectrum_range,
)
from .verifier import (
    VerificationReport, upper_bound, verify_all, verify_colour_count,
    verify_colour_support, verify_cycle_system, verify_equitable, verify_type,
)
from .serializer import DocumentSerializer, deserialize, serialize
from .checker import CheckResult, SpectrumChecker
from .exceptions import *
