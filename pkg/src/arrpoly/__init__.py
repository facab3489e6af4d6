"""Exact Tutte, coboundary and characteristic polynomials of rational
hyperplane arrangements, computed by three mutually-verifying engines."""

from .arrangement import (
    Arrangement,
    Hyperplane,
    Subarrangement,
    act,
    canonicalize,
    is_central,
    is_symmetric,
    orbit,
    rank_of,
)
from .egf import TruncatedEGF, egf_mul, family_egf, generalized_convolution_check
from .errors import (
    CapExceededError,
    CertificationError,
    InputError,
    IntegrityAlarm,
    PatternDivergenceError,
    SymmetryError,
    ToolkitError,
)
from .families import FAMILY_NAMES, build_family, family_representatives
from .fq_engine import (
    FqPoint,
    ReducedArrangement,
    certify_prime,
    characteristic_at_prime,
    clear_denominators,
    coboundary_at_prime,
    h_count,
)
from .interpolation import recover_characteristic, recover_coboundary
from .polynomials import (
    BiPoly,
    UniPoly,
    bounded_regions,
    characteristic_from_coboundary,
    regions,
    to_json_dict,
    tutte_from_coboundary,
)
from .subset_engine import coboundary_by_definition, tutte_by_definition
from .symmetric_engine import (
    CanonicalSolution,
    RepresentativeEquation,
    SolutionPartition,
    Stabilizer,
    coboundary_closed_form,
    expand,
    extract_representatives,
    h_symbolic,
    partition_solutions,
    solutions_mod_q,
)

__version__ = "0.1.0"

__all__ = [
    "Arrangement",
    "BiPoly",
    "CanonicalSolution",
    "CapExceededError",
    "CertificationError",
    "FAMILY_NAMES",
    "FqPoint",
    "Hyperplane",
    "InputError",
    "IntegrityAlarm",
    "PatternDivergenceError",
    "ReducedArrangement",
    "RepresentativeEquation",
    "SolutionPartition",
    "Stabilizer",
    "Subarrangement",
    "SymmetryError",
    "ToolkitError",
    "TruncatedEGF",
    "UniPoly",
    "act",
    "bounded_regions",
    "build_family",
    "canonicalize",
    "certify_prime",
    "characteristic_at_prime",
    "characteristic_from_coboundary",
    "clear_denominators",
    "coboundary_at_prime",
    "coboundary_by_definition",
    "coboundary_closed_form",
    "egf_mul",
    "expand",
    "extract_representatives",
    "family_egf",
    "family_representatives",
    "generalized_convolution_check",
    "h_count",
    "h_symbolic",
    "is_central",
    "is_symmetric",
    "orbit",
    "partition_solutions",
    "rank_of",
    "recover_characteristic",
    "recover_coboundary",
    "regions",
    "solutions_mod_q",
    "to_json_dict",
    "tutte_by_definition",
    "tutte_from_coboundary",
]
