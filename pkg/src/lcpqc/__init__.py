"""Index-2 quasi-cyclic/quasi-twisted codes over finite fields.

Construction from polynomial generators, linear-complementary-pair (LCP)
checking through several independent engines, and exact computation of
the security parameter d_lcp = min{d(C), d(D-dual)}.
"""

from .errors import LcpqcError
from .ff import Field, FieldElement
from .kernels import BACKEND
from .lcp import (
    LcpReport,
    constituent_pairs,
    constituents,
    lcp_dc,
    lcp_one_generator,
    lcp_two_generator,
    lcp_via_constituents,
)
from .matrix import GenMatrix
from .oracle import intersection_dim, lcp_oracle
from .poly import (
    Factorization,
    Poly,
    factor_xm_minus_lambda,
    quotient_field,
    reduce_mod,
)
from .qtcode import (
    DistanceResult,
    DlcpResult,
    QtCodeSpec,
    ValidationReport,
    d_lcp,
    generator_matrix,
    min_distance,
    normalize_one_generator,
    validate_standard_form,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DistanceResult",
    "DlcpResult",
    "Factorization",
    "Field",
    "FieldElement",
    "GenMatrix",
    "LcpReport",
    "LcpqcError",
    "Poly",
    "QtCodeSpec",
    "ValidationReport",
    "constituent_pairs",
    "constituents",
    "d_lcp",
    "factor_xm_minus_lambda",
    "generator_matrix",
    "intersection_dim",
    "lcp_dc",
    "lcp_one_generator",
    "lcp_oracle",
    "lcp_two_generator",
    "lcp_via_constituents",
    "min_distance",
    "normalize_one_generator",
    "quotient_field",
    "reduce_mod",
    "validate_standard_form",
]
