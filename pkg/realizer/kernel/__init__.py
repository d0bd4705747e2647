"""Exact arithmetic foundation for realizer.

This package holds everything the differential layers compute with:
- ring: the fixed variable universe and the ``QQ_I`` polynomial ring
- polyops: gcd, resultant, exact division and factoring
- ratfunc: reduced rational functions and substitution
- linalg: elimination over the rational-function field, scalar RREF
- factor: low-degree factors of plane polynomials
"""

from .factor import LowFactor, factor_low_degree, low_degree_cofactor
from .linalg import RFMatrix, scalar_rref, solve_linear
from .polyops import (
    cofactors,
    content_wrt,
    divides,
    exquo,
    factor_list,
    gcd,
    gcd_list,
    primitive_wrt,
    resultant,
    sqf_part,
)
from .ratfunc import RatFunc, derivative, substitute, substitute_pair, vanishes_at
from .ring import (
    I_UNIT,
    INDEX,
    RING,
    VARIABLES,
    Poly,
    conj,
    const,
    degree,
    depends_on,
    gen,
    is_real,
    normalize,
    scalar,
)

__all__ = [
    "LowFactor",
    "factor_low_degree",
    "low_degree_cofactor",
    "RFMatrix",
    "scalar_rref",
    "solve_linear",
    "cofactors",
    "content_wrt",
    "divides",
    "exquo",
    "factor_list",
    "gcd",
    "gcd_list",
    "primitive_wrt",
    "resultant",
    "sqf_part",
    "RatFunc",
    "derivative",
    "substitute",
    "substitute_pair",
    "vanishes_at",
    "I_UNIT",
    "INDEX",
    "RING",
    "VARIABLES",
    "Poly",
    "conj",
    "const",
    "degree",
    "depends_on",
    "gen",
    "is_real",
    "normalize",
    "scalar",
]
