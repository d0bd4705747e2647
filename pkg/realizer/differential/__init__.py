"""Differential layer: IO-equations, realizations and parametrizations.

- types: IOEquation, Realization, Parametrization, Mobius
- operators: D_u and the Lie derivative
- conversion: realization <-> parametrization, change of states
- checks: order obstruction, parametrization shape, verification
- implicit: implicitization of first-order parametrizations
"""

from .checks import (
    check_order_obstruction,
    check_param_shape,
    validate_parametrization,
    verify_realization,
)
from .conversion import (
    corresponding_parametrization,
    jacobian,
    realization_from_parametrization,
    reparametrize_realization,
)
from .implicit import implicitize_curve
from .operators import d_u, lie_derivative
from .types import (
    IOEquation,
    Mobius,
    Parametrization,
    Realization,
    input_level,
    is_mobius,
    mobius_equivalent,
    mobius_from_ratfunc,
    state_names,
)

__all__ = [
    "check_order_obstruction",
    "check_param_shape",
    "validate_parametrization",
    "verify_realization",
    "corresponding_parametrization",
    "jacobian",
    "realization_from_parametrization",
    "reparametrize_realization",
    "implicitize_curve",
    "d_u",
    "lie_derivative",
    "IOEquation",
    "Mobius",
    "Parametrization",
    "Realization",
    "input_level",
    "is_mobius",
    "mobius_equivalent",
    "mobius_from_ratfunc",
    "state_names",
]
