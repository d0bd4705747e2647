"""Total derivative in the input and Lie derivative along a vector field."""

from __future__ import annotations

from typing import Sequence

from ..kernel.ratfunc import RatFunc
from ..kernel.ring import INPUT_VARS, Poly
from .types import state_names


def d_u(f: RatFunc | Poly) -> RatFunc:
    """``sum_j u^(j+1) * d f / d u^(j)``; state variables are constants here."""
    f = RatFunc.of(f)
    top = INPUT_VARS[-1]
    if f.depends_on((top,)):
        raise ValueError(f"cannot differentiate past {top}")
    result = RatFunc.zero()
    for lower, higher in zip(INPUT_VARS, INPUT_VARS[1:]):
        if f.depends_on((lower,)):
            result = result + RatFunc.var(higher) * f.derivative(lower)
    return result


def lie_derivative(
    q: RatFunc | Poly, p: Sequence[RatFunc | Poly], states: Sequence[str] | None = None
) -> RatFunc:
    """``sum_i p_i * d q / d x_i + D_u(q)``."""
    q = RatFunc.of(q)
    if states is None:
        states = state_names(len(p))
    if len(states) != len(p):
        raise ValueError("one vector-field entry per state variable is required")
    result = d_u(q)
    for name, pi in zip(states, p):
        if q.depends_on((name,)):
            result = result + RatFunc.of(pi) * q.derivative(name)
    return result
