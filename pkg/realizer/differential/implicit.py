"""Implicitization of first-order parametrizations."""

from __future__ import annotations

import logging

from ..core.errors import DegenerateParametrization
from ..kernel import polyops
from ..kernel.ratfunc import RatFunc, vanishes_at
from ..kernel.ring import RING, gen, normalize
from .types import IOEquation, Parametrization

logger = logging.getLogger(__name__)


def _graph(component: RatFunc, output: str):
    """``num - y_i * den``: the curve ``y_i = P_i`` cleared of denominators."""
    return component.num - gen(output) * component.den


def implicitize_curve(P: Parametrization) -> IOEquation:
    """The IO-equation F with ``F(P0, P1) = 0`` for a first-order P.

    The resultant in x of the two graphs can carry extraneous factors
    coming from denominators; only irreducible factors that vanish on P are
    kept.
    """
    if P.state_count != 1 or P.order != 1:
        raise ValueError("implicitize_curve needs a parametrization (P0, P1) in x")
    p0, p1 = P[0], P[1]
    const0, const1 = not p0.depends_on(("x",)), not p1.depends_on(("x",))
    if const0 and const1:
        raise DegenerateParametrization("both components are constant in x")
    g0, g1 = _graph(p0, "y0"), _graph(p1, "y1")
    if const0:
        candidate = g0
    elif const1:
        candidate = g1
    else:
        candidate = polyops.resultant(g0, g1, "x")
    if not candidate:
        raise DegenerateParametrization("components are algebraically dependent in x")
    _, factors = polyops.factor_list(candidate)
    bindings = P.bindings()
    F = RING.one
    kept = 0
    for factor, _mult in factors:
        if not factor.is_ground and vanishes_at(factor, bindings):
            F = F * factor
            kept += 1
    if kept == 0:
        raise DegenerateParametrization("no factor of the resultant vanishes on P")
    logger.debug("implicitization kept %d of %d factors", kept, len(factors))
    return IOEquation.from_poly(normalize(F), check=False)
