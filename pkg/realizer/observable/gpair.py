"""Fiber polynomials and properness of first-order parametrizations.

For ``P_i = n_i/d_i`` the polynomial ``G_i(w, x) = n_i(w) d_i(x) - n_i(x) d_i(w)``
vanishes at ``w = x`` and at every other point of the fiber of ``P_i``
through ``x``. ``G = gcd(G_1, G_2)`` cuts out the fiber of ``P`` itself;
its degree in ``w`` is the tracing index.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from ..core.errors import DegenerateParametrization, InternalInconsistency
from ..core.models import CheckResult
from ..differential.operators import lie_derivative
from ..differential.types import INPUT_DERIVATIVES, IOEquation, Parametrization, Realization
from ..kernel import polyops
from ..kernel.ring import Poly, degree, depends_on, normalize, rename

logger = logging.getLogger(__name__)

FIBER_VARS = ("w", "x")


@dataclass(frozen=True)
class GPair:
    """``G_1, G_2`` and their normalized gcd ``G`` (u'-free)."""

    G1: Poly
    G2: Poly
    G: Poly

    @property
    def tracing_index(self) -> int:
        return degree(self.G, "w")


def fiber_polynomial(num: Poly, den: Poly) -> Poly:
    """``num(w) den(x) - num(x) den(w)``."""
    return rename(num, "x", "w") * den - num * rename(den, "x", "w")


def monic_in_w(G: Poly) -> Poly:
    """Scale to leading coefficient 1 in w when that coefficient is a constant."""
    lc = polyops.leading_coefficient_in(G, "w")
    if lc and lc.is_ground:
        return G.quo_ground(lc.LC)
    return normalize(G)


def _check_first_order(P: Parametrization) -> None:
    if P.state_count != 1 or P.order != 1:
        raise ValueError("fiber analysis needs a parametrization (P0, P1) in x")


def gp_pair(P: Parametrization) -> GPair:
    """Compute ``G_1, G_2`` and ``G``.

    Raises:
        DegenerateParametrization: every component is constant in x
        InternalInconsistency: ``G`` still involves derivatives of u
    """
    _check_first_order(P)
    if not any(c.depends_on(("x",)) for c in P.components):
        raise DegenerateParametrization("every component of P is constant in x")
    G1, G2 = (fiber_polynomial(c.num, c.den) for c in P.components[:2])
    G = polyops.gcd(G1, G2)
    G = polyops.primitive_wrt(G, FIBER_VARS)
    if depends_on(G, INPUT_DERIVATIVES):
        raise InternalInconsistency("fiber polynomial G depends on derivatives of u")
    G = monic_in_w(G)
    logger.debug("G has degree %d in w", degree(G, "w"))
    return GPair(G1=G1, G2=G2, G=G)


def tracing_index(P: Parametrization) -> int:
    """Cardinality of a generic fiber; 1 iff P is proper."""
    return gp_pair(P).tracing_index


def is_proper(P: Parametrization) -> bool:
    return tracing_index(P) == 1


def degree_condition_check(sigma: Realization, F: IOEquation) -> CheckResult:
    """Properness test by degrees: ``deg_x q = deg_y' F`` and ``deg_x L_p q = deg_y F``."""
    if sigma.order != 1:
        raise ValueError("degree conditions are stated for first-order systems")
    result = CheckResult()
    q = sigma.q
    lq = lie_derivative(q, sigma.p, sigma.states)
    dq, dlq = q.degree_in("x"), lq.degree_in("x")
    dy1, dy0 = F.degree_in("y1"), F.degree_in("y0")
    if dq != dy1:
        result.add_failure("DEG_Q", f"deg_x q = {dq} but deg_y' F = {dy1}", location="q")
    if dlq != dy0:
        result.add_failure("DEG_LQ", f"deg_x L_p q = {dlq} but deg_y F = {dy0}", location="L_p q")
    return result


__all__ = [
    "GPair",
    "gp_pair",
    "tracing_index",
    "is_proper",
    "degree_condition_check",
    "fiber_polynomial",
    "monic_in_w",
]
