"""Recover the proper ``Q`` with ``Q(r) = P`` once ``r`` is known.

Two methods:

- ``implicit``: eliminate x from ``n_i(x) - z1 d_i(x)`` and ``M(x) - z2 N(x)``
  (``r = M/N``). The squarefree part is linear in ``z1``,
  ``g_i = den(Q_i)(z2) z1 - num(Q_i)(z2)`` up to a factor free of ``z1``.
- ``ansatz``: ``Q_i = A/B`` with unknown coefficients of degree
  ``deg P_i / deg r``; ``A(r) d_i - B(r) n_i = 0`` is a linear system over
  the rational-function field.

Either way ``Q(r) = P`` is verified exactly before returning.
"""

from __future__ import annotations

import logging
from typing import Literal

from ..core.errors import InconsistentAnsatz
from ..differential.types import Parametrization
from ..kernel import polyops
from ..kernel.linalg import RFMatrix
from ..kernel.ratfunc import RatFunc
from ..kernel.ring import RING, Poly, degree, gen, rename
from .search import ReparamCandidate

logger = logging.getLogger(__name__)

ReparamMethod = Literal["implicit", "ansatz"]


def implicit_equation(component: RatFunc, r: RatFunc) -> Poly:
    """``g(z1, z2)``, linear in z1, with ``g(P_i(x), r(x)) = 0``."""
    a = component.num - gen("z1") * component.den
    b = r.num - gen("z2") * r.den
    g = polyops.sqf_part(polyops.resultant(a, b, "x"))
    if degree(g, "z1") != 1:
        raise InconsistentAnsatz(
            f"implicit equation has degree {degree(g, 'z1')} in z1, expected 1"
        )
    return g


def _from_implicit(g: Poly) -> RatFunc:
    coeffs = polyops.coefficients_wrt(g, ("z1",))
    g1 = coeffs.get((1,), RING.zero)
    g0 = coeffs.get((0,), RING.zero)
    Q = RatFunc(-g0, g1)
    return RatFunc(rename(Q.num, "z2", "x"), rename(Q.den, "z2", "x"))


def implicit_equations(Q: Parametrization) -> list[Poly]:
    """``g_i = den(Q_i)(z2) z1 - num(Q_i)(z2)`` for each component."""
    out = []
    for c in Q.components:
        num, den = rename(c.num, "x", "z2"), rename(c.den, "x", "z2")
        out.append(den * gen("z1") - num)
    return out


def _powers(r: RatFunc, e: int) -> list[Poly]:
    """``M^j N^(e-j)`` for j = 0..e."""
    m_pow = [RING.one]
    n_pow = [RING.one]
    for _ in range(e):
        m_pow.append(m_pow[-1] * r.num)
        n_pow.append(n_pow[-1] * r.den)
    return [m_pow[j] * n_pow[e - j] for j in range(e + 1)]


def _from_ansatz(component: RatFunc, r: RatFunc) -> RatFunc:
    k = r.degree_in("x")
    dp = component.degree_in("x")
    if dp % k:
        raise InconsistentAnsatz(f"degree {dp} is not a multiple of deg r = {k}")
    e = dp // k
    basis = _powers(r, e)
    # unknowns: a_0..a_e (numerator), b_0..b_e (denominator)
    columns = [p * component.den for p in basis] + [-(p * component.num) for p in basis]
    tables = [polyops.coefficients_wrt(c, ("x",)) for c in columns]
    exps = sorted({m for t in tables for m in t}, reverse=True)
    rows = [[RatFunc.of(t.get(m, RING.zero)) for t in tables] for m in exps]
    kernel = RFMatrix(rows).nullspace()
    if not kernel:
        raise InconsistentAnsatz("linear ansatz has only the trivial solution")
    if len(kernel) > 1:
        logger.debug("ansatz kernel has dimension %d; using the first vector", len(kernel))
    vec = kernel[0]
    x = gen("x")
    A = sum((vec[j] * RatFunc.of(x**j) for j in range(e + 1)), RatFunc.zero())
    B = sum((vec[e + 1 + j] * RatFunc.of(x**j) for j in range(e + 1)), RatFunc.zero())
    if B.is_zero():
        raise InconsistentAnsatz("ansatz produced a zero denominator")
    return A / B


def proper_reparametrize(
    P: Parametrization, candidate: ReparamCandidate | RatFunc, method: ReparamMethod = "implicit"
) -> Parametrization:
    """Proper ``Q`` with ``Q(r) = P``, verified by substitution.

    Raises:
        InconsistentAnsatz: ``r`` is not a valid reparametrization of P
    """
    r = candidate.r if isinstance(candidate, ReparamCandidate) else RatFunc.of(candidate)
    if r.names() - {"x"} or r.is_constant():
        raise InconsistentAnsatz("r must be a nonconstant rational function of x alone")
    if method == "implicit":
        comps = [_from_implicit(implicit_equation(c, r)) for c in P.components]
    elif method == "ansatz":
        comps = [_from_ansatz(c, r) for c in P.components]
    else:
        raise ValueError(f"unknown reparametrization method {method!r}")
    Q = Parametrization(tuple(comps), state_count=P.state_count)
    if Q.compose([r]).components != P.components:
        raise InconsistentAnsatz("Q(r) differs from P")
    logger.info("recovered proper Q by the %s method", method)
    return Q
