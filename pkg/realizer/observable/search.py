"""Search for a u-free rational function ``r`` with ``P = Q(r)``, ``Q`` proper.

Write ``G(w, x) = sum_i w^i h_i(x)``. The fiber of ``P`` through ``x`` is
the fiber of ``r = M/N``, so the ``h_i`` span the same 2-dimensional
``K(u)``-space as ``M`` and ``N``. When that space has a u-free basis its
reduced row echelon form is u-free too, and its two rows give ``r``.

The echelon form is computed at random rational specializations of u,
candidates are intersected across probes, and the survivor is checked
symbolically: every ``h_i`` must be a ``K(u)``-combination of the two rows.
"""

from __future__ import annotations

import logging
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from sympy.polys.domains import QQ_I

from ..core.errors import InternalInconsistency, PreconditionError, SearchExhausted
from ..differential.types import Parametrization
from ..kernel import polyops
from ..kernel.linalg import scalar_rref
from ..kernel.ratfunc import RatFunc, substitute_pair
from ..kernel.ring import RING, Poly, degree, gen
from .gpair import GPair, gp_pair

logger = logging.getLogger(__name__)

WITNESS_POINTS = (0, 1, -1, 2, -2, 3, -3, 4, -4, 5)


@dataclass(frozen=True)
class Witness:
    """``r = (a G(alpha, x) + b G(beta, x)) / (c G(alpha, x) + d G(beta, x))``, lambda = 1."""

    alpha: int
    beta: int
    a: Poly
    b: Poly
    c: Poly
    d: Poly
    lam: int = 1


@dataclass(frozen=True)
class ReparamCandidate:
    r: RatFunc
    witness: Witness | None = None
    probes: tuple[Fraction, ...] = field(default=())

    @property
    def degree(self) -> int:
        return self.r.degree_in("x")


@dataclass(frozen=True)
class _Probe:
    point: Fraction
    rows: tuple[tuple, ...] | None
    pivots: tuple[int, ...]
    rank: int


def probe_points(seed: int, count: int) -> list[Fraction]:
    """Nonzero random rationals, reproducible from ``seed``."""
    rng = random.Random(seed)
    points: list[Fraction] = []
    while len(points) < count:
        p = Fraction(rng.randint(1, 97) * rng.choice((1, -1)), rng.randint(1, 13))
        if p not in points:
            points.append(p)
    return points


def _coefficient_table(G: Poly) -> tuple[list[list[Poly]], int]:
    """``table[i][j]``: coefficient of ``w^i x^(dx-j)`` in G (a polynomial in u)."""
    dw, dx = degree(G, "w"), degree(G, "x")
    table = [[RING.zero] * (dx + 1) for _ in range(dw + 1)]
    for (i, j), c in polyops.coefficients_wrt(G, ("w", "x")).items():
        table[i][dx - j] = c
    return table, dx


def _at(p: Poly, point: Fraction):
    """Value of a polynomial in u at ``u = point``."""
    if not p:
        return QQ_I.zero
    num, den = substitute_pair(p, {"u": RatFunc.of(point)})
    if not num.is_ground:
        raise InternalInconsistency("fiber coefficients involve variables other than u")
    return num.LC if num else QQ_I.zero


def _probe(table: list[list[Poly]], point: Fraction) -> _Probe:
    rows = [[_at(e, point) for e in row] for row in table]
    reduced, pivots = scalar_rref(rows)
    rank = len(pivots)
    if rank != 2:
        logger.debug("probe u=%s: rank %d", point, rank)
        return _Probe(point, None, pivots, rank)
    logger.debug("probe u=%s: pivots %s", point, pivots)
    return _Probe(point, tuple(tuple(r) for r in reduced[:2]), pivots, rank)


def _row_poly(row, dx: int) -> Poly:
    """Polynomial in x from a coefficient row, highest degree first."""
    x = gen("x")
    out = RING.zero
    for j, c in enumerate(row):
        if c:
            c = c if isinstance(c, Poly) else RING.ground_new(c)
            out += c * x ** (dx - j)
    return out


def _witness(a_coef: list[Poly], b_coef: list[Poly]) -> Witness | None:
    def combo(coefs: list[Poly], t: int) -> Poly:
        return sum((c * t**i for i, c in enumerate(coefs)), RING.zero)

    for i, alpha in enumerate(WITNESS_POINTS):
        for beta in WITNESS_POINTS[i + 1 :]:
            A_a, B_a = combo(a_coef, alpha), combo(b_coef, alpha)
            A_b, B_b = combo(a_coef, beta), combo(b_coef, beta)
            if A_a * B_b - A_b * B_a:
                return Witness(alpha=alpha, beta=beta, a=B_b, b=-B_a, c=-A_b, d=A_a)
    return None


def find_common_reparametrization(
    P: Parametrization,
    *,
    seed: int = 42,
    specializations: int = 4,
    max_workers: int = 1,
    gpair: GPair | None = None,
) -> ReparamCandidate:
    """Find u-free ``r`` of degree equal to the tracing index with ``P = Q(r)``.

    Raises:
        PreconditionError: P is already proper
        SearchExhausted: no probe gave a consistent u-free candidate, or the
            candidate failed symbolic verification
    """
    gp = gpair or gp_pair(P)
    k = gp.tracing_index
    if k <= 1:
        raise PreconditionError("parametrization is already proper")
    G = gp.G
    extra = polyops.names_outside(G, ("w", "x", "u"))
    if extra:
        raise InternalInconsistency(f"fiber polynomial involves {sorted(extra)}")

    table, dx = _coefficient_table(G)
    points = probe_points(seed, specializations)
    if max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            probes = list(pool.map(lambda pt: _probe(table, pt), points))
    else:
        probes = [_probe(table, pt) for pt in points]

    good = [p for p in probes if p.rows is not None]
    if not good:
        raise SearchExhausted("no specialization gave a rank-2 fiber span", points)
    candidates = {(p.rows, p.pivots) for p in good}
    if len(candidates) != 1:
        raise SearchExhausted("fiber span is not defined over the constants", points)
    (rows, pivots), = candidates

    R1, R2 = _row_poly(rows[0], dx), _row_poly(rows[1], dx)
    p1, p2 = pivots
    a_coef = [row[p1] for row in table]
    b_coef = [row[p2] for row in table]
    for i, row in enumerate(table):
        h = _row_poly(row, dx)
        if h != a_coef[i] * R1 + b_coef[i] * R2:
            raise SearchExhausted("candidate failed symbolic verification", points)

    r = RatFunc(R1, R2)
    if r.degree_in("x") != k:
        raise InternalInconsistency(
            f"candidate degree {r.degree_in('x')} differs from tracing index {k}"
        )
    witness = _witness(a_coef, b_coef)
    logger.info("tracing index %d; candidate r found", k)
    return ReparamCandidate(r=r, witness=witness, probes=tuple(points))


__all__ = [
    "ReparamCandidate",
    "Witness",
    "find_common_reparametrization",
    "probe_points",
]
