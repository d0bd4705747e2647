"""Exact gcd, resultant, division and factoring on universe polynomials.

Each operation moves its arguments into a compact ring (see
:func:`realizer.kernel.ring.to_compact`) so sympy's sparse kernels work on
as few generators as possible: heuristic gcd over ``QQ``, a modular
function-field gcd over ``QQ<I>`` for complex input.
"""

from __future__ import annotations

import logging
from functools import lru_cache

import sympy
from sympy.polys.domains import QQ, QQ_I
from sympy.polys.modulargcd import func_field_modgcd
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement, PolyRing

from ..core.errors import DivisionByZeroError
from .ring import (
    INDEX,
    RING,
    VARIABLES,
    Poly,
    degree,
    from_compact,
    normalize,
    to_compact,
)

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def _gaussian_field():
    field = QQ_I.as_AlgebraicField()
    return field, field.from_sympy(sympy.I)


def _to_gaussian_field(p: PolyElement) -> PolyElement:
    field, unit = _gaussian_field()
    ring = PolyRing(p.ring.symbols, field, p.ring.order)
    return ring.from_dict(
        {
            m: field.from_QQ(c.x, QQ) + field.from_QQ(c.y, QQ) * unit
            for m, c in p.iterterms()
        }
    )


SPECIALIZATION_POINTS = (2, 3, 5, 7, 11, 13)


def _point(j: int, attempt: int) -> int:
    return SPECIALIZATION_POINTS[(attempt + 2 * j) % len(SPECIALIZATION_POINTS)] + attempt


def _specialized_coprime(f: PolyElement, g: PolyElement, attempts: int = 3) -> bool:
    """Sufficient test for ``gcd(f, g) = 1`` by univariate images.

    For each generator v shared by f and g, all other generators are set to
    small integers that keep the v-degree of f. The gcd of the images then
    has v-degree at least that of the true gcd, so a constant image gcd for
    every shared v proves coprimality. False means undecided.
    """
    ring = f.ring
    gens = ring.gens
    if len(gens) < 2:
        return False
    for v, gv in enumerate(gens):
        df, dg = f.degree(gv), g.degree(gv)
        if df <= 0 or dg <= 0:
            continue
        for attempt in range(attempts):
            points = [
                (gens[j], _point(j, attempt)) for j in range(len(gens)) if j != v
            ]
            fe, ge = f.evaluate(points), g.evaluate(points)
            if fe.degree() == df:
                break
        else:
            return False
        if not ge or not fe.gcd(ge).is_ground:
            return False
    return True


def _ring_cofactors(f: PolyElement, g: PolyElement):
    """gcd and cofactors inside one compact ring."""
    ring = f.ring
    if ring.domain.is_QQ or not f or not g or f.is_ground or g.is_ground:
        return f.cofactors(g)
    if _specialized_coprime(f, g):
        return ring.one, f, g
    try:
        h_alg, _, _ = func_field_modgcd(_to_gaussian_field(f), _to_gaussian_field(g))
        h = ring.from_dict(
            {m: QQ_I.convert(c, h_alg.ring.domain) for m, c in h_alg.iterterms()}
        )
        return h, f.exquo(h), g.exquo(h)
    except Exception as exc:
        logger.debug("modular gcd over QQ<I> failed (%s); using dense gcd", exc)
        return f.cofactors(g)


def cofactors(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Return ``(h, a/h, b/h)`` with ``h`` a gcd normalized to leading coefficient 1."""
    if not a and not b:
        return RING.zero, RING.zero, RING.zero
    if not a:
        h = normalize(b)
        return h, RING.zero, RING.ground_new(b.LC)
    if not b:
        h = normalize(a)
        return h, RING.ground_new(a.LC), RING.zero
    if a.is_ground or b.is_ground:
        return RING.one, a, b
    ring, idx, (fa, fb) = to_compact([a, b])
    h, ca, cb = _ring_cofactors(fa, fb)
    dom = ring.domain
    h, ca, cb = (from_compact(v, idx, dom) for v in (h, ca, cb))
    lc = h.LC
    if lc != QQ_I.one:
        h = h.quo_ground(lc)
        ca = ca.mul_ground(lc)
        cb = cb.mul_ground(lc)
    return h, ca, cb


def gcd(a: Poly, b: Poly) -> Poly:
    """Greatest common divisor, normalized to leading coefficient 1."""
    return cofactors(a, b)[0]


def gcd_list(polys: list[Poly]) -> Poly:
    result = RING.zero
    for p in polys:
        result = gcd(result, p)
        if result == RING.one:
            break
    return result


def exquo(a: Poly, b: Poly) -> Poly:
    """Exact quotient; raises if ``b`` does not divide ``a``."""
    if not b:
        raise DivisionByZeroError("division by the zero polynomial")
    if b.is_ground:
        return a.quo_ground(b.LC)
    ring, idx, (fa, fb) = to_compact([a, b])
    try:
        q = fa.exquo(fb)
    except ExactQuotientFailed as exc:
        raise ArithmeticError(f"inexact division: {exc}") from None
    return from_compact(q, idx, ring.domain)


def divides(b: Poly, a: Poly) -> bool:
    if not b:
        return not a
    ring, _, (fa, fb) = to_compact([a, b])
    return not fa.rem(fb)


def resultant(a: Poly, b: Poly, var: str) -> Poly:
    """Resultant of ``a`` and ``b`` with respect to ``var``."""
    da, db = degree(a, var), degree(b, var)
    if not a or not b:
        return RING.zero
    if da == 0 or db == 0:
        # Sylvester matrix degenerates to a diagonal block
        return a**db if da == 0 else b**da
    ring, idx, (fa, fb) = to_compact([a, b], first=var)
    res = fa.resultant(fb)
    return from_compact(res, idx[1:], ring.domain)


def derivative(p: Poly, var: str) -> Poly:
    return p.diff(RING.gens[INDEX[var]])


def coefficients_wrt(p: Poly, names: tuple[str, ...]) -> dict[tuple[int, ...], Poly]:
    """Split ``p`` into coefficients (polynomials in the other variables)
    of the monomials in ``names``."""
    idx = [INDEX[n] for n in names]
    groups: dict[tuple[int, ...], dict] = {}
    for m, c in p.iterterms():
        key = tuple(m[i] for i in idx)
        rest = list(m)
        for i in idx:
            rest[i] = 0
        groups.setdefault(key, {})[tuple(rest)] = c
    return {k: RING.from_dict(v) for k, v in groups.items()}


def content_wrt(p: Poly, names: tuple[str, ...]) -> Poly:
    """gcd of the coefficients of ``p`` viewed as a polynomial in ``names``."""
    return gcd_list(list(coefficients_wrt(p, names).values()))


def primitive_wrt(p: Poly, names: tuple[str, ...]) -> Poly:
    """``p`` divided by its content with respect to ``names``, normalized."""
    if not p:
        return p
    cont = content_wrt(p, names)
    if cont.is_ground:
        return normalize(p)
    return normalize(exquo(p, cont))


def sqf_part(p: Poly) -> Poly:
    if p.is_ground:
        return RING.one if p else p
    ring, idx, (f,) = to_compact([p])
    return normalize(from_compact(f.sqf_part(), idx, ring.domain))


def factor_list(p: Poly, gaussian: bool = False) -> tuple[object, list[tuple[Poly, int]]]:
    """Irreducible factorization over ``QQ`` (real input) or ``QQ_I``.

    ``gaussian=True`` forces factoring over ``QQ_I`` even for real input.
    Factors are normalized to leading coefficient 1; the returned scalar
    is the matching leading coefficient.
    """
    if p.is_ground:
        return (p.LC if p else QQ_I.zero), []
    real = None if not gaussian else False
    ring, idx, (f,) = to_compact([p], real=real)
    coeff, factors = f.factor_list()
    lc = QQ_I.convert(coeff, ring.domain)
    out = []
    for fac, k in factors:
        g = from_compact(fac, idx, ring.domain)
        glc = g.LC
        if glc != QQ_I.one:
            g = g.quo_ground(glc)
            for _ in range(k):
                lc = lc * glc
        out.append((g, k))
    out.sort(key=lambda fk: (_total_degree(fk[0]), str(fk[0])))
    logger.debug("factored into %d irreducible factors", len(out))
    return lc, out


def leading_coefficient_in(p: Poly, var: str) -> Poly:
    i = INDEX[var]
    if not p:
        return p
    d = max(m[i] for m in p.itermonoms())
    return p.coeff_wrt(i, d)


def variable_name(i: int) -> str:
    return VARIABLES[i]


def _total_degree(p: Poly) -> int:
    return max((sum(m) for m in p.itermonoms()), default=0)


def names_outside(p: Poly, names: tuple[str, ...]) -> set[str]:
    """Variables of ``p`` not listed in ``names``."""
    used: set[str] = set()
    for m in p.itermonoms():
        used.update(VARIABLES[i] for i, e in enumerate(m) if e)
    return used - set(names)
