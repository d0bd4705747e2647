"""The fixed variable universe and the polynomial ring every value lives in.

All polynomials are sparse ``PolyElement`` values of one universe ring over
the Gaussian rationals ``QQ_I`` with graded lexicographic order on the
fixed variable order below. Heavy algorithms (gcd, resultant, factoring)
run in a *compact* ring holding only the generators actually used, over
``QQ`` whenever every coefficient is real.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

import sympy
from sympy.polys.domains import QQ, QQ_I
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, PolyRing

logger = logging.getLogger(__name__)

# u, u', u'', u''' then y, y', y'', y''' then states and auxiliary unknowns.
VARIABLES: tuple[str, ...] = (
    "u",
    "u1",
    "u2",
    "u3",
    "y0",
    "y1",
    "y2",
    "y3",
    "x",
    "x1",
    "x2",
    "z",
    "w",
    "t",
    "z1",
    "z2",
)

INPUT_VARS: tuple[str, ...] = ("u", "u1", "u2", "u3")
OUTPUT_VARS: tuple[str, ...] = ("y0", "y1", "y2", "y3")
STATE_VARS: tuple[str, ...] = ("x", "x1", "x2")

INDEX: dict[str, int] = {name: i for i, name in enumerate(VARIABLES)}

SYMBOLS = sympy.symbols(VARIABLES)
RING = PolyRing(SYMBOLS, QQ_I, grlex)

Poly = PolyElement


def gen(name: str) -> Poly:
    """Generator of the universe ring by variable name."""
    try:
        return RING.gens[INDEX[name]]
    except KeyError:
        raise ValueError(f"unknown variable: {name}") from None


def qq(v):
    """Coerce an int, Fraction or QQ element to ``QQ``."""
    if isinstance(v, Fraction):
        return QQ(v.numerator, v.denominator)
    return QQ.convert(v)


def scalar(re, im=0):
    """A ``QQ_I`` element ``re + im*I``."""
    return QQ_I(qq(re), qq(im))


def const(re, im=0) -> Poly:
    """Constant polynomial ``re + im*I`` (ints, Fractions or QQ elements)."""
    return RING.ground_new(scalar(re, im))


I_UNIT = const(0, 1)


def is_real(p: Poly) -> bool:
    return all(not c.y for c in p.itercoeffs())


def conj(p: Poly) -> Poly:
    """Coefficientwise complex conjugation; all variables are real symbols."""
    return RING.from_dict({m: QQ_I(c.x, -c.y) for m, c in p.iterterms()})


def real_part(p: Poly) -> Poly:
    return RING.from_dict({m: QQ_I(c.x, 0) for m, c in p.iterterms() if c.x})


def imag_part(p: Poly) -> Poly:
    return RING.from_dict({m: QQ_I(c.y, 0) for m, c in p.iterterms() if c.y})


def variables_of(p: Poly) -> set[int]:
    """Indices of universe variables occurring in ``p``."""
    used: set[int] = set()
    for monom in p.itermonoms():
        used.update(i for i, e in enumerate(monom) if e)
    return used


def names_of(p: Poly) -> set[str]:
    return {VARIABLES[i] for i in variables_of(p)}


def depends_on(p: Poly, names: Iterable[str]) -> bool:
    idx = [INDEX[n] for n in names]
    return any(m[i] for m in p.itermonoms() for i in idx)


def degree(p: Poly, name: str) -> int:
    """Degree in one variable; the zero polynomial has degree 0 here."""
    if not p:
        return 0
    i = INDEX[name]
    return max(m[i] for m in p.itermonoms())


def total_degree(p: Poly, names: Iterable[str] | None = None) -> int:
    if not p:
        return 0
    if names is None:
        return max(sum(m) for m in p.itermonoms())
    idx = [INDEX[n] for n in names]
    return max(sum(m[i] for i in idx) for m in p.itermonoms())


def normalize(p: Poly) -> Poly:
    """Scale so the leading coefficient (grlex on the universe) is 1."""
    if not p:
        return p
    lc = p.LC
    if lc == QQ_I.one:
        return p
    return p.quo_ground(lc)


def is_constant(p: Poly) -> bool:
    return p.is_ground


def constant_value(p: Poly):
    """Ground coefficient of a constant polynomial."""
    if not p:
        return QQ_I.zero
    return p.coeff(1) if p.is_ground else None


@lru_cache(maxsize=None)
def compact_ring(indices: tuple[int, ...], real: bool) -> PolyRing:
    symbols = tuple(SYMBOLS[i] for i in indices)
    return PolyRing(symbols, QQ if real else QQ_I, grlex)


def to_compact(
    polys: Iterable[Poly], first: str | None = None, real: bool | None = None
) -> tuple[PolyRing, tuple[int, ...], list[PolyElement]]:
    """Move polynomials into the smallest ring holding their variables.

    ``first`` puts that variable at generator position 0 (the main variable
    for resultants). The domain is ``QQ`` when every coefficient is real.
    """
    polys = list(polys)
    used: set[int] = set()
    for p in polys:
        used |= variables_of(p)
    order = sorted(used)
    if first is not None:
        i = INDEX[first]
        if i in order:
            order.remove(i)
        order.insert(0, i)
    if not order:
        order = [INDEX["x"]]
    if real is None:
        real = all(is_real(p) for p in polys)
    indices = tuple(order)
    ring = compact_ring(indices, real)
    converted = [
        ring.from_dict(
            {
                tuple(m[i] for i in indices): (c.x if real else c)
                for m, c in p.iterterms()
            }
        )
        for p in polys
    ]
    logger.debug(
        "compact ring %s over %s",
        [VARIABLES[i] for i in indices],
        "QQ" if real else "QQ_I",
    )
    return ring, indices, converted


def from_compact(p, indices: tuple[int, ...], domain) -> Poly:
    """Inverse of :func:`to_compact` for one element (or a ground value)."""
    if not isinstance(p, PolyElement):
        return RING.ground_new(QQ_I.convert(p, domain))
    n = RING.ngens
    terms = {}
    for m, c in p.iterterms():
        e = [0] * n
        for i, k in zip(indices, m):
            e[i] = k
        terms[tuple(e)] = QQ_I.convert(c, domain)
    return RING.from_dict(terms)


def rename(p: Poly, old: str, new: str) -> Poly:
    """Replace variable ``old`` by ``new``; ``new`` must not occur in ``p``."""
    i, j = INDEX[old], INDEX[new]
    if depends_on(p, (new,)):
        raise ValueError(f"{new} already occurs")
    terms = {}
    for m, c in p.iterterms():
        e = list(m)
        e[j], e[i] = e[i], 0
        terms[tuple(e)] = c
    return RING.from_dict(terms)
