"""Low-degree factors of bivariate polynomials in ``x, z``."""

from __future__ import annotations

import logging
from typing import NamedTuple

from . import polyops
from .ring import Poly, conj, is_real, total_degree

logger = logging.getLogger(__name__)

PLANE_VARS = ("x", "z")


class LowFactor(NamedTuple):
    factor: Poly
    multiplicity: int
    real: bool


def factor_low_degree(a: Poly, max_deg: int = 2) -> list[LowFactor]:
    """Irreducible factors over ``Q(i)`` of total degree at most ``max_deg``.

    Factors are normalized to leading coefficient 1 and flagged real when
    every coefficient has zero imaginary part.

    Only the rational factorization of ``a`` (of its norm ``a * conj(a)``
    when ``a`` is not real) is computed in full. A ``Q(i)``-irreducible
    factor of degree d lies over a rational factor of degree d or 2d, so
    only rational factors of degree at most ``2 * max_deg`` are split
    further over ``Q(i)``.
    """
    if max_deg not in (1, 2):
        raise ValueError("max_deg must be 1 or 2")
    if not a:
        raise ValueError("cannot factor the zero polynomial")
    others = polyops.names_outside(a, PLANE_VARS)
    if others:
        raise ValueError(f"expected a polynomial in x, z; found {sorted(others)}")

    real_input = is_real(a)
    base = a if real_input else a * conj(a)
    _, rational = polyops.factor_list(base)

    out: list[LowFactor] = []
    seen: set[Poly] = set()
    for g, k in rational:
        deg = total_degree(g)
        if deg > 2 * max_deg:
            continue
        if deg % 2:
            # splits only into conjugate halves of equal degree
            parts = [(g, 1)]
        else:
            _, parts = polyops.factor_list(g, gaussian=True)
        for h, _ in parts:
            if total_degree(h) > max_deg or h in seen:
                continue
            seen.add(h)
            mult = k if real_input else _multiplicity(a, h)
            if mult:
                out.append(LowFactor(h, mult, is_real(h)))
    out.sort(key=lambda lf: (total_degree(lf.factor), str(lf.factor)))
    logger.debug(
        "%d factors of degree <= %d out of %d rational factors",
        len(out), max_deg, len(rational),
    )
    return out


def _multiplicity(a: Poly, h: Poly) -> int:
    k = 0
    while polyops.divides(h, a):
        a = polyops.exquo(a, h)
        k += 1
    return k


def low_degree_cofactor(a: Poly, factors: list[LowFactor]) -> Poly:
    """What is left of ``a`` after dividing out the given factors."""
    rest = a
    for f, k, _ in factors:
        for _ in range(k):
            rest = polyops.exquo(rest, f)
    return rest
