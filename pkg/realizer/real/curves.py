"""Real factors of ``V`` in the plane and their rational parametrizations.

Factors are taken over ``Q``. Lines are always real. Conics are classified
by the determinant of their 3x3 matrix and the definiteness of the
quadratic part; real non-degenerate conics are parametrized through a
rational point found by a bounded height search (circles of rational
radius use stereographic projection directly). Factors of degree 3 or more
are reported, never parametrized.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from sympy import integer_nthroot

from ..core.errors import ExtensionRequired, InternalInconsistency
from ..kernel import polyops
from ..kernel.factor import PLANE_VARS
from ..kernel.ratfunc import RatFunc
from ..kernel.ring import I_UNIT, Poly, const, constant_value, total_degree

logger = logging.getLogger(__name__)


class CurveKind(str, Enum):
    LINE = "line"
    CIRCLE = "circle"
    CONIC = "conic"
    NON_REAL = "non-real"
    OTHER = "other"


@dataclass(frozen=True)
class RealCurveFactor:
    """An irreducible factor of V over Q with its real classification."""

    factor: Poly
    kind: CurveKind
    parametrization: tuple[RatFunc, RatFunc] | None = None
    point: tuple[Fraction, Fraction] | None = None
    note: str = ""
    extension: str | None = None

    @property
    def degree(self) -> int:
        return total_degree(self.factor)

    @property
    def is_real_curve(self) -> bool:
        return self.kind is not CurveKind.NON_REAL

    @property
    def is_mobius(self) -> bool:
        """Lines and circles are parametrized by Mobius transformations."""
        return self.kind in (CurveKind.LINE, CurveKind.CIRCLE)

    def reparametrization(self) -> RatFunc:
        """``s = s1 + i s2``.

        Raises:
            ExtensionRequired: the factor splits into real lines over a
                quadratic extension of Q
            ValueError: no parametrization is known
        """
        if self.extension is not None:
            raise ExtensionRequired(self.extension, f"parametrizing a {self.kind.value} factor")
        if self.parametrization is None:
            raise ValueError(f"{self.kind.value} factor has no parametrization")
        s1, s2 = self.parametrization
        return s1 + RatFunc(I_UNIT) * s2


def _fraction(c) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


def _coefficients(p: Poly) -> dict[tuple[int, int], Fraction]:
    out = {}
    for (i, j), c in polyops.coefficients_wrt(p, PLANE_VARS).items():
        value = constant_value(c)
        if value is None or value.y:
            raise ValueError("expected a real polynomial in x and z")
        out[(i, j)] = _fraction(value.x)
    return out


def _rat(value: Fraction) -> RatFunc:
    return RatFunc(const(value))


def _sqrt(value: Fraction) -> Fraction | None:
    """Exact rational square root, or None."""
    if value < 0:
        return None
    n, exact_n = integer_nthroot(value.numerator, 2)
    d, exact_d = integer_nthroot(value.denominator, 2)
    if exact_n and exact_d:
        return Fraction(int(n), int(d))
    return None


def heights(bound: int) -> list[Fraction]:
    """Rationals ``n/d`` with ``max(|n|, d) <= bound`` by increasing height."""
    seen: set[Fraction] = set()
    out: list[Fraction] = []
    for h in range(bound + 1):
        layer = []
        for d in range(1, max(h, 1) + 1):
            for n in (h, -h) if d < h else range(-h, h + 1):
                v = Fraction(n, d)
                if v not in seen:
                    seen.add(v)
                    layer.append(v)
        out.extend(sorted(layer, key=lambda v: (abs(v), v < 0)))
    return out


# =============================================================================
# Lines
# =============================================================================


def _line(p: Poly) -> RealCurveFactor:
    c = _coefficients(p)
    a, b, k = c.get((1, 0), 0), c.get((0, 1), 0), c.get((0, 0), 0)
    x = RatFunc.var("x")
    if b:
        s = (x, (x * _rat(-Fraction(a)) - _rat(Fraction(k))) / _rat(Fraction(b)))
    else:
        s = (_rat(-Fraction(k) / a), x)
    return RealCurveFactor(p, CurveKind.LINE, parametrization=s)


# =============================================================================
# Conics
# =============================================================================


@dataclass(frozen=True)
class _Conic:
    """``a x^2 + b x z + c z^2 + d x + e z + f``."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    e: Fraction
    f: Fraction

    @classmethod
    def of(cls, p: Poly) -> "_Conic":
        co = _coefficients(p)
        get = lambda i, j: co.get((i, j), Fraction(0))  # noqa: E731
        return cls(get(2, 0), get(1, 1), get(0, 2), get(1, 0), get(0, 1), get(0, 0))

    @property
    def determinant(self) -> Fraction:
        a, b, c, d, e, f = self.a, self.b / 2, self.c, self.d / 2, self.e / 2, self.f
        return a * (c * f - e * e) - b * (b * f - e * d) + d * (b * e - c * d)

    @property
    def quadratic_discriminant(self) -> Fraction:
        """``ac - b^2/4``: positive for ellipses, negative for hyperbolas."""
        return self.a * self.c - self.b * self.b / 4

    def line_pair_radicand(self) -> Fraction:
        """Square root of this adjoins the lines of a degenerate conic."""
        if self.quadratic_discriminant:
            return self.b * self.b - 4 * self.a * self.c
        # parallel lines: a L^2 + d L + f with L = x + b/(2a) z, or c z^2 + e z + f
        if self.a:
            return self.d * self.d - 4 * self.a * self.f
        return self.e * self.e - 4 * self.c * self.f

    @property
    def is_circle(self) -> bool:
        return self.b == 0 and self.a == self.c and self.a != 0

    def value(self, x: Fraction, z: Fraction) -> Fraction:
        return (
            self.a * x * x + self.b * x * z + self.c * z * z + self.d * x + self.e * z + self.f
        )

    def point_over(self, x0: Fraction) -> Fraction | None:
        """A rational ``z`` with ``(x0, z)`` on the conic."""
        A = self.c
        B = self.b * x0 + self.e
        C = self.a * x0 * x0 + self.d * x0 + self.f
        if A == 0:
            return -C / B if B else None
        root = _sqrt(B * B - 4 * A * C)
        if root is None:
            return None
        return (-B + root) / (2 * A)

    def rational_point(self, bound: int) -> tuple[Fraction, Fraction] | None:
        for x0 in heights(bound):
            z0 = self.point_over(x0)
            if z0 is not None:
                return x0, z0
        return None

    def pencil(self, point: tuple[Fraction, Fraction]) -> tuple[RatFunc, RatFunc]:
        """Lines of slope x through ``point`` meet the conic once more."""
        p, q = point
        t = RatFunc.var("x")
        alpha = _rat(self.a) + _rat(self.b) * t + _rat(self.c) * t * t
        beta = _rat(2 * self.a * p + self.b * q + self.d) + _rat(
            self.b * p + 2 * self.c * q + self.e
        ) * t
        T = -beta / alpha
        return _rat(p) + T, _rat(q) + t * T


def _circle_by_radius(conic: _Conic) -> tuple[RatFunc, RatFunc] | None:
    a = conic.a
    h, k = -conic.d / (2 * a), -conic.e / (2 * a)
    rho = _sqrt((conic.d**2 + conic.e**2 - 4 * a * conic.f) / (4 * a * a))
    if not rho:
        return None
    x = RatFunc.var("x")
    one = RatFunc.one()
    den = one + x * x
    return (
        _rat(h) + _rat(rho) * (one - x * x) / den,
        _rat(k) + _rat(2 * rho) * x / den,
    )


def _conic(p: Poly, height_bound: int) -> RealCurveFactor:
    conic = _Conic.of(p)
    det = conic.determinant
    disc = conic.quadratic_discriminant
    if det == 0:
        if disc > 0:
            return RealCurveFactor(p, CurveKind.NON_REAL, note="isolated real point")
        if disc == 0:
            cof = (conic.c * conic.f - conic.e**2 / 4) + (conic.a * conic.f - conic.d**2 / 4)
            if cof >= 0:
                return RealCurveFactor(p, CurveKind.NON_REAL, note="no real points")
        return RealCurveFactor(
            p,
            CurveKind.OTHER,
            note="pair of real lines with irrational coefficients",
            extension=f"t^2 - {conic.line_pair_radicand()}",
        )
    if disc > 0 and (conic.a + conic.c) * det > 0:
        return RealCurveFactor(p, CurveKind.NON_REAL, note="empty real locus")

    kind = CurveKind.CIRCLE if conic.is_circle else CurveKind.CONIC
    if kind is CurveKind.CIRCLE:
        s = _circle_by_radius(conic)
        if s is not None:
            return RealCurveFactor(p, kind, parametrization=s, note="stereographic projection")
    point = conic.rational_point(height_bound)
    if point is None:
        logger.info("no rational point of height <= %d on %s", height_bound, p)
        return RealCurveFactor(
            p, kind, note=f"no rational point of height <= {height_bound}"
        )
    if conic.value(*point) != 0:
        raise InternalInconsistency("rational point search returned a point off the conic")
    return RealCurveFactor(p, kind, parametrization=conic.pencil(point), point=point)


# =============================================================================
# Entry point
# =============================================================================


def classify_factor(p: Poly, height_bound: int = 50) -> RealCurveFactor:
    d = total_degree(p)
    if d == 1:
        return _line(p)
    if d == 2:
        return _conic(p, height_bound)
    return RealCurveFactor(p, CurveKind.OTHER, note=f"degree {d}; rationality not decided")


def detect_real_curve_factors(V: Poly, height_bound: int = 50) -> list[RealCurveFactor]:
    """Classify every irreducible factor of V over Q.

    Order is by total degree, then printed form; multiplicities are dropped.
    """
    if not V:
        raise ValueError("V must be nonzero")
    extra = polyops.names_outside(V, PLANE_VARS)
    if extra:
        raise ValueError(f"expected a polynomial in x, z; found {sorted(extra)}")
    if V.is_ground:
        return []
    _, factors = polyops.factor_list(V)
    out = [classify_factor(f, height_bound) for f, _ in factors]
    for rc in out:
        logger.debug("factor %s: %s", rc.factor, rc.kind.value)
    return out


def plane_point(x: RatFunc | Poly, z: RatFunc | Poly) -> dict[str, RatFunc]:
    """Bindings ``x -> s1, z -> s2``."""
    return {"x": RatFunc.of(x), "z": RatFunc.of(z)}


__all__ = [
    "CurveKind",
    "RealCurveFactor",
    "classify_factor",
    "detect_real_curve_factors",
    "heights",
    "plane_point",
]

