"""Reduced rational functions over the universe ring.

A :class:`RatFunc` is an immutable pair ``(num, den)`` with
``gcd(num, den) = 1`` and ``den`` scaled so that its leading coefficient
(grlex on the universe variables) is 1. Zero is stored as ``0/1``.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Mapping, Union

from sympy.polys.domains import QQ_I

from ..core.errors import DivisionByZeroError, SubstitutionError
from . import polyops
from .ring import (
    INDEX,
    RING,
    Poly,
    conj,
    const,
    degree,
    depends_on,
    gen,
    is_real,
    names_of,
)

logger = logging.getLogger(__name__)

Number = Union[int, Fraction]


class RatFunc:
    """Immutable reduced quotient of two universe polynomials."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Poly, den: Poly | None = None, *, reduced: bool = False):
        if den is None:
            den = RING.one
        if not den:
            raise DivisionByZeroError("rational function with zero denominator")
        if not num:
            num, den = RING.zero, RING.one
        elif not reduced:
            if den.is_ground:
                num, den = num.quo_ground(den.LC), RING.one
            else:
                _, num, den = polyops.cofactors(num, den)
        lc = den.LC
        if lc != QQ_I.one:
            num = num.quo_ground(lc)
            den = den.quo_ground(lc)
        self.num = num
        self.den = den
        self._hash = None

    # -- construction -------------------------------------------------------

    @classmethod
    def of(cls, value: "RatFunc | Poly | Number") -> "RatFunc":
        """Lift a number, polynomial or rational function."""
        if isinstance(value, RatFunc):
            return value
        if isinstance(value, Poly):
            return cls(value, reduced=True)
        if isinstance(value, (int, Fraction)):
            return cls(const(value), reduced=True)
        raise TypeError(f"cannot make a rational function from {type(value).__name__}")

    @classmethod
    def var(cls, name: str) -> "RatFunc":
        return cls(gen(name), reduced=True)

    @classmethod
    def zero(cls) -> "RatFunc":
        return cls(RING.zero, reduced=True)

    @classmethod
    def one(cls) -> "RatFunc":
        return cls(RING.one, reduced=True)

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def is_poly(self) -> bool:
        return self.den == RING.one

    def is_constant(self) -> bool:
        return self.num.is_ground and self.den.is_ground

    def is_real(self) -> bool:
        return is_real(self.num) and is_real(self.den)

    def depends_on(self, names) -> bool:
        names = tuple(names)
        return depends_on(self.num, names) or depends_on(self.den, names)

    def names(self) -> set[str]:
        return names_of(self.num) | names_of(self.den)

    def degree_in(self, name: str) -> int:
        """max(deg num, deg den) in one variable: the degree of the induced map."""
        return max(degree(self.num, name), degree(self.den, name))

    # -- arithmetic ---------------------------------------------------------

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den, reduced=True)

    def __add__(self, other) -> "RatFunc":
        try:
            o = RatFunc.of(other)
        except TypeError:
            return NotImplemented
        if not o.num:
            return self
        if not self.num:
            return o
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        if o.den == RING.one:
            return RatFunc(self.num + o.num * self.den, self.den, reduced=True)
        if self.den == RING.one:
            return RatFunc(self.num * o.den + o.num, o.den, reduced=True)
        # a/b + c/d with g = gcd(b, d): only g can cancel against the sum
        g, b1, d1 = polyops.cofactors(self.den, o.den)
        num = self.num * d1 + o.num * b1
        if g == RING.one:
            return RatFunc(num, self.den * d1, reduced=True)
        h, num, g1 = polyops.cofactors(num, g)
        return RatFunc(num, g1 * b1 * d1, reduced=True)

    __radd__ = __add__

    def __sub__(self, other) -> "RatFunc":
        try:
            o = RatFunc.of(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "RatFunc":
        return RatFunc.of(other) - self

    def __mul__(self, other) -> "RatFunc":
        try:
            o = RatFunc.of(other)
        except TypeError:
            return NotImplemented
        if not self.num or not o.num:
            return RatFunc.zero()
        # cross-cancel so the product needs no further gcd
        g1, n1, d2 = polyops.cofactors(self.num, o.den)
        g2, n2, d1 = polyops.cofactors(o.num, self.den)
        return RatFunc(n1 * n2, d1 * d2, reduced=True)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFunc":
        try:
            o = RatFunc.of(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> "RatFunc":
        return RatFunc.of(other) * self.inverse()

    def __pow__(self, k: int) -> "RatFunc":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            return RatFunc.one()
        return RatFunc(self.num**k, self.den**k, reduced=True)

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise DivisionByZeroError("division by the zero rational function")
        return RatFunc(self.den, self.num, reduced=True)

    def conj(self) -> "RatFunc":
        return RatFunc(conj(self.num), conj(self.den), reduced=True)

    # -- calculus and substitution -----------------------------------------

    def derivative(self, name: str) -> "RatFunc":
        dn = polyops.derivative(self.num, name)
        dd = polyops.derivative(self.den, name)
        if not dd:
            return RatFunc(dn, self.den)
        return RatFunc(dn * self.den - self.num * dd, self.den**2)

    def substitute(self, bindings: Mapping[str, "RatFunc | Poly | Number"]) -> "RatFunc":
        """Simultaneous substitution of variables by rational functions."""
        bindings = _lift_bindings(bindings)
        n1, d1 = substitute_pair(self.num, bindings)
        n2, d2 = substitute_pair(self.den, bindings)
        if not n2:
            raise SubstitutionError(
                "denominator vanishes identically under substitution",
                variable=",".join(sorted(bindings)),
            )
        return RatFunc(n1 * d2, d1 * n2)

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (Poly, int, Fraction)):
            return self == RatFunc.of(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __str__(self) -> str:
        from ..expr.printer import print_expr

        return print_expr(self)

    def __repr__(self) -> str:
        return f"RatFunc({self})"


def _lift_bindings(bindings) -> dict[str, RatFunc]:
    out = {}
    for name, value in bindings.items():
        if name not in INDEX:
            raise SubstitutionError(f"unknown variable {name!r}", variable=name)
        out[name] = RatFunc.of(value)
    return out


def substitute_pair(p: Poly, bindings: Mapping[str, RatFunc]) -> tuple[Poly, Poly]:
    """Substitute into a polynomial without reducing the result.

    Each bound variable ``v -> a/b`` is homogenized against its degree ``D``
    in ``p``, so the value is ``sum c * prod a^e b^(D-e)`` over
    ``prod b^D``. The numerator vanishes iff the substituted value does.
    """
    names = tuple(n for n in bindings if depends_on(p, (n,)))
    if not names:
        return p, RING.one
    coeffs = polyops.coefficients_wrt(p, names)
    degs = {n: degree(p, n) for n in names}
    powers: dict[tuple[str, int, bool], Poly] = {}

    def power(name: str, k: int, of_num: bool) -> Poly:
        key = (name, k, of_num)
        if key not in powers:
            if k == 0:
                powers[key] = RING.one
            else:
                base = bindings[name].num if of_num else bindings[name].den
                powers[key] = power(name, k - 1, of_num) * base
        return powers[key]

    num = RING.zero
    for exps, c in coeffs.items():
        term = c
        for name, e in zip(names, exps):
            term = term * power(name, e, True) * power(name, degs[name] - e, False)
        num += term
    den = RING.one
    for name in names:
        den = den * power(name, degs[name], False)
    return num, den


def substitute(value, bindings: Mapping[str, "RatFunc | Poly | Number"]) -> RatFunc:
    """Substitute into a polynomial or rational function; result is reduced."""
    return RatFunc.of(value).substitute(bindings)


def vanishes_at(p: Poly, bindings: Mapping[str, "RatFunc | Poly | Number"]) -> bool:
    """True iff ``p`` becomes identically zero under ``bindings``."""
    num, _ = substitute_pair(p, _lift_bindings(bindings))
    return not num


def derivative(value, name: str):
    """Partial derivative of a polynomial or rational function."""
    if isinstance(value, Poly):
        return polyops.derivative(value, name)
    return RatFunc.of(value).derivative(name)
