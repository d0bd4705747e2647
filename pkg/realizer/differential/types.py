"""Value types of the differential layer.

- IOEquation: a differential polynomial F in u, u', ... and y, y', ...
- Realization: right-hand sides ``x' = p(u, x)``, ``y = q(u, x)``
- Parametrization: components P0..Pn attached to the hypersurface of F
- Mobius: degree-one change of a single state variable
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from sympy.polys.domains import QQ_I

from ..core.errors import InvalidEquation
from ..kernel import polyops
from ..kernel.linalg import scalar_rref
from ..kernel.ratfunc import RatFunc
from ..kernel.ring import (
    INPUT_VARS,
    OUTPUT_VARS,
    RING,
    Poly,
    degree,
    depends_on,
    gen,
    is_real,
    normalize,
    scalar,
)

logger = logging.getLogger(__name__)

# u', u'', u''' : derivatives of the input proper
INPUT_DERIVATIVES = INPUT_VARS[1:]


def state_names(n: int) -> tuple[str, ...]:
    """State variables of an order-``n`` system."""
    if n == 1:
        return ("x",)
    if n == 2:
        return ("x1", "x2")
    raise ValueError(f"unsupported system order {n}")


def input_level(value: RatFunc | Poly) -> int:
    """Highest derivative order of u occurring, -1 when u-free."""
    value = RatFunc.of(value)
    for k in range(len(INPUT_VARS) - 1, -1, -1):
        if value.depends_on((INPUT_VARS[k],)):
            return k
    return -1


def _highest(p: Poly, names: Sequence[str]) -> int:
    for k in range(len(names) - 1, -1, -1):
        if depends_on(p, (names[k],)):
            return k
    return -1


# =============================================================================
# IO-equation
# =============================================================================


@dataclass(frozen=True)
class IOEquation:
    """Differential polynomial ``F`` with ``y_i`` standing for the i-th derivative of y.

    Irreducibility is assumed, not checked; :meth:`from_poly` enforces the
    cheap proxies (primitive in the outputs, squarefree in the top output).
    """

    F: Poly
    order_y: int
    order_u: int

    @classmethod
    def from_poly(cls, F: Poly, *, check: bool = True) -> "IOEquation":
        if not F:
            raise InvalidEquation("IO-equation must be nonzero")
        order_y = _highest(F, OUTPUT_VARS)
        if order_y < 0:
            raise InvalidEquation("IO-equation does not involve y")
        order_u = max(_highest(F, INPUT_VARS), 0)
        F = normalize(F)
        if check:
            outputs = OUTPUT_VARS[: order_y + 1]
            content = polyops.content_wrt(F, outputs)
            if not content.is_ground:
                raise InvalidEquation("IO-equation is not primitive in the outputs")
            top = OUTPUT_VARS[order_y]
            g = polyops.gcd(F, polyops.derivative(F, top))
            if degree(g, top) > 0:
                raise InvalidEquation(f"IO-equation is not squarefree in {top}")
        return cls(F=F, order_y=order_y, order_u=order_u)

    @property
    def output_names(self) -> tuple[str, ...]:
        return OUTPUT_VARS[: self.order_y + 1]

    def separant(self) -> Poly:
        """Partial derivative of F by its highest output derivative."""
        return polyops.derivative(self.F, OUTPUT_VARS[self.order_y])

    def degree_in(self, name: str) -> int:
        return degree(self.F, name)

    def specialize_input(self, u0: int | Fraction) -> Poly:
        """F with u set to the constant ``u0`` (so u', u'', ... vanish), normalized."""
        bindings: dict[str, RatFunc | int | Fraction] = {"u": u0}
        bindings.update({name: 0 for name in INPUT_DERIVATIVES})
        value = RatFunc.of(self.F).substitute(bindings)
        return normalize(value.num)

    def equal_up_to_constant(self, other: "IOEquation | Poly") -> bool:
        g = other.F if isinstance(other, IOEquation) else other
        return normalize(self.F) == normalize(g)

    def is_real(self) -> bool:
        return is_real(self.F)

    def __str__(self) -> str:
        from ..expr.printer import print_expr

        return print_expr(self.F)


# =============================================================================
# Realization
# =============================================================================


@dataclass(frozen=True)
class Realization:
    """``x' = p(u, x)``, ``y = q(u, x)`` with rational right-hand sides."""

    p: tuple[RatFunc, ...]
    q: RatFunc

    def __post_init__(self):
        object.__setattr__(self, "p", tuple(RatFunc.of(v) for v in self.p))
        object.__setattr__(self, "q", RatFunc.of(self.q))
        states = state_names(len(self.p))
        allowed = set(states) | {"u"}
        for label, value in self.labelled():
            extra = value.names() - allowed
            if extra:
                raise ValueError(
                    f"{label} may only involve u and {', '.join(states)}; found {sorted(extra)}"
                )
        if not self.q.depends_on(states):
            raise ValueError("output q must depend on the state")

    @property
    def order(self) -> int:
        return len(self.p)

    @property
    def states(self) -> tuple[str, ...]:
        return state_names(self.order)

    def labelled(self) -> list[tuple[str, RatFunc]]:
        """Right-hand sides keyed by their printed left-hand side."""
        lhs = [f"{s}'" for s in self.states]
        return list(zip(lhs, self.p)) + [("y", self.q)]

    def is_real(self) -> bool:
        return all(v.is_real() for _, v in self.labelled())

    def printed(self) -> dict[str, str]:
        from ..expr.printer import print_expr

        return {k: print_expr(v) for k, v in self.labelled()}


# =============================================================================
# Parametrization
# =============================================================================


@dataclass(frozen=True)
class Parametrization:
    """Components ``(P0, ..., Pn)`` in the state variables.

    ``levels[i]`` is the highest derivative order of u that component ``i``
    may involve (-1 for u-free). When omitted, the levels actually used
    are recorded.
    """

    components: tuple[RatFunc, ...]
    levels: tuple[int, ...] = field(default=())
    state_count: int = 0

    def __post_init__(self):
        comps = tuple(RatFunc.of(v) for v in self.components)
        if len(comps) < 2:
            raise ValueError("a parametrization needs at least two components")
        object.__setattr__(self, "components", comps)
        actual = tuple(input_level(c) for c in comps)
        if not self.levels:
            object.__setattr__(self, "levels", actual)
        elif len(self.levels) != len(comps):
            raise ValueError("one level per component is required")
        else:
            for i, (a, d) in enumerate(zip(actual, self.levels)):
                if a > d:
                    raise ValueError(f"P{i} involves u-derivative {a} above its level {d}")
        if not self.state_count:
            object.__setattr__(self, "state_count", len(comps) - 1)
        elif self.state_count > len(comps) - 1:
            raise ValueError("fewer components than states plus one")
        states = state_names(self.state_count)
        allowed = set(states) | set(INPUT_VARS)
        for i, c in enumerate(comps):
            extra = c.names() - allowed
            if extra:
                raise ValueError(f"P{i} involves unexpected variables {sorted(extra)}")

    @property
    def order(self) -> int:
        return len(self.components) - 1

    @property
    def states(self) -> tuple[str, ...]:
        return state_names(self.state_count)

    def __getitem__(self, i: int) -> RatFunc:
        return self.components[i]

    def __len__(self) -> int:
        return len(self.components)

    def is_real(self) -> bool:
        return all(c.is_real() for c in self.components)

    def bindings(self) -> dict[str, RatFunc]:
        """``y_i -> P_i`` for substitution into an IO-equation."""
        return {OUTPUT_VARS[i]: c for i, c in enumerate(self.components)}

    def compose(self, s: Sequence[RatFunc]) -> "Parametrization":
        """``P(s(x))`` for a change of states ``s``."""
        subs = {name: RatFunc.of(v) for name, v in zip(self.states, s)}
        return Parametrization(
            tuple(c.substitute(subs) for c in self.components), state_count=self.state_count
        )

    def validate(self, F: "IOEquation"):
        """Exact check of maximal Jacobian rank and ``F(P) = 0``."""
        from .checks import validate_parametrization

        return validate_parametrization(self, F)

    def printed(self) -> dict[str, str]:
        from ..expr.printer import print_expr

        return {f"P{i}": print_expr(c) for i, c in enumerate(self.components)}


# =============================================================================
# Mobius transformations
# =============================================================================


@dataclass(frozen=True)
class Mobius:
    """``s(x) = (a*x + b)/(c*x + d)`` with ``a*d - b*c != 0``; entries in ``QQ_I``."""

    a: object
    b: object
    c: object
    d: object

    def __post_init__(self):
        for name in "abcd":
            v = getattr(self, name)
            if isinstance(v, (int, Fraction)):
                object.__setattr__(self, name, scalar(v))
        if self.determinant() == QQ_I.zero:
            raise ValueError("Mobius transformation must have nonzero determinant")

    @classmethod
    def identity(cls) -> "Mobius":
        return cls(1, 0, 0, 1)

    def determinant(self):
        return self.a * self.d - self.b * self.c

    def as_ratfunc(self, var: str = "x") -> RatFunc:
        x = gen(var)
        num = x.mul_ground(self.a) + RING.ground_new(self.b)
        den = x.mul_ground(self.c) + RING.ground_new(self.d)
        return RatFunc(num, den)

    def inverse(self) -> "Mobius":
        return Mobius(self.d, -self.b, -self.c, self.a)

    def compose(self, other: "Mobius") -> "Mobius":
        """``self(other(x))``."""
        return Mobius(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def apply(self, r: RatFunc) -> RatFunc:
        """``self(r)`` for a rational function ``r``."""
        a, b, c, d = (const_of(v) for v in (self.a, self.b, self.c, self.d))
        return (a * r + b) / (c * r + d)


def const_of(value) -> RatFunc:
    return RatFunc(RING.ground_new(value), reduced=True)


def is_mobius(s: RatFunc, var: str = "x") -> bool:
    """True iff ``s`` is a degree-one rational function of ``var`` alone."""
    s = RatFunc.of(s)
    if s.names() - {var}:
        return False
    return s.degree_in(var) == 1


def univariate_coefficients(p: Poly, var: str, length: int) -> list:
    """Dense coefficient list (highest degree first) of a univariate polynomial."""
    coeffs = [QQ_I.zero] * length
    top = length - 1
    for monom, c in polyops.coefficients_wrt(p, (var,)).items():
        if not c.is_ground:
            raise ValueError(f"expected a polynomial in {var} alone")
        coeffs[top - monom[0]] = c.LC if c else QQ_I.zero
    return coeffs


def mobius_equivalent(r1: RatFunc, r2: RatFunc, var: str = "x") -> bool:
    """True iff ``r2 = m(r1)`` for some Mobius ``m`` with constant coefficients.

    For nonconstant reduced ``r1 = n1/d1`` this holds exactly when
    ``span{n2, d2} = span{n1, d1}`` over the constants.
    """
    r1, r2 = RatFunc.of(r1), RatFunc.of(r2)
    if r1.names() - {var} or r2.names() - {var}:
        return False
    if r1.is_constant() or r2.is_constant():
        return r1.is_constant() and r2.is_constant()
    if r1.degree_in(var) != r2.degree_in(var):
        return False
    length = r1.degree_in(var) + 1
    rows = [univariate_coefficients(p, var, length) for p in (r1.num, r1.den, r2.num, r2.den)]
    _, pivots = scalar_rref(rows)
    return len(pivots) == 2


def mobius_from_ratfunc(s: RatFunc, var: str = "x") -> Mobius:
    """Read off ``a, b, c, d`` from a degree-one ``s``."""
    if not is_mobius(s, var):
        raise ValueError("not a Mobius transformation")
    n = univariate_coefficients(s.num, var, 2)
    d = univariate_coefficients(s.den, var, 2)
    return Mobius(n[0], n[1], d[0], d[1])


__all__ = [
    "IOEquation",
    "Realization",
    "Parametrization",
    "Mobius",
    "is_mobius",
    "mobius_equivalent",
    "mobius_from_ratfunc",
    "state_names",
    "input_level",
]
