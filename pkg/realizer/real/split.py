"""Analytic split of a parametrization along ``x -> x + i z``.

For ``P_i = f_i/g_i`` write ``g_i(x + i z) = A_i + i B_i`` with real
``A_i, B_i`` (x, z and u treated as real symbols). Multiplying numerator
and denominator by the conjugate gives

    P_i(x + i z) = (U_i + i V_i) / W_i,  W_i = A_i^2 + B_i^2,

where ``U_i + i V_i = f_i(x + i z) * conj(g_i)(x - i z)``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from ..core.errors import InternalInconsistency
from ..differential.types import Parametrization
from ..kernel import polyops
from ..kernel.ratfunc import RatFunc
from ..kernel.ring import (
    I_UNIT,
    INPUT_VARS,
    Poly,
    conj,
    depends_on,
    gen,
    imag_part,
    real_part,
    total_degree,
)

logger = logging.getLogger(__name__)

PLANE = ("x", "z")


@dataclass(frozen=True)
class ComponentSplit:
    U: Poly
    V: Poly
    W: Poly
    A: Poly
    B: Poly

    def recombine(self) -> RatFunc:
        """``(U + i V) / W`` with the conjugate factor ``A - i B`` of W divided out first."""
        num = polyops.exquo(self.U + I_UNIT * self.V, self.A - I_UNIT * self.B)
        return RatFunc(num, self.A + I_UNIT * self.B)


@dataclass(frozen=True)
class AnalyticSplit:
    components: tuple[ComponentSplit, ...]

    def __getitem__(self, i: int) -> ComponentSplit:
        return self.components[i]

    def __len__(self) -> int:
        return len(self.components)

    @property
    def V(self) -> tuple[Poly, ...]:
        return tuple(c.V for c in self.components)


def shift_to_plane(p: Poly) -> Poly:
    """``p(x + i z)``."""
    x = gen("x")
    return p.compose(x, x + I_UNIT * gen("z"))


def split_component(f: RatFunc) -> ComponentSplit:
    num = shift_to_plane(f.num)
    den = shift_to_plane(f.den)
    A, B = real_part(den), imag_part(den)
    prod = num * conj(den)
    return ComponentSplit(U=real_part(prod), V=imag_part(prod), W=A**2 + B**2, A=A, B=B)


def analytic_split(P: Parametrization) -> AnalyticSplit:
    """Split every component of a first-order parametrization in x.

    Raises:
        InternalInconsistency: recombination does not give ``P(x + i z)``
    """
    if P.state_count != 1:
        raise ValueError("the analytic split is defined for parametrizations in x")
    parts = tuple(split_component(c) for c in P.components)
    shift = {"x": RatFunc(gen("x") + I_UNIT * gen("z"))}
    for i, (c, s) in enumerate(zip(P.components, parts)):
        if s.recombine() != c.substitute(shift):
            raise InternalInconsistency(f"analytic split of P{i} does not recombine")
    return AnalyticSplit(parts)


def common_v(P: Parametrization, split: AnalyticSplit | None = None) -> Poly:
    """``V = gcd(V_1, V_2)`` as a monic polynomial in ``x, z``.

    Raises:
        InternalInconsistency: V keeps a factor involving u or its derivatives
    """
    split = split or analytic_split(P)
    V = polyops.gcd_list(list(split.V[:2]))
    if not V:
        raise InternalInconsistency("both imaginary parts vanish identically")
    V = polyops.primitive_wrt(V, PLANE)
    if depends_on(V, INPUT_VARS):
        raise InternalInconsistency(f"V is not defined over the reals in x, z: {V}")
    if V.is_ground:
        logger.info("V is constant: the imaginary parts share no curve")
    else:
        logger.info("V has total degree %d", total_degree(V))
    return V
