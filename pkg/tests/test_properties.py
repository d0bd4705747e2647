"""Seeded randomized checks of the algebraic identities the pipelines rely on."""

import random

import pytest

from realizer.core.models import Verdict
from realizer.differential import (
    Mobius,
    Parametrization,
    Realization,
    corresponding_parametrization,
    implicitize_curve,
    realization_from_parametrization,
    reparametrize_realization,
    verify_realization,
)
from realizer.expr import parse_ratfunc, print_expr
from realizer.kernel import RING, RatFunc, const, gcd, gen
from realizer.observable import tracing_index
from realizer.real import analytic_split, classify_factor, common_v, shift_to_plane
from realizer.real.algorithm import apply_factor, real_realize
from realizer.real.split import split_component
from realizer.kernel.ring import imag_part, real_part

CASES = 200


def _nonzero(rng: random.Random, low: int = -4, high: int = 4) -> int:
    while True:
        v = rng.randint(low, high)
        if v:
            return v


def _make_poly(rng: random.Random, names=("u", "u1", "x"), gaussian=True):
    p = RING.zero
    for _ in range(rng.randint(1, 3)):
        im = rng.choice((0, 0, 1, -3)) if gaussian else 0
        term = const(rng.randint(-5, 5), im)
        for name in names:
            term = term * gen(name) ** rng.randint(0, 2)
        p += term
    return p


def _make_ratfunc(rng: random.Random, names=("u", "u1", "x")) -> RatFunc:
    den = RING.zero
    while not den:
        den = _make_poly(rng, names)
    return RatFunc(_make_poly(rng, names), den)


def _make_mobius(rng: random.Random) -> Mobius:
    while True:
        a, b, c, d = (rng.randint(-5, 5) for _ in range(4))
        if a * d - b * c:
            return Mobius(a, b, c, d)


def _make_proper_sigma(rng: random.Random) -> Realization:
    """x' = c0 u + c1 x, y = x^2 + alpha x: proper as long as c0 != 0."""
    c0, c1, alpha = _nonzero(rng), rng.randint(-3, 3), rng.randint(-3, 3)
    return Realization(
        p=(parse_ratfunc(f"{c0}*u + {c1}*x"),), q=parse_ratfunc(f"x^2 + {alpha}*x")
    )


def _make_realization(rng: random.Random) -> Realization:
    """Random first-order realization whose output really involves x."""
    while True:
        q = _make_poly(rng, names=("u", "x"))
        if q.degree(gen("x")) > 0:
            return Realization(p=(_make_ratfunc(rng, names=("u", "x")),), q=RatFunc(q))


def _make_complex_twist(rng: random.Random) -> RatFunc:
    """A Mobius change of state with non-real coefficients."""
    beta, gamma = _nonzero(rng, -3, 3), rng.randint(-3, 3)
    form = rng.choice(
        (
            f"{beta}*I*x + {gamma}",
            f"x + {beta}*I",
            f"(x + {beta}*I)/(x - {beta}*I)",
            f"({beta}*I*x + 1)/(x + {beta}*I)",
        )
    )
    return parse_ratfunc(form)


class TestPrintedForm:
    """Printing then parsing returns the same reduced rational function."""

    def test_round_trip(self, rng):
        for _ in range(CASES):
            value = _make_ratfunc(rng, names=("u", "x"))
            assert parse_ratfunc(print_expr(value)) == value


class TestRealizationRoundTrip:
    """A realization is recovered from its corresponding parametrization."""

    def test_first_order(self, rng):
        for _ in range(CASES):
            sigma = _make_realization(rng)
            P = corresponding_parametrization(sigma)
            assert realization_from_parametrization(P) == sigma


class TestMobiusClosure:
    """Mobius transformations form a group under composition."""

    def test_composition_matches_substitution(self, rng):
        x = RatFunc.var("x")
        for _ in range(CASES):
            m1, m2 = _make_mobius(rng), _make_mobius(rng)
            composed = m1.compose(m2).as_ratfunc()
            assert composed == m1.apply(m2.as_ratfunc())
            assert m1.compose(m1.inverse()).as_ratfunc() == x

    def test_implicit_equation_is_invariant(self, rng):
        for _ in range(CASES):
            P = corresponding_parametrization(_make_proper_sigma(rng))
            F = implicitize_curve(P)
            moved = P.compose([_make_mobius(rng).as_ratfunc()])
            assert F.equal_up_to_constant(implicitize_curve(moved))


class TestPlaneShift:
    """Real and imaginary parts of p(x + i z) share no factor."""

    @pytest.mark.parametrize("gaussian", [False, True])
    def test_coprime_parts(self, rng, gaussian):
        for _ in range(CASES):
            g = _make_poly(rng, names=("x",), gaussian=gaussian)
            if not g.degree(gen("x")) > 0:
                g = g + gen("x") * _nonzero(rng)
            shifted = shift_to_plane(g)
            U, V = real_part(shifted), imag_part(shifted)
            assert gcd(U, V).is_ground


class TestSplitRecombination:
    """U + i V over W recombines to f(x + i z)."""

    def test_recombine(self, rng):
        for _ in range(CASES):
            f = _make_ratfunc(rng, names=("u", "x"))
            num, den = shift_to_plane(f.num), shift_to_plane(f.den)
            back = split_component(f).recombine()
            assert back.num * den == back.den * num


class TestTracingIndex:
    """Composition with a degree-two state change doubles the tracing index."""

    def test_multiplicative(self, rng):
        for _ in range(CASES):
            P = corresponding_parametrization(_make_proper_sigma(rng))
            assert tracing_index(P) == 1
            beta = rng.randint(-3, 3)
            composed = P.compose([parse_ratfunc(f"x^2 + {beta}*x")])
            assert isinstance(composed, Parametrization)
            assert tracing_index(composed) == 2


class TestTwistRecovery:
    """Undoing a complex change of state through the real curve it leaves in V."""

    def test_line_twist(self, rng):
        for _ in range(CASES):
            sigma = _make_proper_sigma(rng)
            beta = _nonzero(rng)
            twisted = reparametrize_realization(sigma, [parse_ratfunc(f"x + {beta}*I")])
            assert not twisted.is_real()
            P = corresponding_parametrization(twisted)
            split = analytic_split(P)
            V = common_v(P, split)
            assert V == parse_ratfunc(f"z + {beta}").num
            factor = classify_factor(V)
            recovered = apply_factor(twisted, split, factor)
            assert recovered == sigma

    @pytest.mark.parametrize("seed", range(CASES))
    def test_mobius_twist_end_to_end(self, seed):
        rng = random.Random(seed)
        sigma = _make_proper_sigma(rng)
        F = implicitize_curve(corresponding_parametrization(sigma))
        twisted = reparametrize_realization(sigma, [_make_complex_twist(rng)])
        assert verify_realization(twisted, F)
        outcome = real_realize(twisted, F)
        assert outcome.verdict is Verdict.SUCCESS
        assert outcome.realization.is_real()
        assert verify_realization(outcome.realization, F)
        assert tracing_index(corresponding_parametrization(outcome.realization)) == 1
