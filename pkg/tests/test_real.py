"""Tests for the analytic split, real curve factors and real realizations."""

from fractions import Fraction

import pytest

from realizer.core.errors import ExtensionRequired
from realizer.core.models import Verdict
from realizer.differential import (
    IOEquation,
    Realization,
    corresponding_parametrization,
    verify_realization,
)
from realizer.differential.problem import equation_of, realization_of
from realizer.expr import load_problem, parse_poly, parse_ratfunc
from realizer.kernel import normalize
from realizer.real import (
    CurveKind,
    analytic_split,
    classify_factor,
    common_v,
    detect_real_curve_factors,
    is_real,
    real_realize,
    shift_to_plane,
)
from realizer.real.curves import heights
from realizer.real.split import split_component

LINE_EQUATION = "y'^2 - 4*u^2*y"


def _classify(text: str):
    return classify_factor(normalize(parse_poly(text)))


class TestAnalyticSplit:
    """P(x + i z) = (U + i V) / W."""

    def test_square(self):
        part = split_component(parse_ratfunc("x^2"))
        assert part.U == parse_poly("x^2 - z^2")
        assert part.V == parse_poly("2*x*z")
        assert part.W == parse_poly("1")

    def test_quotient_recombines(self):
        f = parse_ratfunc("(u*x + I)/(x^2 + 1)")
        part = split_component(f)
        assert is_real(part.W)
        shifted = f.substitute({"x": parse_ratfunc("x + I*z")})
        assert part.recombine() == shifted

    def test_shift(self):
        assert shift_to_plane(parse_poly("x^2")) == parse_poly("(x + I*z)^2")

    def test_real_parametrization_gives_z(self, cubic_realization):
        P = corresponding_parametrization(cubic_realization)
        assert common_v(P) == parse_poly("z")

    def test_complex_only(self, complex_realization):
        P = corresponding_parametrization(complex_realization)
        split = analytic_split(P)
        assert len(split) == 2
        assert common_v(P, split) == parse_poly("x^2 + z^2 + 1")


class TestCurveClassification:
    """Lines, circles and conics over Q."""

    def test_line(self):
        factor = _classify("2*x - z + 1")
        assert factor.kind is CurveKind.LINE
        assert factor.parametrization == (parse_ratfunc("x"), parse_ratfunc("2*x + 1"))
        assert factor.is_mobius

    def test_vertical_line(self):
        factor = _classify("x + 2")
        assert factor.parametrization == (parse_ratfunc("-2"), parse_ratfunc("x"))

    def test_unit_circle(self):
        factor = _classify("x^2 + z^2 - 1")
        assert factor.kind is CurveKind.CIRCLE
        assert factor.note == "stereographic projection"
        assert factor.parametrization == (
            parse_ratfunc("(1 - x^2)/(1 + x^2)"),
            parse_ratfunc("2*x/(1 + x^2)"),
        )
        assert factor.reparametrization() == parse_ratfunc("(1 + I*x)/(1 - I*x)")

    def test_circle_of_irrational_radius(self):
        factor = _classify("x^2 + z^2 - 2")
        assert factor.kind is CurveKind.CIRCLE
        assert factor.point == (Fraction(1), Fraction(1))
        assert factor.is_mobius
        s1, s2 = factor.parametrization
        on_curve = (s1 * s1 + s2 * s2 - parse_ratfunc("2"))
        assert on_curve.is_zero()

    def test_conics_with_rational_points(self):
        ellipse = _classify("x^2 + 2*z^2 - 3")
        assert ellipse.kind is CurveKind.CONIC
        assert ellipse.point == (Fraction(1), Fraction(1))
        assert not ellipse.is_mobius
        hyperbola = _classify("x*z - 1")
        assert hyperbola.kind is CurveKind.CONIC
        assert hyperbola.point == (Fraction(1), Fraction(1))
        s1, s2 = hyperbola.parametrization
        assert (s1 * s2 - parse_ratfunc("1")).is_zero()

    @pytest.mark.parametrize(
        "text,note",
        [
            ("x^2 + z^2", "isolated real point"),
            ("x^2 + 1", "no real points"),
            ("x^2 + 2*z^2 + 3", "empty real locus"),
        ],
    )
    def test_non_real(self, text, note):
        factor = _classify(text)
        assert factor.kind is CurveKind.NON_REAL
        assert factor.note == note
        assert not factor.is_real_curve

    @pytest.mark.parametrize("text", ["x^2 - 2", "x^2 - 2*z^2"])
    def test_irrational_line_pairs(self, text):
        factor = _classify(text)
        assert factor.kind is CurveKind.OTHER
        assert factor.note == "pair of real lines with irrational coefficients"
        assert factor.parametrization is None
        with pytest.raises(ExtensionRequired) as excinfo:
            factor.reparametrization()
        assert excinfo.value.minimal_polynomial == "t^2 - 8"

    def test_higher_degree(self):
        factor = _classify("x^3 - z^2 + 1")
        assert factor.kind is CurveKind.OTHER
        assert factor.note == "degree 3; rationality not decided"

    def test_detect_orders_factors(self):
        factors = detect_real_curve_factors(parse_poly("(x^2 + z^2 + 1)*(z + 1)^2"))
        assert [f.kind for f in factors] == [CurveKind.LINE, CurveKind.NON_REAL]
        assert detect_real_curve_factors(parse_poly("3")) == []

    def test_detect_rejects_other_variables(self):
        with pytest.raises(ValueError, match="expected a polynomial in x, z"):
            detect_real_curve_factors(parse_poly("x + u*z"))

    def test_heights(self):
        assert heights(1) == [0, 1, -1]
        assert heights(2) == [0, 1, -1, Fraction(1, 2), Fraction(-1, 2), 2, -2]


class TestRealRealize:
    """Deciding and constructing real realizations."""

    def test_no_real_realization(self, complex_realization, complex_equation):
        outcome = real_realize(complex_realization, complex_equation)
        assert outcome.verdict is Verdict.NO_REAL_REALIZATION
        assert outcome.V == parse_poly("x^2 + z^2 + 1")
        assert outcome.realization is None
        assert [f.note for f in outcome.factors] == ["empty real locus"]

    def test_twisted_line(self, fixtures_dir):
        problem = load_problem(fixtures_dir / "twisted_line.txt")
        F = equation_of(problem)
        outcome = real_realize(realization_of(problem), F)
        assert outcome.verdict is Verdict.SUCCESS
        assert outcome.V == parse_poly("z + 1")
        assert outcome.chosen.reparametrization() == parse_ratfunc("x - I")
        assert outcome.realization == Realization(
            p=(parse_ratfunc("u"),), q=parse_ratfunc("x^2")
        )
        assert verify_realization(outcome.realization, F)

    def test_twisted_circle(self):
        F = IOEquation.from_poly(parse_poly(LINE_EQUATION))
        sigma = Realization(
            p=(parse_ratfunc("-I/2*u*(1 - x)^2"),),
            q=parse_ratfunc("-(1 + x)^2/(1 - x)^2"),
        )
        assert verify_realization(sigma, F)
        outcome = real_realize(sigma, F)
        assert outcome.verdict is Verdict.SUCCESS
        assert outcome.chosen.kind is CurveKind.CIRCLE
        assert outcome.realization == Realization(
            p=(parse_ratfunc("u*x^2"),), q=parse_ratfunc("1/x^2")
        )

    def test_already_real(self, cubic_realization, cubic_equation):
        outcome = real_realize(cubic_realization, cubic_equation)
        assert outcome.verdict is Verdict.SUCCESS
        assert outcome.realization == cubic_realization
        assert outcome.chosen.factor == parse_poly("z")
        assert outcome.reason == "observable realization is already real"


class TestIsReal:
    """Realness across value types."""

    def test_dispatch(self, cubic_realization, cubic_equation, complex_realization):
        assert is_real(cubic_realization)
        assert is_real(cubic_equation)
        assert is_real(corresponding_parametrization(cubic_realization))
        assert not is_real(complex_realization)
        assert not is_real(parse_poly("x + I"))
        assert is_real(parse_ratfunc("(x + I)/(x + I)"))

    def test_unsupported(self):
        with pytest.raises(TypeError):
            is_real("x")
