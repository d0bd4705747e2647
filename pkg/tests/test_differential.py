"""Tests for the differential layer: operators, conversions, checks, implicitization."""

from fractions import Fraction

import pytest

from realizer.core.errors import (
    DegenerateParametrization,
    InvalidEquation,
    NotRealizableFromP,
    SingularJacobian,
    SingularReparametrization,
)
from realizer.core.models import Verdict
from realizer.differential import (
    IOEquation,
    Mobius,
    Parametrization,
    Realization,
    check_order_obstruction,
    check_param_shape,
    corresponding_parametrization,
    d_u,
    implicitize_curve,
    input_level,
    is_mobius,
    lie_derivative,
    mobius_equivalent,
    mobius_from_ratfunc,
    realization_from_parametrization,
    reparametrize_realization,
    validate_parametrization,
    verify_realization,
)
from realizer.expr import load_problem, parse_poly, parse_ratfunc
from realizer.differential.problem import equation_of, realization_of
from realizer.kernel import RatFunc, normalize
from realizer.observable import degree_condition_check, tracing_index


def _make_equation(text: str) -> IOEquation:
    return IOEquation.from_poly(parse_poly(text))


def _make_param(*texts: str) -> Parametrization:
    return Parametrization(tuple(parse_ratfunc(t) for t in texts))


NONREALIZABLE_P = ("u/(u - x)^3", "u*x/(u - x)^3")


class TestIOEquation:
    """Construction, orders and derived quantities of F."""

    def test_orders(self, cubic_equation):
        assert cubic_equation.order_y == 1
        assert cubic_equation.order_u == 1
        assert cubic_equation.output_names == ("y0", "y1")

    def test_orders_without_input(self):
        F = _make_equation("y'^2 + y^2 - 1")
        assert F.order_y == 1
        assert F.order_u == 0

    def test_normalized(self):
        F = _make_equation("2*y' - 2*u")
        # u comes before y' in the term order
        assert F.F == parse_poly("u - y'")

    def test_rejects_zero_and_output_free(self):
        with pytest.raises(InvalidEquation, match="nonzero"):
            IOEquation.from_poly(parse_poly("0"))
        with pytest.raises(InvalidEquation, match="does not involve y"):
            _make_equation("u' - u")

    def test_rejects_content(self):
        with pytest.raises(InvalidEquation, match="not primitive"):
            _make_equation("u*y' - u^2")

    def test_separant(self):
        F = _make_equation("(y' - u*y)^3 + u*y^2")
        assert normalize(F.separant()) == normalize(parse_poly("3*(y' - u*y)^2"))

    def test_specialize_input(self, complex_equation):
        curve = complex_equation.specialize_input(1)
        assert curve == normalize(parse_poly("2*y^2*y'^2 + y^2 + 2*y'^2"))

    def test_specialize_second_order(self, fixtures_dir):
        F = equation_of(load_problem(fixtures_dir / "second_order.txt"))
        expected = parse_poly("-y''^3 + y^2 + y'^2 - 2*y''^2 + 3*y''")
        assert F.specialize_input(1) == normalize(expected)

    def test_specialize_fraction(self):
        F = _make_equation("y' - u*y - u'")
        assert F.specialize_input(Fraction(1, 2)) == normalize(parse_poly("y' - 1/2*y"))

    def test_equal_up_to_constant(self, cubic_equation):
        assert cubic_equation.equal_up_to_constant(-3 * cubic_equation.F)


class TestOperators:
    """D_u and the Lie derivative."""

    def test_d_u(self):
        assert d_u(parse_poly("u")) == parse_ratfunc("u'")
        assert d_u(parse_poly("u^2 + u'")) == parse_ratfunc("2*u*u' + u''")
        assert d_u(parse_poly("x^3")) == RatFunc.zero()

    def test_d_u_quotient_rule(self):
        q = parse_ratfunc("(1 - x)^4/(u^2 + (1 - x)^6)")
        assert d_u(q) == parse_ratfunc("-2*u*u'*(1 - x)^4/(u^2 + (1 - x)^6)^2")

    def test_d_u_past_top_derivative(self):
        with pytest.raises(ValueError):
            d_u(parse_poly("u'''"))

    def test_lie_derivative(self):
        p = [parse_ratfunc("u*x")]
        assert lie_derivative(parse_ratfunc("7"), p) == RatFunc.zero()
        assert lie_derivative(parse_ratfunc("u*x^3 + x^2"), p) == parse_ratfunc(
            "3*u^2*x^3 + 2*u*x^2 + u'*x^3"
        )

    def test_lie_derivative_arity(self):
        with pytest.raises(ValueError, match="one vector-field entry"):
            lie_derivative(parse_ratfunc("x"), [parse_ratfunc("u")], states=("x1", "x2"))


class TestConversions:
    """Realization to parametrization and back."""

    def test_corresponding_parametrization(self, cubic_realization):
        P = corresponding_parametrization(cubic_realization)
        assert P.components == (
            parse_ratfunc("u*x^3 + x^2"),
            parse_ratfunc("3*u^2*x^3 + 2*u*x^2 + u'*x^3"),
        )
        assert P.levels == (0, 1)
        assert [input_level(c) for c in P.components] == [0, 1]

    def test_trivial_parametrization(self):
        sigma = Realization(p=(parse_ratfunc("0"),), q=parse_ratfunc("x"))
        P = corresponding_parametrization(sigma)
        assert P.components == (parse_ratfunc("x"), RatFunc.zero())
        back = realization_from_parametrization(P)
        assert back == sigma

    def test_improper_parametrization_keeps_output(self, improper_realization):
        P = corresponding_parametrization(improper_realization)
        assert P[0] == parse_ratfunc("(1 - x)^4/(u^2 + (1 - x)^6)")

    def test_not_realizable_from_p(self):
        P = _make_param(*NONREALIZABLE_P)
        with pytest.raises(NotRealizableFromP) as exc:
            realization_from_parametrization(P)
        (z,) = exc.value.z
        assert z == parse_ratfunc("(u*x*(u - x) + (2*u + x)*u')/(3*u)")

    def test_singular_jacobian(self):
        with pytest.raises(SingularJacobian):
            realization_from_parametrization(_make_param("u", "u'"))

    def test_input_dependent_output_comes_back(self):
        sigma = Realization(
            p=(parse_ratfunc("-(1 + x)/u"),),
            q=parse_ratfunc("(1 + x)^2/(u^2 + (1 + x)^3)"),
        )
        P = corresponding_parametrization(sigma)
        assert check_param_shape(P, order_u=1).passed
        assert realization_from_parametrization(P) == sigma

    def test_round_trip_second_order(self, fixtures_dir):
        sigma = realization_of(load_problem(fixtures_dir / "second_order.txt"))
        P = corresponding_parametrization(sigma)
        assert P.levels == (0, 1, 2)
        assert realization_from_parametrization(P) == sigma

    def test_reparametrize_identity(self, cubic_realization):
        assert reparametrize_realization(cubic_realization, [parse_ratfunc("x")]) == cubic_realization

    def test_reparametrize_inversion(self, cubic_realization, cubic_equation):
        sigma = reparametrize_realization(cubic_realization, [parse_ratfunc("1/x")])
        assert sigma.p == (parse_ratfunc("-u*x"),)
        assert sigma.q == parse_ratfunc("(u + x)/x^3")
        assert verify_realization(sigma, cubic_equation)

    def test_complex_twist_realizes_same_equation(self, cubic_realization, cubic_equation):
        sigma = reparametrize_realization(cubic_realization, [parse_ratfunc("I*x")])
        assert not sigma.is_real()
        assert verify_realization(sigma, cubic_equation)

    def test_reparametrization_must_be_u_free(self, cubic_realization):
        with pytest.raises(SingularReparametrization, match="must not depend on u"):
            reparametrize_realization(cubic_realization, [parse_ratfunc("u*x")])

    def test_reparametrization_must_be_nonconstant(self, cubic_realization):
        with pytest.raises(SingularReparametrization, match="singular"):
            reparametrize_realization(cubic_realization, [parse_ratfunc("3")])


class TestChecks:
    """Order obstruction, shape conditions and verification."""

    def test_order_obstruction(self):
        result = check_order_obstruction(_make_equation("y'^2 - u''*y"))
        assert result.verdict is Verdict.NOT_REALIZABLE
        assert result.violated_clause == "ORDER_OBSTRUCTION"

    def test_order_obstruction_inconclusive(self, cubic_equation):
        assert check_order_obstruction(cubic_equation).verdict is Verdict.INCONCLUSIVE
        F = _make_equation("(y' - u*y)^3 + u*y^2")
        assert check_order_obstruction(F).verdict is Verdict.INCONCLUSIVE
        assert check_order_obstruction(_make_equation("y'^2 - u*y")).verdict is Verdict.INCONCLUSIVE

    def test_shape_fails_on_u_prime_mixing(self):
        result = check_param_shape(_make_param(*NONREALIZABLE_P), order_u=1)
        assert not result.passed
        assert result.violated_clause == "U_PRIME_MIXING"

    def test_shape_passes_for_proper_q(self, cubic_realization):
        P = corresponding_parametrization(cubic_realization)
        assert check_param_shape(P, order_u=1).passed
        assert check_param_shape(_make_param("x", "0"), order_u=1).passed

    def test_shape_order_zero(self):
        assert check_param_shape(_make_param("x^2", "u*x"), order_u=0).passed
        result = check_param_shape(_make_param("u*x", "x"), order_u=0)
        assert result.violated_clause == "U_FREE"

    def test_shape_order_zero_checks_u_prime_mixing(self):
        result = check_param_shape(_make_param(*NONREALIZABLE_P), order_u=0)
        clauses = {issue.clause for issue in result.issues}
        assert {"U_FREE", "U_PRIME_MIXING"} <= clauses

    def test_shape_unsupported_input_order(self):
        result = check_param_shape(_make_param("x", "0"), order_u=2)
        assert result.violated_clause == "INPUT_ORDER"

    def test_shape_agrees_with_realizability(self, rng):
        """The u'-mixing clause holds exactly when the Jacobian formula is u'-free."""
        for _ in range(20):
            a, b = rng.randint(1, 3), rng.randint(-3, 3)
            P = _make_param(f"x^{a} + {b}*u*x", f"u*x^{a} + x - {b}*u'")
            realizable = True
            try:
                realization_from_parametrization(P)
            except NotRealizableFromP:
                realizable = False
            assert check_param_shape(P, order_u=1).passed == realizable

    def test_verify_realization(self, cubic_realization, cubic_equation):
        assert verify_realization(cubic_realization, cubic_equation)
        sigma = Realization(p=(parse_ratfunc("0"),), q=parse_ratfunc("x"))
        assert verify_realization(sigma, _make_equation("y'"))
        assert not verify_realization(cubic_realization, _make_equation("y'"))

    def test_verify_second_order(self, fixtures_dir):
        problem = load_problem(fixtures_dir / "second_order.txt")
        assert verify_realization(realization_of(problem), equation_of(problem))

    def test_verify_improper(self, improper_realization, improper_equation):
        assert verify_realization(improper_realization, improper_equation)

    def test_validate_parametrization(self, cubic_realization, cubic_equation):
        P = corresponding_parametrization(cubic_realization)
        assert validate_parametrization(P, cubic_equation).passed
        assert P.validate(cubic_equation).passed
        result = validate_parametrization(_make_param("x", "x"), cubic_equation)
        assert result.violated_clause == "F_OF_P"
        constant = validate_parametrization(_make_param("u", "u'"), cubic_equation)
        assert constant.violated_clause == "JACOBIAN_RANK"


class TestCubicSystem:
    """x' = u x, y = u x^3 + x^2: an observable realization."""

    def test_degree_conditions(self, cubic_realization, cubic_equation):
        assert cubic_equation.degree_in("y1") == 3
        assert cubic_equation.degree_in("y0") == 3
        assert degree_condition_check(cubic_realization, cubic_equation).passed

    def test_tracing_index(self, cubic_realization):
        assert tracing_index(corresponding_parametrization(cubic_realization)) == 1

    def test_implicitization(self, cubic_realization, cubic_equation):
        F = implicitize_curve(corresponding_parametrization(cubic_realization))
        assert F.equal_up_to_constant(cubic_equation)
        assert F.F == cubic_equation.F

    def test_degree_conditions_fail_for_improper(self, improper_realization, improper_equation):
        result = degree_condition_check(improper_realization, improper_equation)
        assert not result.passed


class TestImplicitization:
    """F from a first-order parametrization."""

    def test_cubic_from_parametrization(self):
        F = implicitize_curve(_make_param(*NONREALIZABLE_P))
        assert F.equal_up_to_constant(parse_poly("(y' - u*y)^3 + u*y^2"))

    def test_constant_component(self):
        F = implicitize_curve(_make_param("x", "0"))
        assert F.F == parse_poly("y'")

    def test_degenerate(self):
        with pytest.raises(DegenerateParametrization):
            implicitize_curve(_make_param("u", "u'"))

    def test_soundness(self, rng):
        for _ in range(10):
            a, b, c = rng.randint(1, 3), rng.randint(-2, 2), rng.randint(1, 3)
            sigma = Realization(
                p=(parse_ratfunc(f"{c}*u + {b}*x"),), q=parse_ratfunc(f"x^2 + {a}*x")
            )
            P = corresponding_parametrization(sigma)
            F = implicitize_curve(P)
            assert validate_parametrization(P, F).passed


class TestMobius:
    """Degree-one changes of state."""

    def test_inverse_and_compose(self):
        m = Mobius(1, 2, 3, 4)
        identity = m.compose(m.inverse())
        assert identity.as_ratfunc() == parse_ratfunc("x")
        assert m.apply(m.inverse().as_ratfunc()) == parse_ratfunc("x")

    def test_as_ratfunc(self):
        assert Mobius(2, 1, 1, -3).as_ratfunc() == parse_ratfunc("(2*x + 1)/(x - 3)")
        assert Mobius.identity().as_ratfunc() == parse_ratfunc("x")

    def test_singular(self):
        with pytest.raises(ValueError, match="nonzero determinant"):
            Mobius(1, 1, 1, 1)

    def test_is_mobius(self):
        assert is_mobius(parse_ratfunc("(2*x + 1)/(x - 3)"))
        assert is_mobius(parse_ratfunc("x - I"))
        assert not is_mobius(parse_ratfunc("x^2"))
        assert not is_mobius(parse_ratfunc("u*x"))

    def test_from_ratfunc(self):
        s = parse_ratfunc("(2*x + 1)/(x - 3)")
        assert mobius_from_ratfunc(s).as_ratfunc() == s
        with pytest.raises(ValueError):
            mobius_from_ratfunc(parse_ratfunc("x^2"))

    def test_equivalence(self):
        assert mobius_equivalent(parse_ratfunc("x^2 - 2*x"), parse_ratfunc("-x^2 + 2*x"))
        assert mobius_equivalent(parse_ratfunc("x^2"), parse_ratfunc("1/(x^2 + 1)"))
        assert not mobius_equivalent(parse_ratfunc("x^2"), parse_ratfunc("x^2 + x"))
        assert not mobius_equivalent(parse_ratfunc("x^2"), parse_ratfunc("x^3"))
        assert not mobius_equivalent(parse_ratfunc("x^2"), parse_ratfunc("u*x^2"))
