"""Real realizations of first-order IO-equations.

Starting from an observable realization with corresponding parametrization
P, a real realization exists iff ``V = gcd(V_1, V_2)`` of the analytic split
has a real rational factor. A proper real parametrization ``(s1, s2)`` of
such a factor gives the change of state ``s = s1 + i s2``; lines and
circles give Mobius ``s`` and hence an observable real realization.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from ..core.errors import InternalInconsistency
from ..core.models import Verdict
from ..differential.checks import verify_realization
from ..differential.conversion import corresponding_parametrization, reparametrize_realization
from ..differential.types import IOEquation, Parametrization, Realization
from ..kernel import ring
from ..kernel.ratfunc import RatFunc
from ..kernel.ring import Poly
from ..observable.algorithm import observable_realize
from ..observable.gpair import tracing_index
from ..observable.reparam import ReparamMethod
from .curves import RealCurveFactor, detect_real_curve_factors, plane_point
from .split import AnalyticSplit, analytic_split, common_v

logger = logging.getLogger(__name__)


@dataclass
class RealOutcome:
    """Verdict plus the intermediate objects shown in reports."""

    verdict: Verdict
    observable: Realization
    V: Poly
    factors: list[RealCurveFactor] = field(default_factory=list)
    realization: Realization | None = None
    chosen: RealCurveFactor | None = None
    reason: str = ""


def is_real(obj) -> bool:
    """True iff every coefficient has zero imaginary part.

    Accepts polynomials, rational functions, IO-equations, realizations and
    parametrizations; rational functions are compared in reduced form.
    """
    if isinstance(obj, (Realization, Parametrization, IOEquation, RatFunc)):
        return obj.is_real()
    if isinstance(obj, Poly):
        return ring.is_real(obj)
    raise TypeError(f"cannot decide realness of {type(obj).__name__}")


def _candidates(factors: list[RealCurveFactor]) -> list[RealCurveFactor]:
    usable = [f for f in factors if f.parametrization is not None]
    return [f for f in usable if f.is_mobius] + [f for f in usable if not f.is_mobius]


def apply_factor(
    sigma: Realization, split: AnalyticSplit, factor: RealCurveFactor
) -> Realization:
    """Reparametrize ``sigma`` by ``s = s1 + i s2`` from a parametrized factor.

    Raises:
        InternalInconsistency: a denominator vanishes on ``(s1, s2)``, the
            factor does not vanish there, or the result is not real
    """
    s1, s2 = factor.parametrization
    at = plane_point(s1, s2)
    if not RatFunc.of(factor.factor).substitute(at).is_zero():
        raise InternalInconsistency(f"({s1}, {s2}) does not lie on {factor.factor}")
    expected = []
    for i, part in enumerate(split.components):
        W = RatFunc.of(part.W).substitute(at)
        if W.is_zero():
            raise InternalInconsistency(f"W{i} vanishes on the real parametrization")
        expected.append(RatFunc.of(part.U).substitute(at) / W)

    result = reparametrize_realization(sigma, [factor.reparametrization()])
    if not result.is_real():
        raise InternalInconsistency("reparametrized realization is not real")
    P = corresponding_parametrization(result)
    if list(P.components) != expected:
        raise InternalInconsistency("real parts of the split disagree with P(s)")
    return result


def real_realize(
    sigma: Realization,
    F: IOEquation,
    *,
    height_bound: int = 50,
    seed: int = 42,
    specializations: int = 4,
    max_workers: int = 1,
    method: ReparamMethod = "implicit",
) -> RealOutcome:
    """Decide whether F has a real realization and construct one.

    The verdict is SUCCESS with a verified real realization,
    NO_REAL_REALIZATION when V has no real factor, or INDETERMINATE when a
    real factor exists but could not be parametrized over Q.
    """
    obs = observable_realize(
        sigma,
        F,
        seed=seed,
        specializations=specializations,
        max_workers=max_workers,
        method=method,
    )
    P = corresponding_parametrization(obs)
    split = analytic_split(P)
    V = common_v(P, split)
    factors = detect_real_curve_factors(V, height_bound=height_bound)
    logger.info("V = %s with %d irreducible factors", V, len(factors))

    if obs.is_real():
        chosen = next((f for f in factors if f.factor == ring.gen("z")), None)
        return RealOutcome(
            Verdict.SUCCESS, obs, V, factors, realization=obs, chosen=chosen,
            reason="observable realization is already real",
        )

    for factor in _candidates(factors):
        logger.info("using %s factor %s", factor.kind.value, factor.factor)
        result = apply_factor(obs, split, factor)
        if not verify_realization(result, F):
            raise InternalInconsistency("real realization does not realize F")
        if factor.is_mobius and tracing_index(corresponding_parametrization(result)) != 1:
            raise InternalInconsistency("Mobius reparametrization lost observability")
        return RealOutcome(Verdict.SUCCESS, obs, V, factors, realization=result, chosen=factor)

    undecided = [f for f in factors if f.is_real_curve]
    if undecided:
        kinds = ", ".join(sorted({f.kind.value for f in undecided}))
        return RealOutcome(
            Verdict.INDETERMINATE, obs, V, factors,
            reason=f"real factors ({kinds}) could not be parametrized over Q",
        )
    return RealOutcome(
        Verdict.NO_REAL_REALIZATION, obs, V, factors,
        reason="V has no factor defining a real curve",
    )


__all__ = ["RealOutcome", "apply_factor", "is_real", "real_realize"]
