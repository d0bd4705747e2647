"""Transform a realization of a first-order IO-equation into an observable one."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from ..core.errors import InternalInconsistency, PreconditionError
from ..differential.checks import check_param_shape, verify_realization
from ..differential.conversion import corresponding_parametrization, realization_from_parametrization
from ..differential.types import IOEquation, Parametrization, Realization
from ..kernel.ring import Poly
from .gpair import GPair, gp_pair
from .reparam import ReparamMethod, implicit_equations, proper_reparametrize
from .search import ReparamCandidate, find_common_reparametrization

logger = logging.getLogger(__name__)


@dataclass
class ObservableOutcome:
    """Everything computed on the way, for reports."""

    realization: Realization
    gpair: GPair
    tracing_index: int
    candidate: ReparamCandidate | None = None
    proper: Parametrization | None = None
    implicit: list[Poly] = field(default_factory=list)

    @property
    def changed(self) -> bool:
        return self.candidate is not None


def observable_realize_detailed(
    sigma: Realization,
    F: IOEquation,
    *,
    seed: int = 42,
    specializations: int = 4,
    max_workers: int = 1,
    method: ReparamMethod = "implicit",
) -> ObservableOutcome:
    if sigma.order != 1 or F.order_y != 1:
        raise PreconditionError("observable realizations are built for first-order systems")
    if not verify_realization(sigma, F):
        raise PreconditionError("the given realization does not realize F")

    P = corresponding_parametrization(sigma)
    gp = gp_pair(P)
    k = gp.tracing_index
    if k == 1:
        logger.info("realization is already observable")
        return ObservableOutcome(realization=sigma, gpair=gp, tracing_index=1)

    logger.info("tracing index %d; searching for a common reparametrization", k)
    candidate = find_common_reparametrization(
        P, seed=seed, specializations=specializations, max_workers=max_workers, gpair=gp
    )
    Q = proper_reparametrize(P, candidate, method=method)
    shape = check_param_shape(Q, order_u=1)
    if not shape.passed:
        raise InternalInconsistency(f"proper parametrization violates shape conditions: {shape}")

    result = realization_from_parametrization(Q)
    if not verify_realization(result, F):
        raise InternalInconsistency("observable realization does not realize F")
    if gp_pair(corresponding_parametrization(result)).tracing_index != 1:
        raise InternalInconsistency("resulting realization is not observable")
    return ObservableOutcome(
        realization=result,
        gpair=gp,
        tracing_index=k,
        candidate=candidate,
        proper=Q,
        implicit=implicit_equations(Q),
    )


def observable_realize(
    sigma: Realization,
    F: IOEquation,
    *,
    seed: int = 42,
    specializations: int = 4,
    max_workers: int = 1,
    method: ReparamMethod = "implicit",
) -> Realization:
    """Observable realization of F from any realization ``sigma`` of F.

    Returns ``sigma`` itself when it is already observable.

    Raises:
        PreconditionError: sigma is not first order or does not realize F
        SearchExhausted: no u-free reparametrization was found
    """
    return observable_realize_detailed(
        sigma,
        F,
        seed=seed,
        specializations=specializations,
        max_workers=max_workers,
        method=method,
    ).realization
