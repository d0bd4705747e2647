"""Observable command: turn a realization into an observable one."""

import typer

from ...core.errors import InternalInconsistency
from ...core.models import ProblemFile, Report
from ...differential.conversion import corresponding_parametrization
from ...differential.implicit import implicitize_curve
from ...differential.problem import equation_for, realization_of
from ...expr.printer import print_expr
from ...observable.algorithm import observable_realize_detailed
from ...observable.gpair import degree_condition_check
from ..app import app
from ..utils import (
    DebugOpt,
    MethodOpt,
    ProblemArg,
    SeedOpt,
    TimingOpt,
    VerboseOpt,
    VerifyOpt,
    resolve_config,
    run_report,
    setup_logging,
)


@app.command("observable")
def observable_command(
    problem_file: ProblemArg,
    method: MethodOpt = None,
    seed: SeedOpt = None,
    verify: VerifyOpt = None,
    timing: TimingOpt = False,
    verbose: VerboseOpt = False,
    debug: DebugOpt = False,
):
    """
    Compute an observable realization of F from the given realization.

    The file needs a first-order [realization]; without [equation], F is
    computed by implicitizing it.

    Example:
        realizer observable examples/improper.txt
        realizer --json observable examples/improper.txt --method ansatz --seed 7
    """
    setup_logging(verbose=verbose, debug=debug)
    config = resolve_config(seed=seed, verify=verify, reparam_method=method)

    def body(problem: ProblemFile) -> Report:
        sigma = realization_of(problem)
        F, implicit_F = equation_for(problem, sigma)
        outcome = observable_realize_detailed(
            sigma,
            F,
            seed=config.seed,
            specializations=config.specializations,
            max_workers=config.max_workers,
            method=config.reparam_method,
        )
        expressions = outcome.realization.printed()
        expressions["G"] = print_expr(outcome.gpair.G)
        details: dict = {"tracing_index": outcome.tracing_index, "changed": outcome.changed}
        notes: list[str] = []
        if implicit_F:
            expressions["F"] = print_expr(F.F)
            notes.append("F computed by implicitization")
        if outcome.changed:
            expressions["r"] = print_expr(outcome.candidate.r)
            for i, c in enumerate(outcome.proper.components):
                expressions[f"Q{i}"] = print_expr(c)
            for i, g in enumerate(outcome.implicit, start=1):
                expressions[f"g{i}"] = print_expr(g)
            details["method"] = config.reparam_method
            details["seed"] = config.seed
        else:
            notes.append("the given realization is already observable")

        if config.verify:
            degrees = degree_condition_check(outcome.realization, F)
            details["degree_conditions"] = degrees.verdict.value
            P = corresponding_parametrization(outcome.realization)
            if not implicitize_curve(P).equal_up_to_constant(F):
                raise InternalInconsistency("implicitization of the result differs from F")
            details["verified"] = True
        return Report(
            command="observable",
            problem=problem.name,
            expressions=expressions,
            details=details,
            notes=notes,
        )

    raise typer.Exit(run_report("observable", problem_file, body, timing=timing))
