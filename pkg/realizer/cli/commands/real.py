"""Real command: decide and construct real realizations."""

import typer

from ...core.models import ProblemFile, Report
from ...differential.checks import verify_realization
from ...differential.problem import equation_for, realization_of
from ...expr.printer import print_expr
from ...real.algorithm import real_realize
from ...real.curves import RealCurveFactor
from ..app import app
from ..utils import (
    DebugOpt,
    HeightOpt,
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


def _factor_row(factor: RealCurveFactor, chosen: RealCurveFactor | None) -> dict[str, str]:
    row = {"factor": print_expr(factor.factor), "kind": factor.kind.value, "s1": "", "s2": ""}
    if factor.parametrization is not None:
        s1, s2 = factor.parametrization
        row["s1"], row["s2"] = print_expr(s1), print_expr(s2)
    row["chosen"] = "yes" if factor is chosen else ""
    row["note"] = factor.note
    if factor.extension:
        row["note"] += f"; needs a root of {factor.extension}"
    return row


@app.command("real")
def real_command(
    problem_file: ProblemArg,
    height_bound: HeightOpt = None,
    method: MethodOpt = None,
    seed: SeedOpt = None,
    verify: VerifyOpt = None,
    timing: TimingOpt = False,
    verbose: VerboseOpt = False,
    debug: DebugOpt = False,
):
    """
    Decide whether F has a real realization, and construct one.

    Exit code 2 when no real realization exists, 3 when a real factor of V
    could not be parametrized (indeterminate).

    Example:
        realizer real examples/complex.txt
        realizer real examples/complex.txt --height-bound 200
    """
    setup_logging(verbose=verbose, debug=debug)
    config = resolve_config(
        seed=seed, height_bound=height_bound, verify=verify, reparam_method=method
    )

    def body(problem: ProblemFile) -> Report:
        sigma = realization_of(problem)
        F, implicit_F = equation_for(problem, sigma)
        outcome = real_realize(
            sigma,
            F,
            height_bound=config.height_bound,
            seed=config.seed,
            specializations=config.specializations,
            max_workers=config.max_workers,
            method=config.reparam_method,
        )
        expressions = {"V": print_expr(outcome.V)}
        if outcome.realization is not None:
            expressions.update(outcome.realization.printed())
        if outcome.chosen is not None and outcome.chosen.parametrization is not None:
            expressions["s"] = print_expr(outcome.chosen.reparametrization())
        details: dict = {"height_bound": config.height_bound}
        notes = [outcome.reason] if outcome.reason else []
        if implicit_F:
            expressions["F"] = print_expr(F.F)
            notes.append("F computed by implicitization")
        if outcome.factors:
            details["factors"] = [_factor_row(f, outcome.chosen) for f in outcome.factors]
        if outcome.realization is not None:
            details["real"] = outcome.realization.is_real()
            if config.verify:
                details["verified"] = verify_realization(outcome.realization, F)
        return Report(
            command="real",
            problem=problem.name,
            verdict=outcome.verdict,
            expressions=expressions,
            details=details,
            notes=notes,
        )

    raise typer.Exit(run_report("real", problem_file, body, timing=timing))
