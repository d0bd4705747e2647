"""Implicitize command: IO-equation of a first-order parametrization."""

import typer

from ...core.models import ProblemFile, Report, Verdict
from ...differential.conversion import corresponding_parametrization
from ...differential.implicit import implicitize_curve
from ...differential.problem import equation_of, parametrization_of, realization_of
from ...expr.printer import print_expr
from ..app import app
from ..utils import DebugOpt, ProblemArg, TimingOpt, VerboseOpt, run_report, setup_logging


@app.command("implicitize")
def implicitize_command(
    problem_file: ProblemArg,
    timing: TimingOpt = False,
    verbose: VerboseOpt = False,
    debug: DebugOpt = False,
):
    """
    Compute F from a first-order parametrization (or a realization).

    When the file also has an [equation], the result is compared with it
    up to a constant factor.

    Example:
        realizer implicitize examples/improper.txt
    """
    setup_logging(verbose=verbose, debug=debug)

    def body(problem: ProblemFile) -> Report:
        if problem.parametrization is not None:
            P = parametrization_of(problem)
        else:
            P = corresponding_parametrization(realization_of(problem))
        F = implicitize_curve(P)
        details: dict = {"order_y": F.order_y, "order_u": F.order_u}
        verdict = Verdict.SUCCESS
        if problem.equation is not None:
            matches = F.equal_up_to_constant(equation_of(problem, check=False))
            details["matches_equation"] = matches
            verdict = Verdict.PASS if matches else Verdict.FAIL
        return Report(
            command="implicitize",
            problem=problem.name,
            verdict=verdict,
            expressions={"F": print_expr(F.F)},
            details=details,
        )

    raise typer.Exit(run_report("implicitize", problem_file, body, timing=timing))
