"""Param command: corresponding parametrization of a realization."""

import typer

from ...core.models import ProblemFile, Report
from ...differential.conversion import corresponding_parametrization
from ...differential.problem import equation_of, realization_of
from ..app import app
from ..utils import DebugOpt, ProblemArg, TimingOpt, VerboseOpt, run_report, setup_logging


@app.command("param")
def param_command(
    problem_file: ProblemArg,
    order: int | None = typer.Option(
        None,
        "--order",
        help="Number of Lie derivatives (default: order of F, else number of states)",
    ),
    timing: TimingOpt = False,
    verbose: VerboseOpt = False,
    debug: DebugOpt = False,
):
    """
    Print the corresponding parametrization (q, L q, ..., L^n q).

    Example:
        realizer param examples/observable.txt
        realizer --json param examples/second_order.txt --order 2
    """
    setup_logging(verbose=verbose, debug=debug)

    def body(problem: ProblemFile) -> Report:
        sigma = realization_of(problem)
        n = order
        if n is None and problem.equation is not None:
            n = equation_of(problem).order_y
        P = corresponding_parametrization(sigma, n)
        return Report(
            command="param",
            problem=problem.name,
            expressions=P.printed(),
            details={"order": P.order, "states": sigma.order},
        )

    raise typer.Exit(run_report("param", problem_file, body, timing=timing))
