"""Check command: necessary realizability and observability conditions."""

import typer

from ...core.models import CheckIssue, ProblemFile, Report, Severity, Verdict
from ...differential.checks import (
    check_order_obstruction,
    check_param_shape,
    validate_parametrization,
)
from ...differential.problem import equation_of, parametrization_of, realization_of
from ...observable.gpair import degree_condition_check
from ..app import app
from ..utils import DebugOpt, ProblemArg, TimingOpt, VerboseOpt, run_report, setup_logging


def _clause_rows(issues: list[CheckIssue]) -> list[dict[str, str]]:
    return [
        {
            "severity": i.severity.value,
            "clause": i.clause,
            "location": i.location,
            "message": i.message,
        }
        for i in issues
    ]


@app.command("check")
def check_command(
    problem_file: ProblemArg,
    degrees: bool = typer.Option(
        False, "--degrees", help="Also test observability by the degree conditions"
    ),
    timing: TimingOpt = False,
    verbose: VerboseOpt = False,
    debug: DebugOpt = False,
):
    """
    Check the order obstruction of F and, when given, the shape of P.

    With --degrees the first-order realization is tested for observability
    by comparing degrees of q and L_p q with those of F.

    Example:
        realizer check examples/improper.txt --degrees
    """
    setup_logging(verbose=verbose, debug=debug)

    def body(problem: ProblemFile) -> Report:
        F = equation_of(problem)
        obstruction = check_order_obstruction(F)
        issues = list(obstruction.issues)
        details: dict = {"order_y": F.order_y, "order_u": F.order_u}
        ran_more = False

        if obstruction.verdict is not Verdict.NOT_REALIZABLE and problem.parametrization:
            P = parametrization_of(problem)
            issues += check_param_shape(P, F.order_u).issues
            issues += validate_parametrization(P, F).issues
            ran_more = True
        if degrees:
            deg = degree_condition_check(realization_of(problem), F)
            issues += deg.issues
            details["observable"] = deg.passed
            ran_more = True

        if obstruction.verdict is Verdict.NOT_REALIZABLE:
            verdict = Verdict.NOT_REALIZABLE
        elif any(i.severity is Severity.FAIL for i in issues):
            verdict = Verdict.FAIL
        elif ran_more:
            verdict = Verdict.PASS
        else:
            verdict = Verdict.INCONCLUSIVE
        details["clauses"] = _clause_rows(issues)
        return Report(command="check", problem=problem.name, verdict=verdict, details=details)

    raise typer.Exit(run_report("check", problem_file, body, timing=timing))
