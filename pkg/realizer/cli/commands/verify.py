"""Verify command: exact substitution checks against F."""

import typer

from ...core.errors import ProblemFileError
from ...core.models import ProblemFile, Report, Verdict
from ...differential.checks import validate_parametrization, verify_realization
from ...differential.problem import equation_of, parametrization_of, realization_of
from ..app import app
from ..utils import DebugOpt, ProblemArg, TimingOpt, VerboseOpt, run_report, setup_logging


@app.command("verify")
def verify_command(
    problem_file: ProblemArg,
    timing: TimingOpt = False,
    verbose: VerboseOpt = False,
    debug: DebugOpt = False,
):
    """
    Verify a realization and/or parametrization against F exactly.

    A realization passes when F vanishes on its corresponding
    parametrization; a parametrization passes when F vanishes on it and its
    Jacobian has full rank.

    Example:
        realizer verify examples/second_order.txt
    """
    setup_logging(verbose=verbose, debug=debug)

    def body(problem: ProblemFile) -> Report:
        F = equation_of(problem)
        if problem.realization is None and problem.parametrization is None:
            raise ProblemFileError(
                "nothing to verify: add a [realization] or [parametrization] section",
                problem.path,
            )
        details: dict = {}
        notes: list[str] = []
        ok = True
        if problem.realization is not None:
            passed = verify_realization(realization_of(problem), F)
            details["realization"] = "pass" if passed else "fail"
            ok = ok and passed
        if problem.parametrization is not None:
            result = validate_parametrization(parametrization_of(problem), F)
            details["parametrization"] = result.verdict.value
            notes.extend(f"{i.clause}: {i.message}" for i in result.failures)
            ok = ok and result.passed
        return Report(
            command="verify",
            problem=problem.name,
            verdict=Verdict.PASS if ok else Verdict.FAIL,
            details=details,
            notes=notes,
        )

    raise typer.Exit(run_report("verify", problem_file, body, timing=timing))
