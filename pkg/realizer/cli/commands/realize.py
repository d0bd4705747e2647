"""Realize command: realization x' = z, y = P0 from a parametrization."""

import typer

from ...core.models import ProblemFile, Report, Verdict
from ...differential.checks import verify_realization
from ...differential.conversion import (
    corresponding_parametrization,
    realization_from_parametrization,
)
from ...differential.problem import equation_of, parametrization_of, realization_of
from ..app import app
from ..utils import (
    DebugOpt,
    ProblemArg,
    TimingOpt,
    VerboseOpt,
    VerifyOpt,
    resolve_config,
    run_report,
    setup_logging,
)


@app.command("realize")
def realize_command(
    problem_file: ProblemArg,
    verify: VerifyOpt = None,
    timing: TimingOpt = False,
    verbose: VerboseOpt = False,
    debug: DebugOpt = False,
):
    """
    Build the realization given by a parametrization of F.

    Exit code 2 when the resulting state derivative depends on u', u'', ...
    With only a [realization] section, its corresponding parametrization
    is used (round trip).

    Example:
        realizer realize examples/cubic.txt
    """
    setup_logging(verbose=verbose, debug=debug)
    config = resolve_config(verify=verify)

    def body(problem: ProblemFile) -> Report:
        notes: list[str] = []
        F = equation_of(problem) if problem.equation is not None else None
        if problem.parametrization is not None:
            P = parametrization_of(problem)
        else:
            given = realization_of(problem)
            P = corresponding_parametrization(given, F.order_y if F else None)
            notes.append("parametrization computed from the [realization] section")
        sigma = realization_from_parametrization(P)

        verdict = Verdict.SUCCESS
        details: dict = {"states": sigma.order}
        if config.verify and F is not None:
            ok = verify_realization(sigma, F)
            details["verified"] = ok
            if not ok:
                verdict = Verdict.FAIL
                notes.append("F does not vanish on the realization")
        return Report(
            command="realize",
            problem=problem.name,
            verdict=verdict,
            expressions=sigma.printed(),
            details=details,
            notes=notes,
        )

    raise typer.Exit(run_report("realize", problem_file, body, timing=timing))
