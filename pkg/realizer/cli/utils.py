"""CLI utilities for dual-mode output (human-friendly + machine-readable).

Every command builds a :class:`~realizer.core.models.Report`; ``run_report``
loads the problem file, maps errors to exit codes and hands the report to
``Output``:

    @app.command()
    def my_command(problem_file: Path):
        def body(problem: ProblemFile) -> Report:
            ...
        raise typer.Exit(run_report("my-command", problem_file, body))
"""

from __future__ import annotations

import json
import logging
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Annotated, Any, Callable

import typer
from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape

from ..config import RealizerConfig, get_config
from ..core.errors import NotRealizableFromP, RealizerError
from ..core.models import ProblemFile, Report, Verdict
from ..expr.printer import print_expr
from ..expr.problem import load_problem
from .app import console, err_console, get_json_mode
from .display import render_report


class ExitCode:
    """Standardized exit codes for CLI commands.

        0 = Success, or a decided check
        1 = Error (input, precondition, internal inconsistency)
        2 = Not realizable / no real realization
        3 = Indeterminate
    """

    SUCCESS = 0
    ERROR = 1
    NOT_REALIZABLE = 2
    INDETERMINATE = 3


# Hints shown under an error, keyed by the exception class name.
SUGGESTIONS: dict[str, str] = {
    "UnknownIdentifierError": "identifiers are u, y (with primes), x, x1, x2 and I",
    "ExprSyntaxError": "operators are + - * / ^ and primes mark derivatives",
    "SearchExhausted": "retry with more probes: realizer config set specializations 8",
    "InconsistentAnsatz": "try --method implicit",
    "PreconditionError": "realizer check --degrees shows whether the system is observable",
}


def suggestion_for(exc: BaseException) -> str | None:
    """Hint for an error, looking through one level of wrapping."""
    for candidate in (exc.__cause__, exc):
        if candidate is not None and type(candidate).__name__ in SUGGESTIONS:
            return SUGGESTIONS[type(candidate).__name__]
    return None


@dataclass
class Output:
    """One report or one error per invocation, as Rich text or as JSON.

    The JSON document is a report mirror (see ``Report.to_json``) on
    success, and ``{"status": "error", "errors": [...]}`` on failure; both
    carry ``exit_code``.
    """

    console: Console
    json_mode: bool = False
    _document: dict[str, Any] = field(default_factory=dict)
    _exit_code: int = ExitCode.SUCCESS

    def error(
        self,
        message: str,
        *,
        module: str | None = None,
        suggestion: str | None = None,
        exit_code: int = ExitCode.ERROR,
    ) -> None:
        self._exit_code = exit_code
        if self.json_mode:
            entry: dict[str, Any] = {"message": message}
            if module:
                entry["module"] = module
            if suggestion:
                entry["suggestion"] = suggestion
            self._document.setdefault("status", "error")
            self._document.setdefault("errors", []).append(entry)
            return
        self.console.print(f"[red]✗[/red] {escape(message)}", highlight=False)
        if suggestion:
            self.console.print(f"  [dim]→ {escape(suggestion)}[/dim]")

    def report(self, report: Report) -> None:
        self._exit_code = report.exit_code
        if self.json_mode:
            self._document = report.to_json()
        else:
            render_report(self.console, report)

    def finish(self) -> int:
        """Print the JSON document (JSON mode) and return the exit code."""
        if self.json_mode:
            self._document["exit_code"] = self._exit_code
            print(json.dumps(self._document, indent=2, default=str))
        return self._exit_code


def setup_logging(verbose: bool = False, debug: bool = False) -> None:
    """Configure logging for one invocation; logs go to stderr."""
    level = logging.WARNING
    if verbose:
        level = logging.INFO
    if debug:
        level = logging.DEBUG

    logging.basicConfig(
        level=level,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=err_console, show_path=False, markup=False)],
        force=True,
    )
    logging.getLogger("realizer").setLevel(level)


def resolve_config(**overrides: Any) -> RealizerConfig:
    """Config for this invocation: CLI flags > env vars > config file > defaults."""
    try:
        return get_config().updated(**overrides)
    except ValueError as exc:
        err_console.print(f"[red]✗[/red] {escape(str(exc))}", highlight=False)
        raise typer.Exit(ExitCode.ERROR) from None


def not_realizable_report(command: str, problem: str, exc: NotRealizableFromP) -> Report:
    names = ["x'"] if len(exc.z) == 1 else [f"x{i + 1}'" for i in range(len(exc.z))]
    return Report(
        command=command,
        problem=problem,
        verdict=Verdict.NOT_REALIZABLE,
        expressions={name: print_expr(z) for name, z in zip(names, exc.z)},
        notes=[f"{exc.qualified()}: the state derivative depends on derivatives of u"],
    )


def run_report(
    command: str,
    problem_file: Path,
    body: Callable[[ProblemFile], Report],
    *,
    timing: bool = False,
) -> int:
    """Load the problem, run ``body`` and emit its report.

    Returns the exit code for typer.Exit.
    """
    out = Output(console, json_mode=get_json_mode())
    start = time.perf_counter()
    try:
        problem = load_problem(problem_file)
        report = body(problem)
    except NotRealizableFromP as exc:
        report = not_realizable_report(command, str(problem_file), exc)
    except RealizerError as exc:
        out.error(
            exc.qualified(),
            module=exc.module,
            suggestion=suggestion_for(exc),
        )
        return out.finish()
    except ValueError as exc:
        out.error(f"{command}: {exc}")
        return out.finish()
    if timing:
        report.timing = round(time.perf_counter() - start, 3)
    out.report(report)
    return out.finish()


# =============================================================================
# Shared command options
# =============================================================================

ProblemArg = Annotated[
    Path, typer.Argument(help="Problem file (key = value sections, or .yaml/.yml)")
]
SeedOpt = Annotated[
    int | None, typer.Option("--seed", help="Seed for random specialization points")
]
HeightOpt = Annotated[
    int | None,
    typer.Option("--height-bound", help="Height bound for rational points on conics"),
]
VerifyOpt = Annotated[
    bool | None,
    typer.Option("--verify/--no-verify", help="Exact post-hoc verification of results"),
]
MethodOpt = Annotated[
    str | None,
    typer.Option("--method", help="Proper reparametrization method: implicit or ansatz"),
]
TimingOpt = Annotated[
    bool, typer.Option("--timing", help="Add wall-clock timing to the report")
]
VerboseOpt = Annotated[bool, typer.Option("--verbose", "-v", help="Show progress logs")]
DebugOpt = Annotated[bool, typer.Option("--debug", help="Show debug-level logs")]
