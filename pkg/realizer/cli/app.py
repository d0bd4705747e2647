"""The typer application, its consoles and per-invocation state."""

from dataclasses import dataclass
from typing import Annotated

import typer
from rich.console import Console

app = typer.Typer(
    name="realizer",
    help="Observable and real realizations of first-order IO-equations.",
    no_args_is_help=True,
)

# reports on stdout, logs and config errors on stderr
console = Console()
err_console = Console(stderr=True)


@dataclass
class InvocationState:
    """Options given before the command name."""

    json_mode: bool = False


state = InvocationState()


def get_json_mode() -> bool:
    return state.json_mode


def _version_callback(value: bool) -> None:
    if not value:
        return
    import sympy

    from .. import __version__

    print(f"realizer {__version__} (sympy {sympy.__version__})")
    raise typer.Exit()


@app.callback()
def main_callback(
    json_output: Annotated[
        bool,
        typer.Option(
            "--json",
            help="Print one JSON report instead of Rich text",
            is_eager=True,
        ),
    ] = False,
    version: Annotated[
        bool,
        typer.Option(
            "--version",
            help="Show the realizer and sympy versions and exit",
            callback=_version_callback,
            is_eager=True,
        ),
    ] = False,
):
    """Exact realization algorithms for input-output equations.

    Each command reads one problem file. Exit codes: 0 decided, 1 error,
    2 not realizable or no real realization, 3 indeterminate.
    """
    state.json_mode = json_output


# Registers the commands on ``app``.
from .commands import (  # noqa: E402, F401
    check,
    config_cmd,
    implicitize,
    observable,
    param,
    real,
    realize,
    verify,
)
