"""Display helpers for CLI output."""

from typing import Any

from rich.console import Console
from rich.table import Table
from rich.text import Text

from ..core.models import Report, Verdict

VERDICT_STYLE = {
    Verdict.SUCCESS: "green",
    Verdict.PASS: "green",
    Verdict.FAIL: "yellow",
    Verdict.INCONCLUSIVE: "cyan",
    Verdict.NOT_REALIZABLE: "red",
    Verdict.NO_REAL_REALIZATION: "red",
    Verdict.INDETERMINATE: "magenta",
}


def _header(console: Console, title: str) -> None:
    console.print()
    console.print("┌" + "─" * 58 + "┐")
    console.print("│" + f" {title}".ljust(58) + "│")
    console.print("└" + "─" * 58 + "┘")


def _plain(console: Console, text: str) -> None:
    console.print(text, markup=False, highlight=False, soft_wrap=True)


def _table(console: Console, title: str, rows: list[dict[str, Any]]) -> None:
    columns = list(rows[0])
    table = Table(title=title, show_header=True, header_style="bold")
    for col in columns:
        table.add_column(col)
    for row in rows:
        table.add_row(*(Text(str(row.get(c, ""))) for c in columns))
    console.print(table)


def render_report(console: Console, report: Report) -> None:
    """Human-readable rendering of a report; carries the same content as its JSON."""
    _header(console, report.command.upper())
    if report.problem:
        console.print(f"Problem: [bold]{report.problem}[/bold]", highlight=False)
    style = VERDICT_STYLE.get(report.verdict, "white")
    console.print(f"Verdict: [{style}]{report.verdict.value}[/{style}]")

    if report.expressions:
        console.print()
        for name, text in report.expressions.items():
            _plain(console, f"{name} = {text}")

    scalars = {k: v for k, v in report.details.items() if not isinstance(v, list)}
    if scalars:
        console.print()
        for key, value in scalars.items():
            _plain(console, f"{key}: {value}")
    for key, value in report.details.items():
        if isinstance(value, list) and value and isinstance(value[0], dict):
            console.print()
            _table(console, key.replace("_", " ").title(), value)
        elif isinstance(value, list):
            console.print()
            _plain(console, f"{key}:")
            for item in value:
                _plain(console, f"  {item}")

    if report.notes:
        console.print()
        for note in report.notes:
            console.print(note, style="dim", markup=False, highlight=False)
    if report.timing is not None:
        console.print(f"[dim]elapsed: {report.timing:.3f}s[/dim]")
