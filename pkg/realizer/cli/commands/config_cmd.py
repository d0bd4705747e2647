"""Config command: show, set and reset the stored realizer settings."""

import os
from dataclasses import fields

import typer
from rich.table import Table

from ... import config as config_module
from ...config import (
    REPARAM_METHODS,
    RealizerConfig,
    env_name,
    get_config,
    parse_value,
    reset_config,
    value_sources,
)
from ..app import app, console

VALID_KEYS = tuple(f.name for f in fields(RealizerConfig))

_MEANING = {
    "seed": "random specialization points",
    "specializations": "u-probes in the reparametrization search",
    "height_bound": "rational-point search on conics",
    "verify": "exact post-hoc verification",
    "max_workers": "parallel probes in the search",
    "reparam_method": " | ".join(REPARAM_METHODS),
}


@app.command("config")
def config_command(
    action: str = typer.Argument(..., help="Action: show, set, reset"),
    key: str | None = typer.Argument(None, help="Setting name, e.g. height_bound"),
    value: str | None = typer.Argument(None, help="New value (set only)"),
):
    """View or change the settings stored in ~/.config/realizer/config.json.

    Environment variables REALIZER_<KEY> take precedence over the file.

    Examples:
        realizer config show
        realizer config set seed 7
        realizer config set reparam_method ansatz
        realizer config reset
    """
    actions = {"show": _show, "reset": _reset}
    if action == "set":
        if not key or value is None:
            console.print("[red]Usage:[/red] realizer config set <key> <value>")
            console.print(f"Keys: {', '.join(VALID_KEYS)}")
            raise typer.Exit(1)
        _set(key, value)
    elif action in actions:
        actions[action]()
    else:
        console.print(f"[red]Unknown action:[/red] {action} (expected show, set or reset)")
        raise typer.Exit(1)


def _show() -> None:
    config = get_config()
    sources = value_sources()
    table = Table(title="Realizer Configuration", header_style="bold")
    table.add_column("key", no_wrap=True)
    table.add_column("value", no_wrap=True)
    table.add_column("source", style="dim", no_wrap=True)
    table.add_column("meaning")
    for name, current in config.to_dict().items():
        table.add_row(name, str(current), sources[name], _MEANING[name])
    console.print(table)

    path = config_module.CONFIG_FILE
    state = "" if path.exists() else " [dim](not created yet)[/dim]"
    console.print(f"Config file: {path}{state}", highlight=False)


def _set(key: str, value: str) -> None:
    if key not in VALID_KEYS:
        console.print(f"[red]Unknown key:[/red] {key}")
        console.print(f"Keys: {', '.join(VALID_KEYS)}")
        raise typer.Exit(1)

    try:
        updated = get_config().updated(**{key: parse_value(key, value)})
    except ValueError as exc:
        console.print(f"[red]Invalid value for {key}:[/red] {exc}")
        raise typer.Exit(1) from None

    updated.save()
    reset_config()
    console.print(f"[green]✓[/green] {key} = {getattr(updated, key)}")
    if env_name(key) in os.environ:
        console.print(f"  [yellow]{env_name(key)} is set and still overrides this value[/yellow]")


def _reset() -> None:
    path = config_module.CONFIG_FILE
    if not path.exists():
        console.print("No config file; settings are already the defaults")
        return
    path.unlink()
    reset_config()
    console.print(f"[green]✓[/green] Removed {path}")
