"""CLI commands for realizer."""

from . import (
    param,
    realize,
    check,
    implicitize,
    observable,
    real,
    verify,
    config_cmd,
)

__all__ = [
    "param",
    "realize",
    "check",
    "implicitize",
    "observable",
    "real",
    "verify",
    "config_cmd",
]
