"""CLI package for realizer.

Supports dual-mode output:
- Human mode (default): Rich formatting with tables
- Machine mode (--json): one JSON document per invocation

Exit codes:
    0 = Success, or a decided check
    1 = Error (bad input, failed precondition, internal inconsistency)
    2 = Not realizable / no real realization
    3 = Indeterminate
"""

from .app import app

# Import commands to register them with the app
from . import commands  # noqa: F401

__all__ = ["app"]
