"""Shared infrastructure for realizer.

- errors: exception hierarchy, one branch per pipeline module
- models: pydantic models for verdicts, reports and problem files
"""

__all__ = [
    "errors",
    "models",
]
