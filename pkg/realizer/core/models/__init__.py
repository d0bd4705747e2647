"""Pydantic models for realizer.

- verdict.py: Verdict, CheckIssue, CheckResult
- report.py: Report produced by every command
- problem.py: textual problem-file content
"""

from .problem import ProblemFile, RealizationSection
from .report import Report
from .verdict import CheckIssue, CheckResult, Severity, Verdict

__all__ = [
    "ProblemFile",
    "RealizationSection",
    "Report",
    "CheckIssue",
    "CheckResult",
    "Severity",
    "Verdict",
]
