"""Verdict and check-result models shared by the differential pipelines.

Classes:
- Verdict: decided outcomes of checks and algorithms
- Severity: FAIL or NOTE level of a check clause
- CheckIssue: one violated (or informational) clause
- CheckResult: verdict plus the clauses behind it
"""

from enum import Enum

from pydantic import BaseModel, Field


class Verdict(str, Enum):
    """Outcome of a check or algorithm run."""

    SUCCESS = "success"
    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"
    NOT_REALIZABLE = "not_realizable"
    NO_REAL_REALIZATION = "no_real_realization"
    INDETERMINATE = "indeterminate"

    @property
    def exit_code(self) -> int:
        if self in (Verdict.NOT_REALIZABLE, Verdict.NO_REAL_REALIZATION):
            return 2
        if self is Verdict.INDETERMINATE:
            return 3
        return 0


class Severity(str, Enum):
    FAIL = "fail"
    NOTE = "note"  # informational only


class CheckIssue(BaseModel):
    """A single clause reported by a check.

    Attributes:
        severity: FAIL makes the check fail, NOTE does not
        clause: short machine name of the clause (e.g. 'U_PRIME_MIXING')
        location: component or equation the clause refers to
        message: human-readable description
    """

    severity: Severity = Field(default=Severity.FAIL, description="Clause severity")
    clause: str = Field(description="Machine name of the clause")
    location: str = Field(default="", description="Component the clause refers to")
    message: str = Field(description="Human-readable description")

    def __str__(self) -> str:
        if self.location:
            return f"{self.location}: {self.message}"
        return self.message


class CheckResult(BaseModel):
    """Verdict of a check together with the clauses that decided it."""

    verdict: Verdict = Field(default=Verdict.PASS, description="Decided outcome")
    issues: list[CheckIssue] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.verdict in (Verdict.PASS, Verdict.SUCCESS, Verdict.INCONCLUSIVE)

    @property
    def failures(self) -> list[CheckIssue]:
        return [i for i in self.issues if i.severity == Severity.FAIL]

    @property
    def violated_clause(self) -> str | None:
        """First failing clause, if any."""
        failures = self.failures
        return failures[0].clause if failures else None

    def add_failure(self, clause: str, message: str, location: str = "") -> None:
        self.issues.append(
            CheckIssue(severity=Severity.FAIL, clause=clause, location=location, message=message)
        )
        if self.verdict == Verdict.PASS:
            self.verdict = Verdict.FAIL

    def add_note(self, clause: str, message: str, location: str = "") -> None:
        self.issues.append(
            CheckIssue(severity=Severity.NOTE, clause=clause, location=location, message=message)
        )

    def __str__(self) -> str:
        if not self.failures:
            return self.verdict.value
        return f"{self.verdict.value}: " + "; ".join(str(i) for i in self.failures)
