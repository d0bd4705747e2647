"""Report model: what every CLI command produces."""

from typing import Any

from pydantic import BaseModel, Field

from .verdict import Verdict


class Report(BaseModel):
    """Outcome of one command, in a form that renders both as text and JSON.

    Expressions are stored already printed in the expression grammar so the
    text and JSON forms carry identical content.
    """

    command: str = Field(description="Command name, e.g. 'observable'")
    problem: str | None = Field(default=None, description="Problem file the command ran on")
    verdict: Verdict = Field(default=Verdict.SUCCESS)
    expressions: dict[str, str] = Field(
        default_factory=dict,
        description="Named results printed in the expression grammar",
    )
    details: dict[str, Any] = Field(
        default_factory=dict,
        description="Structured extras (degrees, tracing index, factor table)",
    )
    notes: list[str] = Field(default_factory=list)
    timing: float | None = Field(
        default=None, description="Wall-clock seconds, only when requested"
    )

    @property
    def exit_code(self) -> int:
        return self.verdict.exit_code

    def to_json(self) -> dict[str, Any]:
        data = self.model_dump(mode="json", exclude_none=True)
        data["exit_code"] = self.exit_code
        return data
