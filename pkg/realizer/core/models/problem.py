"""Problem-file model.

A problem file names an IO-equation and, optionally, a realization and/or a
parametrization of it. Expressions stay as text here; turning them into
ring values is the parser's job (see :mod:`realizer.expr.problem`).
"""

import re
from pathlib import Path

import yaml
from pydantic import BaseModel, Field, field_validator, model_validator

STATE_KEY = re.compile(r"^x[12]?'$")
PARAM_KEY = re.compile(r"^P(\d)$")


class RealizationSection(BaseModel):
    """Right-hand sides of ``x' = p(u, x)``, ``y = q(u, x)``."""

    states: dict[str, str] = Field(
        description="State derivative keys (x', or x1', x2') to expression text",
    )
    output: str = Field(description="Expression text of q")

    @field_validator("states")
    @classmethod
    def _check_state_keys(cls, v: dict[str, str]) -> dict[str, str]:
        if not v:
            raise ValueError("realization needs at least one state equation")
        for key in v:
            if not STATE_KEY.match(key):
                raise ValueError(f"unknown state key {key!r}")
        keys = set(v)
        if keys != {"x'"} and keys != {"x1'", "x2'"}:
            raise ValueError("states must be x' alone, or x1' and x2'")
        return v

    @property
    def order(self) -> int:
        return len(self.states)

    def ordered_states(self) -> list[tuple[str, str]]:
        return sorted(self.states.items())


class ProblemFile(BaseModel):
    """Parsed (textual) content of a problem file."""

    path: str | None = Field(default=None, description="Where the file was read from")
    equation: str | None = Field(default=None, description="Text of F")
    realization: RealizationSection | None = None
    parametrization: list[str] | None = Field(
        default=None, description="Texts of P0..Pn in order"
    )

    @model_validator(mode="after")
    def _check_nonempty(self) -> "ProblemFile":
        if self.equation is None and self.realization is None and self.parametrization is None:
            raise ValueError("problem file has no [equation], [realization] or [parametrization]")
        if self.parametrization is not None and len(self.parametrization) < 2:
            raise ValueError("a parametrization needs at least P0 and P1")
        return self

    @property
    def name(self) -> str:
        return self.path or "<inline>"

    def to_dict(self) -> dict:
        """Section mapping in file order, without the path."""
        data: dict = {}
        if self.equation is not None:
            data["equation"] = {"F": self.equation}
        if self.realization is not None:
            section = dict(self.realization.ordered_states())
            section["y"] = self.realization.output
            data["realization"] = section
        if self.parametrization is not None:
            data["parametrization"] = {f"P{i}": t for i, t in enumerate(self.parametrization)}
        return data

    def to_yaml(self, path: Path | str) -> None:
        """Save as a YAML problem file."""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w") as f:
            yaml.dump(
                self.to_dict(), f, default_flow_style=False, sort_keys=False, allow_unicode=True
            )

    @classmethod
    def from_sections(cls, data: dict, path: str | None = None) -> "ProblemFile":
        """Build from a section mapping as found in YAML or key=value files."""
        if not isinstance(data, dict):
            raise ValueError("problem file must be a mapping of sections")
        unknown = set(data) - {"equation", "realization", "parametrization"}
        if unknown:
            raise ValueError(f"unknown sections: {sorted(unknown)}")
        equation = data.get("equation")
        if isinstance(equation, dict):
            if set(equation) != {"F"}:
                raise ValueError("[equation] takes exactly one key, F")
            equation = equation["F"]
        realization = None
        if data.get("realization") is not None:
            section = {str(k): str(v) for k, v in dict(data["realization"]).items()}
            if "y" not in section:
                raise ValueError("[realization] needs y")
            output = section.pop("y")
            realization = RealizationSection(states=section, output=output)
        params = data.get("parametrization")
        if isinstance(params, dict):
            params = _ordered_components(params)
        elif params is not None:
            params = [str(p) for p in params]
        return cls(
            path=path,
            equation=None if equation is None else str(equation),
            realization=realization,
            parametrization=params,
        )

    @classmethod
    def from_yaml(cls, path: Path | str) -> "ProblemFile":
        """Load a YAML problem file."""
        path = Path(path)
        with open(path) as f:
            data = yaml.safe_load(f) or {}
        return cls.from_sections(data, path=str(path))


def _ordered_components(section: dict) -> list[str]:
    indexed = {}
    for key, value in section.items():
        m = PARAM_KEY.match(str(key))
        if not m:
            raise ValueError(f"unknown parametrization key {key!r}")
        indexed[int(m.group(1))] = str(value)
    if sorted(indexed) != list(range(len(indexed))):
        raise ValueError("parametrization keys must be P0, P1, ... without gaps")
    return [indexed[i] for i in range(len(indexed))]
