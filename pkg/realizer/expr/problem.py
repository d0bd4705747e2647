"""Problem-file reading and writing.

Two on-disk forms carry the same sections:

key = value (any suffix other than .yaml/.yml)::

    # Example
    [equation]
    F = (y' - u*y)^3 + u*y^2

    [realization]
    x' = (1-x)/u
    y = (1-x)^2/(u^2+(1-x)^3)

    [parametrization]
    P0 = ...
    P1 = ...

YAML, with the same section and key names.
"""

from __future__ import annotations

import logging
import re
from pathlib import Path

from pydantic import ValidationError

from ..core.errors import ProblemFileError
from ..core.models import ProblemFile

logger = logging.getLogger(__name__)

YAML_SUFFIXES = (".yaml", ".yml")

_SECTION = re.compile(r"^\[(\w+)\]$")


def parse_problem_text(text: str, path: str | None = None) -> ProblemFile:
    """Parse the key=value form."""
    sections: dict[str, dict[str, str]] = {}
    current: str | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _SECTION.match(line)
        if m:
            current = m.group(1)
            if current not in ("equation", "realization", "parametrization"):
                raise ProblemFileError(f"unknown section [{current}]", path, lineno)
            if current in sections:
                raise ProblemFileError(f"duplicate section [{current}]", path, lineno)
            sections[current] = {}
            continue
        if current is None:
            raise ProblemFileError("key outside of any section", path, lineno)
        if "=" not in line:
            raise ProblemFileError("expected 'key = value'", path, lineno)
        key, value = (s.strip() for s in line.split("=", 1))
        if not key or not value:
            raise ProblemFileError("empty key or value", path, lineno)
        if key in sections[current]:
            raise ProblemFileError(f"duplicate key {key!r}", path, lineno)
        sections[current][key] = value
    try:
        return ProblemFile.from_sections(sections, path=path)
    except (ValidationError, ValueError) as exc:
        raise ProblemFileError(_first_message(exc), path) from None


def load_problem(path: Path | str) -> ProblemFile:
    """Read a problem file, choosing the format by suffix."""
    path = Path(path)
    if not path.exists():
        raise ProblemFileError("file not found", str(path))
    logger.debug("loading problem file %s", path)
    if path.suffix.lower() in YAML_SUFFIXES:
        try:
            return ProblemFile.from_yaml(path)
        except (ValidationError, ValueError) as exc:
            raise ProblemFileError(_first_message(exc), str(path)) from None
        except Exception as exc:
            # yaml.YAMLError and OSError
            raise ProblemFileError(f"cannot read YAML: {exc}", str(path)) from None
    return parse_problem_text(path.read_text(), path=str(path))


def format_problem(problem: ProblemFile) -> str:
    """Render the key=value form."""
    lines: list[str] = []
    for section, entries in problem.to_dict().items():
        if lines:
            lines.append("")
        lines.append(f"[{section}]")
        lines.extend(f"{k} = {v}" for k, v in entries.items())
    return "\n".join(lines) + "\n"


def save_problem(problem: ProblemFile, path: Path | str) -> None:
    path = Path(path)
    if path.suffix.lower() in YAML_SUFFIXES:
        problem.to_yaml(path)
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_problem(problem))


def _first_message(exc: Exception) -> str:
    if isinstance(exc, ValidationError):
        errors = exc.errors()
        if errors:
            return str(errors[0].get("msg", exc))
    return str(exc)
