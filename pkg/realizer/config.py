"""Configuration management for realizer.

Config resolution order (highest priority first):
1. Programmatic (RealizerConfig constructed in code, or configure())
2. Environment variables (REALIZER_SEED, REALIZER_HEIGHT_BOUND, etc.)
3. Config file (~/.config/realizer/config.json, managed by `realizer config`)
4. Hardcoded defaults

CLI flags such as --seed override the loaded config for one invocation.
"""

import json
import logging
import os
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Any

logger = logging.getLogger(__name__)


# =============================================================================
# Config file location
# =============================================================================

CONFIG_DIR = Path.home() / ".config" / "realizer"
CONFIG_FILE = CONFIG_DIR / "config.json"

REPARAM_METHODS = ("implicit", "ansatz")


@dataclass
class RealizerConfig:
    """Settings for the randomized and bounded parts of the algorithms.

    Examples:
        # Package use
        config = RealizerConfig(seed=7, height_bound=100)

        # CLI use: loads from ~/.config/realizer/config.json
        config = RealizerConfig.load()
    """

    seed: int = 42
    specializations: int = 4  # u-probes in the reparametrization search
    height_bound: int = 50  # rational-point search on conics
    verify: bool = True
    max_workers: int = 1
    reparam_method: str = "implicit"

    def __post_init__(self):
        if self.specializations < 1:
            raise ValueError("specializations must be at least 1")
        if self.height_bound < 0:
            raise ValueError("height_bound must be non-negative")
        if self.max_workers < 1:
            raise ValueError("max_workers must be at least 1")
        if self.reparam_method not in REPARAM_METHODS:
            raise ValueError(
                f"reparam_method must be one of {', '.join(REPARAM_METHODS)}"
            )

    @classmethod
    def load(cls) -> "RealizerConfig":
        """Load config from file + env vars.

        Priority: env var values > config.json values > defaults.
        """
        values = asdict(cls())

        # Layer 1: config file
        if CONFIG_FILE.exists():
            try:
                with open(CONFIG_FILE) as f:
                    data = json.load(f)
                for key, raw in data.items():
                    if key in values:
                        values[key] = raw
                    else:
                        logger.warning("Unknown config key %r in %s, ignoring", key, CONFIG_FILE)
            except (json.JSONDecodeError, OSError) as exc:
                logger.warning("Failed to load config from %s: %s", CONFIG_FILE, exc)

        # Layer 2: env var overrides
        for f in fields(cls):
            env = env_name(f.name)
            if (raw := os.environ.get(env)) is None:
                continue
            try:
                values[f.name] = parse_value(f.name, raw)
            except ValueError:
                logger.warning("Invalid %s=%r, ignoring", env, raw)

        try:
            return cls(**values)
        except (TypeError, ValueError) as exc:
            logger.warning("Invalid configuration (%s); using defaults", exc)
            return cls()

    def save(self) -> None:
        """Save config to ~/.config/realizer/config.json."""
        CONFIG_FILE.parent.mkdir(parents=True, exist_ok=True)
        with open(CONFIG_FILE, "w") as f:
            json.dump(self.to_dict(), f, indent=2)

    def to_dict(self) -> dict[str, Any]:
        """Convert to dict for display."""
        return asdict(self)

    def updated(self, **overrides: Any) -> "RealizerConfig":
        """Copy with the non-None overrides applied (CLI flags)."""
        values = self.to_dict()
        values.update({k: v for k, v in overrides.items() if v is not None})
        return RealizerConfig(**values)


def parse_value(key: str, raw: str) -> Any:
    """Parse a string (env var or `config set`) into the field's type."""
    kinds = {f.name: f.type for f in fields(RealizerConfig)}
    if key not in kinds:
        raise KeyError(key)
    kind = kinds[key]
    if kind in (bool, "bool"):
        lowered = raw.strip().lower()
        if lowered in ("1", "true", "yes", "on"):
            return True
        if lowered in ("0", "false", "no", "off"):
            return False
        raise ValueError(f"not a boolean: {raw!r}")
    if kind in (int, "int"):
        return int(raw)
    if key == "reparam_method" and raw not in REPARAM_METHODS:
        raise ValueError(f"unknown method {raw!r}")
    return raw


def env_name(key: str) -> str:
    return f"REALIZER_{key.upper()}"


def value_sources() -> dict[str, str]:
    """Where each loaded value comes from: ``env``, ``file`` or ``default``."""
    stored: dict[str, Any] = {}
    if CONFIG_FILE.exists():
        try:
            stored = json.loads(CONFIG_FILE.read_text())
        except (json.JSONDecodeError, OSError):
            stored = {}
    sources = {}
    for f in fields(RealizerConfig):
        if env_name(f.name) in os.environ:
            sources[f.name] = "env"
        elif f.name in stored:
            sources[f.name] = "file"
        else:
            sources[f.name] = "default"
    return sources


# =============================================================================
# Global config singleton
# =============================================================================

_config: RealizerConfig | None = None


def get_config() -> RealizerConfig:
    """Get the global RealizerConfig instance.

    First call loads from file + env vars. Subsequent calls return cached instance.
    Use configure() to replace the global config programmatically.
    """
    global _config
    if _config is None:
        _config = RealizerConfig.load()
    return _config


def configure(config: RealizerConfig) -> None:
    """Set the global RealizerConfig programmatically."""
    global _config
    _config = config


def reset_config() -> None:
    """Reset the global config (forces reload on next get_config())."""
    global _config
    _config = None
