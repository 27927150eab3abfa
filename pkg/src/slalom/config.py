"""Runtime configuration: key = value files, environment override, defaults."""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from slalom.syllables import BoundConstants

ENV_VAR = "SLALOM_CONFIG"


@dataclass(frozen=True)
class Config:
    bound_constants: BoundConstants = field(default_factory=BoundConstants)
    samples_per_turn: int = 128
    lift_tolerance: float = 1e-6
    svg_scale: float = 40.0

    def __post_init__(self):
        if self.samples_per_turn < 16:
            raise ValueError("samples_per_turn must be >= 16")
        if self.lift_tolerance <= 0 or self.svg_scale <= 0:
            raise ValueError("lift_tolerance and svg_scale must be positive")

    def as_dict(self) -> dict:
        return {
            "c_minus": self.bound_constants.c_minus,
            "c_plus": self.bound_constants.c_plus,
            "samples_per_turn": self.samples_per_turn,
            "lift_tolerance": self.lift_tolerance,
            "svg_scale": self.svg_scale,
        }


_FIELDS = {
    "c_minus": float,
    "c_plus": float,
    "samples_per_turn": int,
    "lift_tolerance": float,
    "svg_scale": float,
}


def load_config(path: str | None = None) -> Config:
    """Defaults, overridden by the file at ``path`` or at $SLALOM_CONFIG."""
    if path is None:
        path = os.environ.get(ENV_VAR)
    values: dict = {}
    if path:
        with open(path) as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise ValueError(f"{path}:{lineno}: expected 'key = value'")
                key, _, val = line.partition("=")
                key = key.strip()
                if key not in _FIELDS:
                    raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
                values[key] = _FIELDS[key](val.strip())
    return config_from_values(values)


def config_from_values(values: dict) -> Config:
    base = Config()
    bc = BoundConstants(
        values.get("c_minus", base.bound_constants.c_minus),
        values.get("c_plus", base.bound_constants.c_plus),
    )
    return Config(
        bound_constants=bc,
        samples_per_turn=values.get("samples_per_turn", base.samples_per_turn),
        lift_tolerance=values.get("lift_tolerance", base.lift_tolerance),
        svg_scale=values.get("svg_scale", base.svg_scale),
    )
