"""Enumeration limits and output defaults.

Settings resolve in the order: built-in defaults, then a key-value config file,
then the ``LEVELRANK_LIMITS`` environment variable, then explicit CLI flags.

Config file format, one ``key = value`` per line, ``#`` starts a comment::

    # ~/.levelrank.conf
    max_partition_n = 40
    max_multipartitions = 200000
    shift_bound = 4

``LEVELRANK_LIMITS`` uses the same keys, comma separated:
``LEVELRANK_LIMITS="max_multipartitions=50000,shift_bound=3"``.
"""
from __future__ import annotations

import dataclasses
import os
from dataclasses import dataclass
from pathlib import Path

from .errors import ParseError

ENV_VAR = "LEVELRANK_LIMITS"
DEFAULT_CONFIG_PATH = Path("~/.levelrank.conf")


@dataclass(frozen=True)
class Limits:
    max_partition_n: int = 40
    max_multipartitions: int = 200_000
    max_affine: int = 2_000_000
    shift_bound: int = 4
    output: str = "ascii"
    seed: int = 0

    def __post_init__(self):
        for f in ("max_partition_n", "max_multipartitions", "max_affine"):
            if getattr(self, f) <= 0:
                raise ValueError(f"{f} must be positive")
        if self.shift_bound < 0:
            raise ValueError("shift_bound must be non-negative")
        if self.output not in ("json", "ascii", "both"):
            raise ValueError(f"unknown output mode {self.output!r}")


_INT_KEYS = {f.name for f in dataclasses.fields(Limits) if f.type in ("int", int)}

_active = Limits()


def limits() -> Limits:
    return _active


def set_limits(new: Limits) -> None:
    global _active
    _active = new


def parse_pairs(pairs, source="config") -> dict:
    known = {f.name for f in dataclasses.fields(Limits)}
    out = {}
    for raw in pairs:
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError(f"{source}: expected key=value, got {raw.strip()!r}")
        key, value = (x.strip() for x in line.split("=", 1))
        if key not in known:
            raise ParseError(f"{source}: unknown key {key!r}")
        if key in _INT_KEYS:
            try:
                out[key] = int(value)
            except ValueError:
                raise ParseError(f"{source}: {key} must be an integer, got {value!r}") from None
        else:
            out[key] = value
    return out


def load(path=None, environ=None, **overrides) -> Limits:
    """Resolve limits from file, environment and explicit overrides."""
    environ = os.environ if environ is None else environ
    values = {}
    cfg = Path(path).expanduser() if path else DEFAULT_CONFIG_PATH.expanduser()
    if cfg.is_file():
        values.update(parse_pairs(cfg.read_text().splitlines(), source=str(cfg)))
    elif path:
        raise ParseError(f"config file not found: {path}")
    env = environ.get(ENV_VAR)
    if env:
        values.update(parse_pairs(env.split(","), source=ENV_VAR))
    values.update({k: v for k, v in overrides.items() if v is not None})
    return Limits(**values)
