"""Resource caps shared by the whole engine.

Defaults can be overridden with the environment variables
``OMEGA_MAX_PAIRS`` and ``OMEGA_DEGREE_CAP`` or a ``[limits]`` table in a
TOML file passed to the CLI with ``--config``.
"""

from __future__ import annotations

import contextlib
import os
from dataclasses import dataclass, replace

DEFAULT_MAX_PAIRS = 2_000_000
DEFAULT_DEGREE_CAP = 64


class ResourceCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Limits:
    max_pairs: int = DEFAULT_MAX_PAIRS
    degree_cap: int = DEFAULT_DEGREE_CAP

    @classmethod
    def from_env(cls, environ=None) -> "Limits":
        env = os.environ if environ is None else environ
        return cls(
            max_pairs=int(env.get("OMEGA_MAX_PAIRS", DEFAULT_MAX_PAIRS)),
            degree_cap=int(env.get("OMEGA_DEGREE_CAP", DEFAULT_DEGREE_CAP)),
        )

    def updated(self, table: dict) -> "Limits":
        known = {k: int(v) for k, v in table.items() if k in ("max_pairs", "degree_cap")}
        return replace(self, **known)


_current = Limits.from_env()


def current() -> Limits:
    return _current


def set_limits(limits: Limits) -> None:
    global _current
    _current = limits


@contextlib.contextmanager
def using(limits: Limits):
    global _current
    saved = _current
    _current = limits
    try:
        yield limits
    finally:
        _current = saved
