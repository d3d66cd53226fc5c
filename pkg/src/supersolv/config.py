"""Runtime caps and backend selection.

Every cap is read at call time from the module-level ``settings`` object, so
tests and the CLI can adjust them with :func:`override`.
"""
from __future__ import annotations

import contextlib
import dataclasses
import os

NO_NUMBA_ENV = "SUPERSOLV_NO_NUMBA"
BUDGET_ENV = "SUPERSOLV_BUDGET"


@dataclasses.dataclass
class Settings:
    max_degree: int = 32
    max_order: int = 20_000
    # multiplication tables are order x order, so they get their own cap
    max_table_order: int = 4096
    max_subgroups: int = 5_000
    tcc_budget: int = 10_000_000

    @classmethod
    def from_env(cls) -> "Settings":
        s = cls()
        raw = os.environ.get(BUDGET_ENV)
        if raw:
            s.tcc_budget = int(float(raw))
        return s

    def snapshot(self) -> dict:
        return dataclasses.asdict(self)


settings = Settings.from_env()


@contextlib.contextmanager
def override(**changes):
    """Temporarily change caps, e.g. ``with override(max_subgroups=10): ...``."""
    old = {k: getattr(settings, k) for k in changes}
    for k, v in changes.items():
        if not hasattr(settings, k):
            raise AttributeError(k)
        setattr(settings, k, v)
    try:
        yield settings
    finally:
        for k, v in old.items():
            setattr(settings, k, v)


def numba_requested() -> bool:
    return os.environ.get(NO_NUMBA_ENV, "").strip().lower() not in ("1", "true", "yes", "on")
