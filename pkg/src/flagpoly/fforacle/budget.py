"""Element budget for oracle enumerations.

Refusals are deterministic: an enumeration whose size is known up front is
refused before it starts if it exceeds the budget.
"""

from __future__ import annotations

import os
from contextlib import contextmanager

from flagpoly.errors import ResourceLimit

DEFAULT_BUDGET = 10**7
ENV_VAR = "FLAGPOLY_ORACLE_BUDGET"

_override: int | None = None


def get_budget() -> int:
    if _override is not None:
        return _override
    raw = os.environ.get(ENV_VAR)
    return int(raw) if raw else DEFAULT_BUDGET


@contextmanager
def budget(limit: int):
    global _override
    saved, _override = _override, int(limit)
    try:
        yield
    finally:
        _override = saved


def check_budget(size: int, what: str) -> None:
    limit = get_budget()
    if size > limit:
        raise ResourceLimit(f"{what} needs {size} elements, budget is {limit}")
