from __future__ import annotations

import os

DEFAULT_DISK_BUDGET = 10**7
DEFAULT_AUGMENTATION_CAP = 24


def disk_budget(explicit: int | None = None) -> int:
    """Search-state budget; ``LEGMCS_BUDGET`` overrides the default."""
    if explicit is not None:
        return explicit
    env = os.environ.get("LEGMCS_BUDGET")
    if env:
        return int(env)
    return DEFAULT_DISK_BUDGET
