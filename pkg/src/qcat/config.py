"""Runtime knobs read from the environment."""

from __future__ import annotations

import os

# Catalan-sized sweeps (C_12 = 208012) vs factorial-sized ones (9! = 362880)
DEFAULT_ORACLE_BOUND = 12
DEFAULT_FILTER_BOUND = 9


class BoundExceeded(ValueError):
    """An exhaustive oracle was asked for a size beyond its configured bound."""


def oracle_bound() -> int:
    raw = os.environ.get("QCAT_MAX_N")
    if raw is None or raw == "":
        return DEFAULT_ORACLE_BOUND
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"QCAT_MAX_N must be an integer, got {raw!r}") from None
    if value < 0:
        raise ValueError("QCAT_MAX_N must be nonnegative")
    return value


def check_bound(n: int, bound: int | None = None, what: str = "oracle") -> None:
    limit = oracle_bound() if bound is None else bound
    if n > limit:
        raise BoundExceeded(f"{what}: n={n} exceeds bound {limit} (raise QCAT_MAX_N or --max-n)")
