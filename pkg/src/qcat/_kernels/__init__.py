"""
Hot enumeration/statistic kernels.

Two interchangeable implementations exist: numba-compiled loops and a
pure-numpy fallback.  ``QCAT_BACKEND=numpy`` forces the fallback; the default
is numba when it imports.
"""

from __future__ import annotations

import importlib
import os
from math import comb
from types import ModuleType

import numpy as np

PERM_STATS = ("inv", "maj", "des", "lrm", "fix", "exc")
DYCK_STATS = ("des", "maj", "alpha", "beta", "npea", "spea", "stun")
BACKENDS = ("numba", "numpy")


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def load_backend(name: str) -> ModuleType:
    if name not in BACKENDS:
        raise ValueError(f"unknown backend {name!r}; choose from {BACKENDS}")
    return importlib.import_module(f"{__name__}._{name}")


def _select() -> tuple[str, ModuleType]:
    wanted = os.environ.get("QCAT_BACKEND", "numba").strip().lower() or "numba"
    if wanted == "numba":
        try:
            return "numba", load_backend("numba")
        except ImportError:
            return "numpy", load_backend("numpy")
    return wanted, load_backend(wanted)


BACKEND, _impl = _select()


def _lex_rows(a: np.ndarray) -> np.ndarray:
    # the backends enumerate in different orders; sorted rows make them interchangeable
    if a.shape[1] == 0:
        return a
    return a[np.lexsort(a.T[::-1])]


def av321_array(n: int, backend: ModuleType | None = None) -> np.ndarray:
    """All 321-avoiding permutations of [n] as a ``(C_n, n)`` int64 array, rows sorted."""
    return _lex_rows((backend or _impl).av321_array(n, catalan(n)))


def perm_stats(perms: np.ndarray, backend: ModuleType | None = None) -> np.ndarray:
    """Per-row statistics, columns in :data:`PERM_STATS` order."""
    return (backend or _impl).perm_stats(np.ascontiguousarray(perms, dtype=np.int64))


def dyck_array(n: int, backend: ModuleType | None = None) -> np.ndarray:
    """All Dyck paths of semilength n as 0/1 rows (U=0, D=1), rows sorted."""
    return _lex_rows((backend or _impl).dyck_array(n, catalan(n)))


def dyck_stats(paths: np.ndarray, backend: ModuleType | None = None) -> np.ndarray:
    """Per-row path statistics, columns in :data:`DYCK_STATS` order."""
    return (backend or _impl).dyck_stats(np.ascontiguousarray(paths, dtype=np.int64))


def exponent_histogram(exps: np.ndarray) -> dict[tuple[int, ...], int]:
    """Count identical exponent rows; the result feeds ``MultiPoly`` directly."""
    if exps.shape[0] == 0:
        return {}
    rows, counts = np.unique(exps, axis=0, return_counts=True)
    return {tuple(int(v) for v in r): int(c) for r, c in zip(rows, counts)}
