"""
Bijections from 321-avoiding permutations to paths.

``mu``     Av_n(321) -> 2-Motzkin paths of length n-1 (pairs v_i, p_{i+1})
``nu``     Av_n(321) -> restricted 2-Motzkin paths of length n (pairs v_i, p_i)
``gamma``  Av_n(321) -> Dyck paths of semilength n (shadow boundary)

All inverses rebuild the (val, pos) indicator vectors and hand them to
:func:`~qcat.permstats.from_val_pos`.
"""

from __future__ import annotations

from typing import Sequence

from .paths import Dyck, Motzkin, check_dyck, check_motzkin, motzkin_heights
from .permstats import Perm, avoids_321, check_perm, from_val_pos, val_pos

__all__ = [
    "mu", "mu_inv", "nu", "nu_inv", "is_restricted", "gamma", "gamma_inv",
    "gamma_raster", "nee_descents",
]

_STEP = {(0, 1): "U", (1, 0): "D", (0, 0): "L0", (1, 1): "L1"}
_BITS = {s: vp for vp, s in _STEP.items()}


def _avoider(w: Sequence[int]) -> Perm:
    w = check_perm(w)
    if not avoids_321(w):
        raise ValueError(f"{w} contains the pattern 321")
    return w


def mu(w: Sequence[int]) -> Motzkin:
    w = _avoider(w)
    if not w:
        raise ValueError("mu is defined for n >= 1")
    v, p = val_pos(w)
    return tuple(_STEP[v[i], p[i + 1]] for i in range(len(w) - 1))


def mu_inv(M: Sequence[str]) -> Perm:
    M = check_motzkin(M)
    n = len(M) + 1
    v, p = [0] * n, [0] * n
    v[n - 1] = p[0] = 1
    for i, s in enumerate(M):
        v[i], p[i + 1] = _BITS[s]
    return from_val_pos(v, p)


def nu(w: Sequence[int]) -> Motzkin:
    w = _avoider(w)
    v, p = val_pos(w)
    M = tuple(_STEP[v[i], p[i]] for i in range(len(w)))
    assert is_restricted(M), M
    return M


def is_restricted(M: Sequence[str]) -> bool:
    """No L0 step at height 0."""
    return not any(s == "L0" and ht == 0 for s, ht in zip(M, motzkin_heights(M)))


def nu_inv(M: Sequence[str]) -> Perm:
    M = check_motzkin(M)
    if not is_restricted(M):
        raise ValueError(f"{M} has an L0 step at height 0")
    v, p = zip(*(_BITS[s] for s in M)) if M else ((), ())
    return from_val_pos(v, p)


def gamma(w: Sequence[int]) -> Dyck:
    """Column j contributes N-steps up to the running maximum, then one E-step (U/D letters)."""
    w = _avoider(w)
    out, best = [], 0
    for a in w:
        if a > best:
            out.append("U" * (a - best))
            best = a
        out.append("D")
    return "".join(out)


def gamma_inv(P: str) -> Perm:
    P = check_dyck(P)
    n = len(P) // 2
    v, p = [0] * n, [0] * n
    ups = downs = 0
    for i, s in enumerate(P):
        if s == "U":
            ups += 1
            if P[i + 1] == "D":
                v[ups - 1] = 1
                p[downs] = 1
        else:
            downs += 1
    return from_val_pos(v, p)


def gamma_raster(w: Sequence[int]) -> Dyck:
    """Oracle: shade cells south-east of each dot on an n x n grid, trace the boundary."""
    w = check_perm(w)
    n = len(w)
    shaded = [[False] * n for _ in range(n)]  # shaded[col][row], 0-based cells
    for j, a in enumerate(w):
        for col in range(j, n):
            for row in range(a):
                shaded[col][row] = True
    out, prev = [], 0
    for col in range(n):
        top = max((row + 1 for row in range(n) if shaded[col][row]), default=0)
        out.append("U" * (top - prev) + "D")
        prev = top
    return "".join(out)


def nee_descents(P: str) -> list[int]:
    """x-coordinates after the first E of every NEE factor (U=N, D=E)."""
    out, x = [], 0
    for i, s in enumerate(P):
        if s == "D":
            x += 1
            if i >= 1 and P[i - 1] == "U" and i + 1 < len(P) and P[i + 1] == "D":
                out.append(x)
    return out
