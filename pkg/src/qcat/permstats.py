"""
Permutations in one-line notation (tuples of 1..n), their statistics,
321-avoidance, exhaustive generation and brute-force generating polynomials.

>>> s = parse_perm("361782495")
>>> stat_inv(s), stat_lrm(s)
(13, 5)
>>> val_pos(s)
ValPos(val=(0, 0, 1, 0, 0, 1, 1, 1, 1), pos=(1, 1, 0, 1, 1, 0, 0, 1, 0))
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterator, NamedTuple, Sequence

import numpy as np

from . import _kernels
from .config import DEFAULT_FILTER_BOUND, check_bound
from .polyarith import MultiPoly

Perm = tuple[int, ...]

__all__ = [
    "Perm", "ValPos", "check_perm", "parse_perm", "perm_str",
    "stat_inv", "stat_maj", "stat_des", "des_set", "stat_lrm", "lrm_set",
    "stat_fix", "stat_exc", "val_pos", "from_val_pos",
    "avoids_321", "avoids_321_scan", "gen_av321", "gen_av321_filter",
    "restricted_motzkin_vectors", "inflate", "rotate180",
    "brute_I", "brute_M", "brute_A", "brute_I_table", "av321_stats",
]


class ValPos(NamedTuple):
    val: tuple[int, ...]
    pos: tuple[int, ...]


def check_perm(w: Sequence[int]) -> Perm:
    w = tuple(int(a) for a in w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a permutation of 1..{len(w)}: {w}")
    return w


def parse_perm(text: str) -> Perm:
    """``"361782495"`` or ``"10,2,1,..."``; commas are required once n > 9."""
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        return check_perm(int(tok) for tok in text.split(","))
    return check_perm(int(ch) for ch in text)


def perm_str(w: Sequence[int]) -> str:
    if len(w) <= 9:
        return "".join(str(a) for a in w)
    return ",".join(str(a) for a in w)


# -- statistics ---------------------------------------------------------------

def stat_inv(w: Sequence[int]) -> int:
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def des_set(w: Sequence[int]) -> frozenset[int]:
    """Descent positions, 1-based: i with w_i > w_{i+1}."""
    return frozenset(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def stat_des(w: Sequence[int]) -> int:
    return len(des_set(w))


def stat_maj(w: Sequence[int]) -> int:
    return sum(des_set(w))


def lrm_set(w: Sequence[int]) -> frozenset[int]:
    """Left-right maximum values."""
    out, best = set(), 0
    for a in w:
        if a > best:
            best = a
            out.add(a)
    return frozenset(out)


def stat_lrm(w: Sequence[int]) -> int:
    return len(lrm_set(w))


def stat_fix(w: Sequence[int]) -> int:
    return sum(1 for i, a in enumerate(w, 1) if a == i)


def stat_exc(w: Sequence[int]) -> int:
    return sum(1 for i, a in enumerate(w, 1) if a > i)


def val_pos(w: Sequence[int]) -> ValPos:
    n = len(w)
    val, pos = [0] * n, [0] * n
    best = 0
    for i, a in enumerate(w):
        if a > best:
            best = a
            pos[i] = 1
            val[a - 1] = 1
    return ValPos(tuple(val), tuple(pos))


def from_val_pos(val: Sequence[int], pos: Sequence[int]) -> Perm:
    """The unique 321-avoider with the given LR-maximum value/position indicators."""
    n = len(val)
    if len(pos) != n:
        raise ValueError("val and pos must have equal length")
    if sum(val) != sum(pos):
        raise ValueError("val and pos must have the same number of ones")
    if n and sum(val) == 0:
        raise ValueError("a nonempty permutation has at least one LR maximum")
    pv = 0
    for i in range(n):
        pv += pos[i]
        if pv <= sum(val[:i]):
            raise ValueError(f"prefix condition fails at index {i + 1}")
    maxima = iter(i + 1 for i in range(n) if val[i])
    others = iter(i + 1 for i in range(n) if not val[i])
    return tuple(next(maxima) if p else next(others) for p in pos)


# -- 321-avoidance --------------------------------------------------------------

def avoids_321_scan(w: Sequence[int]) -> bool:
    """Direct O(n^3) search for b_i > b_j > b_k."""
    n = len(w)
    for i in range(n):
        for j in range(i + 1, n):
            if w[i] > w[j]:
                for k in range(j + 1, n):
                    if w[j] > w[k]:
                        return False
    return True


def avoids_321(w: Sequence[int]) -> bool:
    """Non-LR-maxima must appear in increasing order."""
    best, last_small = 0, 0
    for a in w:
        if a > best:
            best = a
        elif a < last_small:
            return False
        else:
            last_small = a
    return True


def restricted_motzkin_vectors(n: int) -> Iterator[ValPos]:
    """
    All (val, pos) pairs satisfying the prefix condition.

    Reading (pos_i, val_i) as one step keeps a running height
    ``#ones(pos_1..i) - #ones(val_1..i)``; the condition is that the height
    before consuming val_i, plus pos_i, is at least one.
    """
    val, pos = [0] * n, [0] * n

    def rec(i: int, h: int):
        if i == n:
            if h == 0:
                yield ValPos(tuple(val), tuple(pos))
            return
        for p, v in ((1, 1), (1, 0), (0, 1), (0, 0)):
            nh = h + p - v
            if h + p >= 1 and nh <= n - 1 - i:
                pos[i], val[i] = p, v
                yield from rec(i + 1, nh)

    if n == 0:
        yield ValPos((), ())
        return
    yield from rec(0, 0)


def gen_av321(n: int) -> Iterator[Perm]:
    for vp in restricted_motzkin_vectors(n):
        yield from_val_pos(vp.val, vp.pos)


def gen_av321_filter(n: int, bound: int = DEFAULT_FILTER_BOUND) -> Iterator[Perm]:
    """Oracle: filter all of S_n with the direct pattern scan."""
    check_bound(n, bound, "S_n filter")
    for w in permutations(range(1, n + 1)):
        if avoids_321_scan(w):
            yield w


# -- diagram operations -------------------------------------------------------

def inflate(pi: Sequence[int], parts: Sequence[Sequence[int]]) -> Perm:
    """
    Replace the dot of ``pi`` at (i, pi_i) by a copy of ``parts[i]``.

    >>> inflate((1, 3, 2), [(2, 1), (1,), (3, 1, 2)])
    (2, 1, 6, 5, 3, 4)
    """
    if len(pi) != len(parts):
        raise ValueError("need one part per entry of pi")
    sizes = [len(p) for p in parts]
    # offset of block i = total size of blocks whose pi-value is smaller
    offset = {}
    acc = 0
    for i in sorted(range(len(pi)), key=lambda i: pi[i]):
        offset[i] = acc
        acc += sizes[i]
    return tuple(offset[i] + a for i, part in enumerate(parts) for a in part)


def rotate180(w: Sequence[int]) -> Perm:
    n = len(w)
    return tuple(n + 1 - a for a in reversed(w))


# -- brute-force generating polynomials ----------------------------------------

def av321_stats(n: int, bound: int | None = None) -> np.ndarray:
    """Statistics of every element of Av_n(321), columns ``inv maj des lrm fix exc``."""
    check_bound(n, bound, "brute force over Av_n(321)")
    return _kernels.perm_stats(_kernels.av321_array(n))


def _poly_from_columns(stats: np.ndarray, cols: Sequence[int | None]) -> MultiPoly:
    m = stats.shape[0]
    exps = np.zeros((m, 4), dtype=np.int64)
    for slot, c in enumerate(cols):
        if c is not None:
            exps[:, slot] = stats[:, c]
    return MultiPoly(_kernels.exponent_histogram(exps))


_INV, _MAJ, _DES, _LRM, _FIX, _EXC = range(6)


def brute_I(n: int, bound: int | None = None) -> MultiPoly:
    """Sum of q^inv t^lrm x^fix over Av_n(321) (QTX context)."""
    return _poly_from_columns(av321_stats(n, bound), (_INV, _LRM, _FIX))


def brute_M(n: int, bound: int | None = None) -> MultiPoly:
    """Sum of q^maj t^des over Av_n(321)."""
    return _poly_from_columns(av321_stats(n, bound), (_MAJ, _DES, None))


def brute_A(n: int, k: int, bound: int | None = None) -> MultiPoly:
    """q^maj summed over the avoiders with exactly k descents."""
    return brute_M(n, bound).coeff(1, k)


def brute_I_table(n: int, bound: int | None = None) -> dict[str, MultiPoly]:
    """I and M polynomials of one size from a single enumeration pass."""
    stats = av321_stats(n, bound)
    return {
        "I": _poly_from_columns(stats, (_INV, _LRM, _FIX)),
        "M": _poly_from_columns(stats, (_MAJ, _DES, None)),
        "I_exc": _poly_from_columns(stats, (_INV, _EXC, _FIX)),
    }
