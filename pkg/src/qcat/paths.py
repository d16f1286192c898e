"""
Dyck paths (strings over ``U``/``D``) and 2-Motzkin paths (tuples of the
tokens ``U``, ``D``, ``L0``, ``L1``), their statistics, and the bijections
``delta``, ``Delta`` and ``h`` on Dyck paths.

The bit view of a Dyck path reads U as 0 and D as 1, so a bit descent is a
``DU`` valley.  Positions are 1-based throughout.
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from . import _kernels
from .config import check_bound
from .polyarith import MultiPoly

Dyck = str
Motzkin = tuple[str, ...]

MOTZKIN_STEPS = ("U", "D", "L0", "L1")
_TOKEN = re.compile(r"L0|L1|U|D")

__all__ = [
    "Dyck", "Motzkin", "check_dyck", "is_dyck", "runs", "from_runs", "heights",
    "peaks", "valleys", "npea", "bits", "bits_des_set", "bits_des", "bits_maj",
    "alpha", "beta", "spea", "tunnels", "stun",
    "delta", "delta_inv", "Delta", "h", "h_inv",
    "gen_dyck", "gen_motzkin", "gen_motzkin2",
    "check_motzkin", "parse_motzkin", "motzkin_str", "motzkin_heights",
    "motzkin_area_geometric", "motzkin_area_heights",
    "is_symmetric_dyck", "brute_C", "dyck_stat_polys",
]


# -- Dyck basics -----------------------------------------------------------

def is_dyck(P: str) -> bool:
    h = 0
    for s in P:
        if s == "U":
            h += 1
        elif s == "D":
            h -= 1
            if h < 0:
                return False
        else:
            return False
    return h == 0


def check_dyck(P: str) -> Dyck:
    if not is_dyck(P):
        raise ValueError(f"not a Dyck path: {P!r}")
    return P


def runs(P: Dyck) -> list[tuple[int, int]]:
    """``U^{i1} D^{j1} ... U^{ik} D^{jk}`` as ``[(i1, j1), ..., (ik, jk)]``."""
    return [(len(u), len(d)) for u, d in re.findall(r"(U+)(D+)", P)]


def from_runs(rs: Sequence[tuple[int, int]]) -> Dyck:
    return "".join("U" * a + "D" * b for a, b in rs)


def heights(P: Sequence[str]) -> list[int]:
    """Heights of the lattice points, ``heights(P)[i]`` after i steps."""
    out = [0]
    for s in P:
        out.append(out[-1] + (1 if s == "U" else -1 if s == "D" else 0))
    return out


def peaks(P: Dyck) -> list[tuple[int, int]]:
    """``(i, HT)`` for every factor ``s_i s_{i+1} = UD``."""
    hs = heights(P)
    return [(i + 1, hs[i + 1]) for i in range(len(P) - 1) if P[i] == "U" and P[i + 1] == "D"]


def valleys(P: Dyck) -> list[tuple[int, int]]:
    """``(j, HT)`` for every factor ``s_j s_{j+1} = DU``; HT is the lowest point."""
    hs = heights(P)
    return [(j + 1, hs[j + 1]) for j in range(len(P) - 1) if P[j] == "D" and P[j + 1] == "U"]


def npea(P: Dyck) -> int:
    return len(peaks(P))


def bits(P: Dyck) -> tuple[int, ...]:
    return tuple(0 if s in "UN" else 1 for s in P)


def bits_des_set(P: str) -> frozenset[int]:
    b = bits(P)
    return frozenset(i + 1 for i in range(len(b) - 1) if b[i] > b[i + 1])


def bits_des(P: str) -> int:
    return len(bits_des_set(P))


def bits_maj(P: str) -> int:
    return sum(bits_des_set(P))


def alpha(P: Dyck) -> int:
    """Sum over descents i of the number of zeros in the length-i prefix."""
    return sum(P[:i].count("U") for i in bits_des_set(P))


def beta(P: Dyck) -> int:
    return sum(P[:i].count("D") for i in bits_des_set(P))


def spea(P: Dyck) -> int:
    return sum(ht - 1 for _, ht in peaks(P))


def tunnels(P: Dyck) -> list[tuple[int, int]]:
    """
    ``(i, j)`` with the tunnel being steps ``s_i .. s_j`` (inclusive), one per
    valley: ``s_j`` is the valley's D step and ``s_i`` follows the last point
    at the valley's height before it.
    """
    hs = heights(P)
    out = []
    for j, ht in valleys(P):
        k = j - 1
        while hs[k] != ht:
            k -= 1
        out.append((k + 1, j))
    return out


def stun(P: Dyck) -> int:
    total = 0
    for i, j in tunnels(P):
        length = j - i + 1
        assert length % 2 == 0, f"odd tunnel {i}..{j} in {P}"
        total += length // 2
    return total


# -- decompositions ---------------------------------------------------------

def delta(Q: Dyck, R: Dyck) -> Dyck:
    """Combine ``Q`` in D_k and ``R`` in D_{n-k-1} into a path of D_n (first-peak form)."""
    qr = runs(Q) or [(0, 0)]
    if not R:
        (a1, b1), rest = qr[0], qr[1:]
        return from_runs([(a1 + 1, b1 + 1)] + rest)
    a = [r[0] for r in qr]
    b = [r[1] for r in qr]
    s = len(qr)
    out = ["U" * (a[0] + 1) + "D"]
    for m in range(1, s):
        out.append("U" * a[m] + "D" * b[m - 1])
    rr = runs(R)
    c1, d1 = rr[0]
    out.append("U" * c1 + "D" * (b[s - 1] + d1))
    out.append(from_runs(rr[1:]))
    return "".join(out)


def delta_inv(P: Dyck) -> tuple[Dyck, Dyck]:
    if not P:
        raise ValueError("the empty path is not in the image of delta")
    rs = runs(P)
    i = [r[0] for r in rs]
    j = [r[1] for r in rs]
    k = len(rs)
    if k == 1 and j[0] == 1:
        return "", ""
    if j[0] >= 2:
        return from_runs([(i[0] - 1, j[0] - 1)] + rs[1:]), ""
    # j1 == 1: Q's peaks sit in P's valleys until Q would dip below the axis
    up = down = 0
    s = None
    for m in range(1, k):
        up += i[m - 1]
        down += j[m]
        if up <= down:
            s = m
            break
    assert s is not None
    eps = down - up
    q_runs = [(i[0] - 1, j[1])] + [(i[m], j[m + 1]) for m in range(1, s)]
    last_i, last_j = q_runs[-1]
    q_runs[-1] = (last_i, last_j - eps - 1)
    r_runs = [(i[s], eps + 1)] + rs[s + 1:]
    return from_runs(q_runs), from_runs(r_runs)


def Delta(R: Dyck, Q: Dyck) -> Dyck:
    """Combine ``R`` in D_k and ``Q`` in D_{n-k-1} into a path of D_n (last-peak form)."""
    qr = runs(Q) or [(0, 0)]
    if not R:
        (a_s, b_s) = qr[-1]
        return from_runs(qr[:-1] + [(a_s + 1, b_s + 1)])
    rr = runs(R)
    a = [r[0] for r in qr]
    b = [r[1] for r in qr]
    s = len(qr)
    ct, dt = rr[-1]
    out = [from_runs(rr[:-1]), "U" * (ct + a[0]) + "D" * dt]
    for m in range(1, s):
        out.append("U" * a[m] + "D" * b[m - 1])
    out.append("U" + "D" * (b[s - 1] + 1))
    return "".join(out)


@lru_cache(maxsize=None)
def h(P: Dyck) -> Dyck:
    """Bijection of D_n carrying sumpeaks to sumtunnels and npea to n - des."""
    if not P:
        return ""
    Q, R = delta_inv(P)
    if not R:
        return "UD" + h(Q)
    if not Q:
        return "U" + h(R) + "D"
    return "U" + h(Q) + "D" + h(R)


def _first_return(P: Dyck) -> int:
    ht = 0
    for m, s in enumerate(P, 1):
        ht += 1 if s == "U" else -1
        if ht == 0:
            return m
    raise ValueError(f"not a Dyck path: {P!r}")


@lru_cache(maxsize=None)
def h_inv(P: Dyck) -> Dyck:
    if not P:
        return ""
    if P.startswith("UD"):
        return delta(h_inv(P[2:]), "")
    m = _first_return(P)
    if m == len(P):
        return delta("", h_inv(P[1:-1]))
    return delta(h_inv(P[1:m - 1]), h_inv(P[m:]))


# -- enumeration -------------------------------------------------------------

def gen_dyck(n: int) -> Iterator[Dyck]:
    def rec(prefix: str, up: int, down: int):
        if up == n and down == n:
            yield prefix
            return
        if up < n:
            yield from rec(prefix + "U", up + 1, down)
        if down < up:
            yield from rec(prefix + "D", up, down + 1)
    yield from rec("", 0, 0)


def _gen_motzkin(n: int, levels: tuple[str, ...]) -> Iterator[Motzkin]:
    steps: list[str] = []

    def rec(i: int, ht: int):
        if i == n:
            if ht == 0:
                yield tuple(steps)
            return
        left = n - i - 1
        if ht + 1 <= left:
            steps.append("U")
            yield from rec(i + 1, ht + 1)
            steps.pop()
        if ht >= 1:
            steps.append("D")
            yield from rec(i + 1, ht - 1)
            steps.pop()
        if ht <= left:
            for lv in levels:
                steps.append(lv)
                yield from rec(i + 1, ht)
                steps.pop()
    yield from rec(0, 0)


def gen_motzkin(n: int) -> Iterator[Motzkin]:
    """Uncolored Motzkin paths with level steps ``L``."""
    return _gen_motzkin(n, ("L",))


def gen_motzkin2(n: int) -> Iterator[Motzkin]:
    return _gen_motzkin(n, ("L0", "L1"))


# -- Motzkin paths ---------------------------------------------------------------

def parse_motzkin(text: str) -> Motzkin:
    text = text.replace(" ", "").replace(",", "")
    toks = _TOKEN.findall(text)
    if "".join(toks) != text:
        raise ValueError(f"bad 2-Motzkin path text: {text!r}")
    return check_motzkin(tuple(toks))


def motzkin_str(M: Sequence[str]) -> str:
    return " ".join(M)


def check_motzkin(M: Sequence[str]) -> Motzkin:
    M = tuple(M)
    ht = 0
    for s in M:
        if s not in MOTZKIN_STEPS and s != "L":
            raise ValueError(f"bad step {s!r}")
        ht += 1 if s == "U" else -1 if s == "D" else 0
        if ht < 0:
            raise ValueError(f"path goes below the axis: {M}")
    if ht:
        raise ValueError(f"path does not end on the axis: {M}")
    return M


def motzkin_heights(M: Sequence[str]) -> list[int]:
    """Start height of every step."""
    return heights(M)[:-1]


def motzkin_area_geometric(M: Sequence[str]) -> int:
    """Area between the path and the axis (trapezoid rule; always integral)."""
    hs = heights(M)
    twice = sum(hs[i] + hs[i + 1] for i in range(len(M)))
    assert twice % 2 == 0
    return twice // 2


def motzkin_area_heights(M: Sequence[str]) -> int:
    """Sum of step start heights."""
    return sum(motzkin_heights(M))


def is_symmetric_dyck(P: Dyck) -> bool:
    return P == "".join("U" if s == "D" else "D" for s in reversed(P))


# -- brute-force polynomials --------------------------------------------------

_DES, _MAJ, _ALPHA, _BETA, _NPEA, _SPEA, _STUN = range(7)


def _dyck_stats(n: int, bound: int | None) -> np.ndarray:
    check_bound(n, bound, "brute force over D_n")
    return _kernels.dyck_stats(_kernels.dyck_array(n))


def brute_C(n: int, bound: int | None = None) -> MultiPoly:
    """Sum of a^alpha b^beta t^des over D_n (ABT context)."""
    st = _dyck_stats(n, bound)
    exps = np.zeros((st.shape[0], 4), dtype=np.int64)
    exps[:, 0] = st[:, _ALPHA]
    exps[:, 1] = st[:, _BETA]
    exps[:, 2] = st[:, _DES]
    return MultiPoly(_kernels.exponent_histogram(exps))


def dyck_stat_polys(n: int, bound: int | None = None) -> tuple[MultiPoly, MultiPoly]:
    """``(sum q^spea t^npea, sum q^stun t^(n-des))`` over D_n, QTX slots."""
    st = _dyck_stats(n, bound)
    m = st.shape[0]
    left = np.zeros((m, 4), dtype=np.int64)
    left[:, 0] = st[:, _SPEA]
    left[:, 1] = st[:, _NPEA]
    right = np.zeros((m, 4), dtype=np.int64)
    right[:, 0] = st[:, _STUN]
    right[:, 1] = n - st[:, _DES]
    return (MultiPoly(_kernels.exponent_histogram(left)),
            MultiPoly(_kernels.exponent_histogram(right)))
