"""
Parallelogram polyominoes (strictly nested NE-path pairs) and shortened
polyominoes (weakly nested pairs sharing E-steps only), with the shortening
map and the labelling bijection to 321-avoiding permutations.

Both paths start at the origin.  After k steps each path sits on the
antidiagonal x + y = k, so "P above Q" is a comparison of N-step counts.
"""

from __future__ import annotations

import re
from typing import Iterator, NamedTuple

from .config import check_bound
from .paths import bits_des_set
from .permstats import Perm, avoids_321, check_perm, val_pos
from .polyarith import MultiPoly

__all__ = [
    "Polyomino", "parse_polyomino", "polyomino_str", "is_parallelogram", "is_shortened",
    "area_pp", "col_pp", "shorten", "unshorten", "upsilon", "upsilon_inv",
    "gen_pp", "gen_sp", "lower_maj_des", "P_poly", "H_maj_poly", "PP_maj_poly",
]


class Polyomino(NamedTuple):
    upper: str
    lower: str


def parse_polyomino(text: str) -> Polyomino:
    m = re.fullmatch(r"\s*upper=([NE]*)\s+lower=([NE]*)\s*", text)
    if not m:
        raise ValueError(f"expected 'upper=... lower=...', got {text!r}")
    return Polyomino(m.group(1), m.group(2))


def polyomino_str(p: tuple[str, str]) -> str:
    return f"upper={p[0]} lower={p[1]}"


def _ys(path: str) -> list[int]:
    out = [0]
    for s in path:
        out.append(out[-1] + (s == "N"))
    return out


def _same_ends(U: str, V: str) -> bool:
    return len(U) == len(V) and U.count("N") == V.count("N") and set(U + V) <= {"N", "E"}


def is_parallelogram(U: str, V: str) -> bool:
    if not _same_ends(U, V):
        return False
    n = len(U)
    if n == 1:
        return U == V == "N"  # the degenerate element of P_1
    yu, yv = _ys(U), _ys(V)
    return n >= 2 and all(yu[k] > yv[k] for k in range(1, n))


def is_shortened(P: str, Q: str) -> bool:
    if not _same_ends(P, Q):
        return False
    yp, yq = _ys(P), _ys(Q)
    for k in range(len(P)):
        if yp[k + 1] < yq[k + 1]:
            return False
        if yp[k] == yq[k] and P[k] == Q[k] == "N":
            return False
    return True


def area_pp(upper: str, lower: str) -> int:
    """Cells enclosed: sum over columns of the height gap between the E-steps."""
    ey_u = [y for y, s in zip(_ys(upper), upper) if s == "E"]
    ey_l = [y for y, s in zip(_ys(lower), lower) if s == "E"]
    return sum(a - b for a, b in zip(ey_u, ey_l))


def col_pp(upper: str, lower: str) -> int:
    return upper.count("E")


def shorten(U: str, V: str) -> Polyomino:
    """Contract the first step of U and the last step of V (both N)."""
    if not U or U[0] != "N" or V[-1] != "N":
        raise ValueError("shortening contracts N-steps only")
    return Polyomino(U[1:], V[:-1])


def unshorten(P: str, Q: str) -> Polyomino:
    return Polyomino("N" + P, Q + "N")


def upsilon(P: str, Q: str) -> Perm:
    """
    Label P's steps 1..n; the k-th N (E) step of Q takes the label of the k-th
    N (E) step of P.  The labels read along Q form the permutation.
    """
    labels = {"N": iter(i for i, s in enumerate(P, 1) if s == "N"),
              "E": iter(i for i, s in enumerate(P, 1) if s == "E")}
    return tuple(next(labels[s]) for s in Q)


def upsilon_inv(w: Perm) -> Polyomino:
    """Upper path marks LR-maximum values with E, lower path marks their positions."""
    w = check_perm(w)
    if not avoids_321(w):
        raise ValueError(f"{w} contains 321")
    vp = val_pos(w)
    return Polyomino("".join("E" if v else "N" for v in vp.val),
                     "".join("E" if p else "N" for p in vp.pos))


def _gen_pairs(n: int, strict: bool) -> Iterator[Polyomino]:
    up: list[str] = []
    lo: list[str] = []

    def rec(k: int, yu: int, yl: int):
        if k == n:
            if yu == yl:
                yield Polyomino("".join(up), "".join(lo))
            return
        left = n - k - 1
        for su in "NE":
            nu = yu + (su == "N")
            for sl in "NE":
                nl = yl + (sl == "N")
                if nu < nl or nu - nl > left:
                    continue
                if strict:
                    if 0 < k + 1 < n and nu == nl:
                        continue
                elif yu == yl and su == sl == "N":
                    continue
                up.append(su)
                lo.append(sl)
                yield from rec(k + 1, nu, nl)
                up.pop()
                lo.pop()

    yield from rec(0, 0, 0)


def gen_sp(n: int, bound: int | None = None) -> Iterator[Polyomino]:
    """Shortened polyominoes H_n (H_0 is the single empty pair)."""
    check_bound(n, bound, "H_n enumeration")
    return _gen_pairs(n, strict=False)


def gen_pp(n: int, bound: int | None = None) -> Iterator[Polyomino]:
    """Parallelogram polyominoes P_n; P_1 is the degenerate pair (N, N)."""
    check_bound(n, bound, "P_n enumeration")
    if n == 0:
        return iter(())
    if n == 1:
        return iter([Polyomino("N", "N")])
    return _gen_pairs(n, strict=True)


def lower_maj_des(P: str, Q: str) -> tuple[int, int]:
    """(maj, des) of the lower path as a bit string, N=0 and E=1."""
    d = bits_des_set(Q)
    return sum(d), len(d)


def P_poly(n: int, bound: int | None = None) -> MultiPoly:
    """Sum of q^area t^col over P_n."""
    terms: dict[tuple, int] = {}
    for U, V in gen_pp(n, bound):
        e = (area_pp(U, V), col_pp(U, V), 0, 0)
        terms[e] = terms.get(e, 0) + 1
    return MultiPoly(terms)


def _maj_poly(pairs) -> MultiPoly:
    terms: dict[tuple, int] = {}
    for P, Q in pairs:
        maj, des = lower_maj_des(P, Q)
        terms[(maj, des, 0, 0)] = terms.get((maj, des, 0, 0), 0) + 1
    return MultiPoly(terms)


def H_maj_poly(n: int, bound: int | None = None) -> MultiPoly:
    """Sum of q^maj(Q) t^des(Q) over H_n."""
    return _maj_poly(gen_sp(n, bound))


def PP_maj_poly(n: int, bound: int | None = None) -> MultiPoly:
    """The same sum restricted to parallelogram polyominoes P_n."""
    return _maj_poly(gen_pp(n, bound))
