"""
Recursions, closed forms and continued fractions for the inversion, major
index and Dyck-path polynomials.

Polynomials in ``q, t, x`` use the QTX slots; ``C_n(a, b; t)`` uses ABT.
Every recursion is seeded with the value 1 at n = 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Callable, Sequence

from .paths import gen_motzkin
from .polyarith import ABT, QTX, MultiPoly, PolySeries

__all__ = [
    "catalan", "narayana", "narayana_poly",
    "rec_I_qt", "rec_I_qtx", "rec_I_alt", "rec_M_first", "rec_M_second",
    "rec_C_first", "rec_C_last", "C_first_rhs", "C_last_rhs", "s_coeff", "signed_closed", "signed_rec",
    "CFSpec", "cf_convergent", "cf_eval", "required_depth",
    "jacobi_I", "stieltjes_I", "thron_I", "stieltjes_catalan", "jacobi_from_weights",
    "cf_even_part", "cf_odd_part", "as_jacobi",
    "WeightTable", "weighted_motzkin_series", "series_from", "check_functional_equations",
]

Q, T, X = QTX.gens()
A, B, TT = ABT.gens()
ONE = MultiPoly.const(1)
ZERO = MultiPoly.const(0)
_Q, _T, _X = 0, 1, 2


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return comb(2 * n, n) // (n + 1)


def narayana(n: int, k: int) -> int:
    if not 1 <= k <= n:
        raise ValueError(f"Narayana number needs 1 <= k <= n, got n={n}, k={k}")
    return comb(n, k) * comb(n, k - 1) // n


def narayana_poly(n: int) -> MultiPoly:
    if n == 0:
        return ONE
    return sum((narayana(n, k) * T**k for k in range(1, n + 1)), ZERO)


# -- inversion polynomials ----------------------------------------------------

@lru_cache(maxsize=None)
def rec_I_qt(n: int) -> MultiPoly:
    if n == 0:
        return ONE
    acc = T * rec_I_qt(n - 1)
    for k in range(n - 1):
        acc = acc + Q ** (k + 1) * rec_I_qt(k) * rec_I_qt(n - k - 1)
    return acc


@lru_cache(maxsize=None)
def rec_I_qtx(n: int) -> MultiPoly:
    """I_n(q, t, x), with x counting fixed points."""
    if n == 0:
        return ONE
    acc = T * X * rec_I_qtx(n - 1)
    for k in range(n - 1):
        bracket = rec_I_qtx(n - 1 - k) - T * (X - 1) * rec_I_qtx(n - 2 - k)
        acc = acc + Q ** (k + 1) * rec_I_qt(k) * bracket
    return acc


def _shift_t(p: MultiPoly, power: int, slot: int = _T, by: MultiPoly = Q) -> MultiPoly:
    """``t -> by**power * t`` in the given slot."""
    var = [0, 0, 0, 0]
    var[slot] = 1
    return p.subst({slot: by**power * MultiPoly.monomial(var)})


@lru_cache(maxsize=None)
def rec_I_alt(n: int) -> MultiPoly:
    """I_n(q,t) through the product I_k(q,t) I_{n-1-k}(q,qt)."""
    if n == 0:
        return ONE
    acc = T * rec_I_alt(n - 1)
    for k in range(n - 1):
        acc = acc + rec_I_alt(k) * _shift_t(rec_I_alt(n - 1 - k), 1)
    return acc


# -- major index polynomials ----------------------------------------------------

@lru_cache(maxsize=None)
def rec_M_first(n: int) -> MultiPoly:
    if n == 0:
        return ONE
    acc = _shift_t(rec_M_first(n - 1), 1)
    for k in range(2, n + 1):
        head = rec_M_first(k - 1) + (Q ** (k - 1) * T - 1) * rec_M_first(k - 2)
        acc = acc + head * _shift_t(rec_M_first(n - k), k)
    return acc


@lru_cache(maxsize=None)
def rec_M_second(n: int) -> MultiPoly:
    if n == 0:
        return ONE
    acc = rec_M_second(n - 1)
    tail_factor = Q ** (n - 1) * T - 1
    for k in range(n - 1):
        tail = (_shift_t(rec_M_second(n - k - 1), k)
                + tail_factor * _shift_t(rec_M_second(n - k - 2), k))
        acc = acc + rec_M_second(k) * tail
    return acc


# -- Dyck path polynomials C_n(a, b; t) -----------------------------------------

_ABT_T = 2


def _abt_shift(p: MultiPoly, power: int) -> MultiPoly:
    """``t -> (ab)**power * t``."""
    return p.subst({_ABT_T: (A * B) ** power * TT})


def C_first_rhs(n: int, C: Callable[[int], MultiPoly]) -> MultiPoly:
    """Right side of the first-return recursion for C_n, built from ``C(k)``, k < n."""
    acc = ZERO
    for k in range(n - 1):
        acc = acc + A ** (k + 1) * _abt_shift(C(k), 1) * _abt_shift(C(n - k - 1), k + 1)
    return _abt_shift(C(n - 1), 1) + B * TT * acc


def C_last_rhs(n: int, C: Callable[[int], MultiPoly]) -> MultiPoly:
    """Right side of the last-peak recursion for C_n."""
    acc = ZERO
    for k in range(1, n):
        acc = acc + B**k * C(k) * _abt_shift(C(n - k - 1), k)
    return C(n - 1) + A ** (n - 1) * TT * acc


@lru_cache(maxsize=None)
def rec_C_first(n: int) -> MultiPoly:
    return ONE if n == 0 else C_first_rhs(n, rec_C_first)


@lru_cache(maxsize=None)
def rec_C_last(n: int) -> MultiPoly:
    return ONE if n == 0 else C_last_rhs(n, rec_C_last)


# -- signed enumeration: I_n(-1, t) ---------------------------------------------

def s_coeff(n: int, k: int) -> int:
    if not 1 <= k <= n:
        raise ValueError(f"s_(n,k) needs 1 <= k <= n, got n={n}, k={k}")
    return comb((n - 1) // 2, (k - 1) // 2) * comb(n // 2, k // 2)


def signed_closed(n: int) -> MultiPoly:
    if n == 0:
        return ONE
    return sum(((-1) ** (n - k) * s_coeff(n, k) * T**k for k in range(1, n + 1)), ZERO)


@lru_cache(maxsize=None)
def signed_rec(n: int) -> MultiPoly:
    """I_n(-1, t) from the parity-split recursions; division by n+1 must be exact."""
    if n == 0:
        return ONE
    if n == 1:
        return T
    if n % 2 == 0:
        return (T - 1) * signed_rec(n - 1)
    m = (n - 1) // 2
    rhs = 2 * ((1 + T**2) * m - T) * signed_rec(2 * m - 1)
    if m > 1:
        rhs = rhs - (1 - T**2) ** 2 * (m - 1) * signed_rec(2 * m - 3)
    return rhs.exact_div(m + 1)


# -- continued fractions -------------------------------------------------------

ZPoly = tuple  # coefficients of a polynomial in z, each a MultiPoly


@dataclass(frozen=True)
class CFSpec:
    """
    A truncated continued fraction.

    ``jacobi``:     1/(1 - b0 z - l1 z^2/(1 - b1 z - l2 z^2/(...)))
    ``stieltjes``:  1/(1 - l1 z/(1 - l2 z/(...)))
    ``thron``:      1/(1 - b0 z - l1 z/(1 - b1 z - l2 z/(...)))
    ``general``:    lead + N1/(D1 + N2/(D2 + ...)), N_k and D_k polynomials in z

    ``depth`` counts levels: jacobi/thron use b_0..b_{depth-1} and
    l_1..l_{depth-1}; stieltjes uses l_1..l_{depth-1}; general uses
    N_1..N_depth.  ``numerators[0]`` is l_1 (or N_1).
    """
    kind: str
    numerators: tuple
    denominators: tuple
    depth: int
    lead: MultiPoly = field(default=ZERO)

    def __post_init__(self):
        if self.kind not in ("jacobi", "stieltjes", "thron", "general"):
            raise ValueError(f"unknown continued fraction kind {self.kind!r}")
        if self.depth < 1:
            raise ValueError("depth must be at least 1")
        need_num = self.depth if self.kind == "general" else self.depth - 1
        need_den = 0 if self.kind == "stieltjes" else self.depth
        if len(self.numerators) < need_num or len(self.denominators) < need_den:
            raise ValueError(f"{self.kind} fraction of depth {self.depth} needs "
                             f"{need_num} numerators and {need_den} denominators")


def required_depth(kind: str, order: int) -> int:
    """Smallest depth that fixes every coefficient up to ``z**order``."""
    if kind == "jacobi":
        return -(-order // 2) + 1
    return order + 1


def _zpoly_series(coeffs: ZPoly, order: int) -> PolySeries:
    return PolySeries(list(coeffs), order)


def cf_convergent(spec: CFSpec, order: int) -> PolySeries:
    """Series of the finite fraction exactly as truncated, bottom-up with a zero tail."""
    z = PolySeries.z(order)
    one = PolySeries.one(order)
    D = spec.depth
    if spec.kind == "general":
        tail = None
        for k in range(D - 1, -1, -1):
            den = _zpoly_series(spec.denominators[k], order)
            if tail is not None:
                den = den + tail
            tail = _zpoly_series(spec.numerators[k], order) / den
        return tail + spec.lead
    z2 = z * z
    level = None
    for k in range(D - 1, -1, -1):
        den = one if spec.kind == "stieltjes" else one - z * spec.denominators[k]
        if level is not None:
            lam = spec.numerators[k]
            step = z2 if spec.kind == "jacobi" else z
            den = den - (step * lam) / level
        level = den
    return level.reciprocal()


def cf_eval(spec: CFSpec, order: int) -> PolySeries:
    """Series to ``z**order``; refuses a depth too shallow to fix those coefficients."""
    need = required_depth(spec.kind, order)
    if spec.depth < need:
        raise ValueError(f"{spec.kind} fraction needs depth >= {need} for order {order}, got {spec.depth}")
    return cf_convergent(spec, order)


def _cf(kind: str, depth: int, lam: Callable[[int], MultiPoly], b: Callable[[int], MultiPoly] | None):
    nums = tuple(lam(k) for k in range(1, depth))
    dens = tuple(b(k) for k in range(depth)) if b else ()
    return CFSpec(kind, nums, dens, depth)


def jacobi_I(depth: int, with_x: bool = True) -> CFSpec:
    """J-fraction of sum I_n(q,t,x) z^n: b0 = tx, b_k = (1+t) q^k, l_k = t q^(2k-1)."""
    x = X if with_x else ONE
    return _cf("jacobi", depth,
               lambda k: T * Q ** (2 * k - 1),
               lambda k: T * x if k == 0 else (1 + T) * Q**k)


def stieltjes_I(depth: int) -> CFSpec:
    """S-fraction of sum I_n(q,t) z^n: l = t, q, tq, q^2, tq^2, ..."""
    def lam(k):
        return Q ** (k // 2) if k % 2 == 0 else T * Q ** (k // 2)
    return _cf("stieltjes", depth, lam, None)


def thron_I(depth: int) -> CFSpec:
    """T-fraction of sum I_n(q,t) z^n: b_k = t q^k - 1, all numerators 1."""
    return _cf("thron", depth, lambda k: ONE, lambda k: T * Q**k - 1)


def stieltjes_catalan(depth: int) -> CFSpec:
    return _cf("stieltjes", depth, lambda k: ONE, None)


# -- even and odd parts ----------------------------------------------------------

def _stieltjes_a(lams: Sequence[MultiPoly]) -> list[ZPoly]:
    """a_1 = 1, a_{k+1} = -l_k z, so the S-fraction reads a1/(1 + a2/(1 + ...))."""
    return [(ONE,)] + [(ZERO, -lam) for lam in lams]


def _zadd(*ps: ZPoly) -> ZPoly:
    n = max(len(p) for p in ps)
    return tuple(sum((p[i] for p in ps if i < len(p)), ZERO) for i in range(n))


def _zmul(p: ZPoly, r: ZPoly) -> ZPoly:
    out = [ZERO] * (len(p) + len(r) - 1)
    for i, u in enumerate(p):
        for j, v in enumerate(r):
            out[i + j] = out[i + j] + u * v
    return tuple(out)


def _zneg(p: ZPoly) -> ZPoly:
    return tuple(-c for c in p)


def cf_even_part(lams: Sequence[MultiPoly]) -> CFSpec:
    """
    Even part of the S-fraction with numerators ``lams`` (l_1, l_2, ...):
    a1/(1+a2) - a2 a3/(1+a3+a4) - a4 a5/(1+a5+a6) - ...
    Its n-th convergent equals the S-fraction's 2n-th one.
    """
    a = [None] + _stieltjes_a(lams)  # 1-based
    m = len(a) - 1
    depth = m // 2
    if depth < 1:
        raise ValueError("need at least two partial numerators")
    nums = [a[1]] + [_zneg(_zmul(a[2 * k - 2], a[2 * k - 1])) for k in range(2, depth + 1)]
    dens = [_zadd((ONE,), a[2])] + [_zadd((ONE,), a[2 * k - 1], a[2 * k]) for k in range(2, depth + 1)]
    return CFSpec("general", tuple(nums), tuple(dens), depth)


def cf_odd_part(lams: Sequence[MultiPoly]) -> CFSpec:
    """
    Odd part: a1 - a1 a2/(1+a2+a3) - a3 a4/(1+a4+a5) - ...
    Its n-th convergent equals the S-fraction's (2n+1)-th one.
    """
    a = [None] + _stieltjes_a(lams)
    m = len(a) - 1
    depth = (m - 1) // 2
    if depth < 1:
        raise ValueError("need at least three partial numerators")
    nums = [_zneg(_zmul(a[2 * k - 1], a[2 * k])) for k in range(1, depth + 1)]
    dens = [_zadd((ONE,), a[2 * k], a[2 * k + 1]) for k in range(1, depth + 1)]
    return CFSpec("general", tuple(nums), tuple(dens), depth, lead=a[1][0])


def as_jacobi(spec: CFSpec) -> CFSpec:
    """Read a general fraction 1/(1 - b0 z) - l1 z^2/(1 - b1 z) - ... as a J-fraction."""
    if spec.kind != "general" or spec.lead != 0:
        raise ValueError("only a general fraction without lead term converts")

    def coeffs(p, n):
        return list(p) + [ZERO] * (n - len(p))
    n1 = coeffs(spec.numerators[0], 1)
    if n1[0] != 1 or any(c != 0 for c in n1[1:]):
        raise ValueError("first numerator must be 1")
    lams, bs = [], []
    for k in range(spec.depth):
        d = coeffs(spec.denominators[k], 2)
        if d[0] != 1 or any(c != 0 for c in d[2:]):
            raise ValueError(f"denominator {k + 1} is not of the form 1 - b z")
        bs.append(-d[1])
        if k:
            num = coeffs(spec.numerators[k], 3)
            if any(c != 0 for i, c in enumerate(num) if i != 2):
                raise ValueError(f"numerator {k + 1} is not of the form -l z^2")
            lams.append(-num[2])
    return CFSpec("jacobi", tuple(lams), tuple(bs), spec.depth)


# -- weighted Motzkin paths ----------------------------------------------------------

@dataclass(frozen=True)
class WeightTable:
    """Step weights by start height: ``u[h]``, ``d[h]``, ``l[h]`` for h = 0..H."""
    u: tuple
    d: tuple
    l: tuple

    @classmethod
    def from_functions(cls, u, d, l, height: int) -> WeightTable:
        hs = range(height + 1)
        return cls(tuple(u(h) for h in hs), tuple(d(h) for h in hs), tuple(l(h) for h in hs))

    @property
    def height(self) -> int:
        return min(len(self.u), len(self.d), len(self.l)) - 1


def weighted_motzkin_series(w: WeightTable, order: int) -> PolySeries:
    """Sum of path weights by length, by enumerating every Motzkin path."""
    if w.height < order // 2:
        raise ValueError(f"weight table height {w.height} < {order // 2} needed for length {order}")
    coeffs = []
    for n in range(order + 1):
        total = ZERO
        for M in gen_motzkin(n):
            wt, ht = ONE, 0
            for s in M:
                if s == "U":
                    wt, ht = wt * w.u[ht], ht + 1
                elif s == "D":
                    wt, ht = wt * w.d[ht], ht - 1
                else:
                    wt = wt * w.l[ht]
            total = total + wt
        coeffs.append(total)
    return PolySeries(coeffs, order)


def jacobi_from_weights(w: WeightTable, depth: int) -> CFSpec:
    """Level k: b_k = l_k, numerator u_{k-1} d_k."""
    return _cf("jacobi", depth, lambda k: w.u[k - 1] * w.d[k], lambda k: w.l[k])


# -- functional equations ----------------------------------------------------------

def series_from(coeffs: Sequence[MultiPoly], order: int | None = None) -> PolySeries:
    return PolySeries(list(coeffs), order)


def _report(name: str, residual: PolySeries) -> dict:
    first = residual.first_nonzero()
    return {"identity": name, "max_order": residual.order,
            "status": "pass" if first is None else "fail", "first_failure": first}


def _times_z(f: PolySeries) -> PolySeries:
    return f.shift(1).truncate(f.order)


def check_functional_equations(order: int, I_source: Callable[[int], MultiPoly] | None = None,
                               ode_order: int | None = None) -> list[dict]:
    """
    Build the generating series from ``I_source(n)`` (I_n(q,t,x); brute force
    by default) and report the residual of each identity through ``order``.
    """
    if I_source is None:
        from .permstats import brute_I
        I_source = brute_I
    if ode_order is None:
        ode_order = order // 2
    need = max(order, 2 * ode_order + 1)
    I = [I_source(n) for n in range(need + 1)]

    reports = []
    F = PolySeries(I[: order + 1], order)
    G = F.map_coeffs(lambda p: p.subst({_X: ONE}))
    zF = _times_z(F)
    rhs = 1 + T * X * zF + _times_z(G.scale_z(Q) * (F - 1 - T * (X - 1) * zF)) * Q
    reports.append(_report("funcEqu", F - rhs))

    # Thron-fraction consequence: I(q,t;z) = 1 + (t-1) z I + z I(q,t;z) I(q,qt;z)
    Gqt = G.map_coeffs(lambda p: _shift_t(p, 1))
    reports.append(_report("thron-funcEqu", G - (1 + (T - 1) * _times_z(G) + _times_z(G * Gqt))))

    neg = {_Q: MultiPoly.const(-1), _X: ONE}
    S = PolySeries([p.subst(neg) for p in I[: order + 1]], order)
    z = PolySeries.z(order)
    quad = ((1 + z - T * z) * z * S * S
            - (1 + 2 * z + z * z - T**2 * z * z) * S
            + (1 + z + T * z))
    reports.append(_report("signed-quadratic", quad))

    S_neg = S.scale_z(-1)
    reports.append(_report("signed-parity", (1 + z - T * z) * S + (1 - z + T * z) * S_neg - 2))

    odd = PolySeries([I[2 * n + 1].subst(neg) for n in range(ode_order + 1)], ode_order)
    zo = PolySeries.z(ode_order)
    c2 = (1 - T**2) ** 2
    if ode_order >= 1:
        z_deriv = odd.derivative().shift(1)
    else:
        z_deriv = PolySeries.one(0) * 0
    ode = (z_deriv * (1 - 2 * (1 + T**2) * zo + c2 * zo * zo)
           + (1 - 2 * (1 - T + T**2) * zo + c2 * zo * zo) * odd - T)
    reports.append(_report("signed-odd-ode", ode))
    return reports
