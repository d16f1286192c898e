"""
Named identity checks.  Each one verifies an exact identity over every
object up to a size bound and reports a :class:`CheckDescriptor`.

The ``max_n`` argument caps each check's default bound; it never raises it.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Any, Callable

import numpy as np

from . import _kernels, genfun, maps, paths, permstats, polyomino
from .config import oracle_bound
from .polyarith import ABT, QTX, MultiPoly

__all__ = ["CheckDescriptor", "CHECKS", "run_check", "run_checks", "check_names"]

ONE = MultiPoly.const(1)
Q, T, X = QTX.gens()
_QS, _TS, _XS = 0, 1, 2


@dataclass
class CheckDescriptor:
    name: str
    max_n: int
    status: str
    counterexample: Any = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


class _Mismatch(Exception):
    def __init__(self, **info):
        super().__init__(info)
        self.info = info


def _expect(cond: bool, **info) -> None:
    if not cond:
        raise _Mismatch(**{k: _jsonable(v) for k, v in info.items()})


def _jsonable(v):
    if isinstance(v, MultiPoly):
        return v.render(QTX)
    if isinstance(v, (tuple, list)):
        return [_jsonable(a) for a in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(a) for k, a in v.items()}
    if isinstance(v, (np.integer,)):
        return int(v)
    return v


def _at_x1(p: MultiPoly) -> MultiPoly:
    return p.subst({_XS: ONE})


# -- the checks -----------------------------------------------------------------
# Each takes the effective bound and raises _Mismatch on the first failure.

def _check_I_routes(N: int) -> None:
    S = genfun.cf_eval(genfun.stieltjes_I(N + 1), N)
    Th = genfun.cf_eval(genfun.thron_I(N + 1), N)
    for n in range(N + 1):
        b = _at_x1(permstats.brute_I(n))
        routes = {"rec_I_qt": genfun.rec_I_qt(n), "rec_I_alt": genfun.rec_I_alt(n),
                  "rec_I_qtx(x=1)": _at_x1(genfun.rec_I_qtx(n)),
                  "stieltjes": S.coeffs[n], "thron": Th.coeffs[n]}
        for name, p in routes.items():
            _expect(p == b, n=n, route=name, got=p, brute=b)
    # the recursions alone reach two sizes further
    for n in range(N + 1, min(12, N + 2) + 1):
        a, b, c = genfun.rec_I_qt(n), genfun.rec_I_alt(n), _at_x1(genfun.rec_I_qtx(n))
        _expect(a == b == c, n=n, rec_I_qt=a, rec_I_alt=b, rec_I_qtx=c)


def _check_M_routes(N: int) -> None:
    for n in range(N + 1):
        b = permstats.brute_M(n)
        _expect(genfun.rec_M_first(n) == b, n=n, route="first", got=genfun.rec_M_first(n), brute=b)
        _expect(genfun.rec_M_second(n) == b, n=n, route="second", got=genfun.rec_M_second(n), brute=b)


def _count(path, *steps) -> int:
    return sum(1 for s in path if s in steps)


def _check_bijections(N: int) -> None:
    for n in range(N + 1):
        perms = list(permstats.gen_av321(n))
        _expect(len(perms) == genfun.catalan(n), n=n, what="|Av_n(321)|")
        _mu_suite(n, perms)
        _nu_suite(n, perms)
        _gamma_suite(n, perms)
        _upsilon_suite(n, perms)
        _shorten_suite(n)


def _bijective(n, name, images, codomain) -> None:
    _expect(len(set(images)) == len(images), n=n, map=name, what="not injective")
    _expect(set(images) == set(codomain), n=n, map=name, what="image differs from codomain")


def _mu_suite(n, perms) -> None:
    if n == 0:
        return
    images = []
    for w in perms:
        M = maps.mu(w)
        images.append(M)
        _expect(maps.mu_inv(M) == w, n=n, map="mu", perm=w)
        _expect(permstats.stat_lrm(w) == _count(M, "U", "L1") + 1, n=n, map="mu lrm", perm=w)
        inv = _count(M, "D", "L0") + paths.motzkin_area_geometric(M)
        _expect(permstats.stat_inv(w) == inv, n=n, map="mu inv", perm=w)
    _bijective(n, "mu", images, paths.gen_motzkin2(n - 1))


def _nu_suite(n, perms) -> None:
    images = []
    for w in perms:
        M = maps.nu(w)
        images.append(M)
        _expect(maps.nu_inv(M) == w, n=n, map="nu", perm=w)
        hs = paths.motzkin_heights(M)
        fix0 = sum(1 for s, ht in zip(M, hs) if s == "L1" and ht == 0)
        _expect(permstats.stat_fix(w) == fix0, n=n, map="nu fix", perm=w)
        _expect(permstats.stat_lrm(w) == _count(M, "U", "L1"), n=n, map="nu lrm", perm=w)
        _expect(permstats.stat_inv(w) == sum(hs), n=n, map="nu inv", perm=w)
    _bijective(n, "nu", images, filter(maps.is_restricted, paths.gen_motzkin2(n)))


def _gamma_suite(n, perms) -> None:
    images = []
    for w in perms:
        P = maps.gamma(w)
        images.append(P)
        _expect(maps.gamma_inv(P) == w, n=n, map="gamma", perm=w)
        _expect(permstats.stat_lrm(w) == paths.npea(P), n=n, map="gamma lrm", perm=w)
        _expect(permstats.stat_inv(w) == paths.spea(P), n=n, map="gamma inv", perm=w)
        d = sorted(permstats.des_set(w))
        _expect(maps.nee_descents(P) == d, n=n, map="gamma NEE", perm=w, path=P)
    _bijective(n, "gamma", images, paths.gen_dyck(n))


def _upsilon_suite(n, perms) -> None:
    images = []
    for P, Q_ in polyomino.gen_sp(n):
        w = polyomino.upsilon(P, Q_)
        images.append(w)
        _expect(polyomino.upsilon_inv(w) == (P, Q_), n=n, map="upsilon", pair=(P, Q_))
        _expect(polyomino.area_pp(P, Q_) == permstats.stat_inv(w), n=n, map="upsilon area", pair=(P, Q_))
        _expect(polyomino.col_pp(P, Q_) == permstats.stat_lrm(w), n=n, map="upsilon col", pair=(P, Q_))
        maj, des = polyomino.lower_maj_des(P, Q_)
        _expect((maj, des) == (permstats.stat_maj(w), permstats.stat_des(w)),
                n=n, map="upsilon maj/des", pair=(P, Q_))
    _bijective(n, "upsilon", images, perms)


def _shorten_suite(n) -> None:
    images = []
    for U, V in polyomino.gen_pp(n + 1):
        if n == 0:
            images.append(("", ""))
            continue
        P, Q_ = polyomino.shorten(U, V)
        images.append((P, Q_))
        _expect(polyomino.unshorten(P, Q_) == (U, V), n=n, map="shorten", pair=(U, V))
        _expect(polyomino.area_pp(U, V) == polyomino.area_pp(P, Q_) + polyomino.col_pp(P, Q_),
                n=n, map="shorten area", pair=(U, V))
        _expect(polyomino.col_pp(U, V) == polyomino.col_pp(P, Q_), n=n, map="shorten col", pair=(U, V))
    _bijective(n, "shorten", images, [tuple(p) for p in polyomino.gen_sp(n)])


def _check_sumpeaks(N: int) -> None:
    for n in range(N + 1):
        left, right = paths.dyck_stat_polys(n)
        _expect(left == right, n=n, spea_npea=left, stun_des=right)
        for P in paths.gen_dyck(n):
            hP = paths.h(P)
            _expect(paths.spea(P) == paths.stun(hP), n=n, path=P, image=hP, what="spea vs stun")
            _expect(paths.npea(P) == n - paths.bits_des(hP), n=n, path=P, image=hP, what="npea vs des")
            _expect(paths.h_inv(hP) == P, n=n, path=P, what="h round trip")


def _check_dyck_recursions(N: int) -> None:
    for n in range(1, N + 1):
        c = paths.brute_C(n)
        for name, rhs in (("first-return", genfun.C_first_rhs), ("last-peak", genfun.C_last_rhs)):
            r = rhs(n, paths.brute_C)
            _expect(r == c, n=n, recursion=name, rhs=r.render(ABT), brute=c.render(ABT))
    for n in range(1, min(N, 7) + 1):
        dyck_n = set(paths.gen_dyck(n))
        pairs = [(A, B) for k in range(n) for A in paths.gen_dyck(k) for B in paths.gen_dyck(n - 1 - k)]
        for name, f in (("delta", paths.delta), ("Delta", paths.Delta)):
            _bijective(n, name, [f(A, B) for A, B in pairs], dyck_n)
        for A, B in pairs:
            _expect(paths.delta_inv(paths.delta(A, B)) == (A, B), n=n, map="delta round trip", pair=(A, B))


def _check_polyomino_bridge(N: int) -> None:
    # both identities fail at n = 0, where P_1 is the degenerate single element
    for n in range(1, N + 1):
        C = paths.brute_C(n)
        Cq = C.subst({0: Q, 1: Q ** -1, 2: T})
        Pn1 = polyomino.P_poly(n + 1)
        _expect(Pn1 == Q**n * T * Cq, n=n, P=Pn1, rhs=Q**n * T * Cq)
        I = _at_x1(permstats.brute_I(n))
        shifted = Pn1.subst({_TS: T * Q ** -1})
        _expect(I == shifted, n=n, I=I, P_shifted=shifted)


def _check_restricted_sum(N: int) -> None:
    for n in range(2, N + 1):
        lhs = polyomino.PP_maj_poly(n)
        rhs = permstats.brute_M(n - 1) + (Q ** (n - 1) * T - 1) * permstats.brute_M(n - 2)
        _expect(lhs == rhs, n=n, sum_over_P_n=lhs, rhs=rhs)


def _A_table(N: int):
    for n in range(1, N + 1):
        M = permstats.brute_M(n)
        for k in range(n):
            A = M.coeff(_TS, k)
            if not A.is_zero():  # no avoider has more than n/2 descents
                yield n, k, A


def _check_A_symmetry(N: int) -> None:
    for n, k, A in _A_table(N):
        lo, hi = A.degree_range(_QS)
        _expect(A.is_symmetric_in(_QS), n=n, k=k, A=A, what="not symmetric")
        _expect(k * k <= lo and hi <= n * k - k * k, n=n, k=k, support=(lo, hi))
        _expect(all(A.coeff(_QS, i) == A.coeff(_QS, n * k - i) for i in range(n * k + 1)),
                n=n, k=k, what="a_i != a_(nk-i)")


def _check_unimodality(N: int) -> None:
    for n, k, A in _A_table(N):
        _expect(A.is_unimodal(_QS), n=n, k=k, A=A)


_LOG_CONCAVE_WITNESSES = {(6, 2)}


def _check_log_concavity(N: int) -> None:
    bad = {(n, k) for n, k, A in _A_table(N) if not A.is_log_concave(_QS)}
    expected = {(n, k) for n, k in _LOG_CONCAVE_WITNESSES if n <= N}
    _expect(bad == expected, failures=sorted(bad), expected=sorted(expected))


def _parity_ok(coeffs: list[int]) -> bool:
    return bool(coeffs) and coeffs[0] == 1 and all(c % 2 == 0 for c in coeffs[1:])


def _check_parity(N: int) -> None:
    for n in (1, 3, 7, 15):
        if n > N:
            break
        I1 = _at_x1(permstats.brute_I(n)).subst({_TS: ONE})
        M = permstats.brute_M(n)
        seqs = {
            "[q^k]I_n(q,1)": I1.univariate_coeffs(_QS),
            "[q^k]M_n(q,1)": M.subst({_TS: ONE}).univariate_coeffs(_QS),
            "[t^k]M_n(1,t)": M.subst({_QS: ONE}).univariate_coeffs(_TS),
        }
        for name, (r, cs) in seqs.items():
            _expect(r == 0 and _parity_ok(cs), n=n, sequence=name, coefficients=cs)


def _check_signed(N: int) -> None:
    neg = {_QS: MultiPoly.const(-1), _XS: ONE}
    for n in range(N + 1):
        closed, rec, brute = genfun.signed_closed(n), genfun.signed_rec(n), permstats.brute_I(n).subst(neg)
        _expect(closed == rec == brute, n=n, closed=closed, rec=rec, brute=brute)
    for m in range(6):
        if 2 * m + 1 > N:
            break
        at1 = genfun.signed_closed(2 * m + 1).evaluate((1, 1, 1, 1))
        _expect(at1 == genfun.catalan(m), n=2 * m + 1, value=at1, expected=genfun.catalan(m))
        if m >= 1:
            even = genfun.signed_closed(2 * m).evaluate((1, 1, 1, 1))
            _expect(even == 0, n=2 * m, value=even)
    for n in range(1, min(N, 10) + 1):
        counts = [0] * (n + 1)
        for P in paths.gen_dyck(n):
            if paths.is_symmetric_dyck(P):
                counts[paths.npea(P)] += 1
        for k in range(1, n + 1):
            _expect(counts[k] == genfun.s_coeff(n, k), n=n, k=k, symmetric_paths=counts[k],
                    s=genfun.s_coeff(n, k))
    ode = min(5, (N - 1) // 2)
    for r in genfun.check_functional_equations(min(N, 10), ode_order=max(ode, 0)):
        if r["identity"].startswith("signed"):
            _expect(r["status"] == "pass", **r)


def _check_funcequ(N: int) -> None:
    for r in genfun.check_functional_equations(N, ode_order=0):
        if r["identity"] == "funcEqu":
            _expect(r["status"] == "pass", **r)


def _check_lrm_exc_fix(N: int) -> None:
    for n in range(N + 1):
        perms = _kernels.av321_array(n)
        st = _kernels.perm_stats(perms)
        inv, lrm, fix, exc = st[:, 0], st[:, 3], st[:, 4], st[:, 5]
        bad = np.nonzero(lrm != exc + fix)[0]
        _expect(bad.size == 0, n=n, perm=perms[bad[0]].tolist() if bad.size else None)
        # a_i is an LR maximum iff a_i >= i
        running = np.maximum.accumulate(perms, axis=1) if n else perms
        is_max = perms == running
        ge = perms >= np.arange(1, n + 1)
        bad = np.nonzero((is_max != ge).any(axis=1))[0]
        _expect(bad.size == 0, n=n, perm=perms[bad[0]].tolist() if bad.size else None)
        # per permutation: q^inv t^lrm (x/t)^fix == q^inv t^exc x^fix
        for row in range(st.shape[0]):
            mono = MultiPoly.monomial((int(inv[row]), int(lrm[row]), int(fix[row]), 0))
            lhs = mono.subst({_XS: X * T ** -1})
            rhs = MultiPoly.monomial((int(inv[row]), int(exc[row]), int(fix[row]), 0))
            _expect(lhs == rhs, n=n, perm=perms[row].tolist())
        table = permstats.brute_I_table(n)
        lhs = table["I"].subst({_XS: X * T ** -1})
        _expect(lhs == table["I_exc"], n=n, lhs=lhs, rhs=table["I_exc"])


CHECKS: dict[str, tuple[int, Callable[[int], None], str]] = {
    "I-routes": (10, _check_I_routes, "brute force, three recursions and two continued fractions agree on I_n"),
    "M-routes": (10, _check_M_routes, "brute force and both recursions agree on M_n"),
    "bijections": (9, _check_bijections, "mu, nu, Gamma, Upsilon, shortening: bijective with statistic transfer"),
    "sumpeaks-sumtunnels": (10, _check_sumpeaks, "spea/npea versus stun/(n - des), aggregate and through h"),
    "dyck-recursions": (9, _check_dyck_recursions, "both C_n recursions on brute force data; delta and Delta bijective"),
    "polyomino-bridge": (7, _check_polyomino_bridge, "P_(n+1) from C_n(q,1/q;t), and I_n = P_(n+1)(q,t/q)"),
    "restricted-sum": (8, _check_restricted_sum, "maj/des sum over parallelogram polyominoes"),
    "A-symmetry": (10, _check_A_symmetry, "A_(n,k) symmetric with support in [k^2, nk-k^2]"),
    "unimodality": (10, _check_unimodality, "A_(n,k) unimodal"),
    "log-concavity": (6, _check_log_concavity, "A_(n,k) log-concave except exactly at A_(6,2)"),
    "parity": (7, _check_parity, "coefficients are 1 then even for n = 2^m - 1"),
    "signed": (12, _check_signed, "closed form, recursions, brute force and functional equations at q = -1"),
    "funcEqu": (8, _check_funcequ, "functional equation of the (q,t,x) generating function"),
    "lrm-exc-fix": (10, _check_lrm_exc_fix, "lrm = exc + fix and the excedance form of I_n"),
}


def check_names() -> list[str]:
    return sorted(CHECKS)


def run_check(name: str, max_n: int | None = None) -> CheckDescriptor:
    if name not in CHECKS:
        raise KeyError(f"unknown check {name!r}; choose from {', '.join(check_names())}")
    default, fn, _ = CHECKS[name]
    cap = oracle_bound() if max_n is None else max_n
    N = min(default, cap)
    try:
        fn(N)
    except _Mismatch as e:
        return CheckDescriptor(name, N, "fail", e.info)
    return CheckDescriptor(name, N, "pass")


def run_checks(names: list[str] | None = None, max_n: int | None = None,
               jobs: int = 1) -> list[CheckDescriptor]:
    """Run the named checks (all by default), in worker processes if ``jobs > 1``; results are ordered by name."""
    names = sorted(names or CHECKS)
    for name in names:
        if name not in CHECKS:
            raise KeyError(f"unknown check {name!r}; choose from {', '.join(check_names())}")
    if jobs <= 1 or len(names) <= 1:
        return [run_check(n, max_n) for n in names]
    from concurrent.futures import ProcessPoolExecutor
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(run_check, names, [max_n] * len(names)))
