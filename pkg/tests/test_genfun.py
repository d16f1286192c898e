from math import comb

import pytest
from hypothesis import given, strategies as st

from qcat import genfun
from qcat.genfun import (
    CFSpec, WeightTable, cf_convergent, cf_eval, cf_even_part, cf_odd_part, as_jacobi,
    required_depth, weighted_motzkin_series,
)
from qcat.maps import mu
from qcat.permstats import parse_perm
from qcat.polyarith import ABT, QTX, MultiPoly, PolySeries

import oracles

Q, T, X = QTX.gens()
A, B, TT = ABT.gens()
ONE = MultiPoly.const(1)
NEG = {0: MultiPoly.const(-1)}


def at_x1(p):
    return p.subst({2: ONE})


# -- numbers --------------------------------------------------------------------

def test_catalan_first_values():
    assert [genfun.catalan(n) for n in range(6)] == [1, 1, 2, 5, 14, 42]


@pytest.mark.parametrize("n", range(12))
def test_catalan_satisfies_quadratic_recurrence(n):
    if n:
        assert genfun.catalan(n) == sum(genfun.catalan(k) * genfun.catalan(n - 1 - k) for k in range(n))


def test_narayana_value_and_brute_force():
    assert genfun.narayana(4, 2) == 6
    assert oracles.I_poly(4).subst({0: ONE}).coeff(1, 2) == 6


def test_narayana_poly_three():
    assert genfun.narayana_poly(3) == T + 3 * T**2 + T**3
    assert genfun.narayana_poly(3) == oracles.I_poly(3).subst({0: ONE})


@pytest.mark.parametrize("n", range(1, 8))
def test_narayana_poly_is_I_at_q1(n):
    assert genfun.narayana_poly(n) == oracles.I_poly(n).subst({0: ONE})


@pytest.mark.parametrize("n,k", [(3, 0), (3, 4), (0, 1)])
def test_narayana_out_of_range(n, k):
    with pytest.raises(ValueError):
        genfun.narayana(n, k)


# -- recursions for I ---------------------------------------------------------------

def test_rec_I_small_values():
    assert genfun.rec_I_qt(0) == ONE
    assert genfun.rec_I_qt(2) == T**2 + Q * T
    assert genfun.rec_I_qtx(1) == T * X
    assert genfun.rec_I_qtx(2) == T**2 * X**2 + Q * T
    assert genfun.rec_I_alt(0) == ONE and genfun.rec_I_alt(1) == T
    assert genfun.rec_I_alt(2) == T**2 + Q * T


def test_recursion_term_for_I3():
    # t * I_2 is the first term of the I_3 recursion
    assert (T**2 + Q * T) * T == T**3 + Q * T**2
    assert genfun.rec_I_qt(3) == T**3 + 2 * Q * T**2 + Q**2 * T**2 + Q**2 * T


@pytest.mark.parametrize("n", range(9))
def test_I_recursions_match_brute_force(n):
    b = oracles.I_poly(n, with_x=True)
    assert genfun.rec_I_qtx(n) == b
    assert genfun.rec_I_qt(n) == at_x1(b)
    assert genfun.rec_I_alt(n) == at_x1(b)


@pytest.mark.parametrize("n", range(9, 13))
def test_alternate_recursion_agrees_beyond_brute_force(n):
    assert genfun.rec_I_alt(n) == genfun.rec_I_qt(n) == at_x1(genfun.rec_I_qtx(n))


# -- recursions for M and C -------------------------------------------------------

def test_rec_M_small_values():
    assert genfun.rec_M_first(2) == 1 + Q * T
    assert genfun.rec_M_first(3) == genfun.rec_M_second(3) == 1 + 2 * Q * T + 2 * Q**2 * T


@pytest.mark.parametrize("n", range(9))
def test_M_recursions_match_brute_force(n):
    b = oracles.M_poly(n)
    assert genfun.rec_M_first(n) == b
    assert genfun.rec_M_second(n) == b


def test_rec_C_small_values():
    assert genfun.rec_C_first(1) == ONE
    assert genfun.rec_C_first(2) == 1 + A * B * TT
    assert genfun.rec_C_last(2) == 1 + A * B * TT


@pytest.mark.parametrize("n", range(9))
def test_C_recursions_match_brute_force(n):
    b = oracles.C_poly(n)
    assert genfun.rec_C_first(n) == b
    assert genfun.rec_C_last(n) == b
    if n:
        assert genfun.C_first_rhs(n, oracles.C_poly) == b
        assert genfun.C_last_rhs(n, oracles.C_poly) == b


# -- signed enumeration ---------------------------------------------------------------

def test_signed_small_values():
    assert genfun.signed_closed(3) == T - T**2 + T**3
    assert genfun.signed_closed(4) == -T + 2 * T**2 - 2 * T**3 + T**4
    assert genfun.signed_rec(4) == (T - 1) * genfun.signed_rec(3)


def test_signed_five_by_exact_division():
    I1, I3 = genfun.signed_closed(1), genfun.signed_closed(3)
    three_I5 = 2 * ((1 + T**2) * 2 - T) * I3 - (1 - T**2) ** 2 * I1
    I5 = three_I5.exact_div(3)
    assert I5 == genfun.signed_rec(5)
    assert I5 == oracles.I_poly(5).subst(NEG)


def test_exact_division_refuses_remainder():
    with pytest.raises(ArithmeticError):
        (T + 2).exact_div(3)


@pytest.mark.parametrize("n", range(10))
def test_signed_routes_match_brute_force(n):
    b = oracles.I_poly(n).subst(NEG)
    assert genfun.signed_closed(n) == b
    assert genfun.signed_rec(n) == b


@pytest.mark.parametrize("m", range(6))
def test_signed_count_at_t1_is_catalan_or_zero(m):
    assert genfun.signed_closed(2 * m + 1).evaluate((1, 1, 1, 1)) == genfun.catalan(m)
    if m:
        assert genfun.signed_closed(2 * m).evaluate((1, 1, 1, 1)) == 0


@pytest.mark.parametrize("n", range(1, 9))
def test_s_coeff_counts_symmetric_dyck_paths(n):
    counts = [0] * (n + 1)
    for P in oracles.dyck(n):
        if P == "".join("U" if s == "D" else "D" for s in reversed(P)):
            counts[len(oracles.peak_heights(P))] += 1
    assert counts[1:] == [genfun.s_coeff(n, k) for k in range(1, n + 1)]


def test_s_coeff_formula():
    for n in range(1, 12):
        for k in range(1, n + 1):
            want = comb((n - 1) // 2, (k - 1) // 2) * comb(n // 2, k // 2)
            assert genfun.s_coeff(n, k) == want


def test_s_coeff_out_of_range():
    with pytest.raises(ValueError):
        genfun.s_coeff(3, 0)
    with pytest.raises(ValueError):
        genfun.s_coeff(3, 4)


# -- continued fractions -------------------------------------------------------------

def test_catalan_stieltjes_fraction():
    s = cf_eval(genfun.stieltjes_catalan(7), 6)
    assert [c.constant_term() for c in s.coeffs] == [1, 1, 2, 5, 14, 42, 132]


def test_jacobi_fraction_matches_brute_force():
    s = cf_eval(genfun.jacobi_I(required_depth("jacobi", 8)), 8)
    assert list(s.coeffs) == [oracles.I_poly(n, with_x=True) for n in range(9)]


def test_thron_and_stieltjes_fractions_match_brute_force():
    want = [oracles.I_poly(n) for n in range(9)]
    assert list(cf_eval(genfun.thron_I(9), 8).coeffs) == want
    assert list(cf_eval(genfun.stieltjes_I(9), 8).coeffs) == want


def test_required_depth_rule():
    assert required_depth("jacobi", 8) == 5
    assert required_depth("jacobi", 7) == 5
    assert required_depth("stieltjes", 6) == 7
    assert required_depth("thron", 0) == 1


@pytest.mark.parametrize("kind,factory", [("jacobi", genfun.jacobi_I), ("stieltjes", genfun.stieltjes_I),
                                          ("thron", genfun.thron_I)])
def test_shallow_fraction_is_refused(kind, factory):
    with pytest.raises(ValueError, match="depth"):
        cf_eval(factory(required_depth(kind, 6) - 1), 6)


def test_shallow_jacobi_really_is_wrong_at_the_edge():
    # one level short leaves the z^order coefficient incorrect, so the rule is tight
    s = cf_convergent(genfun.jacobi_I(required_depth("jacobi", 6) - 1), 6)
    assert s.coeffs[6] != oracles.I_poly(6, with_x=True)


@given(st.integers(0, 7), st.integers(0, 4))
def test_depth_stability(order, extra):
    for kind, factory in (("jacobi", genfun.jacobi_I), ("stieltjes", genfun.stieltjes_I),
                          ("thron", genfun.thron_I)):
        d = required_depth(kind, order)
        assert cf_eval(factory(d), order) == cf_eval(factory(d + extra), order)


def test_cfspec_validation():
    with pytest.raises(ValueError):
        CFSpec("continued", (), (), 1)
    with pytest.raises(ValueError):
        CFSpec("jacobi", (), (ONE,), 0)
    with pytest.raises(ValueError):
        CFSpec("jacobi", (), (ONE,), 2)


def test_series_division_needs_unit_constant():
    with pytest.raises(ZeroDivisionError):
        PolySeries([2, 1], 3).reciprocal()


# -- even and odd parts ---------------------------------------------------------------

def _stieltjes_lams(depth):
    return genfun.stieltjes_I(depth + 1).numerators[:depth]


@pytest.mark.parametrize("m", range(1, 5))
def test_contraction_convergents(m):
    order = 10
    lams = _stieltjes_lams(2 * m + 1)
    even = cf_convergent(cf_even_part(lams[: 2 * m - 1]), order)
    odd = cf_convergent(cf_odd_part(lams[: 2 * m]), order)
    assert even == cf_convergent(genfun.stieltjes_I(2 * m), order)
    assert odd == cf_convergent(genfun.stieltjes_I(2 * m + 1), order)


def test_contraction_convergents_all_ones():
    ones = [ONE] * 7
    for m in range(1, 4):
        assert cf_convergent(cf_even_part(ones[: 2 * m - 1]), 8) == cf_convergent(genfun.stieltjes_catalan(2 * m), 8)
        assert cf_convergent(cf_odd_part(ones[: 2 * m]), 8) == cf_convergent(genfun.stieltjes_catalan(2 * m + 1), 8)


def test_even_part_is_the_jacobi_fraction_at_x1():
    order = 10
    even = cf_even_part(_stieltjes_lams(2 * required_depth("jacobi", order)))
    J = as_jacobi(even)
    ref = genfun.jacobi_I(J.depth, with_x=False)
    assert J.numerators == ref.numerators
    assert J.denominators == ref.denominators
    assert cf_convergent(even, order) == cf_eval(ref, order)


def test_odd_part_at_q_minus_one():
    order = 9
    lams = [lam.subst({0: MultiPoly.const(-1), 1: ONE}) for lam in _stieltjes_lams(order + 2)]
    series = cf_convergent(cf_odd_part(lams), order)
    # 1 + z C(z^2)
    want = [1] + [genfun.catalan((n - 1) // 2) if n % 2 else 0 for n in range(1, order + 1)]
    assert [c.constant_term() for c in series.coeffs] == want
    assert all(c.is_const() for c in series.coeffs)


def test_as_jacobi_rejects_odd_part():
    with pytest.raises(ValueError):
        as_jacobi(cf_odd_part(_stieltjes_lams(5)))


# -- weighted Motzkin paths -----------------------------------------------------------

def _jacobi_weights(height):
    return WeightTable.from_functions(
        lambda h: T * Q**h, lambda h: Q**h,
        lambda h: T * X if h == 0 else (1 + T) * Q**h, height)


def test_weighted_paths_match_jacobi_fraction():
    w = _jacobi_weights(4)
    assert weighted_motzkin_series(w, 7) == cf_eval(genfun.jacobi_I(5), 7)
    assert weighted_motzkin_series(w, 7) == cf_eval(genfun.jacobi_from_weights(w, 5), 7)


def test_unit_weights_give_motzkin_numbers():
    w = WeightTable.from_functions(lambda h: ONE, lambda h: ONE, lambda h: ONE, 3)
    assert [c.constant_term() for c in weighted_motzkin_series(w, 6).coeffs] == [1, 1, 2, 4, 9, 21, 51]


def test_weight_table_too_short():
    with pytest.raises(ValueError):
        weighted_motzkin_series(_jacobi_weights(2), 7)


def test_weight_of_running_example_path():
    # Each step kind gets its own decimal digit in the exponent of q, so a
    # coefficient of q^e counts paths with exactly the step multiset encoded by e.
    digit = {("u", 0): 0, ("u", 1): 1, ("d", 1): 2, ("d", 2): 3, ("l", 1): 4, ("l", 2): 5, ("l", 0): 6}

    def wt(kind, h):
        return Q ** (10 ** digit[(kind, h)]) if (kind, h) in digit else MultiPoly.const(0)
    w = WeightTable.from_functions(lambda h: wt("u", h), lambda h: wt("d", h), lambda h: wt("l", h), 4)
    M = mu(parse_perm("361782495"))
    plain = ["L" if s.startswith("L") else s for s in M]
    assert plain == ["U", "L", "L", "U", "L", "D", "L", "D"]
    # u0 l1^2 u1 l2 d2 l1 d1
    e = 1 + 3 * 10**4 + 10 + 10**5 + 10**3 + 10**2
    series = weighted_motzkin_series(w, 8)
    assert dict(series.coeffs[8].items()).get((e, 0, 0, 0), 0) >= 1


# -- functional equations -------------------------------------------------------------

def test_functional_equations_report():
    reports = genfun.check_functional_equations(8, ode_order=5)
    names = {r["identity"] for r in reports}
    assert {"funcEqu", "signed-quadratic", "signed-odd-ode"} <= names
    for r in reports:
        assert r["status"] == "pass", r
        assert r["first_failure"] is None


def test_functional_equations_through_ten_from_recursions():
    reports = genfun.check_functional_equations(10, I_source=genfun.rec_I_qtx, ode_order=5)
    assert all(r["status"] == "pass" for r in reports)


def test_functional_equation_detects_a_wrong_coefficient():
    def bad(n):
        p = genfun.rec_I_qtx(n)
        return p + Q**7 if n == 5 else p
    funceq = next(r for r in genfun.check_functional_equations(8, I_source=bad, ode_order=0)
                  if r["identity"] == "funcEqu")
    assert funceq["status"] == "fail"
    assert funceq["first_failure"] == 5
