import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from qcat.genfun import C_first_rhs, C_last_rhs, catalan, s_coeff
from qcat.paths import (Delta, alpha, beta, bits_des, bits_des_set, bits_maj, brute_C,
                        check_dyck, delta, delta_inv, dyck_stat_polys, gen_dyck,
                        gen_motzkin, gen_motzkin2, h, h_inv, is_dyck, is_symmetric_dyck,
                        motzkin_area_geometric, motzkin_area_heights, npea, parse_motzkin,
                        peaks, spea, stun, tunnels, valleys)
from qcat.polyarith import ABT

a, b, tt = ABT.gens()
RUNNING = "UUUUDUDDUDDDUUDUDD"  # running example for peaks and tunnels

dyck_paths = st.integers(0, 8).flatmap(lambda n: st.sampled_from(list(gen_dyck(n))))


def test_validation():
    assert is_dyck("") and is_dyck("UUDD") and not is_dyck("DU") and not is_dyck("UUD")
    with pytest.raises(ValueError):
        check_dyck("UDD")


def test_peaks_and_valleys():
    assert [ht for _, ht in peaks(RUNNING)] == [4, 4, 3, 2, 2]
    assert peaks("UD") == [(1, 1)] and valleys("UD") == []
    assert npea("UUDD") == 1 and npea("UDUD") == 2
    assert [ht for _, ht in valleys("UDUD")] == [0]


def test_bit_statistics():
    assert (bits_des("UUDD"), alpha("UUDD"), beta("UUDD")) == (0, 0, 0)
    assert sorted(bits_des_set("UDUD")) == [2]
    assert (alpha("UDUD"), beta("UDUD"), bits_maj("UDUD")) == (1, 1, 2)


@pytest.mark.parametrize("n", range(1, 9))
def test_alpha_plus_beta_is_maj_and_npea_is_des_plus_one(n):
    for P in gen_dyck(n):
        assert alpha(P) + beta(P) == bits_maj(P)
        assert npea(P) == bits_des(P) + 1


def test_sumpeaks_examples():
    assert spea("UUDD") == 1 and spea("UDUD") == 0
    assert spea(RUNNING) == 3 + 3 + 2 + 1 + 1


def test_sumtunnels_examples():
    assert stun(RUNNING) == 11
    assert sorted(j - i + 1 for i, j in tunnels(RUNNING)) == [2, 2, 6, 12]
    assert stun("UUDD") == 0 and stun("UDUD") == 1
    assert stun("") == spea("") == npea("") == 0


@given(dyck_paths)
def test_statistics_match_oracle(P):
    assert [ht for _, ht in peaks(P)] == oracles.peak_heights(P)
    assert all((j - i + 1) % 2 == 0 for i, j in tunnels(P))


def test_delta_examples():
    assert delta("UUUDDUDD", "UDUUDUDD") == "UUUUDUDDUDDDUUDUDD"
    assert delta("", "") == "UD"
    assert Delta("", "UD") == "UUDD" and Delta("", "") == "UD"


def _pairs(n):
    return [(Q, R) for k in range(n) for Q in gen_dyck(k) for R in gen_dyck(n - 1 - k)]


@pytest.mark.parametrize("n", range(1, 8))
def test_delta_and_Delta_are_bijections(n):
    pairs = _pairs(n)
    target = set(gen_dyck(n))
    for f in (delta, Delta):
        images = [f(Q, R) for Q, R in pairs]
        assert len(set(images)) == len(images) and set(images) == target
    for Q, R in pairs:
        assert delta_inv(delta(Q, R)) == (Q, R)


def test_h_examples():
    assert h("UUDD") == "UDUD" and h("UDUD") == "UUDD" and h("UD") == "UD"


@pytest.mark.parametrize("n", range(11))
def test_h_transfers_statistics(n):
    images = set()
    for P in gen_dyck(n):
        hp = h(P)
        images.add(hp)
        assert spea(P) == stun(hp)
        assert npea(P) == n - bits_des(hp)
        assert h_inv(hp) == P
    assert len(images) == catalan(n)


@pytest.mark.parametrize("n", range(11))
def test_sumpeaks_sumtunnels_polynomials(n):
    left, right = dyck_stat_polys(n)
    assert left == right


def test_enumeration_counts():
    assert sum(1 for _ in gen_dyck(4)) == 14
    assert sum(1 for _ in gen_motzkin2(3)) == 14
    assert list(gen_dyck(0)) == [""] and list(gen_motzkin2(0)) == [()]
    assert [sum(1 for _ in gen_motzkin(n)) for n in range(7)] == [1, 1, 2, 4, 9, 21, 51]


@pytest.mark.parametrize("n", range(9))
def test_dyck_generator_matches_oracle(n):
    ps = list(gen_dyck(n))
    assert len(ps) == len(set(ps)) and set(ps) == set(oracles.dyck(n))
    assert sum(1 for _ in gen_motzkin2(n)) == catalan(n + 1)


def test_motzkin_area():
    m_mu = parse_motzkin("U L0 L1 U L0 D L1 D")
    assert motzkin_area_geometric(m_mu) == 9
    assert 2 + 2 + motzkin_area_geometric(m_mu) == 13
    m_nu = parse_motzkin("U U D U U D D L1 D")
    assert motzkin_area_heights(m_nu) == 13
    assert motzkin_area_geometric(("L0",) * 4) == 0


def test_symmetric_paths():
    assert is_symmetric_dyck("UUDD") and is_symmetric_dyck("UDUD") and is_symmetric_dyck("UD")
    assert not is_symmetric_dyck("UUDDUD")


@pytest.mark.parametrize("n", range(1, 11))
def test_symmetric_paths_by_peaks_count_s(n):
    counts = [0] * (n + 1)
    for P in gen_dyck(n):
        if is_symmetric_dyck(P):
            counts[npea(P)] += 1
    assert counts[1:] == [s_coeff(n, k) for k in range(1, n + 1)]


def test_brute_C_examples():
    assert brute_C(2) == 1 + a * b * tt
    assert brute_C(0) == 1 and brute_C(1) == 1


@pytest.mark.parametrize("n", range(8))
def test_brute_C_matches_oracle(n):
    assert brute_C(n) == oracles.C_poly(n)


@pytest.mark.parametrize("n", range(1, 10))
def test_dyck_recursions_on_brute_data(n):
    assert C_first_rhs(n, brute_C) == brute_C(n)
    assert C_last_rhs(n, brute_C) == brute_C(n)


@pytest.mark.parametrize("n", range(1, 10))
def test_brute_C_gives_I(n):
    from qcat.permstats import brute_I
    from qcat.polyarith import QTX
    q, t, x = QTX.gens()
    Cq = brute_C(n).subst({0: q, 1: q**-1, 2: q**-1 * t})
    assert q ** (n - 1) * t * Cq == brute_I(n).subst({2: 1})
