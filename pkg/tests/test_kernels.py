import subprocess
import sys

import numpy as np
import pytest

from qcat import _kernels

import oracles

numba_backend = pytest.importorskip("qcat._kernels._numba")
numpy_backend = _kernels.load_backend("numpy")


@pytest.mark.parametrize("n", range(9))
def test_permutation_arrays_agree(n):
    a = _kernels.av321_array(n, numba_backend)
    b = _kernels.av321_array(n, numpy_backend)
    assert a.shape == b.shape == (_kernels.catalan(n), n)
    assert np.array_equal(a, b)


@pytest.mark.parametrize("n", range(8))
def test_permutation_rows_are_sorted_avoiders(n):
    rows = [tuple(r) for r in _kernels.av321_array(n, numpy_backend).tolist()]
    assert rows == sorted(oracles.av321(n))


@pytest.mark.parametrize("n", range(9))
def test_permutation_stats_agree(n):
    perms = _kernels.av321_array(n)
    a = _kernels.perm_stats(perms, numba_backend)
    b = _kernels.perm_stats(perms, numpy_backend)
    assert np.array_equal(a, b)


@pytest.mark.parametrize("n", range(7))
def test_permutation_stats_match_definitions(n):
    perms = _kernels.av321_array(n)
    st = _kernels.perm_stats(perms, numpy_backend)
    for w, row in zip(perms.tolist(), st.tolist()):
        ds = oracles.descents(w)
        assert row == [oracles.inv(w), sum(ds), len(ds), oracles.lrm(w), oracles.fix(w), oracles.exc(w)]


@pytest.mark.parametrize("n", range(9))
def test_dyck_arrays_and_stats_agree(n):
    a = _kernels.dyck_array(n, numba_backend)
    b = _kernels.dyck_array(n, numpy_backend)
    assert np.array_equal(a, b)
    assert np.array_equal(_kernels.dyck_stats(a, numba_backend), _kernels.dyck_stats(b, numpy_backend))


@pytest.mark.parametrize("n", range(7))
def test_dyck_rows_are_all_paths(n):
    rows = {"".join("UD"[v] for v in r) for r in _kernels.dyck_array(n, numpy_backend).tolist()}
    assert rows == set(oracles.dyck(n))


def test_exponent_histogram():
    exps = np.array([[1, 0], [0, 2], [1, 0]])
    assert _kernels.exponent_histogram(exps) == {(1, 0): 2, (0, 2): 1}
    assert _kernels.exponent_histogram(np.zeros((0, 3), dtype=np.int64)) == {}


def test_unknown_backend():
    with pytest.raises(ValueError):
        _kernels.load_backend("fortran")


@pytest.mark.parametrize("name", ["numpy", "numba"])
def test_environment_selects_backend(name, monkeypatch):
    monkeypatch.setenv("QCAT_BACKEND", name)
    out = subprocess.run([sys.executable, "-c", "from qcat import _kernels; print(_kernels.BACKEND)"],
                         capture_output=True, text=True, check=True)
    assert out.stdout.strip() == name
