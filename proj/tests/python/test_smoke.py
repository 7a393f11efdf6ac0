import math
import os

import mpmath
import pytest

import zeta_eta as ze

DATA = os.environ.get("ZETA_ETA_DATA_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "data"))


@pytest.fixture(scope="module")
def store():
    return ze.load_zeros(os.path.join(DATA, "zeros_first100.txt"))


def test_zeta_against_mpmath():
    for s in (2 + 0j, 0.5 + 20j, -0.5 + 3j):
        assert abs(ze.zeta(s) - complex(mpmath.zeta(s))) < 1e-10


def test_store(store):
    assert len(store) == 100
    assert abs(store.records()[0].gamma - 14.134725141734693) < 1e-12
    assert ze.count_window(store, 30.0, 1.0) == 1
    hyp = ze.inject_hypothetical(store, 0.75, 30.0)
    assert hyp.has_hypothetical and not store.has_hypothetical


def test_log_zeta_branch(store):
    s = 0.5 + 40j
    v = ze.log_zeta(s, store)
    assert abs(complex(mpmath.exp(v)) - complex(mpmath.zeta(s))) < 1e-10
    assert abs(ze.log_zeta(3 + 0j) - math.log(float(mpmath.zeta(3)))) < 1e-12


def test_eta_routes(store):
    a = ze.eta_vertical(0.7 + 25j, 1, store)
    b = ze.eta_iterated(0.7 + 25j, 1, store)
    assert abs(a.value - b.value) <= a.est_err + b.est_err
    assert a.route == "vertical" and b.route == "iterated"


def test_kernel_and_e_star():
    k = ze.Kernel.poly_bump(3)
    assert abs(ze.v_f_H(k, 2.0, math.e) - 1.0) < 1e-12
    assert abs(ze.v_f_H(k, 2.0, math.e ** 1.5)) < 1e-12
    z = 0.3 + 0.4j
    assert abs(ze.e_star(0, z) - complex(mpmath.expint(1, z))) < 1e-10


def test_residual_and_y(store):
    sieve = ze.MangoldtSieve(10_000)
    assert abs(sieve(8) - math.log(2)) < 1e-15
    cfg = ze.ApproxConfig(m=1, X=20.0, H=1.0)
    r = ze.residual(0.5 + 50j, cfg, store, sieve)
    assert abs(r["r"] - (r["eta"] - r["poly"] - r["y"])) < 1e-15
    hyp = ze.inject_hypothetical(store, 0.75, 30.0)
    assert abs(ze.y_m(0.5 + 40j, 3.0, 1, hyp) - 2 * math.pi * 0.25) < 1e-12


def test_errors_carry_codes(store):
    with pytest.raises(ze.ZetaEtaError) as info:
        ze.zeta(1 + 0j)
    assert info.value.code == "PoleAtOne"
    with pytest.raises(ze.ZetaEtaError) as info:
        ze.load_zeros("/nonexistent/zeros.txt")
    assert info.value.code == "IoError"


def test_grid_deterministic():
    g = ze.GridSpec(T=100.0, count=200, seed=5)
    assert ze.sample_grid(g) == ze.sample_grid(g)
    assert g.lo == 100.0 and g.hi == 200.0
