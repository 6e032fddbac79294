import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grnorms import analytics as an
from grnorms import solvers
from grnorms.errors import DomainError

SQRT2 = math.sqrt(2.0)
CARDANO = (3 + 2 * SQRT2) ** (1 / 3) + (3 - 2 * SQRT2) ** (1 / 3) - 2


def _eta1_g(alpha, eta):
    return eta**alpha * (1 + alpha * (eta + 1)) - 1


@pytest.mark.parametrize(
    "alpha, expected", [(1.0, SQRT2 - 1), (-0.5, 3 - 2 * SQRT2), (0.5, CARDANO)]
)
def test_eta1_closed_roots(alpha, expected):
    res = solvers.solve_eta1(alpha)
    assert res.root == pytest.approx(expected, abs=1e-12)
    assert abs(res.residual) <= 1e-13
    lo, hi = res.bracket
    assert hi - lo <= 1e-13 * max(1.0, res.root)
    assert _eta1_g(alpha, lo) * _eta1_g(alpha, hi) <= 0


@settings(max_examples=150, deadline=None)
@given(st.one_of(st.floats(-0.95, -1e-4), st.floats(1e-4, 10.0)))
def test_eta1_is_fixed_point_of_mean(alpha):
    e1 = solvers.solve_eta1(alpha).root
    assert 0 < e1 < 1
    assert an.mean_value_power(alpha, e1) ** (1 / alpha) == pytest.approx(e1, abs=1e-11)


@pytest.mark.parametrize("alpha, expected, tol", [(1.0, 0.2531, 5e-5), (-0.5, 0.0640, 5e-5), (0.5, 0.200, 5e-4)])
def test_eta_max_values(alpha, expected, tol):
    assert solvers.solve_eta_max(alpha).root == pytest.approx(expected, abs=tol)


@pytest.mark.parametrize("alpha", [-0.8696, -0.5, -0.1, 1e-4, 0.2, 0.5, 1.0, 2.0, 6.6667])
def test_eta_max_is_grid_maximum(alpha):
    e1 = solvers.solve_eta1(alpha).root
    r = solvers.solve_eta_max(alpha, e1)
    assert 0 < r.root < e1
    grid = np.linspace(0, e1, 10_000)
    assert an.psi0(alpha, r.root).value >= an.psi0(alpha, grid).value.max() - 1e-12


@pytest.mark.parametrize("alpha", [-0.8696, -0.5, 0.2, 0.5, 1.0, 2.0, 5.0])
def test_stationarity(alpha):
    r = solvers.solve_eta_max(alpha)
    e1 = solvers.solve_eta1(alpha).root
    scale = max(1.0, abs(an.dpsi0_deta(alpha, e1)))
    assert abs(an.dpsi0_deta(alpha, r.root)) <= 1e-9 * scale


def test_eta_max_high_precision_small_alpha():
    mp.mp.dps = 50
    a = mp.mpf(1) / 9998

    def psi0(e):
        return (1 + e ** (a + 1)) ** (1 / a) / (1 + e) ** ((a + 1) / a) + (a + 1) ** ((a + 1) / a) / a * (
            1 / (1 + e ** (a + 1)) - 1 / (1 + e)
        )

    root = mp.findroot(lambda e: mp.diff(psi0, e), 0.137)
    r = solvers.norm_realline(1 / 9998)
    assert r.eta_max == pytest.approx(float(root), abs=1e-12)
    assert r.ratio == pytest.approx(float(psi0(root)), rel=1e-12)


def test_quintic():
    assert solvers.quintic_check(0) == 1
    assert solvers.quintic_check(1) == -16
    assert abs(solvers.quintic_check(solvers.solve_eta_max(1).root)) <= 1e-10


def test_norm_realline_p2():
    r = solvers.norm_realline(1.0)
    assert r.eps_halfline == pytest.approx(0.5, abs=5e-5)
    assert r.eps_realline == pytest.approx(0.6224, abs=5e-5)
    assert r.ratio == pytest.approx(1.244737, abs=2e-6)
    assert 1 <= r.ratio <= 2 and 0 < r.eta_max < r.eta1 < 1


def test_norm_realline_p3():
    r = solvers.norm_realline(0.5)
    assert r.eps_halfline == pytest.approx(0.2963, abs=5e-5)
    assert r.eps_realline == pytest.approx(0.3726, abs=5e-5)
    assert r.ratio == pytest.approx(1.257683, abs=2e-6)


@pytest.mark.parametrize("p", [1.15, 1.5, 2.0, 3.0, 6.0, 101.0])
def test_dual_exponents_share_norm(p):
    a = solvers.norm_realline(1 / (p - 1))
    b = solvers.norm_realline(-1 / p)
    assert a.eps_realline == pytest.approx(b.eps_realline, rel=1e-10)
    assert b.eta_max == pytest.approx(a.eta_max ** (p / (p - 1)), abs=1e-8)


@pytest.mark.parametrize("eps, p", [(0.5, 2.0), (8 / 27, 3.0)])
def test_limiting_exponent(eps, p):
    e = solvers.limiting_exponent(eps)
    assert e.p == pytest.approx(p, rel=1e-12)
    assert abs(e.residual) <= 1e-12
    assert e.p_minus == pytest.approx(1 - p)


def test_limiting_exponent_near_two():
    assert 1 < solvers.limiting_exponent(1.999999).p < 1.01


@pytest.mark.parametrize("eps", [0.0, 2.0, -1.0, 3.0])
def test_limiting_exponent_domain(eps):
    with pytest.raises(DomainError):
        solvers.limiting_exponent(eps)


@settings(max_examples=100, deadline=None)
@given(st.floats(1e-7, 1.99))
def test_limiting_exponent_inverts_halfline_norm(eps):
    p = solvers.limiting_exponent(eps).p
    assert an.norm_halfline_p(p) == pytest.approx(eps, rel=1e-9)


def test_sweep_values_and_determinism():
    out = solvers.extension_factor_sweep([0.5, 0.5, 1e-4])
    assert out[0] == out[1]
    assert out[0].c_eps == pytest.approx(1.244737, abs=2e-6)
    assert out[2].c_eps == pytest.approx(1.264797, abs=5e-6)
    assert out[2].running_sup == max(p.c_eps for p in out)


def test_sweep_monotone_in_table_order():
    eps = [an.norm_halfline_p(p) for p in (1.15, 1.2, 1.33, 1.5, 1.67, 2, 3, 6, 11, 21, 101, 1001, 9999)]
    c = [pt.c_eps for pt in solvers.extension_factor_sweep(eps)]
    assert all(b >= a - 1e-9 for a, b in zip(c, c[1:]))
    assert all(1 <= x <= 2 for x in c)


def test_limit_constant():
    assert solvers.limit_constant() == pytest.approx(1.264797, abs=5e-6)
