import cmath
import math
import time

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from contact_bethe.contact_params import INF, AntiDelta, Delta, NonSeparatedParams, Separated
from contact_bethe.errors import DomainError, PoleError
from contact_bethe.spinspace import SpinSystem
from contact_bethe.ybe import (
    GridSpec,
    classification_scan,
    commute_residual,
    inverse_residual,
    predicted_integrable,
    sample_momenta,
    scan_to_csv,
    scan_to_json,
    separated_scan,
    ybe_residual,
)

MOMENTA = (0.3, 1.1, 2.9)


def test_delta_passes():
    r = ybe_residual(Delta(1.7), MOMENTA, SpinSystem(3, 2))
    assert r.max_residual <= 1e-12 and r.verdict


def test_separated_passes():
    r = ybe_residual(Separated(-0.6), MOMENTA, SpinSystem(3, 2))
    assert r.max_residual <= 1e-12


def test_nonzero_b_fails():
    r = ybe_residual(NonSeparatedParams(0, 1, 0.5, 0, 1), MOMENTA, SpinSystem(3, 2))
    assert r.residual_ybe1 > 1e-3 and not r.verdict


def test_input_validation():
    with pytest.raises(DomainError):
        ybe_residual(Delta(1), (0.1, 0.2), SpinSystem(3, 2))
    with pytest.raises(DomainError):
        ybe_residual(Delta(1), (0.1, 0.1, 0.2), SpinSystem(3, 2))
    with pytest.raises(DomainError):
        inverse_residual(Delta(1), 0.5, 0.5, SpinSystem(2, 2))


def test_pole_is_reported():
    # k_i - k_j = 0 is excluded, so hit the delta pole i*kd = c with complex momenta
    with pytest.raises(PoleError):
        ybe_residual(Delta(2.0), (0.0, 2j, 5.0), SpinSystem(3, 1))


def _swap_eigen_inverse_residual(p: NonSeparatedParams, kd: float) -> float:
    """Scalar oracle: Y is diagonal on the +-1 eigenspaces of the statistics swap."""
    def lam(kdiff, sign):
        k = kdiff / 2
        num = 2j * cmath.exp(1j * p.theta) * k * sign + 1j * k * (p.a - p.d) + k * k * p.b + p.c
        den = 1j * k * (p.a + p.d) + k * k * p.b - p.c
        return num / den
    return max(abs(lam(kd, s) * lam(-kd, s) - 1) for s in (1, -1))


def _random_params(rng, theta_zero=False, a_eq_d=False):
    theta = 0.0 if theta_zero else rng.uniform(-math.pi, math.pi)
    a = rng.choice([-1, 1]) * rng.uniform(0.3, 3)
    if a_eq_d:
        # a^2 - bc = 1 with free b
        b = rng.uniform(-2, 2)
        if abs(b) < 0.1:
            b = 0.5
        c = (a * a - 1) / b
        return NonSeparatedParams(theta, a, b, c, a)
    b, c = rng.uniform(-3, 3, 2)
    return NonSeparatedParams(theta, a, b, c, (1 + b * c) / a)


def test_inverse_residual_matches_scalar_oracle(rng):
    sy = SpinSystem(2, 2)
    for _ in range(100):
        p = _random_params(rng)
        ki, kj = rng.uniform(-4, 4, 2)
        if abs(ki - kj) < 0.1:
            continue
        assert inverse_residual(p, ki, kj, sy) == pytest.approx(_swap_eigen_inverse_residual(p, ki - kj), abs=1e-10)


def test_inverse_relation_holds_exactly_on_theta_zero_a_equal_d(rng):
    # includes b != 0, where the three-site relation still fails
    sy = SpinSystem(2, 2, "fermion")
    for _ in range(50):
        p = _random_params(rng, theta_zero=True, a_eq_d=True)
        ki, kj = rng.uniform(-4, 4, 2)
        assert inverse_residual(p, ki, kj, sy) <= 1e-12


def test_inverse_relation_breaks_off_that_line():
    p = NonSeparatedParams(0.4, 2, 1, 1, 1)
    r = inverse_residual(p, 0.3, 1.1, SpinSystem(2, 2))
    assert r > 0.1
    assert r == pytest.approx(_swap_eigen_inverse_residual(p, -0.8), rel=1e-10)


@settings(max_examples=60, deadline=None)
@given(st.floats(-5, 5), st.floats(-5, 5), st.floats(-5, 5), st.floats(-5, 5))
def test_integrable_families_satisfy_both_relations(c, k1, k2, k3):
    ks = (k1, k2, k3)
    if min(abs(k1 - k2), abs(k1 - k3), abs(k2 - k3)) < 1e-2:
        return
    for fam in (Delta(c), AntiDelta(c), Separated(c), Separated(INF)):
        for stats in ("boson", "fermion"):
            r = ybe_residual(fam, ks, SpinSystem(3, 2, stats))
            assert r.max_residual <= 1e-10


def test_commute():
    sy = SpinSystem(4, 2)
    assert commute_residual(Delta(1), (0.1, 0.7, 1.9, 3.1), sy) <= 1e-12
    assert commute_residual(NonSeparatedParams(0.4, 2, 1, 1, 1), (0.1, 0.7, 1.9, 3.1), sy) <= 1e-12
    assert commute_residual(NonSeparatedParams(0.4, 2, 1, 1, 1), (0.1, 0.7, 1.9, 3.1), SpinSystem(4, 1)) == 0.0
    with pytest.raises(DomainError):
        commute_residual(Delta(1), (0.1, 0.7, 1.9), SpinSystem(3, 2))
    r = ybe_residual(Delta(1), MOMENTA, SpinSystem(3, 2), with_commute=True)
    assert r.residual_commute is not None and r.residual_commute <= 1e-12


def test_sample_momenta_respects_gaps(rng):
    k, tries = sample_momenta(rng, Delta(0.0), 3)
    assert tries >= 0
    assert min(abs(k[0] - k[1]), abs(k[0] - k[2]), abs(k[1] - k[2])) >= 0.1


def test_default_scan_reproduces_classification():
    t0 = time.perf_counter()
    result = classification_scan()
    elapsed = time.perf_counter() - t0
    assert len(result.rows) == 108
    pass_points = {(r.theta, r.a, r.b, r.d) for r in result.pass_set}
    assert pass_points == {(0.0, a, 0.0, a) for a in (1.0, -1.0)}
    assert len(result.pass_set) == 6
    assert result.matches_prediction()
    assert min(r.max_residual for r in result.rows if not r.verdict) > 1e-6
    assert elapsed < 10


def test_scan_single_points():
    assert classification_scan([NonSeparatedParams(0, 1, 0, 3, 1)]).rows[0].verdict
    assert not classification_scan([NonSeparatedParams(0.1, 1, 0, 1, 1)]).rows[0].verdict
    with pytest.raises(DomainError):
        classification_scan([])


def test_scan_is_order_independent_and_reproducible():
    pts = GridSpec(thetas=(0.0, 0.5), a_values=(1.0, 2.0), b_values=(0.0,), c_values=(0.0, 2.0)).points()
    r1 = classification_scan(pts, seed=3)
    r2 = classification_scan(list(reversed(pts)), seed=3)
    assert scan_to_csv(r1) == scan_to_csv(r2)
    assert scan_to_json(r1) == scan_to_json(r2)


def test_predicted_integrable():
    assert predicted_integrable(NonSeparatedParams(0, -1, 0, 2, -1))
    assert not predicted_integrable(NonSeparatedParams(0, 2, 0, 0, 0.5))


def test_grid_with_a_zero_uses_d_values():
    g = GridSpec(thetas=(0.0,), a_values=(0.0,), b_values=(1.0, 2.0), c_values=(-1.0,), d_values_for_a0=(0.0, 3.0))
    pts = g.points()
    assert len(pts) == 2 and all(p.b == 1.0 for p in pts)


def test_csv_layout():
    csv_text = scan_to_csv(classification_scan([NonSeparatedParams(0, 1, 0, 3, 1)]))
    header, row = csv_text.strip().split("\n")
    assert header == "theta,a,b,c,d,max_residual,verdict"
    assert row.endswith(",pass")


@pytest.mark.parametrize("n", [1, 2])
def test_separated_scan_all_pass(n):
    hs = list(np.linspace(-3, 3, 13)) + [INF]
    rows = separated_scan(hs, SpinSystem(3, n))
    assert all(r.verdict for r in rows)
    with pytest.raises(DomainError):
        separated_scan([])
