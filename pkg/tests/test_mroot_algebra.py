import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from jetfinsler import (DegeneracyError, JetPoint, MRootStructure, contract_cubic,
                        dual_contractions, euler_residuals)

from tests.conftest import make_custom_entries


def ypoint(y):
    return JetPoint(0.0, np.zeros(4), np.asarray(y, dtype=float))


# ----------------------------------------------------------- contractions

def test_contractions_at_ones(chernov, ones_point):
    c = contract_cubic(chernov, ones_point)
    assert c.S111 == pytest.approx(4.0, abs=1e-14)
    assert c.Si11 == pytest.approx([3.0] * 4, abs=1e-14)
    off = c.Sij1[~np.eye(4, dtype=bool)]
    assert np.all(off == 2.0)
    assert np.all(np.diag(c.Sij1) == 0.0)
    assert c.S1_1 == 4.0
    assert c.S4_1111 == 1.0


def test_contractions_at_1234(chernov):
    c = contract_cubic(chernov, ypoint([1, 2, 3, 4]))
    assert c.S111 == pytest.approx(50.0, abs=1e-12)
    assert c.Si11 == pytest.approx([26.0, 19.0, 14.0, 11.0], abs=1e-12)
    assert float(c.Si11 @ np.array([1.0, 2, 3, 4])) == pytest.approx(150.0, abs=1e-12)


def test_cubic_homogeneity(chernov, ones_point):
    c2 = contract_cubic(chernov, ypoint(2.0 * np.ones(4)))
    assert c2.S111 == pytest.approx(32.0, rel=1e-12)


def test_closed_matches_generic(chernov, chernov_points):
    for p in chernov_points:
        a = contract_cubic(chernov, p, path="closed")
        b = contract_cubic(chernov, p, path="generic")
        assert a.S111 == pytest.approx(b.S111, abs=1e-12)
        assert np.abs(a.Si11 - b.Si11).max() < 1e-12
        assert np.abs(a.Sij1 - b.Sij1).max() < 1e-12


def test_closed_path_rejected_for_custom(custom_metric, custom_points):
    with pytest.raises(ValueError):
        contract_cubic(custom_metric, custom_points[0], path="closed")


def test_small_component_uses_stable_fallback(chernov):
    p = ypoint([1e-12, 1.0, 2.0, 3.0])
    a = contract_cubic(chernov, p, path="closed")
    b = contract_cubic(chernov, p, path="generic")
    assert np.isfinite(a.Si11).all()
    assert np.abs(a.Si11 - b.Si11).max() < 1e-10


def test_zero_component_is_finite(chernov):
    p = ypoint([0.0, 1.0, 2.0, 3.0])
    c = contract_cubic(chernov, p, path="closed")
    assert np.isfinite(c.Si11).all()
    d = dual_contractions(chernov, p, path="closed")
    assert np.isfinite(d.Sjk1_up).all()
    assert np.abs(c.Sij1 @ d.Sjk1_up - np.eye(4)).max() < 1e-12


# ------------------------------------------------------------------ duals

def test_dual_at_ones(chernov, ones_point):
    d = dual_contractions(chernov, ones_point)
    assert np.diag(d.Sjk1_up) == pytest.approx([-1 / 3] * 4, abs=1e-14)
    off = d.Sjk1_up[~np.eye(4, dtype=bool)]
    assert off == pytest.approx([1 / 6] * 12, abs=1e-14)
    assert d.D1111 == pytest.approx(-48.0, abs=1e-12)


def test_dual_at_1234(chernov):
    d = dual_contractions(chernov, ypoint([1, 2, 3, 4]))
    assert d.D1111 == pytest.approx(-1616.0, abs=1e-10)


def test_dual_reported_constants(chernov, chernov_points):
    for p in chernov_points:
        c = contract_cubic(chernov, p)
        d = dual_contractions(chernov, p)
        assert np.abs(d.S1_up - 0.5 * p.y).max() < 1e-10
        assert d.boldS111 == pytest.approx(0.5 * c.S111, abs=1e-10)


def test_dual_closed_matches_inversion(chernov, chernov_points):
    for p in chernov_points:
        a = dual_contractions(chernov, p, path="closed")
        b = dual_contractions(chernov, p, path="generic")
        assert np.abs(a.Sjk1_up - b.Sjk1_up).max() < 1e-9
        assert a.D1111 == pytest.approx(b.D1111, rel=1e-9)


def test_dual_inverse_identity(chernov, custom_metric, chernov_points, custom_points):
    for metric, points in ((chernov, chernov_points), (custom_metric, custom_points)):
        for p in points:
            c = contract_cubic(metric, p)
            d = dual_contractions(metric, p)
            assert np.abs(c.Sij1 @ d.Sjk1_up - np.eye(4)).max() < 1e-9


def test_degenerate_dual_raises_with_point(chernov):
    # at y = (1, 1, 1, -1) the second-derivative matrix is singular
    p = ypoint([1.0, 1.0, 1.0, -1.0])
    with pytest.raises(DegeneracyError) as err:
        dual_contractions(chernov, p)
    assert "point" in str(err.value)


def test_quadratic_preset_rejected(f2, ones_point):
    with pytest.raises(DegeneracyError):
        contract_cubic(f2, ones_point)


# ------------------------------------------------------- Euler identities

def test_euler_residuals_at_ones(chernov, ones_point):
    r = euler_residuals(contract_cubic(chernov, ones_point), ones_point)
    assert r.max() < 1e-12


def test_euler_residuals_at_1234(chernov):
    p = ypoint([1, 2, 3, 4])
    r = euler_residuals(contract_cubic(chernov, p), p)
    assert r.max() < 1e-10


def test_pair_product_identity(chernov, chernov_points):
    for p in chernov_points:
        c = contract_cubic(chernov, p)
        y = p.y
        for i in range(4):
            for j in range(4):
                if i == j:
                    continue
                rhs = c.S111 * (c.S1_1 - y[i] - y[j]) + c.S4_1111 ** 2 / (y[i] ** 2 * y[j] ** 2)
                assert c.Si11[i] * c.Si11[j] == pytest.approx(rhs, abs=1e-9)


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(0, 10 ** 6),
       y=st.lists(st.floats(-2, 2, allow_nan=False), min_size=4, max_size=4))
def test_euler_identity_holds_for_any_symmetric_cubic(seed, y):
    metric = MRootStructure.custom(make_custom_entries(seed))
    p = ypoint(y)
    c = contract_cubic(metric, p)
    assume(abs(c.S111) > 1e-3)
    assert euler_residuals(c, p).max() < 1e-9


@settings(max_examples=25, deadline=None)
@given(lam=st.floats(0.1, 3.0, allow_nan=False))
def test_three_homogeneity(chernov, lam):
    base = ypoint([1.0, -0.7, 1.3, 0.9])
    scaled = ypoint(lam * base.y)
    s0 = contract_cubic(chernov, base).S111
    s1 = contract_cubic(chernov, scaled).S111
    assert s1 == pytest.approx(lam ** 3 * s0, rel=1e-11)
