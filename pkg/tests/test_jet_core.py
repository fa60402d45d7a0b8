import itertools
import math

import numpy as np
import pytest

from jetfinsler import (DTensor, DomainError, JetPoint, MetricFileError, MRootStructure,
                        TemporalMetric, contract_cubic, sample_nondegenerate_point,
                        temporal_kappa)
from jetfinsler.jet_core import DEFAULT_FLOOR


# ---------------------------------------------------------------- JetPoint

def test_jet_point_rejects_nonfinite():
    with pytest.raises(ValueError):
        JetPoint(float("nan"), np.zeros(4), np.ones(4))
    with pytest.raises(ValueError):
        JetPoint(0.0, np.array([1.0, np.inf, 0, 0]), np.ones(4))


def test_jet_point_shape_check():
    with pytest.raises(ValueError):
        JetPoint(0.0, np.zeros(3), np.ones(4))


def test_jet_point_arrays_are_read_only(ones_point):
    with pytest.raises(ValueError):
        ones_point.y[0] = 2.0


# ---------------------------------------------------------- temporal metric

def test_kappa_constant():
    h = TemporalMetric.constant(1.0)
    assert temporal_kappa(h, 0.0) == (0.0, 0.0)


def test_kappa_exponential():
    h = TemporalMetric.exponential(1.0)
    kappa, dkappa = temporal_kappa(h, 0.7)
    assert kappa == pytest.approx(1.0, abs=1e-15)
    assert dkappa == 0.0


def test_kappa_polynomial():
    h = TemporalMetric.polynomial([1.0, 0.0, 1.0])  # 1 + t^2
    kappa, dkappa = temporal_kappa(h, 1.0)
    assert kappa == pytest.approx(0.5, abs=1e-15)
    assert dkappa == pytest.approx(0.0, abs=1e-15)


@pytest.mark.parametrize("h, ts", [
    (TemporalMetric.constant(2.0), [-1.0, 0.3, 1.0]),
    (TemporalMetric.exponential(0.8), [-1.0, 0.0, 0.6]),
    (TemporalMetric.polynomial([2.0, 0.5, 1.0]), [-0.5, 0.0, 0.9]),
])
def test_kappa_matches_finite_difference_of_log(h, ts):
    step = 1e-5
    for t in ts:
        kappa, dkappa = temporal_kappa(h, t)
        # kappa = (1/2) d(log h11)/dt, so halve the central difference
        fd = (math.log(h.h11(t + step)) - math.log(h.h11(t - step))) / (4.0 * step)
        assert kappa == pytest.approx(fd, abs=1e-8)
        fd2 = (temporal_kappa(h, t + step)[0] - temporal_kappa(h, t - step)[0]) / (2 * step)
        assert dkappa == pytest.approx(fd2, abs=1e-7)


def test_nonpositive_temporal_metric_raises():
    with pytest.raises(DomainError):
        TemporalMetric.constant(-1.0)
    h = TemporalMetric.polynomial([-1.0, 0.0, 1.0])  # t^2 - 1 < 0 near 0
    with pytest.raises(DomainError):
        h.h11(0.0)
    with pytest.raises(DomainError):
        temporal_kappa(h, 0.5)


# ----------------------------------------------------------- cubic tables

def test_chernov_table_values(chernov):
    T = chernov.coefficient_table()
    for p, q, r in itertools.product(range(4), repeat=3):
        expected = 1.0 / 6.0 if len({p, q, r}) == 3 else 0.0
        assert T[p, q, r] == expected


def test_custom_table_symmetric_readback():
    m = MRootStructure.custom({(1, 1, 2): 0.5, (2, 3, 4): -0.25})
    T = m.coefficient_table()
    for perm in itertools.permutations((0, 0, 1)):
        assert T[perm] == 0.5
    for perm in itertools.permutations((1, 2, 3)):
        assert T[perm] == -0.25
    assert T[0, 0, 0] == 0.0


def test_custom_rejects_bad_indices():
    with pytest.raises(MetricFileError):
        MRootStructure.custom({(2, 1, 3): 1.0})
    with pytest.raises(MetricFileError):
        MRootStructure.custom({(0, 1, 2): 1.0})


def test_custom_file_round_trip(tmp_path):
    path = tmp_path / "table.cubic"
    path.write_text("# comment line\n1 1 2 0.5\n\n2 3 4 -0.25  # trailing comment\n")
    m = MRootStructure.from_file(path)
    T = m.coefficient_table()
    assert T[0, 0, 1] == 0.5
    assert T[3, 2, 1] == -0.25


@pytest.mark.parametrize("content", [
    "1 1 2 0.5\n1 1 2 0.25\n",    # duplicate triple
    "2 1 3 1.0\n",                # violates p <= q <= r
    "1 2 5 1.0\n",                # index out of range
    "1 2 3\n",                    # missing value
    "1 2 3 abc\n",                # bad float
])
def test_custom_file_errors(tmp_path, content):
    path = tmp_path / "bad.cubic"
    path.write_text(content)
    with pytest.raises(MetricFileError):
        MRootStructure.from_file(path)


def test_x_dependent_gradient_matches_fd():
    from tests.conftest import make_custom_entries
    m = MRootStructure.custom(make_custom_entries(3, x_dependent=True))
    assert m.x_dependent
    rng = np.random.default_rng(0)
    x = rng.uniform(-1, 1, 4)
    grad = m.x_gradient_table(x)
    step = 1e-6
    for axis in range(4):
        e = np.zeros(4)
        e[axis] = step
        fd = (m.coefficient_table(x + e) - m.coefficient_table(x - e)) / (2 * step)
        assert np.abs(grad[axis] - fd).max() < 1e-8


def test_constant_table_has_zero_gradient(custom_metric):
    assert not custom_metric.x_dependent
    assert np.all(custom_metric.x_gradient_table(np.zeros(4)) == 0.0)


# --------------------------------------------------------------- sampling

def test_sampler_is_deterministic(chernov):
    a = sample_nondegenerate_point(42, chernov)
    b = sample_nondegenerate_point(42, chernov)
    assert a.t == b.t
    assert np.array_equal(a.x, b.x)
    assert np.array_equal(a.y, b.y)


def test_sampler_respects_floor(chernov):
    for seed in range(1000):
        p = sample_nondegenerate_point(seed, chernov)
        c = contract_cubic(chernov, p)
        assert abs(c.S111) > DEFAULT_FLOOR
        assert abs(np.linalg.det(c.Sij1)) > DEFAULT_FLOOR


def test_sampler_stays_in_box(chernov):
    for seed in range(100):
        p = sample_nondegenerate_point(seed, chernov)
        assert -1.0 <= p.t <= 1.0
        assert np.all(np.abs(p.x) <= 1.0)
        assert np.all(np.abs(p.y) <= 2.0)


def test_sampler_produces_distinct_points(chernov):
    points = {tuple(sample_nondegenerate_point(s, chernov).y) for s in range(1, 101)}
    assert len(points) >= 95


def test_sampler_accepts_quadratic_preset(f2):
    p = sample_nondegenerate_point(5, f2)
    assert np.all(np.abs(p.y) <= 2.0)


def test_sampler_budget_exhaustion_raises():
    from jetfinsler import SamplingError
    hopeless = MRootStructure.custom({(1, 1, 1): 0.0})  # S111 vanishes identically
    with pytest.raises(SamplingError):
        sample_nondegenerate_point(0, hopeless)


# ---------------------------------------------------------------- DTensor

def test_dtensor_shape_validation():
    with pytest.raises(ValueError):
        DTensor(np.zeros((4, 3)), slots=("xl", "xl"))
    with pytest.raises(ValueError):
        DTensor(np.zeros((4, 4)), slots=("xl",))
    with pytest.raises(ValueError):
        DTensor(np.zeros(4), slots=("bogus",))


def test_dtensor_temporal_slots_add_no_axis():
    d = DTensor(np.zeros((4, 4)), slots=("t", "xl", "xl"))
    assert d.values.shape == (4, 4)


def test_dtensor_enforces_declared_symmetry():
    sym_values = np.arange(16.0).reshape(4, 4)
    sym_values = sym_values + sym_values.T
    d = DTensor(sym_values, slots=("xl", "xl"), sym=((0, 1),))
    assert np.array_equal(d.values, d.values.T)
    with pytest.raises(ValueError):
        DTensor(np.arange(16.0).reshape(4, 4), slots=("xl", "xl"), sym=((0, 1),))


def test_dtensor_payload_round_trip():
    d = DTensor(np.eye(4), slots=("xu", "xl"))
    payload = d.to_payload()
    assert payload["slots"] == ["xu", "xl"]
    assert payload["values"][2][2] == 1.0
