import numpy as np
import pytest

from jetfinsler import JetPoint, MRootStructure, TemporalMetric, sample_nondegenerate_point


def make_custom_entries(seed, x_dependent=False):
    """Random symmetric cubic table entries keyed by 1-based sorted triples."""
    rng = np.random.default_rng(seed)
    entries = {}
    for p in range(1, 5):
        for q in range(p, 5):
            for r in range(q, 5):
                value = rng.uniform(-1.0, 1.0)
                if x_dependent:
                    exps = tuple(1 if m == (p + q + r) % 4 else 0 for m in range(4))
                    entries[(p, q, r)] = {(0, 0, 0, 0): value, exps: 0.2 * rng.uniform(-1, 1)}
                else:
                    entries[(p, q, r)] = value
    return entries


@pytest.fixture(scope="session")
def chernov():
    return MRootStructure.chernov()


@pytest.fixture(scope="session")
def f2():
    return MRootStructure.f2()


@pytest.fixture(scope="session")
def custom_metric():
    return MRootStructure.custom(make_custom_entries(7))


@pytest.fixture(scope="session")
def h_const():
    return TemporalMetric.constant(1.0)


@pytest.fixture(scope="session")
def h_exp():
    return TemporalMetric.exponential(1.0)


@pytest.fixture(scope="session")
def h_poly():
    return TemporalMetric.polynomial([1.0, 0.0, 1.0])


@pytest.fixture(scope="session")
def ones_point():
    return JetPoint(0.0, np.zeros(4), np.ones(4))


@pytest.fixture(scope="session")
def chernov_points(chernov):
    return [sample_nondegenerate_point(100 + i, chernov) for i in range(12)]


@pytest.fixture(scope="session")
def custom_points(custom_metric):
    return [sample_nondegenerate_point(200 + i, custom_metric) for i in range(8)]
