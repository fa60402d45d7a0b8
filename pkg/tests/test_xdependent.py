"""Integration coverage for x-dependent custom cubics.

These metrics leave the locally-Minkowski regime: the full spatial spray
formula is active, L picks up delta/delta x contributions beyond
(kappa/2) C, and the electromagnetic 2-form need not vanish.
"""

import numpy as np
import pytest

from jetfinsler import (MRootStructure, TemporalMetric, cartan_connection,
                        canonical_spray, em_two_form, nonlinear_connection,
                        ricci_and_scalar, sample_nondegenerate_point)

from tests.conftest import make_custom_entries


@pytest.fixture(scope="module")
def bent_metric():
    return MRootStructure.custom(make_custom_entries(11, x_dependent=True))


@pytest.fixture(scope="module")
def bent_point(bent_metric):
    return sample_nondegenerate_point(8, bent_metric)


@pytest.fixture(scope="module")
def h():
    return TemporalMetric.exponential(0.5)


def test_spray_uses_general_formula(bent_metric, h, bent_point):
    kappa = 0.5
    general = canonical_spray(bent_metric, h, bent_point, path="general")
    reduction = canonical_spray(bent_metric, h, bent_point, path="reduction")
    # the x-gradient terms genuinely contribute
    assert np.abs(general.G - reduction.G).max() > 1e-4
    assert np.array_equal(general.H, -0.5 * kappa * bent_point.y)


def test_nlc_still_differentiates_the_spray(bent_metric, h, bent_point):
    nc = nonlinear_connection(bent_metric, h, bent_point)
    s = 1e-6
    v = np.array([1.0, -1.0, 0.5, 0.25])
    v /= np.linalg.norm(v)
    Gp = canonical_spray(bent_metric, h, bent_point.replace(y=bent_point.y + s * v)).G
    Gm = canonical_spray(bent_metric, h, bent_point.replace(y=bent_point.y - s * v)).G
    assert np.abs((Gp - Gm) / (2 * s) - nc.N @ v).max() < 1e-6


def test_cartan_L_leaves_proportional_form(bent_metric, h, bent_point):
    cc = cartan_connection(bent_metric, h, bent_point)
    assert np.isfinite(cc.L).all()
    assert np.abs(cc.L - 0.5 * cc.kappa * cc.C).max() > 1e-3
    # L stays symmetric in its two lower indices
    assert np.abs(cc.L - cc.L.transpose(0, 2, 1)).max() < 1e-9


def test_ricci_closed_form_still_matches_contraction(bent_metric, h, bent_point):
    r = ricci_and_scalar(bent_metric, h, bent_point)
    assert np.abs(r.S_vert_ricci - r.S_vert_ricci_contracted).max() < 1e-6


def test_em_two_form_can_be_nonzero_but_antisymmetric(bent_metric, h, bent_point):
    F = em_two_form(bent_metric, h, bent_point)
    assert np.abs(F).max() > 1e-4
    assert np.abs(F + F.T).max() < 1e-12
