import numpy as np
import pytest

from jetfinsler import (JetPoint, em_two_form, fundamental_metric, maxwell_auxiliaries,
                        maxwell_residuals, temporal_kappa)


def test_two_form_vanishes_for_chernov(chernov, h_exp, chernov_points):
    for p in chernov_points:
        assert np.abs(em_two_form(chernov, h_exp, p)).max() < 1e-10


def test_two_form_vanishes_for_quadratic(f2, h_exp, ones_point):
    assert np.abs(em_two_form(f2, h_exp, ones_point)).max() == 0.0


def test_two_form_antisymmetry(chernov, custom_metric, h_exp, chernov_points, custom_points):
    for metric, points in ((chernov, chernov_points), (custom_metric, custom_points)):
        for p in points[:5]:
            F = em_two_form(metric, h_exp, p)
            assert np.abs(F + F.T).max() < 1e-12


def test_auxiliaries_at_unit_time_scale(chernov, h_exp, ones_point):
    # kappa = 1 and h11 = 1 at t = 0, so d = g, D = g/2, Dbar = 0
    g = fundamental_metric(chernov, h_exp, ones_point).g_low
    aux = maxwell_auxiliaries(chernov, h_exp, ones_point)
    assert np.abs(aux.d_small - g).max() < 1e-9
    assert np.abs(aux.D - 0.5 * g).max() < 1e-9
    assert np.abs(aux.Dbar).max() < 1e-9


def test_auxiliaries_with_constant_h(chernov, h_const, chernov_points):
    for p in chernov_points[:4]:
        g = fundamental_metric(chernov, h_const, p).g_low
        aux = maxwell_auxiliaries(chernov, h_const, p)
        assert np.abs(aux.D).max() < 1e-9
        assert np.abs(aux.Dbar).max() < 1e-9
        assert np.abs(aux.d_small - g).max() < 1e-9


def test_auxiliary_shortcuts_over_samples(chernov, h_exp, chernov_points):
    for p in chernov_points:
        kappa, _ = temporal_kappa(h_exp, p.t)
        h_inv = h_exp.h11_inv(p.t)
        g = fundamental_metric(chernov, h_exp, p).g_low
        aux = maxwell_auxiliaries(chernov, h_exp, p)
        assert np.abs(aux.D - 0.5 * kappa * h_inv * g).max() < 1e-9
        assert np.abs(aux.d_small - h_inv * g).max() < 1e-9


def test_covariant_derivatives_of_vanishing_form(chernov, h_exp, chernov_points):
    for p in chernov_points[:4]:
        aux = maxwell_auxiliaries(chernov, h_exp, p)
        assert np.abs(aux.F_slash1).max() < 1e-9
        assert np.abs(aux.F_bar).max() < 1e-9
        assert np.abs(aux.F_vert).max() < 1e-9


def test_maxwell_residuals_chernov(chernov, h_exp, chernov_points):
    for p in chernov_points:
        assert maxwell_residuals(chernov, h_exp, p).max() < 1e-8


def test_maxwell_residuals_quadratic(f2, h_exp, ones_point):
    assert maxwell_residuals(f2, h_exp, ones_point).max() == 0.0


def test_maxwell_residuals_custom(custom_metric, h_exp, custom_points):
    for p in custom_points[:4]:
        assert maxwell_residuals(custom_metric, h_exp, p).max() < 1e-6


def test_cyclic_vertical_equation(chernov, h_exp, chernov_points):
    from jetfinsler.electromag import _cyclic
    for p in chernov_points[:4]:
        aux = maxwell_auxiliaries(chernov, h_exp, p)
        assert np.abs(_cyclic(aux.F_vert)).max() < 1e-8
