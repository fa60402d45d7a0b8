"""Electromagnetic 2-form and the geometrical Maxwell equations.

For x-independent cubics the 2-form vanishes identically; the demo
evaluates both sides of the Maxwell displays anyway (nothing is assumed
zero) and prints the residuals.
"""
import numpy as np

from jetfinsler import (MRootStructure, TemporalMetric, em_two_form, fundamental_metric,
                        maxwell_auxiliaries, maxwell_residuals,
                        sample_nondegenerate_point, temporal_kappa)

metric = MRootStructure.chernov()
h = TemporalMetric.exponential(1.0)
p = sample_nondegenerate_point(11, metric)

F = em_two_form(metric, h, p)
print("max |F^(1)_(i)j| =", np.abs(F).max())
print("antisymmetry |F + F^T| =", np.abs(F + F.T).max())

aux = maxwell_auxiliaries(metric, h, p)
kappa, _ = temporal_kappa(h, p.t)
h_inv = h.h11_inv(p.t)
g = fundamental_metric(metric, h, p).g_low
print("\nauxiliary tensors against their shortcut forms:")
print("|D - (kappa h^11/2) g| =", np.abs(aux.D - 0.5 * kappa * h_inv * g).max())
print("|d - h^11 g|           =", np.abs(aux.d_small - h_inv * g).max())
print("|Dbar|                 =", np.abs(aux.Dbar).max())

res = maxwell_residuals(metric, h, p)
print("\nMaxwell residuals (temporal, horizontal-cyclic, vertical-cyclic):", res)

# the quadratic preset is trivial across the board
quad = MRootStructure.f2()
q = sample_nondegenerate_point(11, quad)
print("\nquadratic preset: |F| =", np.abs(em_two_form(quad, h, q)).max(),
      " Maxwell residuals =", maxwell_residuals(quad, h, q))
