"""Torsions, curvatures, the vertical Ricci tensor, and the Einstein system.

The whole curvature content sits in the vertical tensor S^l_i(j)(k); the
horizontal and mixed curvatures are kappa-proportional to it, and the
Einstein equations dictate the induced stress-energy blocks.
"""
import numpy as np

from jetfinsler import (MRootStructure, TemporalMetric, cartan_connection,
                        curvature_tensors, einstein_block_residuals, einstein_system,
                        nonlinear_connection, ricci_and_scalar,
                        sample_nondegenerate_point, torsion_census_residuals,
                        torsion_tensors)

metric = MRootStructure.chernov()
h = TemporalMetric.polynomial([1.0, 0.0, 1.0])   # h11 = 1 + t^2
p = sample_nondegenerate_point(3, metric)
print("evaluation point:", p)

cc = cartan_connection(metric, h, p)
nc = nonlinear_connection(metric, h, p)
ts = torsion_tensors(cc, nc, h, p.t)
print("\nR^(k)_(1)1j (temporal torsion) diagonal:", np.diag(ts.R_temporal))
print("identically-vanishing torsion families:",
      {k: f"{v:.2e}" for k, v in torsion_census_residuals(metric, h, p).items()})

cur = curvature_tensors(metric, h, p)
kappa = cc.kappa
print("\n|R_horiz - (kappa^2/4) S_vert| =",
      np.abs(cur.R_horiz - 0.25 * kappa ** 2 * cur.S_vert).max())
print("|P_mixed - (kappa/2) S_vert|   =",
      np.abs(cur.P_mixed_curv - 0.5 * kappa * cur.S_vert).max())

ric = ricci_and_scalar(metric, h, p)
print("\nvertical Ricci (closed form):\n", ric.S_vert_ricci)
print("contraction route agreement:",
      np.abs(ric.S_vert_ricci - ric.S_vert_ricci_contracted).max())
print("scalar curvature:", ric.Sc, " (two-route gap", abs(ric.Sc - ric.Sc_contracted), ")")

es = einstein_system(metric, h, p, K=1.0)
print("\nxi11 =", es.xi11)
print("T11 =", es.T11, " cross-check:", es.T11_direct)
print("block residuals of Ric - (Sc/2) G = K T:",
      {k: f"{v:.2e}" for k, v in einstein_block_residuals(metric, h, p, 1.0).items()})
