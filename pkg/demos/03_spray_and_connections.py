"""Canonical spray, nonlinear connection, and the Cartan connection.

For every x-independent cubic the spatial spray collapses to
G = -(kappa/2) y and the nonlinear connection to N = -(kappa/2) I; the
vertical Cartan coefficients C carry all of the anisotropy.
"""
import numpy as np

from jetfinsler import (JetPoint, MRootStructure, TemporalMetric, adapted_derivative,
                        canonical_spray, cartan_connection, contract_cubic,
                        nonlinear_connection)

metric = MRootStructure.chernov()
h = TemporalMetric.exponential(1.0)   # kappa = 1 at every t
p = JetPoint(0.0, np.zeros(4), np.array([1.0, 2.0, 3.0, 4.0]))

sp = canonical_spray(metric, h, p)
print("H =", sp.H)
print("G =", sp.G, " (equals -(kappa/2) y)")

nc = nonlinear_connection(metric, h, p)
print("M =", nc.M)
print("N =\n", nc.N)

# adapted derivative along delta/delta x^1 of the cubic scalar: the
# connection converts the x-derivative into (kappa/2) d/dy^1
ones = JetPoint(0.0, np.zeros(4), np.ones(4))
nc1 = nonlinear_connection(metric, h, ones)
val = adapted_derivative(lambda q: contract_cubic(metric, q).S111,
                         ones, ("x", 0), nc1, h)
print("\ndelta S111 / delta x^1 at the unit point =", val, " (= kappa/2 * 3)")

cc = cartan_connection(metric, h, ones)
print("\nCartan C at the unit point, distinct / two-equal / all-equal:")
print(cc.C[0, 1, 2], cc.C[0, 0, 1], cc.C[0, 0, 0])
print("trace identity |C^i_j(m) y^m| =",
      np.abs(np.einsum('ijm,m->ij', cc.C, ones.y)).max())
print("L = (kappa/2) C  ->  |L - (kappa/2) C| =",
      np.abs(cc.L - 0.5 * cc.kappa * cc.C).max())
print("temporal coefficients G^k_j1 are identically zero:", np.abs(cc.Gk_j1).max())
