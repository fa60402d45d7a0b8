"""Temporal metric families and the cubic contraction layer.

Walks through the three closed-form h11(t) families, their Christoffel
scalar, and the contractions of the cubic coefficient structure together
with the homogeneity identities they satisfy.
"""
import numpy as np

from jetfinsler import (JetPoint, MRootStructure, TemporalMetric, contract_cubic,
                        dual_contractions, euler_residuals, temporal_kappa)

# --- temporal metrics: constant, exponential, polynomial -----------------
for h in (TemporalMetric.constant(2.0),
          TemporalMetric.exponential(0.8),
          TemporalMetric.polynomial([1.0, 0.0, 1.0])):
    kappa, dkappa = temporal_kappa(h, 0.5)
    print(f"h = {h.describe():<12} kappa(0.5) = {kappa:+.6f}  dkappa/dt = {dkappa:+.6f}")

# --- cubic contractions at a simple point ---------------------------------
metric = MRootStructure.chernov()
p = JetPoint(0.0, np.zeros(4), np.array([1.0, 2.0, 3.0, 4.0]))
c = contract_cubic(metric, p)
print("\nS111 =", c.S111)                  # 50 = sum of the four triple products
print("Si11 =", c.Si11)                    # gradient of S111, here (26, 19, 14, 11)
print("Sij1 =\n", c.Sij1)                  # Hessian of S111: S1 - y^i - y^j off-diagonal

# the three Euler identities of 3-homogeneity hold to machine precision
print("Euler residuals:", euler_residuals(c, p))

# --- dual contractions ----------------------------------------------------
d = dual_contractions(metric, p)
print("\nD1111 =", d.D1111)                # 4 (4 S4 - S1 S111) = -1616 here
print("|Sij1 @ S^jk1 - I| =", np.abs(c.Sij1 @ d.Sjk1_up - np.eye(4)).max())
print("S1^j  =", d.S1_up, " (= y/2)")
print("boldS111 =", d.boldS111, " (= S111/2)")
