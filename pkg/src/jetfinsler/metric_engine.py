"""Finsler function, fundamental metric tensor, its inverse, and the
definitional second-derivative oracle.

The cubic kinds use the signed real cube root, so F is defined on both
sheets S111 != 0 and every rational power of S111 is sign-aware (computed
from cbrt(S111)).  The quadratic preset is served entirely by its constant
closed forms and never enters the cubic pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegeneracyError, OracleError, SingularMetricError
from .jet_core import DIM, JetPoint, MRootStructure, TemporalMetric
from .mroot_algebra import CubicContractions, contract_cubic, dual_contractions

_EPS = float(np.finfo(float).eps)

#: per-axis FD step factor for second differences (Hessian oracle)
HESSIAN_STEP = _EPS ** 0.25

#: constant quadratic-preset metric and its inverse
F2_G_LOW = 0.5 * (np.ones((DIM, DIM)) - np.eye(DIM))
F2_G_UP = (2.0 / 3.0) * (np.ones((DIM, DIM)) - 3.0 * np.eye(DIM))
F2_G_LOW.setflags(write=False)
F2_G_UP.setflags(write=False)


@dataclass(frozen=True)
class FundamentalMetric:
    g_low: np.ndarray
    g_up: np.ndarray
    F_value: float
    F_squared: float


def _quadratic_form(y: np.ndarray) -> float:
    # sum_{i<j} y^i y^j
    s = float(y.sum())
    return 0.5 * (s * s - float(y @ y))


def _gate_cubic(metric: MRootStructure, p: JetPoint, S111: float):
    if abs(S111) <= metric.floor:
        raise DegeneracyError(f"|S111| = {abs(S111):.3g} <= floor {metric.floor:g}", p)


def finsler_squared(metric: MRootStructure, h: TemporalMetric, p: JetPoint) -> float:
    """F^2 without the domain gate on F itself (used by the FD oracle)."""
    h_inv = h.h11_inv(p.t)
    if metric.kind == "f2":
        return _quadratic_form(p.y) * h_inv
    c = contract_cubic(metric, p)
    _gate_cubic(metric, p, c.S111)
    return float(np.cbrt(c.S111) ** 2) * h_inv


def finsler_value(metric: MRootStructure, h: TemporalMetric, p: JetPoint) -> tuple[float, float]:
    """(F, F^2); F uses the signed real cube root for cubic kinds."""
    h_inv = h.h11_inv(p.t)
    if metric.kind == "f2":
        F2 = _quadratic_form(p.y) * h_inv
        if F2 < 0:
            raise DegeneracyError("quadratic form is negative, F is undefined", p)
        return float(np.sqrt(F2)), float(F2)
    c = contract_cubic(metric, p)
    _gate_cubic(metric, p, c.S111)
    root = float(np.cbrt(c.S111))
    F = root * float(np.sqrt(h_inv))
    return F, F * F


def metric_from_contractions(c: CubicContractions) -> np.ndarray:
    """g_ij = S111^(-1/3)/3 [Sij1 - Si11 Sj11/(3 S111)] for any cubic."""
    root = np.cbrt(c.S111)
    return (c.Sij1 - np.outer(c.Si11, c.Si11) / (3.0 * c.S111)) / (3.0 * root)


def chernov_metric_piecewise(metric: MRootStructure, p: JetPoint) -> np.ndarray:
    """The Chernov piecewise display for g_ij (cross-check path)."""
    if metric.kind != "chernov":
        raise ValueError("piecewise metric form exists only for the Chernov preset")
    c = contract_cubic(metric, p)
    _gate_cubic(metric, p, c.S111)
    root = np.cbrt(c.S111)
    y = p.y
    g = np.empty((DIM, DIM))
    for i in range(DIM):
        for j in range(DIM):
            if i == j:
                g[i, i] = -c.Si11[i] ** 2 / (9.0 * root ** 4)
            else:
                g[i, j] = (2.0 * (c.S1_1 - y[i] - y[j])
                           - c.S4_1111 ** 2 / (c.S111 * y[i] ** 2 * y[j] ** 2)) / (9.0 * root)
    return g


def fundamental_metric(metric: MRootStructure, h: TemporalMetric, p: JetPoint) -> FundamentalMetric:
    """Fundamental metric g_ij, its displayed inverse g^{jk}, and F at p."""
    if metric.kind == "f2":
        F2 = _quadratic_form(p.y) * h.h11_inv(p.t)
        F = float(np.sqrt(F2)) if F2 >= 0 else float("nan")
        return FundamentalMetric(F2_G_LOW, F2_G_UP, F, float(F2))
    c = contract_cubic(metric, p)
    _gate_cubic(metric, p, c.S111)
    d = dual_contractions(metric, p)
    g_low = metric_from_contractions(c)
    root = np.cbrt(c.S111)
    denom = 3.0 * (c.S111 - d.boldS111)
    if abs(denom) <= metric.floor:
        raise DegeneracyError("inverse-metric denominator S111 - boldS111 is degenerate", p)
    g_up = 3.0 * root * (d.Sjk1_up + np.outer(d.S1_up, d.S1_up) / denom)
    residual = np.abs(g_low @ g_up - np.eye(DIM)).max()
    if not np.isfinite(residual) or residual > 1e-6:
        raise SingularMetricError(f"g_low @ g_up deviates from identity by {residual:.3g}")
    F, F2 = finsler_value(metric, h, p)
    return FundamentalMetric(g_low, g_up, F, F2)


def definitional_metric_oracle(metric: MRootStructure, h: TemporalMetric, p: JetPoint) -> np.ndarray:
    """Central-difference Hessian of F^2 in y, scaled by h11/2.

    This is the defining formula g_ij = (h11/2) d2F2/dy^i dy^j evaluated
    without any of the closed-form algebra; it is the provenance instrument
    for every metric identity.  Diagonal entries use the 3-evaluation
    second difference, mixed entries the 4-point cross stencil.
    """
    y0 = p.y
    steps = HESSIAN_STEP * np.maximum(1.0, np.abs(y0))

    def f(yv) -> float:
        try:
            return finsler_squared(metric, h, p.replace(y=yv))
        except DegeneracyError as exc:
            raise OracleError(f"degenerate stencil point: {exc}") from exc

    H = np.empty((DIM, DIM))
    f0 = f(y0)
    for i in range(DIM):
        ei = np.zeros(DIM)
        ei[i] = steps[i]
        H[i, i] = (f(y0 + ei) - 2.0 * f0 + f(y0 - ei)) / steps[i] ** 2
        for j in range(i + 1, DIM):
            ej = np.zeros(DIM)
            ej[j] = steps[j]
            val = (f(y0 + ei + ej) - f(y0 + ei - ej) - f(y0 - ei + ej) + f(y0 - ei - ej))
            H[i, j] = H[j, i] = val / (4.0 * steps[i] * steps[j])
    return 0.5 * h.h11(p.t) * H
