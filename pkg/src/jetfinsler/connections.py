"""Canonical spray, nonlinear connection, adapted derivative operators, and
the Cartan canonical connection.

The temporal spray is H^i = -(kappa/2) y^i for every metric kind.  For
x-independent cubics the spatial spray collapses to the locally-Minkowski
reduction G^i = -kappa S111 S1^i / (2 (S111 - boldS111)); x-dependent custom
cubics evaluate the full Euler-Lagrange formula with analytic dS/dx.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegeneracyError
from .fdtools import fd_partial, radial_y_derivative
from .jet_core import DIM, DTensor, JetPoint, MRootStructure, TemporalMetric, temporal_kappa
from .metric_engine import fundamental_metric, metric_from_contractions
from .mroot_algebra import contract_cubic, dual_contractions


@dataclass(frozen=True)
class SprayPair:
    H: np.ndarray
    G: np.ndarray


@dataclass(frozen=True)
class NonlinearConnection:
    M: np.ndarray
    N: np.ndarray


@dataclass(frozen=True)
class CartanConnection:
    kappa: float
    Gk_j1: np.ndarray
    L: np.ndarray
    C: np.ndarray


def canonical_spray(metric: MRootStructure, h: TemporalMetric, p: JetPoint,
                    path: str = "auto") -> SprayPair:
    """Time-dependent spray (H, G) of the energy action functional.

    path="reduction" forces the locally-Minkowski form, "general" the full
    spatial formula (whose dS/dx terms vanish for x-independent tables);
    "auto" picks the reduction unless the table is x-dependent.
    """
    kappa, _ = temporal_kappa(h, p.t)
    H = -0.5 * kappa * p.y
    if metric.kind == "f2":
        return SprayPair(H, H.copy())
    c = contract_cubic(metric, p)
    if abs(c.S111) <= metric.floor:
        raise DegeneracyError(f"|S111| = {abs(c.S111):.3g} <= floor", p)
    d = dual_contractions(metric, p)
    denom = c.S111 - d.boldS111
    if abs(denom) <= metric.floor:
        raise DegeneracyError("spray reduction denominator S111 - boldS111 is degenerate", p)
    use_general = metric.x_dependent if path == "auto" else (path == "general")
    if not use_general:
        G = -kappa * c.S111 / (2.0 * denom) * d.S1_up
        return SprayPair(H, G)
    grad = metric.x_gradient_table(p.x)            # grad[m,p,q,r] = dS_pqr/dx^m
    y = p.y
    dS111_dx = np.einsum('mpqr,p,q,r->m', grad, y, y, y)
    dSm11_dx_y = 3.0 * np.einsum('pmab,a,b,p->m', grad, y, y, y)
    g_up = fundamental_metric(metric, h, p).g_up
    root = np.cbrt(c.S111)
    G = (g_up @ (dSm11_dx_y - (1.0 - kappa) * dS111_dx)) / (6.0 * root) \
        - d.S1_up / (6.0 * denom) * (float(dS111_dx @ y) + 3.0 * kappa * c.S111)
    return SprayPair(H, G)


def nonlinear_connection(metric: MRootStructure, h: TemporalMetric, p: JetPoint) -> NonlinearConnection:
    """Canonical nonlinear connection (M, N) with M = 2H and N = dG/dy.

    N is analytic (-kappa/2 times the identity) for the Chernov and
    quadratic presets and a finite difference of the spray for custom
    cubics.
    """
    kappa, _ = temporal_kappa(h, p.t)
    M = -kappa * p.y
    if metric.kind in ("chernov", "f2"):
        return NonlinearConnection(M, -0.5 * kappa * np.eye(DIM))
    N = np.empty((DIM, DIM))
    for j in range(DIM):
        N[:, j] = fd_partial(lambda q: canonical_spray(metric, h, q).G, p, ("y", j))
    return NonlinearConnection(M, N)


def adapted_derivative(field, p: JetPoint, direction, nc: NonlinearConnection,
                       h: TemporalMetric, step: float | None = None):
    """Derivative of a field along one adapted-basis vector.

    direction is ("t",), ("x", i) or ("y", i) for delta/delta t,
    delta/delta x^i and the vertical d/dy^i.  The temporal operator is
    d/dt - M^p d/dy^p; since M = -kappa y exactly, its y-part is kappa
    times the radial derivative.  The spatial operator is
    d/dx^i - N^p_i d/dy^p (which for the presets' N = -(kappa/2) delta is
    the displayed d/dx^i + (kappa/2) d/dy^i).  A caller differentiating an
    FD-derived field should pass a coarse step to keep the inner layer's
    noise from being amplified.
    """
    kind = direction[0]
    if kind == "y":
        return fd_partial(field, p, ("y", direction[1]), step=step)
    if kind == "t":
        kappa, _ = temporal_kappa(h, p.t)
        val = fd_partial(field, p, ("t",), step=step)
        if kappa != 0.0:
            radial = (radial_y_derivative(field, p) if step is None
                      else radial_y_derivative(field, p, step=step))
            val = val + kappa * radial
        return val
    i = direction[1]
    val = fd_partial(field, p, ("x", i), step=step)
    for q in range(DIM):
        coeff = nc.N[q, i]
        if coeff != 0.0:
            val = val - coeff * fd_partial(field, p, ("y", q), step=step)
    return val


def dgdy_from_contractions(c, T: np.ndarray) -> np.ndarray:
    """dg_jk/dy^m expansion used by the general Cartan path."""
    root = np.cbrt(c.S111)
    t1 = 2.0 * T / root
    sym = (np.einsum('jk,m->jkm', c.Sij1, c.Si11)
           + np.einsum('km,j->jkm', c.Sij1, c.Si11)
           + np.einsum('mj,k->jkm', c.Sij1, c.Si11))
    t2 = -sym / (9.0 * root ** 4)
    t3 = (4.0 / 27.0) * np.einsum('j,k,m->jkm', c.Si11, c.Si11, c.Si11) / root ** 7
    return t1 + t2 + t3


def _vertical_coeff_closed(metric: MRootStructure, p: JetPoint) -> np.ndarray:
    """Closed form of C^i_j(k) (valid for any nondegenerate cubic)."""
    c = contract_cubic(metric, p)
    d = dual_contractions(metric, p)
    T = metric.coefficient_table(p.x)
    y = p.y
    I = np.eye(DIM)
    t1 = 3.0 * np.einsum('im,jkm->ijk', d.Sjk1_up, T)
    t2 = -(0.5 * np.einsum('jk,i->ijk', c.Sij1, y)
           + np.einsum('ij,k->ijk', I, c.Si11)
           + np.einsum('ik,j->ijk', I, c.Si11)) / (6.0 * c.S111)
    t3 = np.einsum('j,k,i->ijk', c.Si11, c.Si11, y) / (9.0 * c.S111 ** 2)
    return t1 + t2 + t3


def _vertical_coeff_general(metric: MRootStructure, h: TemporalMetric, p: JetPoint) -> np.ndarray:
    """General path C = (g^{im}/2) dg_jk/dy^m."""
    c = contract_cubic(metric, p)
    g_up = fundamental_metric(metric, h, p).g_up
    dg = dgdy_from_contractions(c, metric.coefficient_table(p.x))
    return 0.5 * np.einsum('im,jkm->ijk', g_up, dg)


def cartan_connection(metric: MRootStructure, h: TemporalMetric, p: JetPoint,
                      path: str = "auto") -> CartanConnection:
    """Cartan canonical connection (kappa, G^k_j1, L^i_jk, C^i_j(k)).

    G^k_j1 vanishes for every metric in this class (the fundamental metric
    is t-independent and 0-homogeneous in y, so its delta/delta t derivative
    cancels); the verification suite re-derives that numerically.  For
    x-independent metrics L = (kappa/2) C; x-dependent custom cubics build
    L from delta/delta x derivatives of the metric.
    """
    kappa, _ = temporal_kappa(h, p.t)
    if metric.kind == "f2":
        zero3 = np.zeros((DIM, DIM, DIM))
        return CartanConnection(kappa, np.zeros((DIM, DIM)), zero3, zero3.copy())
    if path == "auto" or path == "closed":
        C = _vertical_coeff_closed(metric, p)
    elif path == "general":
        C = _vertical_coeff_general(metric, h, p)
    else:
        raise ValueError(f"unknown path {path!r}")
    C = DTensor(C, slots=("xu", "xl", "vl"), sym=((1, 2),)).values
    if not metric.x_dependent:
        L = 0.5 * kappa * C
    else:
        nc = nonlinear_connection(metric, h, p)
        g_field = lambda q: metric_from_contractions(contract_cubic(metric, q))
        dg_dx = np.empty((DIM, DIM, DIM))  # [k, j, m] = delta g_jm / delta x^k
        for k in range(DIM):
            dg_dx[k] = adapted_derivative(g_field, p, ("x", k), nc, h)
        g_up = fundamental_metric(metric, h, p).g_up
        # L^i_jk = g^{im}/2 (dg_jm/dx^k + dg_km/dx^j - dg_jk/dx^m)
        term = (np.einsum('kjm->jkm', dg_dx) + np.einsum('jkm->jkm', dg_dx)
                - np.einsum('mjk->jkm', dg_dx))
        L = 0.5 * np.einsum('im,jkm->ijk', g_up, term)
    return CartanConnection(kappa, np.zeros((DIM, DIM)), L, C)
