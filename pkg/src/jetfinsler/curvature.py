"""Torsion and curvature d-tensors, Ricci tensors, scalar curvature, and the
Einstein system with its induced stress-energy blocks.

The vertical curvature S^l_i(j)(k) is assembled from finite differences of
the vertical connection coefficients plus their commutators; the horizontal
and mixed curvatures are assembled from the general adapted-component
displays and must agree with their kappa-proportional forms.  The vertical
Ricci tensor is computed both by contraction and by its closed form; the
closed form feeds the Einstein display and any disagreement is reported by
the verification suite rather than reconciled.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegeneracyError, OracleError, ParameterError
from .fdtools import COARSE_STEP, STEP2, fd_partial, radial_y_derivative
from .jet_core import DIM, JetPoint, MRootStructure, TemporalMetric, temporal_kappa
from .metric_engine import fundamental_metric, metric_from_contractions
from .mroot_algebra import contract_cubic, dual_contractions
from .connections import (CartanConnection, NonlinearConnection, adapted_derivative,
                          canonical_spray, cartan_connection, nonlinear_connection,
                          _vertical_coeff_closed)

#: FD step factor for dC/dy (balances roundoff of the closed-form C against
#: truncation from its third derivatives; cbrt(eps) is too coarse here)
DC_STEP = 1e-6

_ZERO3 = np.zeros((DIM, DIM, DIM))
_ZERO4 = np.zeros((DIM, DIM, DIM, DIM))

#: names of the five torsion families that cancel for this metric class
TORSION_ZERO_FAMILIES = ("time_space_h", "space_space_v", "horizontal_antisym",
                         "vertical_antisym", "time_vertical_v")

#: names of the two curvature families that cancel
CURVATURE_ZERO_FAMILIES = ("time_horizontal", "time_mixed")


@dataclass(frozen=True)
class TorsionSet:
    P_mixed: np.ndarray      # P^(k)(1)_(1)i(j)
    P_vert: np.ndarray       # P^k(1)_i(j)
    R_temporal: np.ndarray   # R^(k)_(1)1j
    zero_flags: tuple        # names of the identically-vanishing families


@dataclass(frozen=True)
class CurvatureSet:
    S_vert: np.ndarray        # S^l(1)(1)_i(j)(k)
    R_horiz: np.ndarray       # R^l_ijk
    P_mixed_curv: np.ndarray  # P^l(1)_ij(k)


@dataclass(frozen=True)
class RicciScalarSet:
    R_ij: np.ndarray
    P_ij: np.ndarray
    S_vert_ricci: np.ndarray              # closed-form vertical Ricci
    S11: float                            # g^{pq} S_vert_ricci
    Sc: float                             # factored display
    S_vert_ricci_contracted: np.ndarray   # contraction of S^l_i(j)(k) over l=k
    Sc_contracted: float                  # trace route


@dataclass(frozen=True)
class EinsteinSystem:
    K: float
    xi11: float
    T11: float
    Tij: np.ndarray
    Tvert: np.ndarray
    T_mixed: np.ndarray        # T_i(j); the T_(i)j display coincides
    T_mixed_vh: np.ndarray     # T_(i)j evaluated from its own display
    zero_blocks: tuple
    T11_direct: float          # -(Sc/2K) h11 cross-check


def torsion_tensors(cc: CartanConnection, nc: NonlinearConnection, h: TemporalMetric,
                    t: float, dN_dy: np.ndarray | None = None) -> TorsionSet:
    """The three effective torsion families; the other five are flagged zero.

    dN_dy (the y-Hessian of the spray) is needed only for x-dependent
    metrics, where N is y-dependent; omitted it is taken as zero, which is
    exact for the presets and any x-independent cubic.
    """
    kappa, dkappa = temporal_kappa(h, t)
    P_mixed = -np.einsum('kji->kij', cc.L)
    if dN_dy is not None:
        P_mixed = P_mixed + dN_dy
    R_temporal = 0.5 * (dkappa - kappa * kappa) * np.eye(DIM)
    return TorsionSet(P_mixed, cc.C.copy(), R_temporal, TORSION_ZERO_FAMILIES)


def _cubic_C_field(metric: MRootStructure):
    def field(q: JetPoint) -> np.ndarray:
        return _vertical_coeff_closed(metric, q)
    return field


def _dC_fd(metric: MRootStructure, p: JetPoint) -> np.ndarray:
    """dC[l, i, j, m] = dC^l_i(j)/dy^m by central differences."""
    field = _cubic_C_field(metric)
    steps = DC_STEP * np.maximum(1.0, np.abs(p.y))
    dC = np.empty((DIM, DIM, DIM, DIM))
    for m in range(DIM):
        try:
            dC[..., m] = fd_partial(field, p, ("y", m), step=steps[m])
        except DegeneracyError as exc:
            raise OracleError(f"degenerate dC stencil: {exc}") from exc
    return dC


def _spray_hessian(metric: MRootStructure, h: TemporalMetric, p: JetPoint) -> np.ndarray:
    """dN[m, j, k] = d^2 G^m / dy^j dy^k via one second-difference layer."""
    y0 = p.y
    steps = STEP2 * np.maximum(1.0, np.abs(y0))

    def G(yv):
        return canonical_spray(metric, h, p.replace(y=yv)).G

    out = np.empty((DIM, DIM, DIM))
    G0 = G(y0)
    for j in range(DIM):
        ej = np.zeros(DIM)
        ej[j] = steps[j]
        out[:, j, j] = (G(y0 + ej) - 2.0 * G0 + G(y0 - ej)) / steps[j] ** 2
        for k in range(j + 1, DIM):
            ek = np.zeros(DIM)
            ek[k] = steps[k]
            val = (G(y0 + ej + ek) - G(y0 + ej - ek) - G(y0 - ej + ek) + G(y0 - ej - ek))
            out[:, j, k] = out[:, k, j] = val / (4.0 * steps[j] * steps[k])
    return out


def curvature_tensors(metric: MRootStructure, h: TemporalMetric, p: JetPoint) -> CurvatureSet:
    """Vertical, horizontal, and mixed curvature d-tensors at p.

    S_vert comes from the commutator display with FD vertical derivatives of
    C.  R_horiz and P_mixed_curv are assembled from the general displays
    (delta/delta x via the nonlinear connection, the h-covariant derivative
    C_|j, and the mixed-torsion contribution); their kappa-proportionality
    to S_vert is an acceptance check, not an input.
    """
    if metric.kind == "f2":
        return CurvatureSet(_ZERO4, _ZERO4, _ZERO4)
    cc = cartan_connection(metric, h, p)
    nc = nonlinear_connection(metric, h, p)
    C, L = cc.C, cc.L
    dC = _dC_fd(metric, p)
    S_vert = (dC - dC.transpose(0, 1, 3, 2)
              + np.einsum('mij,lmk->lijk', C, C) - np.einsum('mik,lmj->lijk', C, C))

    x_dep = metric.x_dependent
    if not x_dep:
        dL_dy = 0.5 * cc.kappa * dC
        if metric.kind == "chernov":
            dN_dy_arr = np.zeros((DIM, DIM, DIM))  # N is analytically constant
        else:
            dN_dy_arr = _spray_hessian(metric, h, p)
        dLx = -np.einsum('pk,lijp->lijk', nc.N, dL_dy)
        dCx = -np.einsum('pj,likp->likj', nc.N, dC)
    else:
        L_field = lambda q: cartan_connection(metric, h, q).L
        C_field = _cubic_C_field(metric)
        dL_dy = np.empty((DIM, DIM, DIM, DIM))
        dLx = np.empty((DIM, DIM, DIM, DIM))
        dCx = np.empty((DIM, DIM, DIM, DIM))
        for k in range(DIM):
            dL_dy[..., k] = fd_partial(L_field, p, ("y", k))
            dLx[..., k] = adapted_derivative(L_field, p, ("x", k), nc, h)
            dCx[..., k] = adapted_derivative(C_field, p, ("x", k), nc, h)
        dN_dy_arr = _spray_hessian(metric, h, p)

    R_horiz = (dLx - dLx.transpose(0, 1, 3, 2)
               + np.einsum('mij,lmk->lijk', L, L) - np.einsum('mik,lmj->lijk', L, L))

    # C^l_i(k)|j  (layout [l, i, k, j])
    C_bar = (dCx
             + np.einsum('mik,lmj->likj', C, L)
             - np.einsum('lmk,mij->likj', C, L)
             - np.einsum('lim,mkj->likj', C, L))
    P_tor = dN_dy_arr - np.einsum('mkj->mjk', L)
    P_mixed_curv = (dL_dy
                    - C_bar.transpose(0, 1, 3, 2)
                    + np.einsum('lim,mjk->lijk', C, P_tor))
    return CurvatureSet(S_vert, R_horiz, P_mixed_curv)


def vertical_ricci_closed(metric: MRootStructure, p: JetPoint) -> np.ndarray:
    """Closed form of the vertical Ricci tensor for cubic kinds."""
    c = contract_cubic(metric, p)
    d = dual_contractions(metric, p)
    T = metric.coefficient_table(p.x)
    Sup = d.Sjk1_up
    quad = (np.einsum('pq,rm,ijp,qrm->ij', Sup, Sup, T, T)
            - np.einsum('pq,rm,ipr,jqm->ij', Sup, Sup, T, T))
    return (-9.0 * quad + c.Sij1 / (12.0 * c.S111)
            - np.outer(c.Si11, c.Si11) / (18.0 * c.S111 ** 2))


def ricci_and_scalar(metric: MRootStructure, h: TemporalMetric, p: JetPoint) -> RicciScalarSet:
    """Ricci components and scalar curvature, via both derivation routes."""
    kappa, _ = temporal_kappa(h, p.t)
    h11 = h.h11(p.t)
    if metric.kind == "f2":
        zero2 = np.zeros((DIM, DIM))
        return RicciScalarSet(zero2, zero2.copy(), zero2.copy(), 0.0, 0.0, zero2.copy(), 0.0)
    SS = vertical_ricci_closed(metric, p)
    g = fundamental_metric(metric, h, p)
    S11 = float(np.einsum('pq,pq->', g.g_up, SS))
    Sc = (4.0 * h11 + kappa * kappa) / 4.0 * S11
    cur = curvature_tensors(metric, h, p)
    SS_contr = np.einsum('rijr->ij', cur.S_vert)
    R_contr = np.einsum('rijr->ij', cur.R_horiz)
    Sc_contr = float(np.einsum('pq,pq->', g.g_up, R_contr)
                     + h11 * np.einsum('pq,pq->', g.g_up, SS_contr))
    return RicciScalarSet(0.25 * kappa * kappa * SS, 0.5 * kappa * SS, SS, S11, Sc,
                          SS_contr, Sc_contr)


_EINSTEIN_ZERO_BLOCKS = ("T_1i", "T_i1", "T_1(i)", "T_(i)1")


def einstein_system(metric: MRootStructure, h: TemporalMetric, p: JetPoint,
                    K: float = 1.0) -> EinsteinSystem:
    """Stress-energy blocks induced by the geometrical Einstein equations.

    The system is solved for the stress-energy given the Einstein constant
    K; the four off-diagonal blocks vanish identically and the two mixed
    blocks are equal by construction (their displays coincide).
    """
    if K == 0.0:
        raise ParameterError("the Einstein constant K must be nonzero")
    kappa, _ = temporal_kappa(h, p.t)
    h11 = h.h11(p.t)
    xi11 = -(4.0 * h11 + kappa * kappa) / (8.0 * K)
    if metric.kind == "f2":
        zero2 = np.zeros((DIM, DIM))
        return EinsteinSystem(K, xi11, 0.0, zero2, zero2.copy(), zero2.copy(),
                              zero2.copy(), _EINSTEIN_ZERO_BLOCKS, 0.0)
    ric = ricci_and_scalar(metric, h, p)
    g = fundamental_metric(metric, h, p)
    SS = ric.S_vert_ricci
    T11 = xi11 * ric.S11 * h11
    Tij = (kappa * kappa / (4.0 * K)) * SS + xi11 * ric.S11 * g.g_low
    Tvert = SS / K + xi11 * ric.S11 * g.g_low / h11
    T_mixed = (kappa / (2.0 * K)) * SS
    T_mixed_vh = (kappa / (2.0 * K)) * SS
    T11_direct = -(ric.Sc / (2.0 * K)) * h11
    return EinsteinSystem(K, xi11, T11, Tij, Tvert, T_mixed, T_mixed_vh,
                          _EINSTEIN_ZERO_BLOCKS, T11_direct)


def einstein_block_residuals(metric: MRootStructure, h: TemporalMetric, p: JetPoint,
                             K: float = 1.0) -> dict:
    """max |Ric - (Sc/2) G - K T| per adapted block, plus the zero blocks."""
    es = einstein_system(metric, h, p, K)
    h11 = h.h11(p.t)
    if metric.kind == "f2":
        g_low = 0.5 * (np.ones((DIM, DIM)) - np.eye(DIM))
        ric_ij = ric_mixed = ric_vert = np.zeros((DIM, DIM))
        Sc = 0.0
    else:
        ric = ricci_and_scalar(metric, h, p)
        g_low = fundamental_metric(metric, h, p).g_low
        ric_ij, ric_mixed, ric_vert, Sc = ric.R_ij, ric.P_ij, ric.S_vert_ricci, ric.Sc
    out = {
        "block_11": abs(0.0 - 0.5 * Sc * h11 - K * es.T11),
        "block_ij": float(np.abs(ric_ij - 0.5 * Sc * g_low - K * es.Tij).max()),
        "block_i(j)": float(np.abs(ric_mixed - K * es.T_mixed).max()),
        "block_(i)j": float(np.abs(ric_mixed - K * es.T_mixed_vh).max()),
        "block_(i)(j)": float(np.abs(ric_vert - 0.5 * Sc * g_low / h11 - K * es.Tvert).max()),
        "zero_blocks": 0.0,
        "mixed_symmetry": float(np.abs(es.T_mixed - es.T_mixed_vh).max()),
    }
    return out


def _torsion_zero_arrays(metric: MRootStructure, h: TemporalMetric, p: JetPoint) -> dict:
    """Arrays of the five identically-vanishing torsion families.

    Each family is evaluated from its adapted-frame expression with the
    implemented objects (numeric G^k_j1 from delta g/delta t, adapted
    derivatives of N and M, raw antisymmetry of L and C), so these are
    genuine residuals rather than asserted zeros.
    """
    kappa, _ = temporal_kappa(h, p.t)
    nc = nonlinear_connection(metric, h, p)
    if metric.kind == "f2":
        C_raw = L_raw = _ZERO3
        G_num = np.zeros((DIM, DIM))
    else:
        C_raw = _vertical_coeff_closed(metric, p)
        L_raw = 0.5 * kappa * C_raw if not metric.x_dependent else cartan_connection(metric, h, p).L
        g_up = fundamental_metric(metric, h, p).g_up
        # G^k_j1 = (g^{km}/2) delta g_mj / delta t; the metric is exactly
        # 0-homogeneous and t-independent, so the coarse radial step only
        # lowers the roundoff floor of this near-zero residual
        g_field = lambda q: metric_from_contractions(contract_cubic(metric, q))
        dg_dt = adapted_derivative(g_field, p, ("t",), nc, h, step=COARSE_STEP)
        G_num = 0.5 * g_up @ dg_dt

    # R^(k)_(1)ij = delta N_i / delta x^j - delta N_j / delta x^i
    if metric.kind == "custom":
        # FD of the FD-based N field would stack noise; use the spray Hessian
        dN_dy = _spray_hessian(metric, h, p)
        dNx = -np.einsum('pj,kip->kij', nc.N, dN_dy)
        if metric.x_dependent:
            N_field = lambda q: nonlinear_connection(metric, h, q).N
            for j in range(DIM):
                dNx[..., j] += fd_partial(N_field, p, ("x", j))
    else:
        N_field = lambda q: nonlinear_connection(metric, h, q).N
        dNx = np.empty((DIM, DIM, DIM))
        for j in range(DIM):
            dNx[..., j] = adapted_derivative(N_field, p, ("x", j), nc, h)
    space_space = dNx - dNx.transpose(0, 2, 1)

    # P^(k)(1)_(1)1(j) = dM^k/dy^j + kappa delta^k_j - G^k_j1
    M_field = lambda q: nonlinear_connection(metric, h, q).M
    dM_dy = np.empty((DIM, DIM))
    for j in range(DIM):
        dM_dy[:, j] = fd_partial(M_field, p, ("y", j))
    time_vert = dM_dy + kappa * np.eye(DIM) - G_num

    return {
        "time_space_h": G_num,
        "space_space_v": space_space,
        "horizontal_antisym": L_raw - L_raw.transpose(0, 2, 1),
        "vertical_antisym": C_raw - C_raw.transpose(0, 2, 1),
        "time_vertical_v": time_vert,
    }


def torsion_census_residuals(metric: MRootStructure, h: TemporalMetric, p: JetPoint) -> dict:
    """max |entry| of each identically-vanishing torsion family."""
    return {name: float(np.abs(arr).max())
            for name, arr in _torsion_zero_arrays(metric, h, p).items()}


def curvature_census_residuals(metric: MRootStructure, h: TemporalMetric, p: JetPoint) -> dict:
    """Numerical residuals of the two identically-vanishing curvature families.

    time_horizontal: R^l_i1k = delta G^l_i1/delta x^k - delta L^l_ik/delta t
    + [G, L] commutators + C^l_i(m) R^(m)_(1)1k (the commutator of adapted
    fields feeds the nonlinear-connection curvature back through C);
    time_mixed: P^l_i1(k) = dG^l_i1/dy^k - C^l_i(k)/1 + C^l_i(m)
    P^(m)(1)_(1)1(j).  G^k_j1 vanishes structurally for this metric class
    (its numeric residual is the time_space_h torsion family), so the
    G-derivative and commutator terms drop.
    """
    kappa, dkappa = temporal_kappa(h, p.t)
    if metric.kind == "f2":
        return {"time_horizontal": 0.0, "time_mixed": 0.0}
    nc = nonlinear_connection(metric, h, p)
    cc = cartan_connection(metric, h, p)
    C = cc.C
    R_temp = 0.5 * (dkappa - kappa * kappa) * np.eye(DIM)

    L_field = lambda q: cartan_connection(metric, h, q).L
    dL_dt = adapted_derivative(L_field, p, ("t",), nc, h)
    time_horizontal = -dL_dt + np.einsum('lim,mk->lik', C, R_temp)

    # C^l_i(k)/1 = delta C/delta t + kappa C (the vertical index pair
    # carries a +kappa weight under the temporal covariant derivative)
    C_field = _cubic_C_field(metric)
    dC_dt = fd_partial(C_field, p, ("t",))
    C_slash1 = dC_dt + kappa * radial_y_derivative(C_field, p) + kappa * C
    time_vert = _torsion_zero_arrays(metric, h, p)["time_vertical_v"]
    time_mixed = -C_slash1 + np.einsum('lim,mk->lik', C, time_vert)
    return {
        "time_horizontal": float(np.abs(time_horizontal).max()),
        "time_mixed": float(np.abs(time_mixed).max()),
    }
