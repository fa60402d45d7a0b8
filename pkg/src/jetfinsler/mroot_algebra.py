"""Algebraic contractions of the cubic structure and their dual inverses.

Notation (all at a fixed point, with S the symmetric coefficient table):

    S111 = S_pqr y^p y^q y^r        Si11 = 3 S_ipq y^p y^q = dS111/dy^i
    Sij1 = 6 S_ijp y^p = d2S111/dy^i dy^j
    S^{jk1} = (Sij1)^{-1}           S1^j = S^{jp1} Sp11
    boldS111 = S^{pq1} Sp11 Sq11 / 3

For the Chernov preset the closed forms of these objects are evaluated and
cross-checked against the generic contraction path.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegeneracyError
from .jet_core import DIM, JetPoint, MRootStructure

#: below this |y^i| the division forms of the Chernov closed formulas are
#: replaced by their algebraically identical division-free variants
_DIVISION_FLOOR = 1e-8


@dataclass(frozen=True)
class CubicContractions:
    S111: float
    Si11: np.ndarray
    Sij1: np.ndarray
    S1_1: float      # sum of the y components
    S4_1111: float   # product of the y components


@dataclass(frozen=True)
class DualContractions:
    Sjk1_up: np.ndarray
    S1_up: np.ndarray
    boldS111: float
    D1111: float


def _require_cubic(metric: MRootStructure):
    if metric.kind not in ("chernov", "custom"):
        raise DegeneracyError("the quadratic preset bypasses the cubic algebra")


def _generic_contractions(T: np.ndarray, y: np.ndarray) -> tuple[float, np.ndarray, np.ndarray]:
    S111 = float(np.einsum('pqr,p,q,r->', T, y, y, y))
    Si11 = 3.0 * np.einsum('ipq,p,q->i', T, y, y)
    Sij1 = 6.0 * np.einsum('ijp,p->ij', T, y)
    return S111, Si11, Sij1


def _chernov_S111(y: np.ndarray) -> float:
    return float(y[0] * y[1] * y[2] + y[0] * y[1] * y[3] + y[0] * y[2] * y[3] + y[1] * y[2] * y[3])


def _chernov_Si11(y: np.ndarray, S111: float, S4: float) -> np.ndarray:
    """(S111 y^i - S4)/(y^i)^2, falling back to the direct pair sums when
    |y^i| is tiny (the division form has a removable singularity there)."""
    out = np.empty(DIM)
    for i in range(DIM):
        if abs(y[i]) < _DIVISION_FLOOR:
            rest = [y[j] for j in range(DIM) if j != i]
            out[i] = rest[0] * rest[1] + rest[0] * rest[2] + rest[1] * rest[2]
        else:
            out[i] = (S111 * y[i] - S4) / (y[i] * y[i])
    return out


def _chernov_Sij1(y: np.ndarray, S1: float) -> np.ndarray:
    out = S1 - y[:, None] - y[None, :]
    np.fill_diagonal(out, 0.0)
    return out


def _chernov_dual_matrix(y: np.ndarray, S4: float, D1111: float) -> np.ndarray:
    """Piecewise closed form of S^{jk1}; division-free variant at tiny |y|."""
    out = np.empty((DIM, DIM))
    for j in range(DIM):
        for k in range(j, DIM):
            if j == k:
                if abs(y[j]) < _DIVISION_FLOOR:
                    prod = 2.0
                    for l in range(DIM):
                        if l != j:
                            prod *= y[j] + y[l]
                    out[j, j] = prod / D1111
                else:
                    prod = 1.0
                    for l in range(DIM):
                        prod *= y[j] + y[l]
                    out[j, j] = prod / (y[j] * D1111)
            else:
                yj, yk = y[j], y[k]
                if abs(yj * yk) < _DIVISION_FLOOR:
                    rest = [y[l] for l in range(DIM) if l not in (j, k)]
                    val = (-2.0 / D1111) * (yj + yk) * (yj * yk + rest[0] * rest[1])
                else:
                    val = (-2.0 / D1111) * (yj + yk) * (yj * yk + S4 / (yj * yk))
                out[j, k] = out[k, j] = val
    return out


def contract_cubic(metric: MRootStructure, p: JetPoint, path: str = "auto") -> CubicContractions:
    """All first-layer contractions of the cubic at p.

    path="closed" forces the Chernov closed forms, "generic" the einsum
    contractions of the dense table; "auto" uses closed forms for the
    Chernov preset and the generic path otherwise.
    """
    _require_cubic(metric)
    y = p.y
    S1 = float(y.sum())
    S4 = float(y.prod())
    use_closed = metric.kind == "chernov" if path == "auto" else (path == "closed")
    if use_closed:
        if metric.kind != "chernov":
            raise ValueError("closed forms exist only for the Chernov preset")
        S111 = _chernov_S111(y)
        Si11 = _chernov_Si11(y, S111, S4)
        Sij1 = _chernov_Sij1(y, S1)
    else:
        S111, Si11, Sij1 = _generic_contractions(metric.coefficient_table(p.x), y)
    return CubicContractions(S111, Si11, Sij1, S1, S4)


def dual_contractions(metric: MRootStructure, p: JetPoint, path: str = "auto") -> DualContractions:
    """Inverse matrix S^{jk1} and the derived contractions S1^j, boldS111.

    The Chernov preset uses the piecewise closed form for S^{jk1} and
    D1111 = 4 (4 S4 - S1 S111); custom cubics invert Sij1 numerically.
    """
    _require_cubic(metric)
    c = contract_cubic(metric, p, path=path)
    use_closed = metric.kind == "chernov" if path == "auto" else (path == "closed")
    if use_closed:
        D1111 = 4.0 * (4.0 * c.S4_1111 - c.S1_1 * c.S111)
        if abs(D1111) <= metric.floor:
            raise DegeneracyError(f"|D1111| = {abs(D1111):.3g} <= floor {metric.floor:g}", p)
        Sup = _chernov_dual_matrix(p.y, c.S4_1111, D1111)
    else:
        D1111 = float(np.linalg.det(c.Sij1))
        if abs(D1111) <= metric.floor:
            raise DegeneracyError(f"|D1111| = {abs(D1111):.3g} <= floor {metric.floor:g}", p)
        Sup = np.linalg.inv(c.Sij1)
    S1_up = Sup @ c.Si11
    bold = float(S1_up @ c.Si11) / 3.0
    return DualContractions(Sup, S1_up, bold, D1111)


def euler_residuals(c: CubicContractions, p: JetPoint) -> np.ndarray:
    """Residuals of the three homogeneity identities of the cubic."""
    y = p.y
    r1 = abs(float(c.Si11 @ y) - 3.0 * c.S111)
    r2 = float(np.abs(c.Sij1 @ y - 2.0 * c.Si11).max())
    r3 = abs(float(y @ c.Sij1 @ y) - 6.0 * c.S111)
    return np.array([r1, r2, r3])
