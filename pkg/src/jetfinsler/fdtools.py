"""Finite-difference primitives shared by the oracles and adapted derivatives.

Fields are callables JetPoint -> float or ndarray.  First-order central
differences use step cbrt(eps)*max(1,|coordinate|); pure second differences
use the 3-evaluation central stencil with step eps^(1/4)*max(1,|coordinate|).

Radial y-derivatives (y^p d/dy^p) are taken multiplicatively, comparing the
field at (1+s)y and (1-s)y; for the homogeneous quantities of this package
that form is exact up to O(s^2) with no cancellation against the large
homogeneous part, which per-axis stencils cannot achieve.
"""

from __future__ import annotations

import numpy as np

from .errors import DegeneracyError, OracleError
from .jet_core import JetPoint

_EPS = float(np.finfo(float).eps)
STEP1 = _EPS ** (1.0 / 3.0)
STEP2 = _EPS ** 0.25
RADIAL_STEP = 1e-4

#: coarse relative step for radial derivatives of fields that are exactly
#: homogeneous (their multiplicative difference quotient is identically
#: zero, so a wide stencil only shrinks the roundoff floor)
COARSE_STEP = 1e-2


def _shift(p: JetPoint, axis, delta: float) -> JetPoint:
    kind = axis[0]
    if kind == "t":
        return p.replace(t=p.t + delta)
    idx = axis[1]
    if kind == "x":
        x = p.x.copy()
        x[idx] += delta
        return p.replace(x=x)
    if kind == "y":
        y = p.y.copy()
        y[idx] += delta
        return p.replace(y=y)
    raise ValueError(f"unknown axis {axis!r}")


def _coord(p: JetPoint, axis) -> float:
    kind = axis[0]
    if kind == "t":
        return p.t
    return (p.x if kind == "x" else p.y)[axis[1]]


def fd_partial(field, p: JetPoint, axis, order: int = 1, step: float | None = None):
    """Central-difference partial of a field along one jet coordinate.

    axis is ("t",), ("x", i) or ("y", i) with 0-based i.  Degeneracy raised
    by the field at a stencil point becomes an OracleError so callers can
    resample.
    """
    if order not in (1, 2):
        raise ValueError("order must be 1 or 2")
    if step is None:
        base = STEP1 if order == 1 else STEP2
        step = base * max(1.0, abs(_coord(p, axis)))
    try:
        if order == 1:
            fp = field(_shift(p, axis, +step))
            fm = field(_shift(p, axis, -step))
            return (fp - fm) / (2.0 * step)
        fp = field(_shift(p, axis, +step))
        f0 = field(p)
        fm = field(_shift(p, axis, -step))
        return (fp - 2.0 * f0 + fm) / (step * step)
    except DegeneracyError as exc:
        raise OracleError(f"degenerate stencil point along {axis}: {exc}") from exc


def radial_y_derivative(field, p: JetPoint, step: float = RADIAL_STEP):
    """y^p df/dy^p via a fourth-order multiplicative stencil in the scale."""
    s = step
    try:
        f2p = field(p.replace(y=(1.0 + 2.0 * s) * p.y))
        f1p = field(p.replace(y=(1.0 + s) * p.y))
        f1m = field(p.replace(y=(1.0 - s) * p.y))
        f2m = field(p.replace(y=(1.0 - 2.0 * s) * p.y))
    except DegeneracyError as exc:
        raise OracleError(f"degenerate radial stencil point: {exc}") from exc
    return (-f2p + 8.0 * f1p - 8.0 * f1m + f2m) / (12.0 * s)
