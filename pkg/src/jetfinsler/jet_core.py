"""Foundational types: jet points, temporal metrics, cubic coefficient
structures, indexed tensor containers, and nondegenerate point sampling.

Every geometric object in this package is evaluated at a point
(t, x^1..x^4, y^1..y^4) of the 1-jet space of curves R -> M^4.  The spatial
dimension is fixed at four throughout.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DegeneracyError, DomainError, MetricFileError, SamplingError

DIM = 4

#: default floor below which |S111| or |D1111| counts as degenerate
DEFAULT_FLOOR = 1e-6

#: sampling box: t in [-1, 1], x in [-1, 1]^4, y in [-2, 2]^4
SAMPLE_T_RANGE = (-1.0, 1.0)
SAMPLE_X_RANGE = (-1.0, 1.0)
SAMPLE_Y_RANGE = (-2.0, 2.0)

# Conditioning guards applied by the sampler on top of the degeneracy floor.
# Both are scale-free direction quantities; see sample_nondegenerate_point.
SAMPLE_RHO_MIN = 0.2
SAMPLE_COND_MAX = 30.0
SAMPLE_BUDGET = 1000


def _readonly(a) -> np.ndarray:
    out = np.array(a, dtype=float)
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class JetPoint:
    """A point (t, x, y) of the jet space; x and y are length-4 arrays."""

    t: float
    x: np.ndarray
    y: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "t", float(self.t))
        object.__setattr__(self, "x", _readonly(self.x))
        object.__setattr__(self, "y", _readonly(self.y))
        if self.x.shape != (DIM,) or self.y.shape != (DIM,):
            raise ValueError("x and y must have exactly four components")
        if not (math.isfinite(self.t) and np.isfinite(self.x).all() and np.isfinite(self.y).all()):
            raise ValueError("jet point coordinates must be finite")

    def replace(self, t=None, x=None, y=None) -> "JetPoint":
        return JetPoint(self.t if t is None else t,
                        self.x if x is None else x,
                        self.y if y is None else y)

    def __str__(self):
        return f"(t={self.t:.6g}, x={np.array2string(self.x, precision=6)}, y={np.array2string(self.y, precision=6)})"


@dataclass(frozen=True)
class TemporalMetric:
    """One-dimensional Riemannian metric h11(t) from a closed-form family.

    Families: ``constant`` h11 = c, ``exponential`` h11 = exp(2 a t), and
    ``poly`` h11 = p(t) for a polynomial positive on the evaluation domain.
    Closed forms keep the Christoffel scalar and its t-derivative exact.
    """

    family: str
    params: tuple = ()

    @classmethod
    def constant(cls, c: float = 1.0) -> "TemporalMetric":
        if c <= 0:
            raise DomainError(f"constant temporal metric must be positive, got {c}")
        return cls("constant", (float(c),))

    @classmethod
    def exponential(cls, a: float = 1.0) -> "TemporalMetric":
        return cls("exponential", (float(a),))

    @classmethod
    def polynomial(cls, coeffs) -> "TemporalMetric":
        c = tuple(float(v) for v in coeffs)
        if not c:
            raise DomainError("polynomial temporal metric needs at least one coefficient")
        return cls("poly", c)

    def h11(self, t: float) -> float:
        if self.family == "constant":
            value = self.params[0]
        elif self.family == "exponential":
            value = math.exp(2.0 * self.params[0] * t)
        else:
            value = float(np.polynomial.Polynomial(self.params)(t))
        if value <= 0:
            raise DomainError(f"h11({t}) = {value} is not positive")
        return value

    def h11_inv(self, t: float) -> float:
        return 1.0 / self.h11(t)

    def christoffel(self, t: float) -> tuple[float, float]:
        """Return (kappa, dkappa/dt) with kappa = h11_inv/2 * dh11/dt."""
        if self.family == "constant":
            self.h11(t)
            return 0.0, 0.0
        if self.family == "exponential":
            self.h11(t)
            return self.params[0], 0.0
        p = np.polynomial.Polynomial(self.params)
        v = float(p(t))
        if v <= 0:
            raise DomainError(f"h11({t}) = {v} is not positive")
        d1 = float(p.deriv(1)(t))
        d2 = float(p.deriv(2)(t))
        kappa = d1 / (2.0 * v)
        dkappa = (d2 * v - d1 * d1) / (2.0 * v * v)
        return kappa, dkappa

    def describe(self) -> str:
        if self.family == "constant":
            return f"const:{self.params[0]:g}"
        if self.family == "exponential":
            return f"exp:{self.params[0]:g}"
        return "poly:" + ",".join(f"{c:g}" for c in self.params)


def temporal_kappa(h: TemporalMetric, t: float) -> tuple[float, float]:
    """Christoffel scalar of h11 and its exact t-derivative."""
    return h.christoffel(t)


def _sorted_triple(p, q, r):
    return tuple(sorted((p, q, r)))


def _chernov_table() -> np.ndarray:
    T = np.zeros((DIM, DIM, DIM))
    for perm in itertools.permutations(range(DIM), 3):
        T[perm] = 1.0 / 6.0
    T.setflags(write=False)
    return T


_CHERNOV_TABLE = _chernov_table()


@dataclass(frozen=True)
class MRootStructure:
    """Totally symmetric (0,3) coefficient field S_pqr defining the metric.

    Kinds: ``chernov`` (1/3! on distinct triples), ``custom`` (a symmetric
    coefficient table, optionally x-dependent through polynomial entries),
    and ``f2`` (the quadratic preset, handled entirely by closed forms and
    never routed through the cubic algebra).

    Custom entries are stored once per sorted multi-index and expanded on
    read.  An entry value is either a float or a mapping from x-exponent
    tuples (e1, e2, e3, e4) to coefficients.
    """

    kind: str
    floor: float = DEFAULT_FLOOR
    entries: dict = field(default_factory=dict)  # 0-based sorted triple -> float | {exps: coeff}

    def __post_init__(self):
        if self.floor <= 0:
            raise ValueError("degeneracy floor must be positive")

    @classmethod
    def chernov(cls, floor: float = DEFAULT_FLOOR) -> "MRootStructure":
        return cls("chernov", floor)

    @classmethod
    def f2(cls, floor: float = DEFAULT_FLOOR) -> "MRootStructure":
        return cls("f2", floor)

    @classmethod
    def custom(cls, entries: dict, floor: float = DEFAULT_FLOOR) -> "MRootStructure":
        """Build a custom cubic from {(p,q,r): value} with 1-based p <= q <= r."""
        canon: dict = {}
        for key, value in entries.items():
            p, q, r = key
            if not (1 <= p <= q <= r <= DIM):
                raise MetricFileError(f"indices must satisfy 1 <= p <= q <= r <= 4, got {key}")
            triple = (p - 1, q - 1, r - 1)
            if triple in canon:
                raise MetricFileError(f"duplicate entry for triple {key}")
            if isinstance(value, dict):
                canon[triple] = {tuple(int(e) for e in k): float(v) for k, v in value.items()}
            else:
                canon[triple] = float(value)
        return cls("custom", floor, canon)

    @classmethod
    def from_file(cls, path, floor: float = DEFAULT_FLOOR) -> "MRootStructure":
        """Load "p q r value" lines (1-based, p <= q <= r); blanks and # comments skipped."""
        entries = {}
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, start=1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                parts = line.split()
                if len(parts) != 4:
                    raise MetricFileError(f"{path}:{lineno}: expected 'p q r value', got {raw!r}")
                try:
                    p, q, r = (int(v) for v in parts[:3])
                    value = float(parts[3])
                except ValueError as exc:
                    raise MetricFileError(f"{path}:{lineno}: {exc}") from exc
                if not (1 <= p <= q <= r <= DIM):
                    raise MetricFileError(f"{path}:{lineno}: indices must satisfy 1 <= p <= q <= r <= 4")
                if (p - 1, q - 1, r - 1) in entries:
                    raise MetricFileError(f"{path}:{lineno}: duplicate triple {p} {q} {r}")
                entries[(p - 1, q - 1, r - 1)] = value
        return cls("custom", floor, entries)

    @property
    def x_dependent(self) -> bool:
        return self.kind == "custom" and any(isinstance(v, dict) for v in self.entries.values())

    def _entry_at(self, value, x) -> float:
        if isinstance(value, dict):
            return sum(c * float(np.prod(x ** np.array(e))) for e, c in value.items())
        return value

    def coefficient_table(self, x=None) -> np.ndarray:
        """Dense symmetric S_pqr evaluated at x (x ignored for constant tables)."""
        if self.kind == "chernov":
            return _CHERNOV_TABLE
        if self.kind == "f2":
            raise DegeneracyError("the quadratic preset has no cubic coefficient table")
        T = np.zeros((DIM, DIM, DIM))
        x = np.zeros(DIM) if x is None else np.asarray(x, dtype=float)
        for triple, value in self.entries.items():
            v = self._entry_at(value, x)
            for perm in set(itertools.permutations(triple)):
                T[perm] = v
        return T

    def x_gradient_table(self, x) -> np.ndarray:
        """dS_pqr/dx^m as an (m, p, q, r) array; zero for constant tables."""
        G = np.zeros((DIM, DIM, DIM, DIM))
        if not self.x_dependent:
            return G
        x = np.asarray(x, dtype=float)
        for triple, value in self.entries.items():
            if not isinstance(value, dict):
                continue
            for exps, coeff in value.items():
                for m in range(DIM):
                    if exps[m] == 0:
                        continue
                    shifted = list(exps)
                    shifted[m] -= 1
                    dv = coeff * exps[m] * float(np.prod(x ** np.array(shifted)))
                    for perm in set(itertools.permutations(triple)):
                        G[(m,) + perm] += dv
        return G

    def describe(self) -> str:
        return self.kind


@dataclass(frozen=True)
class DTensor:
    """Dense indexed container with a slot signature and optional symmetry.

    Slot kinds: "t" (temporal marker, no array axis), "xu"/"xl" (spatial
    upper/lower), "vu"/"vl" (vertical upper/lower).  Each non-temporal slot
    indexes 1..4.  Declared symmetry groups are axis tuples; on construction
    the values are checked and stored exactly symmetrized.
    """

    values: np.ndarray
    slots: tuple = ()
    sym: tuple = ()

    _SLOT_KINDS = {"t", "xu", "xl", "vu", "vl"}

    def __post_init__(self):
        values = np.array(self.values, dtype=float)
        slots = tuple(self.slots)
        for s in slots:
            if s not in self._SLOT_KINDS:
                raise ValueError(f"unknown slot kind {s!r}")
        axes = sum(1 for s in slots if s != "t")
        if values.ndim != axes or values.shape != (DIM,) * axes:
            raise ValueError(f"values shape {values.shape} does not match {axes} indexed slots")
        for group in self.sym:
            if len(group) < 2:
                raise ValueError("symmetry group needs at least two axes")
            acc = values
            count = 1
            for a, b in itertools.combinations(group, 2):
                swapped = np.swapaxes(values, a, b)
                if not np.allclose(values, swapped, rtol=0.0, atol=1e-10 * max(1.0, np.abs(values).max())):
                    raise ValueError(f"values are not symmetric in axes {a},{b}")
                acc = acc + swapped
                count += 1
            values = acc / count
        values.setflags(write=False)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "slots", slots)
        object.__setattr__(self, "sym", tuple(tuple(g) for g in self.sym))

    def __getitem__(self, idx):
        return self.values[idx]

    def to_payload(self) -> dict:
        return {"slots": list(self.slots), "values": self.values.tolist()}


def _euler_e3(y: np.ndarray) -> float:
    return float(y[0] * y[1] * y[2] + y[0] * y[1] * y[3] + y[0] * y[2] * y[3] + y[1] * y[2] * y[3])


def _cubic_direction_ok(metric: MRootStructure, x, u, floor) -> bool:
    """Scale-free conditioning guards on the sup-normalized direction u.

    rho = |S111|/|grad S111| is a Newton estimate of the distance to the
    degenerate cone; the bracket Sij1 - Si11 Sj11/(3 S111) is (up to a
    scalar) the fundamental metric, whose conditioning controls every
    finite-difference oracle downstream.
    """
    T = metric.coefficient_table(x)
    S111 = float(np.einsum('pqr,p,q,r->', T, u, u, u))
    if abs(S111) < floor:
        return False
    Si11 = 3.0 * np.einsum('ipq,p,q->i', T, u, u)
    Sij1 = 6.0 * np.einsum('ijp,p->ij', T, u)
    if abs(S111) / max(float(np.linalg.norm(Si11)), 1e-300) < SAMPLE_RHO_MIN:
        return False
    bracket = Sij1 - np.outer(Si11, Si11) / (3.0 * S111)
    sv = np.linalg.svd(bracket, compute_uv=False)
    if sv[-1] <= 0 or sv[0] / sv[-1] > SAMPLE_COND_MAX:
        return False
    return True


def sample_nondegenerate_point(seed: int, metric: MRootStructure) -> JetPoint:
    """Deterministic rejection sampler for evaluation points.

    Draws t in [-1, 1], x in [-1, 1]^4 and y = r*u with u a sup-normalized
    direction from the box [-2, 2]^4 and r in [0.75, 2], so every component
    stays inside [-2, 2].  Cubic kinds reject until |S111| and |D1111| clear
    the metric's floor and the direction passes the conditioning guards; the
    quadratic preset accepts any point.
    """
    rng = np.random.default_rng(seed)
    for _ in range(SAMPLE_BUDGET):
        t = rng.uniform(*SAMPLE_T_RANGE)
        x = rng.uniform(*SAMPLE_X_RANGE, DIM)
        u = rng.uniform(*SAMPLE_Y_RANGE, DIM)
        r = rng.uniform(0.75, 2.0)
        if metric.kind == "f2":
            return JetPoint(t, x, u)
        norm = np.abs(u).max()
        if norm < 1e-12:
            continue
        u = u / norm
        y = r * u
        T = metric.coefficient_table(x)
        S111 = float(np.einsum('pqr,p,q,r->', T, y, y, y))
        Sij1 = 6.0 * np.einsum('ijp,p->ij', T, y)
        D1111 = float(np.linalg.det(Sij1))
        if abs(S111) <= metric.floor or abs(D1111) <= metric.floor:
            continue
        if not _cubic_direction_ok(metric, x, u, metric.floor):
            continue
        return JetPoint(t, x, y)
    raise SamplingError(f"no nondegenerate point found in {SAMPLE_BUDGET} attempts (seed {seed})")
