"""Half-space simplex model: normalization, residuals and point classification.

A simplex in ``n`` dimensions is stored as ``A x <= b`` with ``A`` of shape
``(n+1, n)``.  Rows of ``A`` are unit vectors, so a residual ``b_i - A_i x``
is the true Euclidean distance from ``x`` to facet ``i``.

Rows are indexed from 0.  The first ``n`` rows form the *head block*, which
must be nonsingular; the last row is the one expressed through the head rows
by the multipliers in :mod:`harmonic_simplex.gamma`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import ShapeMismatch, SingularHead, ZeroRow

ZERO_ROW_TOL = 1e-14
ROW_NORM_TOL = 1e-12
COND_MAX = 1e12
INTERIOR_TOL = 1e-12

# rows already this close to unit length are left untouched, which makes
# normalization exactly idempotent
_UNIT_SKIP = 4 * np.finfo(float).eps


def _frozen(x) -> np.ndarray:
    arr = np.array(x, dtype=float)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class Simplex:
    """Simplex ``{x : A x <= b}`` with unit-norm rows.

    Construct through :func:`normalize_rows` unless the rows are already unit
    vectors; the constructor only validates.
    """

    a_matrix: np.ndarray
    b_vector: np.ndarray
    cond_max: float = COND_MAX

    def __post_init__(self):
        a = _frozen(self.a_matrix)
        b = _frozen(self.b_vector)
        if a.ndim != 2 or a.shape[1] < 1 or a.shape[0] != a.shape[1] + 1:
            raise ShapeMismatch(f"A must have shape (n+1, n), got {a.shape}")
        if b.shape != (a.shape[0],):
            raise ShapeMismatch(f"b must have length {a.shape[0]}, got shape {b.shape}")
        if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b))):
            raise ShapeMismatch("A and b must be finite")
        norms = np.linalg.norm(a, axis=1)
        bad = np.flatnonzero(np.abs(norms - 1.0) > ROW_NORM_TOL)
        if bad.size:
            raise ShapeMismatch(f"row {bad[0] + 1} is not unit length; use normalize_rows")
        cond = np.linalg.cond(a[:-1])
        if not np.isfinite(cond) or cond > self.cond_max:
            raise SingularHead(f"head block condition estimate {cond:.3g} exceeds {self.cond_max:.3g}")
        object.__setattr__(self, "a_matrix", a)
        object.__setattr__(self, "b_vector", b)

    @property
    def dim(self) -> int:
        return self.a_matrix.shape[1]

    @property
    def head(self) -> np.ndarray:
        return self.a_matrix[:-1]

    @property
    def head_b(self) -> np.ndarray:
        return self.b_vector[:-1]

    @property
    def last(self) -> np.ndarray:
        return self.a_matrix[-1]

    @property
    def last_b(self) -> float:
        return float(self.b_vector[-1])

    def __eq__(self, other):
        if not isinstance(other, Simplex):
            return NotImplemented
        return np.array_equal(self.a_matrix, other.a_matrix) and np.array_equal(
            self.b_vector, other.b_vector
        )

    __hash__ = None

    def to_json(self) -> dict:
        return {"format": "simplex/1", "A": self.a_matrix.tolist(), "b": self.b_vector.tolist()}


def normalize_rows(raw_a, raw_b, cond_max: float = COND_MAX) -> Simplex:
    """Scale each row of ``(raw_a, raw_b)`` by the norm of its ``A`` row."""
    a = np.array(raw_a, dtype=float)
    b = np.array(raw_b, dtype=float)
    if a.ndim != 2 or a.shape[1] < 1 or a.shape[0] != a.shape[1] + 1:
        raise ShapeMismatch(f"A must have shape (n+1, n), got {a.shape}")
    if b.shape != (a.shape[0],):
        raise ShapeMismatch(f"b must have length {a.shape[0]}, got shape {b.shape}")
    norms = np.linalg.norm(a, axis=1)
    for i, nrm in enumerate(norms):
        if not nrm > ZERO_ROW_TOL:
            raise ZeroRow(i)
    scale = np.where(np.abs(norms - 1.0) <= _UNIT_SKIP, 1.0, norms)
    return Simplex(a / scale[:, None], b / scale, cond_max=cond_max)


def as_point(s: Simplex, p) -> np.ndarray:
    x = np.atleast_1d(np.asarray(p, dtype=float))
    if x.shape != (s.dim,):
        raise ShapeMismatch(f"point must have {s.dim} coordinates")
    return x


def evaluate_residuals(s: Simplex, p) -> np.ndarray:
    """Signed distances ``b - A p``; positive on the feasible side of each facet."""
    return s.b_vector - s.a_matrix @ as_point(s, p)


def solve(m: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    """Solve a square system, mapping singularity to ``SingularHead``."""
    try:
        x = np.linalg.solve(m, rhs)
    except np.linalg.LinAlgError as exc:
        raise SingularHead(str(exc)) from exc
    if not np.all(np.isfinite(x)):
        raise SingularHead("head block solve produced non-finite values")
    return x


class PointClass(enum.Enum):
    STRICT_INTERIOR = "StrictInterior"
    BOUNDARY = "Boundary"
    EXTERIOR = "Exterior"


def classify_point(s: Simplex, p, interior_tol: float = INTERIOR_TOL) -> PointClass:
    smin = evaluate_residuals(s, p).min()
    if smin > interior_tol:
        return PointClass.STRICT_INTERIOR
    if abs(smin) <= interior_tol:
        return PointClass.BOUNDARY
    return PointClass.EXTERIOR


def is_interior(s: Simplex, p, interior_tol: float = INTERIOR_TOL) -> bool:
    return classify_point(s, p, interior_tol) is PointClass.STRICT_INTERIOR
