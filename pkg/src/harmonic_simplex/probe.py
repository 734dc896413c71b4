"""Lines through an interior point: facet crossing distances and harmonic points.

Distances are signed along the direction of travel: ``d > 0`` means the facet
is reached moving forward.  A facet parallel to the line has no crossing; its
distance is ``None`` and its reciprocal counts as zero.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NoIntersection, NotInterior, NotUnit, ParallelToLastFacet, ShapeMismatch, ZeroBeta
from .gamma import GammaDecomposition
from .simplex import INTERIOR_TOL, Simplex, as_point, evaluate_residuals, solve

PARALLEL_TOL = 1e-12
UNIT_TOL = 1e-12
HARMONIC_TOL = 1e-11


@dataclass(frozen=True)
class LineProbe:
    base: np.ndarray
    direction: np.ndarray
    distances: list  # n+1 entries, float or None
    betas: np.ndarray

    def reciprocal_sum(self) -> float:
        return float(sum(1.0 / d for d in self.distances if d is not None))


def _interior_residuals(s: Simplex, p, interior_tol: float = INTERIOR_TOL) -> tuple[np.ndarray, np.ndarray]:
    x = as_point(s, p)
    r = evaluate_residuals(s, x)
    if not r.min() > interior_tol:
        raise NotInterior("base point is not strictly interior")
    return x, r


def _unit(s: Simplex, v) -> np.ndarray:
    v = np.atleast_1d(np.asarray(v, dtype=float))
    if v.shape != (s.dim,):
        raise ShapeMismatch(f"direction must have {s.dim} components")
    if abs(np.linalg.norm(v) - 1.0) > UNIT_TOL:
        raise NotUnit(f"direction norm {np.linalg.norm(v):.17g} is not 1")
    return v


def probe_line(s: Simplex, p, v, parallel_tol: float = PARALLEL_TOL) -> LineProbe:
    x, r = _interior_residuals(s, p)
    v = _unit(s, v)
    rates = s.a_matrix @ v
    distances = [float(ri / ci) if abs(ci) > parallel_tol else None for ri, ci in zip(r, rates)]
    return LineProbe(base=x, direction=v, distances=distances, betas=rates[:-1].copy())


def axis_distances(s: Simplex, p, axis: int, parallel_tol: float = PARALLEL_TOL) -> list:
    """Crossing distances along coordinate ``axis`` (0-based)."""
    if not 0 <= axis < s.dim:
        raise ShapeMismatch(f"axis must be in [0, {s.dim})")
    e = np.zeros(s.dim)
    e[axis] = 1.0
    return probe_line(s, p, e, parallel_tol).distances


def direction_from_beta(s: Simplex, beta) -> tuple[np.ndarray, float]:
    """Unit direction ``v`` with ``head @ v`` proportional to ``beta``.

    Returns ``(v, scale)`` where ``head @ (scale * v) == beta``.
    """
    beta = np.atleast_1d(np.asarray(beta, dtype=float))
    if beta.shape != (s.dim,):
        raise ShapeMismatch(f"beta must have {s.dim} components")
    if not np.any(beta):
        raise ZeroBeta("beta must not be the zero vector")
    w = solve(s.head, beta)
    scale = float(np.linalg.norm(w))
    return w / scale, scale


def last_facet_distance(
    s: Simplex, g: GammaDecomposition, p, probe: LineProbe, parallel_tol: float = PARALLEL_TOL
) -> float:
    """Distance to the last facet computed from the head-row rates alone.

    Since ``A_last = -sum_i gamma_i A_i``, the rate of approach to the last
    facet is ``-gamma . beta``; no product with ``A_last`` is formed.
    """
    _, r = _interior_residuals(s, p)
    rate = float(g.gamma @ probe.betas)
    if abs(rate) <= parallel_tol:
        raise ParallelToLastFacet("line is parallel to the last facet")
    return -float(r[-1]) / rate


def harmonic_function(s: Simplex, p, v, t: float, parallel_tol: float = PARALLEL_TOL) -> float:
    """Sum of reciprocal signed distances from ``p + t v`` to all facets."""
    rates = s.a_matrix @ np.asarray(v, dtype=float)
    r = evaluate_residuals(s, as_point(s, p) + t * np.asarray(v, dtype=float))
    keep = np.abs(rates) > parallel_tol
    return float(np.sum(rates[keep] / r[keep]))


def harmonic_point_on_line(
    s: Simplex,
    p,
    v,
    tol: float = HARMONIC_TOL,
    parallel_tol: float = PARALLEL_TOL,
    max_iter: int = 200,
) -> tuple[np.ndarray, float]:
    """Find the point ``p + t v`` where reciprocal facet distances sum to zero.

    The function ``g(t) = sum_i c_i / (S_i - t c_i)`` with ``c_i = A_i . v``
    is strictly increasing on the feasible interval and has poles at both
    ends, so the root is unique.  Newton steps are used while they stay
    inside the current bracket, bisection otherwise.
    """
    x, r = _interior_residuals(s, p)
    v = _unit(s, v)
    c = s.a_matrix @ v
    keep = np.abs(c) > parallel_tol
    if not (np.any(c[keep] > 0) and np.any(c[keep] < 0)):
        raise NoIntersection("line leaves the simplex in at least one direction")
    ahead, behind = keep & (c > 0), keep & (c < 0)
    hi = float(np.min(r[ahead] / c[ahead]))
    lo = float(np.max(r[behind] / c[behind]))
    a, b, ck = s.a_matrix[keep], s.b_vector[keep], c[keep]

    def g_and_slope(t):
        # residuals taken at the actual point so the root matches what callers measure
        q = ck / (b - a @ (x + t * v))
        return float(q.sum()), float(q @ q)

    t = 0.0
    best_t, best_g = t, np.inf
    for _ in range(max_iter):
        gt, slope = g_and_slope(t)
        if abs(gt) < abs(best_g):
            best_t, best_g = t, gt
        if abs(gt) <= 0.01 * tol:
            break
        if gt > 0:
            hi = t
        else:
            lo = t
        t_new = t - gt / slope
        if not lo < t_new < hi:
            t_new = 0.5 * (lo + hi)
        if t_new == t or hi - lo <= 4 * np.finfo(float).eps * max(1.0, abs(t)):
            break
        t = t_new
    return x + best_t * v, best_t
