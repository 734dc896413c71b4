"""Harmonic (analytic) center of a simplex, by closed form and by Newton's method.

At the center ``H`` the multipliers balance the residuals,
``gamma_i * S_i(H) == S_last(H)`` for every head row.  Combined with the
invariant sum this pins every residual:

    S_last(H) = C / (n + 1),    S_i(H) = C / (gamma_i (n + 1))

where ``C`` is the invariant constant.  The coordinates then follow from the
head rows.  The iterative path minimizes ``-sum log S_i`` with damped Newton
steps and stops on the balance relation, which gives an independent check of
the closed form.
"""

from __future__ import annotations

import dataclasses
import enum
import logging
from dataclasses import dataclass

import numpy as np

from .construct import enumerate_vertices
from .errors import CrossCheckFailed, MaxIterations, NonpositiveConstant, StartNotInterior, Unbounded
from .gamma import GammaDecomposition, compute_gamma
from .simplex import INTERIOR_TOL, Simplex, as_point, evaluate_residuals, solve

logger = logging.getLogger(__name__)

CROSS_TOL = 1e-8


class Method(enum.Enum):
    CLOSED_FORM = "ClosedForm"
    NEWTON = "Newton"
    CROSS_CHECKED = "CrossChecked"


@dataclass(frozen=True)
class SolverConfig:
    eq24_tol: float = 1e-10
    grad_tol: float = 1e-12
    max_iterations: int = 100
    min_step: float = 1e-16
    backtrack_factor: float = 0.5
    fraction_to_boundary: float = 0.99

    def __post_init__(self):
        if not self.eq24_tol > 0 or not self.grad_tol > 0:
            raise ValueError("tolerances must be positive")
        if self.max_iterations < 0:
            raise ValueError("max_iterations must be nonnegative")
        if not 0 < self.min_step < 1:
            raise ValueError("min_step must lie in (0, 1)")
        if not 0 < self.backtrack_factor < 1:
            raise ValueError("backtrack_factor must lie in (0, 1)")
        if not 0 < self.fraction_to_boundary < 1:
            raise ValueError("fraction_to_boundary must lie in (0, 1)")


@dataclass(frozen=True)
class CenterResult:
    center: np.ndarray
    residuals_at_h: np.ndarray
    method: Method
    eq24_residual: float
    iterations: int = 0
    grad_norm: float = float("nan")
    discrepancy: float | None = None

    def to_json(self) -> dict:
        out = {
            "center": self.center.tolist(),
            "residuals": self.residuals_at_h.tolist(),
            "eq24_residual": self.eq24_residual,
            "method": self.method.value,
            "iterations": self.iterations,
            "grad_norm": self.grad_norm,
        }
        if self.discrepancy is not None:
            out["discrepancy"] = self.discrepancy
        return out


def balance_residual(gamma: np.ndarray, residuals: np.ndarray) -> float:
    """``max_i |gamma_i S_i - S_last| / S_last``; zero exactly at the center."""
    last = residuals[-1]
    return float(np.max(np.abs(gamma * residuals[:-1] - last)) / last)


def barrier_potential(s: Simplex, x) -> float:
    r = evaluate_residuals(s, x)
    if r.min() <= 0:
        return np.inf
    return float(-np.sum(np.log(r)))


def barrier_gradient(s: Simplex, x) -> np.ndarray:
    return s.a_matrix.T @ (1.0 / evaluate_residuals(s, x))


def barrier_hessian(s: Simplex, x) -> np.ndarray:
    scaled = s.a_matrix / evaluate_residuals(s, x)[:, None]
    return scaled.T @ scaled


def _require_bounded(g: GammaDecomposition):
    if not g.bounded_by_gamma:
        k = int(np.argmin(g.gamma))
        raise Unbounded(f"gamma_{k + 1} = {g.gamma[k]:.6g} is not positive", offending_index=k + 1)


def center_closed_form(s: Simplex, g: GammaDecomposition | None = None) -> CenterResult:
    g = compute_gamma(s) if g is None else g
    _require_bounded(g)
    const = g.invariant_constant
    if not const > 0:
        raise NonpositiveConstant(f"invariant constant {const:.6g} is not positive; the interior is empty")
    n = s.dim
    s_last = const / (n + 1)
    s_head = s_last / g.gamma
    x = solve(s.head, s.head_b - s_head)
    # measured on the recovered point so that a poor head solve shows up
    actual = evaluate_residuals(s, x)
    return CenterResult(
        center=x,
        residuals_at_h=np.append(s_head, s_last),
        method=Method.CLOSED_FORM,
        eq24_residual=balance_residual(g.gamma, actual),
        iterations=0,
        grad_norm=float(np.abs(s.a_matrix.T @ (1.0 / actual)).max()),
    )


def vertex_average(s: Simplex) -> np.ndarray:
    return enumerate_vertices(s).mean(axis=0)


def center_newton(
    s: Simplex,
    cfg: SolverConfig | None = None,
    start=None,
    g: GammaDecomposition | None = None,
) -> CenterResult:
    """Damped Newton on ``-sum log S_i`` from ``start`` (default: vertex average).

    Stops when the balance residual drops below ``cfg.eq24_tol`` or the
    gradient infinity norm below ``cfg.grad_tol``.
    """
    cfg = SolverConfig() if cfg is None else cfg
    g = compute_gamma(s) if g is None else g
    _require_bounded(g)
    a = s.a_matrix
    x = vertex_average(s) if start is None else as_point(s, start).copy()
    r = evaluate_residuals(s, x)
    if not r.min() > INTERIOR_TOL:
        raise StartNotInterior("start point is not strictly interior")

    best = (np.inf, x)
    for it in range(cfg.max_iterations + 1):
        grad = a.T @ (1.0 / r)
        gnorm = float(np.abs(grad).max())
        eq24 = balance_residual(g.gamma, r)
        if eq24 < best[0]:
            best = (eq24, x)
        if eq24 <= cfg.eq24_tol or gnorm <= cfg.grad_tol:
            return CenterResult(x, r, Method.NEWTON, eq24, iterations=it, grad_norm=gnorm)
        if it == cfg.max_iterations:
            break

        # Newton system H dx = -grad with H = B^T B, grad = B^T 1, B = A / S,
        # solved as least squares on B to avoid squaring its condition number
        scaled = a / r[:, None]
        dx = np.linalg.lstsq(scaled, -np.ones(len(r)), rcond=None)[0]
        rate = a @ dx
        ahead = rate > 0
        t_max = np.min(r[ahead] / rate[ahead]) if np.any(ahead) else np.inf
        step = min(1.0, cfg.fraction_to_boundary * t_max)
        # exact change in potential, accurate even when it is below eps * |potential|
        while step >= cfg.min_step:
            change = -np.sum(np.log1p(-step * rate / r))
            if change < 0:
                break
            step *= cfg.backtrack_factor
        else:
            logger.debug("line search stalled at iteration %d (eq24 %.3e)", it, eq24)
            break
        x = x + step * dx
        r = evaluate_residuals(s, x)

    raise MaxIterations(
        f"no convergence within {cfg.max_iterations} iterations (best eq24 residual {best[0]:.3e})",
        best=best[1],
        eq24_residual=best[0],
    )


def cross_check_center(
    s: Simplex, cfg: SolverConfig | None = None, cross_tol: float = CROSS_TOL
) -> CenterResult:
    """Run both paths and return the closed form if they agree to ``cross_tol``."""
    g = compute_gamma(s)
    closed = center_closed_form(s, g)
    newton = center_newton(s, cfg, g=g)
    disc = max(
        float(np.abs(closed.center - newton.center).max()),
        float(np.abs(closed.residuals_at_h - newton.residuals_at_h).max()),
    )
    if disc > cross_tol:
        raise CrossCheckFailed(
            f"closed form and Newton centers differ by {disc:.3e}", closed=closed, newton=newton, discrepancy=disc
        )
    return dataclasses.replace(closed, method=Method.CROSS_CHECKED, iterations=newton.iterations, discrepancy=disc)
