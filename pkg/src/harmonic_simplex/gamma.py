"""Row multipliers of the last constraint, boundedness, and the invariant sum.

The last row of a simplex satisfies ``sum_i gamma_i * A_i + A_last = 0`` for a
unique vector ``gamma`` (the head block is nonsingular).  Boundedness requires
every ``gamma_i > 0``, and for every interior point

    S_last + sum_i gamma_i * S_i == b_last + sum_i gamma_i * b_i

which generalizes Viviani's theorem for the equilateral triangle.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import NotInterior
from .simplex import INTERIOR_TOL, Simplex, evaluate_residuals, is_interior, solve

GAMMA_POS_TOL = 1e-10
RECESSION_TOL = 1e-10


@dataclass(frozen=True)
class GammaDecomposition:
    gamma: np.ndarray
    b0: float
    invariant_constant: float
    bounded_by_gamma: bool
    # indices (0-based) whose multiplier lies within +-GAMMA_POS_TOL of zero
    degenerate: tuple = ()


def compute_gamma(s: Simplex, gamma_pos_tol: float = GAMMA_POS_TOL) -> GammaDecomposition:
    gamma = solve(s.head.T, -s.last)
    b0 = float(gamma @ s.head_b)
    degenerate = tuple(int(i) for i in np.flatnonzero(np.abs(gamma) <= gamma_pos_tol))
    return GammaDecomposition(
        gamma=gamma,
        b0=b0,
        invariant_constant=s.last_b + b0,
        bounded_by_gamma=bool(gamma.min() > gamma_pos_tol),
        degenerate=degenerate,
    )


def reconstruction_error(s: Simplex, g: GammaDecomposition) -> float:
    """Infinity norm of ``sum_i gamma_i A_i + A_last``."""
    return float(np.abs(g.gamma @ s.head + s.last).max())


def find_recession_direction(s: Simplex, tol: float = RECESSION_TOL):
    """Return a unit ``v`` with ``A v <= tol`` componentwise, or ``None``.

    For each axis ``k`` the direction solving ``head @ v = -e_k`` moves away
    from facet ``k`` and parallel to every other head facet, so it escapes to
    infinity exactly when it does not approach the last facet.  All escaping
    candidates are summed into one witness.  This never consults the
    multipliers, so it can be used to cross-check them.
    """
    n = s.dim
    escaping = []
    for k in range(n):
        beta = np.zeros(n)
        beta[k] = -1.0
        v = solve(s.head, beta)
        v /= np.linalg.norm(v)
        if s.last @ v <= tol:
            escaping.append(k)
    if not escaping:
        return None
    beta = np.zeros(n)
    beta[escaping] = -1.0
    v = solve(s.head, beta)
    v /= np.linalg.norm(v)
    if np.max(s.a_matrix @ v) > tol:
        return None
    return v


@dataclass(frozen=True)
class BoundedCertificate:
    gamma: np.ndarray
    bounded: bool = field(default=True, init=False)
    warnings: tuple = ()


@dataclass(frozen=True)
class UnboundedCertificate:
    gamma: np.ndarray
    # first 0-based index with gamma_k <= gamma_pos_tol, if any
    offending_index: int | None = None
    witness_direction: np.ndarray | None = None
    bounded: bool = field(default=False, init=False)
    warnings: tuple = ()


def _warnings(g: GammaDecomposition) -> tuple:
    return tuple(f"DegenerateGamma: gamma_{i + 1} = {g.gamma[i]:.3e} is numerically zero" for i in g.degenerate)


def check_bounded(s: Simplex, gamma_pos_tol: float = GAMMA_POS_TOL):
    """Certify boundedness using both the multiplier signs and a recession search.

    Positive multipliers are only a necessary condition, so a bounded
    certificate additionally requires that no recession direction was found.
    """
    g = compute_gamma(s, gamma_pos_tol)
    v = find_recession_direction(s)
    warns = _warnings(g)
    if g.bounded_by_gamma and v is None:
        return BoundedCertificate(gamma=g.gamma, warnings=warns)
    bad = np.flatnonzero(g.gamma <= gamma_pos_tol)
    return UnboundedCertificate(
        gamma=g.gamma,
        offending_index=int(bad[0]) if bad.size else None,
        witness_direction=v,
        warnings=warns,
    )


def evaluate_invariant(s: Simplex, g: GammaDecomposition, p, interior_tol: float = INTERIOR_TOL) -> float:
    """``S_last + sum_i gamma_i S_i`` at the strictly interior point ``p``."""
    if not is_interior(s, p, interior_tol):
        raise NotInterior("point is not strictly interior")
    r = evaluate_residuals(s, p)
    return float(r[-1] + g.gamma @ r[:-1])
