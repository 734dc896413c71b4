"""Run every identity the library relies on against a single simplex.

Each check reports the measured quantity next to the tolerance it was held to.
Check names are part of the command line output format and must stay stable.
"""

from __future__ import annotations

import numpy as np

from .center import SolverConfig, cross_check_center
from .construct import enumerate_vertices
from .errors import SimplexError
from .gamma import GAMMA_POS_TOL, BoundedCertificate, check_bounded, compute_gamma, evaluate_invariant, reconstruction_error
from .probe import axis_distances
from .simplex import Simplex, evaluate_residuals

RECONSTRUCTION_TOL = 1e-10
CENTER_REL_TOL = 1e-9
SPREAD_REL_TOL = 1e-9
AXIS_HARMONIC_TOL = 1e-9

CHECK_NAMES = (
    "eq3_reconstruction",
    "eq16_gamma_positive",
    "eq24_center_relation",
    "eq25_invariant_spread",
    "eq26_last_residual",
    "eq27_residual_ratios",
    "eq18_axis_harmonic",
)


def _check(name, measured, tol, passed=None, **extra):
    ok = bool(measured <= tol) if passed is None else bool(passed)
    out = {"name": name, "passed": ok, "measured": float(measured), "tolerance": float(tol)}
    out.update(extra)
    return out


def _skipped(name, reason):
    return {"name": name, "passed": False, "measured": None, "tolerance": None, "skipped": reason}


def sample_interior(s: Simplex, count: int, rng: np.random.Generator) -> np.ndarray:
    """Uniform points in the simplex via flat Dirichlet weights on the vertices."""
    verts = enumerate_vertices(s)
    return rng.dirichlet(np.ones(s.dim + 1), size=count) @ verts


def verify_simplex(s: Simplex, samples: int = 100, seed: int = 0, cfg: SolverConfig | None = None) -> dict:
    n = s.dim
    g = compute_gamma(s)
    checks = [_check("eq3_reconstruction", reconstruction_error(s, g), RECONSTRUCTION_TOL)]

    cert = check_bounded(s)
    bounded = isinstance(cert, BoundedCertificate)
    checks.append(
        _check(
            "eq16_gamma_positive",
            float(g.gamma.min()),
            GAMMA_POS_TOL,
            passed=bounded,
            comparison="greater",
            recession_direction_found=getattr(cert, "witness_direction", None) is not None,
        )
    )
    if not bounded or not g.invariant_constant > 0:
        reason = "simplex is unbounded" if not bounded else "interior is empty"
        checks += [_skipped(name, reason) for name in CHECK_NAMES[2:]]
        return {"passed": False, "checks": checks}

    try:
        res = cross_check_center(s, cfg)
    except SimplexError as exc:
        checks.append(_skipped("eq24_center_relation", f"{exc.code}: {exc}"))
        checks += [_skipped(name, "no center") for name in CHECK_NAMES[3:]]
        return {"passed": False, "checks": checks}
    checks.append(
        _check("eq24_center_relation", res.eq24_residual, CENTER_REL_TOL, newton_discrepancy=res.discrepancy)
    )

    const = g.invariant_constant
    rng = np.random.default_rng(seed)
    pts = sample_interior(s, samples, rng) if samples > 0 else np.empty((0, n))
    pts = [p for p in pts if evaluate_residuals(s, p).min() > 1e-12]
    values = np.array([evaluate_invariant(s, g, p) for p in pts])
    tol = SPREAD_REL_TOL * (1 + abs(const))
    if values.size:
        spread = float(values.max() - values.min())
        deviation = float(np.abs(values - const).max())
        checks.append(
            _check(
                "eq25_invariant_spread",
                spread,
                tol,
                passed=spread <= tol and deviation <= tol,
                deviation_from_constant=deviation,
                samples=int(values.size),
            )
        )
    else:
        checks.append(_skipped("eq25_invariant_spread", "no interior samples requested"))

    actual = evaluate_residuals(s, res.center)
    expected_last = const / (n + 1)
    checks.append(
        _check("eq26_last_residual", abs(actual[-1] - expected_last) / expected_last, CENTER_REL_TOL)
    )
    expected_head = expected_last / g.gamma
    checks.append(
        _check(
            "eq27_residual_ratios",
            float(np.max(np.abs(actual[:-1] - expected_head) / expected_head)),
            CENTER_REL_TOL,
        )
    )

    worst = 0.0
    for k in range(n):
        d = axis_distances(s, res.center, k)
        worst = max(worst, abs(sum(1.0 / x for x in d if x is not None)))
    checks.append(_check("eq18_axis_harmonic", worst, AXIS_HARMONIC_TOL))

    return {"passed": all(c["passed"] for c in checks), "checks": checks}
