"""Building simplexes: vertices, seeded random generation, equal-multiplier form."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateFacetSystem, DegenerateSum, EmptyInterior, GenerationFailed, SingularHead
from .gamma import compute_gamma
from .simplex import COND_MAX, Simplex, normalize_rows

MAX_REJECTIONS = 1000


def enumerate_vertices(s: Simplex, cond_max: float = COND_MAX) -> np.ndarray:
    """Vertices as rows; vertex ``i`` is where every facet except ``i`` meets."""
    n = s.dim
    verts = np.empty((n + 1, n))
    for i in range(n + 1):
        rows = np.delete(np.arange(n + 1), i)
        m = s.a_matrix[rows]
        if np.linalg.cond(m) > cond_max:
            raise DegenerateFacetSystem(i)
        verts[i] = np.linalg.solve(m, s.b_vector[rows])
    return verts


def simplex_from_vertices(vertices, cond_max: float = COND_MAX) -> Simplex:
    """Half-space form of the convex hull of ``n+1`` affinely independent points.

    Row ``i`` is the facet opposite vertex ``i``.  The inequalities are the
    barycentric coordinates ``lambda_i(x) >= 0``: with ``M = [V | 1]`` the
    coordinates are ``M^-T [x; 1]``.
    """
    v = np.asarray(vertices, dtype=float)
    n = v.shape[1]
    if v.shape != (n + 1, n):
        raise ValueError(f"need n+1 points in n dimensions, got shape {v.shape}")
    m = np.hstack([v, np.ones((n + 1, 1))])
    if np.linalg.cond(m) > cond_max:
        raise SingularHead("vertices are affinely dependent")
    w = np.linalg.inv(m)
    return normalize_rows(-w[:n].T, w[n], cond_max=cond_max)


@dataclass(frozen=True)
class GeneratorConfig:
    dim: int
    seed: int = 0
    vertex_scale: float = 1.0
    min_condition: float = 1e-6

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dim must be at least 1")
        if not self.vertex_scale > 0:
            raise ValueError("vertex_scale must be positive")
        if not 0 < self.min_condition <= 1:
            raise ValueError("min_condition must lie in (0, 1]")


def random_bounded_simplex(cfg: GeneratorConfig) -> Simplex:
    rng = np.random.default_rng(cfg.seed)
    n = cfg.dim
    limit = 1.0 / cfg.min_condition
    for _ in range(MAX_REJECTIONS):
        verts = cfg.vertex_scale * rng.standard_normal((n + 1, n))
        if np.linalg.cond(verts[1:] - verts[0]) > limit:
            continue
        try:
            s = simplex_from_vertices(verts)
        except SingularHead:
            continue
        if np.linalg.cond(s.head) > limit:
            continue
        return s
    raise GenerationFailed(f"no acceptable simplex after {MAX_REJECTIONS} draws")


def make_equal_gamma_simplex(head_rows, head_b, last_b: float) -> tuple[Simplex, float]:
    """Append the normalized negative sum of the head rows as the last facet.

    All multipliers then equal ``1 / ||sum of head rows||``.  ``last_b`` is
    the caller's offset for the new facet and must leave a nonempty interior.
    Head rows are normalized first if they are not unit vectors.
    """
    head = np.atleast_2d(np.asarray(head_rows, dtype=float))
    hb = np.atleast_1d(np.asarray(head_b, dtype=float))
    norms = np.linalg.norm(head, axis=1)
    head, hb = head / norms[:, None], hb / norms
    total = head.sum(axis=0)
    size = float(np.linalg.norm(total))
    if size <= 1e-12:
        raise DegenerateSum("head rows sum to the zero vector")
    gamma = 1.0 / size
    s = Simplex(np.vstack([head, -gamma * total]), np.append(hb, last_b))
    if not compute_gamma(s).invariant_constant > 0:
        raise EmptyInterior("the last facet leaves no interior")
    return s, gamma
