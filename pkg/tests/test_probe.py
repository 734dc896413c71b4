import numpy as np
import pytest

from harmonic_simplex import (
    GeneratorConfig,
    Simplex,
    axis_distances,
    center_closed_form,
    compute_gamma,
    direction_from_beta,
    enumerate_vertices,
    harmonic_function,
    harmonic_point_on_line,
    last_facet_distance,
    probe_line,
    random_bounded_simplex,
)
from harmonic_simplex.errors import NotInterior, NotUnit, ParallelToLastFacet, ZeroBeta

from conftest import R2, R3


def rounding_floor(s, q, v):
    """Size of the reciprocal-distance sum produced by rounding alone at ``q``."""
    c = s.a_matrix @ v
    r = s.b_vector - s.a_matrix @ q
    scale = np.abs(s.b_vector) + np.abs(s.a_matrix) @ np.abs(q)
    return np.finfo(float).eps * np.sum(np.abs(c) * scale / r**2)


def bisect_harmonic(s, p, v):
    """Plain bisection on the reciprocal-distance sum, written without the library's root finder."""
    p, v = np.asarray(p, float), np.asarray(v, float)
    c = s.a_matrix @ v
    r = s.b_vector - s.a_matrix @ p
    hi = min(ri / ci for ri, ci in zip(r, c) if ci > 1e-12)
    lo = max(ri / ci for ri, ci in zip(r, c) if ci < -1e-12)

    def g(t):
        return sum(ci / (ri - t * ci) for ri, ci in zip(r, c) if abs(ci) > 1e-12)

    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if g(mid) > 0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def test_probe_t2(t2):
    pr = probe_line(t2, [0.25, 0.25], [1.0, 0.0])
    assert pr.distances[0] == pytest.approx(-0.25, abs=1e-15)
    assert pr.distances[1] is None
    assert pr.distances[2] == pytest.approx(0.5, abs=1e-15)
    np.testing.assert_array_equal(pr.betas, [-1.0, 0.0])


def test_probe_t2_center(t2):
    pr = probe_line(t2, [1 / 3, 1 / 3], [1.0, 0.0])
    assert pr.distances[0] == pytest.approx(-1 / 3, abs=1e-15)
    assert pr.distances[1] is None
    assert pr.distances[2] == pytest.approx(1 / 3, abs=1e-15)


def test_probe_hits_hyperplanes():
    rng = np.random.default_rng(1)
    s = random_bounded_simplex(GeneratorConfig(dim=4, seed=3))
    p = enumerate_vertices(s).mean(axis=0)
    for _ in range(20):
        v = rng.normal(size=4)
        v /= np.linalg.norm(v)
        pr = probe_line(s, p, v)
        for i, d in enumerate(pr.distances):
            q = p + d * v
            assert abs(s.b_vector[i] - s.a_matrix[i] @ q) <= 1e-10


def test_probe_errors(t2):
    with pytest.raises(NotInterior):
        probe_line(t2, [0.0, 0.5], [1.0, 0.0])
    with pytest.raises(NotUnit):
        probe_line(t2, [0.25, 0.25], [1.0, 1.0])


def test_axis_distances(t2, e2):
    d = axis_distances(t2, [1 / 3, 1 / 3], 0)
    assert d[1] is None
    np.testing.assert_allclose([d[0], d[2]], [-1 / 3, 1 / 3], atol=1e-15)
    d = axis_distances(t2, [1 / 3, 1 / 3], 1)
    assert d[0] is None
    np.testing.assert_allclose([d[1], d[2]], [-1 / 3, 1 / 3], atol=1e-15)
    d = axis_distances(e2, [0.5, R3 / 6], 1)
    np.testing.assert_allclose(d, [-R3 / 6, R3 / 3, R3 / 3], atol=1e-15)


def test_direction_from_beta(t2):
    v, scale = direction_from_beta(t2, [-1.0, 0.0])
    np.testing.assert_array_equal(v, [1.0, 0.0])
    assert scale == 1.0
    v, _ = direction_from_beta(t2, [0.0, -1.0])
    np.testing.assert_array_equal(v, [0.0, 1.0])
    with pytest.raises(ZeroBeta):
        direction_from_beta(t2, [0.0, 0.0])


def test_direction_round_trip():
    rng = np.random.default_rng(2)
    for seed in range(10):
        s = random_bounded_simplex(GeneratorConfig(dim=5, seed=seed))
        u = rng.normal(size=5)
        u /= np.linalg.norm(u)
        v, scale = direction_from_beta(s, s.head @ u)
        np.testing.assert_allclose(v, u, atol=1e-10)
        assert scale == pytest.approx(1.0, abs=1e-10)


def test_last_facet_distance_t2(t2):
    g = compute_gamma(t2)
    v, _ = direction_from_beta(t2, [-1.0, 0.0])
    pr = probe_line(t2, [0.25, 0.25], v)
    assert last_facet_distance(t2, g, [0.25, 0.25], pr) == pytest.approx(0.5, abs=1e-15)
    pr = probe_line(t2, [0.25, 0.25], [0.0, 1.0])
    assert last_facet_distance(t2, g, [0.25, 0.25], pr) == pytest.approx(0.5, abs=1e-15)


def test_last_facet_distance_escapes_when_flipped(flipped_t2):
    g = compute_gamma(flipped_t2)
    v, _ = direction_from_beta(flipped_t2, [-1.0, 0.0])
    pr = probe_line(flipped_t2, [0.25, 0.25], v)
    assert last_facet_distance(flipped_t2, g, [0.25, 0.25], pr) < 0


def test_last_facet_parallel(t2):
    g = compute_gamma(t2)
    pr = probe_line(t2, [0.25, 0.25], [R2, -R2])
    with pytest.raises(ParallelToLastFacet):
        last_facet_distance(t2, g, [0.25, 0.25], pr)


def test_harmonic_point_t2(t2):
    q, t = harmonic_point_on_line(t2, [0.25, 0.25], [1.0, 0.0])
    expected = bisect_harmonic(t2, [0.25, 0.25], [1.0, 0.0])
    # midpoint of the chord 0 <= x <= 0.75 at y = 0.25
    assert expected == pytest.approx(0.125, abs=1e-14)
    assert t == pytest.approx(expected, abs=1e-12)
    np.testing.assert_allclose(q, [0.375, 0.25], atol=1e-12)
    assert abs(harmonic_function(t2, [0.25, 0.25], [1.0, 0.0], t)) <= 1e-11


def test_harmonic_point_interval(interval):
    q, t = harmonic_point_on_line(interval, [0.3], [1.0])
    assert t == pytest.approx(0.2, abs=1e-14)
    assert q[0] == pytest.approx(0.5, abs=1e-14)


def test_harmonic_point_through_center(t2):
    rng = np.random.default_rng(0)
    for _ in range(20):
        v = rng.normal(size=2)
        v /= np.linalg.norm(v)
        _, t = harmonic_point_on_line(t2, [1 / 3, 1 / 3], v)
        assert abs(t) <= 1e-12


@pytest.mark.parametrize("dim", [1, 2, 3, 6, 10])
def test_harmonic_point_matches_bisection(dim):
    rng = np.random.default_rng(dim)
    for seed in range(10):
        s = random_bounded_simplex(GeneratorConfig(dim=dim, seed=seed))
        p = rng.dirichlet(np.ones(dim + 1)) @ enumerate_vertices(s)
        v = rng.normal(size=dim)
        v /= np.linalg.norm(v)
        q, t = harmonic_point_on_line(s, p, v)
        assert t == pytest.approx(bisect_harmonic(s, p, v), abs=1e-9)
        assert abs(harmonic_function(s, p, v, t)) <= max(1e-11, 200 * rounding_floor(s, q, v))
        # strictly increasing: values just either side straddle zero
        assert harmonic_function(s, p, v, t - 1e-6) < 0 < harmonic_function(s, p, v, t + 1e-6)


def test_beta_construction_reaches_last_facet():
    for dim in (2, 3, 5, 9):
        for seed in range(5):
            s = random_bounded_simplex(GeneratorConfig(dim=dim, seed=seed))
            g = compute_gamma(s)
            p = center_closed_form(s, g).center
            for k in range(dim):
                beta = np.zeros(dim)
                beta[k] = -1.0
                v, _ = direction_from_beta(s, beta)
                assert last_facet_distance(s, g, p, probe_line(s, p, v)) > 0


def test_parallel_facet_contributes_nothing():
    # horizontal line in T2 is parallel to facet 2 (y >= 0)
    s = Simplex([[-1.0, 0.0], [0.0, -1.0], [R2, R2]], [0.0, 0.0, R2])
    full = harmonic_function(s, [0.25, 0.25], [1.0, 0.0], 0.0)
    assert full == pytest.approx(-1 / 0.25 + 1 / 0.5, abs=1e-14)
