"""Harmonic center of an n-simplex given as ``A x <= b``."""

from .center import (
    CenterResult,
    Method,
    SolverConfig,
    barrier_gradient,
    barrier_hessian,
    barrier_potential,
    balance_residual,
    center_closed_form,
    center_newton,
    cross_check_center,
)
from .construct import (
    GeneratorConfig,
    enumerate_vertices,
    make_equal_gamma_simplex,
    random_bounded_simplex,
    simplex_from_vertices,
)
from .errors import SimplexError
from .gamma import (
    BoundedCertificate,
    GammaDecomposition,
    UnboundedCertificate,
    check_bounded,
    compute_gamma,
    evaluate_invariant,
    find_recession_direction,
    reconstruction_error,
)
from .probe import (
    LineProbe,
    axis_distances,
    direction_from_beta,
    harmonic_function,
    harmonic_point_on_line,
    last_facet_distance,
    probe_line,
)
from .simplex import PointClass, Simplex, classify_point, evaluate_residuals, normalize_rows

__version__ = "0.1.0"
