"""Hyperbolic-type metrics of the unit ball and punctured space.

Evaluators for the distance-ratio, hyperbolic, quasihyperbolic, chordal and
cross-ratio-supremum metrics; Mobius self-maps of the ball with their
bilipschitz data; certified quasihyperbolic intervals; the planar
quasiconformal distortion apparatus; and multi-start searches for the sharp
comparison constants between these metrics.
"""

from .errors import (
    BudgetExceededError,
    ConvergenceError,
    DimensionMismatchError,
    DomainError,
)
from .geometry import INFINITY, angle, as_point, is_infinity, star
from .maps import (
    RadialStretch,
    koebe,
    koebe_density_ratio,
    koebe_derivative,
    koebe_k_ratio,
    radial_stretch,
    slit_plane_distance,
)
from .metrics import (
    PuncturedSpace,
    UnitBall,
    chordal,
    cross_ratio,
    j_ball,
    j_punctured,
    k_punctured,
    rho_ball,
    seittenranta_delta,
)
from .mobius import (
    BallMobius,
    bilipschitz_constant,
    hyperplane_reflection,
    mobius_norm_identity,
    mobius_to_origin,
    plane_rotation,
    sphere_inversion,
)
from .qhball import (
    CertifiedDistance,
    k_ball_bounds,
    k_ball_bounds_many,
    k_ball_radial,
    k_ball_refined,
    k_ball_refined_many,
)
from .search import (
    RatioProblem,
    SearchResult,
    chordal_qh_problem,
    explore_j_quasiinvariance,
    j_quasiinvariance_problem,
    maximize,
    mobius_sharpness_table,
    monotone_scan,
    quasiinvariance_verdict,
    rho_invariance_problem,
    richardson_limit,
    sum_ratio_problem,
)
from .special import (
    DistortionParams,
    agm,
    arctanh_quotient,
    diameter_family_ratio,
    distortion_growth_check,
    eta_quasisymmetry,
    grotzsch_lambda_bounds,
    grotzsch_mu,
    grotzsch_mu_inverse,
    j_rho_alignment_ratio,
    phi_distortion,
    seittenranta_b,
    sum_ratio_max,
    sum_ratio_objective,
)
from .verify import CheckResult, run_suites

__version__ = "0.1.0"
