"""Harmonic and holomorphic functions on the unit disk via truncated
two-sided power series: Poisson-kernel Dirichlet extension, circle
quadrature, Parseval identities and shift operators, a von Neumann
inequality checker, convex integral means, and normal-family bounds.
"""

from ._backend import available_backends, backend_name
from .families import (
    ConvergenceReport,
    ExtractionResult,
    FunctionFamily,
    NormalityCertificate,
    coefficient_bound_from_function,
    convergence_equivalence_check,
    extract_subsequence,
    function_bound,
    function_bound_from_coefficients,
    normality_certificate,
)
from .means import (
    ConvexGauge,
    MeanTable,
    holomorphic_subconvex_scan,
    integral_mean,
    mean_scan,
    sup_mean,
)
from .operators import (
    ComplexPolynomial,
    ContractionOperator,
    NonConvergenceError,
    VonNeumannResult,
    VonNeumannTrial,
    apply_polynomial,
    operator_norm,
    random_contraction,
    random_polynomial,
    sup_modulus_on_disk,
    von_neumann_check,
    von_neumann_sweep,
)
from .parseval import (
    circle_inner_product,
    coefficient_inner_product,
    multiplication_correspondence_check,
    parseval_sum,
    shift_one_sided,
    shift_two_sided,
)
from .poisson import (
    BoundarySamples,
    MixedPolynomial,
    RadiusRecovery,
    as_mixed_polynomial,
    circle_grid,
    coefficients_at_radius,
    coefficients_from_boundary,
    extension_resolution_flag,
    harmonic_projection,
    kernel_decay_profile,
    kernel_mass,
    poisson_extend,
    poisson_extend_many,
    poisson_kernel,
    poisson_kernel_series,
)
from .rng import SplitMix64
from .series import (
    CirclePoint,
    DiskPoint,
    LaurentCoefficients,
    coefficient_tail_bound,
    dz_coefficients,
    dzbar_coefficients,
    eval_dz,
    eval_dzbar,
    eval_series,
    eval_series_many,
    is_holomorphic,
)

__version__ = "0.1.0"
