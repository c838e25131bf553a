"""Finite-dimensional JB*-algebras: Jordan arithmetic, projection lattices,
comparison of projections, centre-valued traces and finitely additive
measures, with seeded verification suites."""
from .algebra import (
    Algebra,
    AlbertFactor,
    Element,
    MatrixFactor,
    Projection,
    SpectralResolution,
    SpinFactor,
    SymmetricFactor,
    functional_calculus,
    involution,
    is_positive,
    is_self_adjoint,
    jordan_mul,
    negative_part,
    operator_norm,
    operator_norm_sa,
    pairing,
    positive_part,
    power,
    spectral_resolution,
    sqrt_positive,
    triple_product,
    u_bilinear,
    u_map,
)
from .comparison import (
    christensen_pair,
    distance,
    e_pm_construct,
    equivalent,
    exchange_symmetry,
    halve,
    inverse_sqrt,
    isoclinic_mid,
    isoclinic_model,
    reversible_pair,
    swap_symmetry,
)
from .errors import *  # noqa: F401,F403
from .lattice import central_cover, complement, join, leq, meet, orthogonal, range_projection
from .measures import (
    Measure,
    additivity_residual,
    alpha,
    fit_linear_functional,
    from_density,
    kadison_s2,
    quasi_linear_extend,
    spin_counterexample,
    symmetry_sup_check,
    variation,
)
from .suites import SUITES, run_suite
from .traces import CentreValue, Ordering, normalized_trace, subprojection_with_trace, trace_compare

__version__ = "0.1.0"
