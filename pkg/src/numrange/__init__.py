"""Numerical ranges of complex matrices.

Boundary atlases via adaptive support-function sampling, one-sided
curvature classification of boundary points, spectral cross-checks,
inverse-range solves, and probe-sequence replays, plus a gallery of
structured matrices and 1-D Schrödinger discretizations.
"""

from .boundary import (
    BoundaryAtlas,
    ClassifiedPoint,
    CornerCandidate,
    Degeneracy,
    SupportSample,
    affine_transform,
    classify_boundary,
    compute_boundary,
    degeneracy_check,
    normal_cone_at,
    support_sample,
)
from .geometry import (
    BoundaryClass,
    CanonicalFrame,
    CurvatureEstimate,
    canonical_frame,
    classify_point,
    curvature_estimates,
    example_curve,
    inscribed_disk_radius,
    support_curvature,
)
from .linalg import (
    HermitianEig,
    eig_general,
    eig_hermitian,
    rayleigh,
    rotated_hermitian_part,
    smallest_singular_value,
)
from .matio import load_matrix, save_matrix
from .spectral import (
    NormalizationRecord,
    TheoremReport,
    boundary_eigen_normality_check,
    corner_eigenvalue_check,
    discretization_sequence_probe,
    k_functional,
    normalize_at,
    oscillator_product_check,
    sector_containment_check,
    spectrum_membership_check,
)
from .witness import (
    WitnessReport,
    WitnessSequence,
    au_n_decay_probe,
    build_witness_sequence,
    inverse_numrange,
    replay_inequalities,
    two_dim_compression,
)

__version__ = "0.1.0"
