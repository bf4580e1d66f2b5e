"""Fusion-ring combinatorics: validation, invertible actions, transitive
(generalized near-group) structure, gradings, premodular data, and a
brute-force enumerator for small rings."""

from fusionring._kernels import BACKEND
from fusionring.enumeration import (
    EnumerationQuery,
    build_candidate,
    enumerate_gng,
    estimate_candidates,
)
from fusionring.errors import (
    FusionRingError,
    GuardExceededError,
    HypothesisFailError,
    IllDefinedGradingError,
    InconsistentDataError,
    InvalidDescriptorError,
    InvertibleInputError,
    MultiplicityViolationError,
    NegativeEntryError,
    NonconvergenceError,
    NotAssociativeError,
    NotGngError,
    NotInvertibleError,
    NotSubringError,
    ParseError,
    PointedInputError,
    RankLimitError,
    ShapeMismatchError,
    UnknownLabelError,
    ValidationFailedError,
)
from fusionring.families import (
    build_family,
    ising_ring,
    near_group_ring,
    pointed_ring,
    psl2_level8_ring,
    su2_ring,
    svect_ring,
    tambara_yamagami_ring,
    yang_lee_ring,
)
from fusionring.gng import (
    FactorizationResult,
    GngType,
    Variant,
    VariantCall,
    classify_variant,
    detect_gng,
    exact_factorization_check,
    exact_factorization_pt_ad,
    gng_type,
    verify_fusion_rules,
    verify_structure,
)
from fusionring.grading import (
    GradingInfo,
    adjoint_subring,
    component_dims,
    enumerate_subrings,
    pointed_subring,
    universal_grading,
    verify_component_structure,
    verify_subring_correspondence,
)
from fusionring.groups import (
    GroupTable,
    group_by_name,
    groups_of_order,
    identify,
    tables_isomorphic,
)
from fusionring.invertibles import (
    invertible_action,
    invertible_group,
    invertible_labels,
    orbits_noninvertible,
    self_product_decomposition,
    stabilizer,
)
from fusionring.isomorphism import canonical_form, canonical_key, rings_isomorphic
from fusionring.premodular import (
    MuegerClass,
    MuegerReport,
    PremodularData,
    balancing_matrix,
    balancing_residual,
    braided_family_data,
    dispatch_degenerate_class,
    ising_standard_data,
    mueger_center_classify,
    mueger_centralizer,
    pointed_metric_data,
    product_data,
    psl2_level8_data,
    second_indicators,
    solve_modular_twists,
    svect_data,
    verify_slightly_degenerate,
    verlinde_check,
    verlinde_tensor,
    yang_lee_standard_data,
)
from fusionring.reports import Check, ValidationReport, VerificationReport, Violation
from fusionring.ring import (
    FusionRing,
    deligne_product,
    is_closed,
    restrict,
    ring_is_valid,
    subring_closure,
    validate_ring,
)
from fusionring.serialize import parse_document, parse_ring, serialize_ring

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
