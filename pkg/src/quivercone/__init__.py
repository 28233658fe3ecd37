"""Semi-invariant cones of acyclic quivers, their faces, and brute-force oracles."""

from .cones import (
    Face,
    HCone,
    VCone,
    build_sigma_hrep,
    cone_dim,
    cones_equal,
    faces_up_to_codim,
    facets,
    rays,
)
from .dw import (
    DecompositionSet,
    DwReport,
    enumerate_ordered_decompositions,
    face_of_decomposition,
    is_well_covering,
    theta,
    verify_dw,
    wcal_s,
)
from .errors import QuiverConeError
from .ffrep import FiniteFieldRepresentation, hom_dim, random_rep
from .homext import (
    SamplingPolicy,
    canonical_decomposition,
    ext_recursive,
    generic_hom,
    generic_subdims,
    hom_ext_recursive,
    is_generic_subdim,
    is_rational_schur_root,
    is_schur_root,
)
from .oracle import (
    CountPolicy,
    alpha_circ_beta,
    count_subreps,
    is_semistable,
    subrep_dimension_vectors,
)
from .quiver import (
    Arrow,
    OrderedDecomposition,
    Quiver,
    canonical_weight,
    euler_form,
    load_quiver,
    mu,
    quiver_from_dict,
    realign,
    validate_quiver,
    weight_apply,
    z_from_ordered,
)
from .semiinv import si_weights_by_degree

__all__ = [
    "Arrow",
    "CountPolicy",
    "DecompositionSet",
    "DwReport",
    "Face",
    "FiniteFieldRepresentation",
    "HCone",
    "OrderedDecomposition",
    "Quiver",
    "QuiverConeError",
    "SamplingPolicy",
    "VCone",
    "alpha_circ_beta",
    "build_sigma_hrep",
    "canonical_decomposition",
    "canonical_weight",
    "cone_dim",
    "cones_equal",
    "count_subreps",
    "enumerate_ordered_decompositions",
    "euler_form",
    "ext_recursive",
    "face_of_decomposition",
    "faces_up_to_codim",
    "facets",
    "generic_hom",
    "generic_subdims",
    "hom_dim",
    "hom_ext_recursive",
    "is_generic_subdim",
    "is_rational_schur_root",
    "is_schur_root",
    "is_semistable",
    "is_well_covering",
    "load_quiver",
    "mu",
    "quiver_from_dict",
    "random_rep",
    "rays",
    "realign",
    "si_weights_by_degree",
    "subrep_dimension_vectors",
    "theta",
    "validate_quiver",
    "verify_dw",
    "wcal_s",
    "weight_apply",
    "z_from_ordered",
]
