"""Exact computation of degree-one cohomology jump loci of finitely presented groups.

Resonance varieties from cup-product data, characteristic varieties from Fox
calculus, exponential tangent cones, the resonance obstruction battery and
the decision procedure for right-angled and labeled Artin groups.
"""

from .artin import (
    Graph,
    LabeledGraph,
    artin_malcev_verdict,
    braid_graph,
    is_complete_multipartite,
    maximal_disconnected_subsets,
    odd_contraction,
    raag_charvar_member,
    raag_charvar_subtori,
    raag_presentation,
    raag_resonance,
    raag_serre_verdict,
)
from .charvar import Character, alexander_matrix, charvar_member, charvar_minors, fox_jacobian, twisted_b1
from .cupdata import (
    CupData,
    LieRepData,
    cup_config_torus,
    cup_free,
    cup_free_abelian,
    cup_from_presentation,
    cup_product_join,
    cup_raag,
    cup_surface,
    cup_wedge,
    infinitesimal_alexander_matrix,
)
from .errors import InputError, ResourceBoundError, SupportBoundError
from .exact import Matrix, MultiPoly, QuadNumber, minors, poly_divides, rank, rank_and_kernel, sqrt
from .obstructions import ObstructionReport, isotropicity_classify, serre_battery
from .resonance import (
    aomoto_h1_dim,
    aomoto_matrix,
    quadratic_cone_member,
    relative_aomoto_h1,
    resonance_contains_subspace,
    resonance_member,
    resonance_minors,
)
from .subspaces import Subspace, SubspaceArrangement
from .tangentcone import tangent_cone_compare, tau1_ideal, tau1_single
from .words import GroupWord, Presentation, fox_derivative_ab, magnus_degree2, parse_word

__version__ = "0.1.0"

__all__ = [
    "alexander_matrix",
    "aomoto_h1_dim",
    "aomoto_matrix",
    "artin_malcev_verdict",
    "braid_graph",
    "Character",
    "charvar_member",
    "charvar_minors",
    "cup_config_torus",
    "cup_free",
    "cup_free_abelian",
    "cup_from_presentation",
    "cup_product_join",
    "cup_raag",
    "cup_surface",
    "cup_wedge",
    "CupData",
    "fox_derivative_ab",
    "fox_jacobian",
    "Graph",
    "GroupWord",
    "infinitesimal_alexander_matrix",
    "InputError",
    "is_complete_multipartite",
    "isotropicity_classify",
    "LabeledGraph",
    "LieRepData",
    "magnus_degree2",
    "Matrix",
    "maximal_disconnected_subsets",
    "minors",
    "MultiPoly",
    "ObstructionReport",
    "odd_contraction",
    "parse_word",
    "poly_divides",
    "Presentation",
    "QuadNumber",
    "quadratic_cone_member",
    "raag_charvar_member",
    "raag_charvar_subtori",
    "raag_presentation",
    "raag_resonance",
    "raag_serre_verdict",
    "rank",
    "rank_and_kernel",
    "relative_aomoto_h1",
    "resonance_contains_subspace",
    "resonance_member",
    "resonance_minors",
    "ResourceBoundError",
    "serre_battery",
    "sqrt",
    "Subspace",
    "SubspaceArrangement",
    "SupportBoundError",
    "tangent_cone_compare",
    "tau1_ideal",
    "tau1_single",
    "twisted_b1",
]
