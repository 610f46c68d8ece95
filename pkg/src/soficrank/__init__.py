"""Sofic approximations of groups, exact GF(p) linear algebra, and
pseudo-rank sequences at finite scale.

The package builds finite self-map approximations of finitely generated
groups, converts between the self-map and labeled-graph pictures, linearizes
approximations into exact matrices over prime fields, and uses normalized
matrix rank to audit direct finiteness of group rings level by level.
"""

from . import bridge, families, fixtures, linalg
from .approx import (
    DefectReport,
    MapOnV,
    SoficApproximation,
    compose,
    defect_report,
    folner_approx,
    quotient_approx,
    similarity_fraction,
)
from .bridge import (
    BallChart,
    GoodSet,
    LabeledDigraph,
    cayley_ball_graph,
    chart_from_graph,
    epsilon_threshold,
    graph_to_maps,
    maps_to_graph,
)
from .errors import DomainError, ResourceLimitError
from .groups import (
    Ball,
    FiniteQuotientGroup,
    FreeAbelianGroup,
    Group,
    GroupRingElement,
    TableGroup,
    ball,
    load_group_document,
    ring_element,
    ring_is_one,
    ring_mul,
    ring_one,
)
from .linalg import FpMatrix, mat_add, mat_mul, mat_scale, nullity, rank as mat_rank
from .rank import (
    FinitenessVerdict,
    Linearization,
    RankSequence,
    direct_finiteness_check,
    hom_defect,
    injectivity_bound_check,
    linearize,
    normalized_rank,
    pseudo_rank_axioms_check,
    pseudo_rank_sequence,
    represent,
    separated_set,
)

__version__ = "0.1.0"

__all__ = [
    "Ball",
    "BallChart",
    "DefectReport",
    "DomainError",
    "FiniteQuotientGroup",
    "FinitenessVerdict",
    "FpMatrix",
    "FreeAbelianGroup",
    "GoodSet",
    "Group",
    "GroupRingElement",
    "LabeledDigraph",
    "Linearization",
    "MapOnV",
    "RankSequence",
    "ResourceLimitError",
    "SoficApproximation",
    "TableGroup",
    "ball",
    "bridge",
    "cayley_ball_graph",
    "chart_from_graph",
    "compose",
    "defect_report",
    "direct_finiteness_check",
    "epsilon_threshold",
    "families",
    "fixtures",
    "folner_approx",
    "graph_to_maps",
    "hom_defect",
    "injectivity_bound_check",
    "linalg",
    "linearize",
    "load_group_document",
    "maps_to_graph",
    "mat_add",
    "mat_mul",
    "mat_rank",
    "mat_scale",
    "normalized_rank",
    "nullity",
    "pseudo_rank_axioms_check",
    "pseudo_rank_sequence",
    "quotient_approx",
    "represent",
    "ring_element",
    "ring_is_one",
    "ring_mul",
    "ring_one",
    "separated_set",
    "similarity_fraction",
    "__version__",
]
