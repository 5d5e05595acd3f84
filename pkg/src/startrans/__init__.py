"""Star-transitivity and st(edge)-transitivity analysis for finite graphs.

The package decides, for a finite simple graph and a permutation group of
automorphisms, whether every star isomorphism and every edge-star
isomorphism extends to a group element, computes the stabiliser structure
driving those properties (local actions, s-arc transitivity, ball
stabiliser towers), constructs the relevant graph families, and classifies
analysed instances against the known case lists.
"""

from .autgroup import are_isomorphic, automorphism_group, brute_automorphisms
from .cosets import CosetTable, bipartite_coset, coset_action, sabidussi
from .errors import (
    CapExceeded,
    DegreeMismatch,
    DomainNotInvariant,
    FalsificationError,
    GraphFormatError,
    HypothesisNotMet,
    InvalidPermutation,
    NotAnAutomorphism,
    StartransError,
)
from .families import ConstructedInstance
from .graphs import (
    Graph,
    ball,
    biregular_bivalency,
    girth,
    is_connected,
    parse_graph,
    serialize_graph,
    smooth,
    sphere,
    subdivide_1,
    subdivide_2,
    valency_profile,
)
from .localsym import (
    SymmetryReport,
    analyze,
    classify_instance,
    is_star_transitive_direct,
    is_star_transitive_fast,
    is_stedge_transitive_direct,
    is_stedge_transitive_fast,
    local_s_arc_transitivity,
    stabiliser_tower,
)
from .perms import (
    LocalActionReport,
    PermGroup,
    Permutation,
    identify,
    local_action,
    parse_generators,
    serialize_generators,
)

__version__ = "0.1.0"

__all__ = [
    "ConstructedInstance",
    "CosetTable",
    "Graph",
    "LocalActionReport",
    "PermGroup",
    "Permutation",
    "SymmetryReport",
    "analyze",
    "are_isomorphic",
    "automorphism_group",
    "ball",
    "bipartite_coset",
    "biregular_bivalency",
    "brute_automorphisms",
    "classify_instance",
    "coset_action",
    "girth",
    "identify",
    "is_connected",
    "is_star_transitive_direct",
    "is_star_transitive_fast",
    "is_stedge_transitive_direct",
    "is_stedge_transitive_fast",
    "local_action",
    "local_s_arc_transitivity",
    "parse_generators",
    "parse_graph",
    "sabidussi",
    "serialize_generators",
    "serialize_graph",
    "smooth",
    "sphere",
    "stabiliser_tower",
    "subdivide_1",
    "subdivide_2",
    "valency_profile",
]
