"""Distance signless Laplacian spectral radius and perfect matchings."""

from .graph_core import (
    Bipartition,
    Graph,
    GraphError,
    ParseError,
    build_g2,
    build_g3,
    build_g4,
    build_g5,
    build_gamma,
    build_split_family,
    complement,
    complete,
    disjoint_union,
    empty_graph,
    is_connected,
    join,
    parse_edge_list,
    parse_graph6,
    to_graph6,
)
from .matching import (
    has_perfect_matching,
    hall_violation,
    max_matching_bipartite,
    max_matching_general,
    odd_components,
    tutte_violation,
)
from .spectral import (
    all_pairs_distances,
    dsl_matrix,
    dsl_radius,
    eigenvalues_symmetric,
    perron_root,
    quotient_matrix,
    rayleigh,
    transmissions,
)
from .thresholds import (
    kappa,
    largest_real_root,
    phi,
    psi,
    split_threshold,
    theorem1_threshold,
    theta,
)

__version__ = "0.1.0"
