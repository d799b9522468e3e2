"""Clique-graph dynamics engine and verification harness."""

from .cliques import (
    DEFAULT_VERTEX_BUDGET,
    IterationResult,
    clique_graph,
    count_maximal_cliques,
    iterate,
    maximal_cliques,
)
from .dynamics import (
    DEFAULT_MAX_ITERATIONS,
    Behavior,
    classify_behavior,
    helly_convergence_crosscheck,
)
from .generate import CorpusSpec, corpus_from_graph6, enumerate_connected_bounded
from .graph import (
    Graph,
    GraphError,
    complete,
    cycle,
    from_edge_list,
    hajos_sun,
    induced_subgraph,
    is_connected,
    is_low_degree,
    is_octahedron,
    named,
    octahedron,
    parse_edge_list_text,
    parse_graph6,
    path,
    to_dot,
    to_edge_list_text,
    to_graph6,
)
from .helly import (
    HajosEmbedding,
    enumerate_hajos_embeddings,
    hajos_compatible,
    hajos_violation,
    is_clique_helly,
    is_helly_family,
    is_hereditary_helly_definitional,
    is_intersecting_family,
    triangles,
)
from .iso import canonical_form, is_isomorphic
from .lemmas import LEMMA_CHECKS, LemmaReport, run_lemma_suite
from .structure import (
    K2Analysis,
    K2Vertex,
    classify_k2_vertices,
    inner_triangles,
    is_inner_triangle,
    is_normal_vertex,
    necktie_necktie_adjacent,
    q_of_triangle,
    star,
    star_necktie_adjacent,
    star_star_adjacent,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
