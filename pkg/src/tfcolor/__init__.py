"""tfcolor: compute and certify vertex colorings of simple undirected
graphs with no monochromatic triangle."""

from .coloring import (
    Coloring,
    greedy_extend_independent,
    standard_recolor,
    verify_proper,
    verify_triangle_free,
)
from .gadgets import (
    CycleClique,
    PolarGadget,
    clique_contraction,
    gen_clover,
    gen_complete,
    gen_cycle,
    gen_cycle_clique,
    gen_gadget_triangle,
    gen_mycielski,
    gen_polar_gadget,
    mycielskian,
)
from .graph import (
    Graph,
    as_edge_subset,
    build_graph,
    connected_components,
    contains_k4,
    degeneracy_ordering,
    identify_vertices,
    is_connected,
    is_triangle_free,
    list_triangles,
    read_dimacs_graph,
    write_dimacs_graph,
    write_dot,
)
from .graph_classes import (
    ClassHint,
    bounded_chi_chi3,
    chordal_chi3,
    lex_bfs,
    recognize_chordal,
    regular_triangle_check,
)
from .reductions import (
    Assignment,
    CnfFormula,
    PolarInstance,
    ReductionOutput,
    fits_occurrence_limit,
    lift_witness,
    nae_satisfies,
    oracle_nae,
    oracle_sat,
    parse_dimacs_cnf,
    parse_polar_instance,
    pull_witness,
    reduce_nae4_to_polar,
    reduce_nae_to_k4free,
    reduce_q_to_q1,
    reduce_sat4_to_nae4,
    sat_satisfies,
    solve_polar_small_degree,
    variable_occurrences,
    write_dimacs_cnf,
    write_polar_instance,
)
from .solvers import (
    StructuralParams,
    compute_params,
    decide_proper_q,
    decide_tf_q,
    decide_tf_q_parallel,
    fpt_tf_q_coloring,
    min_vertex_cover,
    oracle_chi,
    oracle_chi3,
    oracle_omega,
    solve_chi3,
)

__version__ = "0.1.0"
