"""Inversion statistics and move graphs for reduced words of permutations,
with the parallel theory on standard balanced tableaux and the
rank-preserving bijection between the two models."""

from .bijection import (
    Move,
    descent_to_super,
    tableau_to_word,
    verify_poset_isomorphism,
    word_to_tableau,
)
from .diagrams import (
    Cell,
    Diagram,
    Filling,
    is_rothe_diagram,
    permutation_of_diagram,
    reading_word,
    rothe_diagram,
    row_interval_filling,
    super_tableau,
)
from .graphs import (
    MoveGraph,
    bfs_distance,
    build_graph,
    diameter,
    export,
    graph_from_json,
    is_connected,
    min_braid_count,
    to_dot,
    to_json,
    validate_ranked_poset,
)
from .perms import Permutation, all_permutations
from .report import CheckResult, all_passed
from .tableaux import (
    column_inversions,
    enumerate_sbt,
    flip,
    inversion_pairs,
    is_balanced,
    min_inv_w0,
    psi,
    reconstruct_from_row_multisets,
    row_coinversions,
    tab_braid,
    tab_commutation,
    tab_inversions,
    tab_permutation,
)
from .verify import run_suite, staircase_tableau_count
from .words import (
    Word,
    braid_move,
    commutation_move,
    enumerate_reduced_words,
    is_reduced,
    is_super_yamanouchi,
    iter_reduced_words,
    naive_pair_inversions,
    pairing_permutation,
    run_decomposition,
    super_word,
    word_inversions,
    word_to_permutation,
    yang_baxter_count,
)

__all__ = [
    "Cell",
    "CheckResult",
    "Diagram",
    "Filling",
    "Move",
    "MoveGraph",
    "Permutation",
    "Word",
    "all_passed",
    "all_permutations",
    "bfs_distance",
    "braid_move",
    "build_graph",
    "column_inversions",
    "commutation_move",
    "descent_to_super",
    "diameter",
    "enumerate_reduced_words",
    "enumerate_sbt",
    "export",
    "flip",
    "graph_from_json",
    "inversion_pairs",
    "is_balanced",
    "is_connected",
    "is_reduced",
    "is_rothe_diagram",
    "is_super_yamanouchi",
    "iter_reduced_words",
    "min_braid_count",
    "min_inv_w0",
    "naive_pair_inversions",
    "pairing_permutation",
    "permutation_of_diagram",
    "psi",
    "reading_word",
    "reconstruct_from_row_multisets",
    "rothe_diagram",
    "row_coinversions",
    "row_interval_filling",
    "run_decomposition",
    "run_suite",
    "staircase_tableau_count",
    "super_tableau",
    "super_word",
    "tab_braid",
    "tab_commutation",
    "tab_inversions",
    "tab_permutation",
    "tableau_to_word",
    "to_dot",
    "to_json",
    "validate_ranked_poset",
    "verify_poset_isomorphism",
    "word_inversions",
    "word_to_permutation",
    "word_to_tableau",
    "yang_baxter_count",
]
