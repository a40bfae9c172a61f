"""treegamekit: plane trees, pruning lattices, tree games, and the weak
order quotient onto the Tamari lattice, with one integer sequence tying
them together.

The headline objects: a bijection sending permutations fixing 1 to
increasing trees via first inversions (``tree``); stack labelings that
cut out the 213- and 312-avoiding representatives (``tree``); the
distributive lattice of prunings of a plane tree (``lattice``); the
game polynomial counting those prunings by rank, which also settles a
leaf-removal game (``poly``, ``game``); the Tamari lattice realized on
first-inversion tables (``tamari``); cell-level geometry whose point
counts are game-polynomial values (``geometry``); and five independent
computations of the census sequence 1, 0, 1, 1, 8, 26, ... (``seq``).
"""

__version__ = "0.1.0"

from .game import Winner, census_second_player_wins, optimal_move, winner
from .lattice import PruningLattice, placements_match_prunings, rank_generating_function
from .perm import (
    SeparatorPlacement,
    avoids,
    enumerate_fixing_one,
    first_inversions,
    format_permutation,
    inversions,
    parse_permutation,
    separator_placements,
    weak_leq,
)
from .poly import Poly, event_frequency, game_polynomial, game_polynomial_from_prunings
from .tamari import Fiber, TamariElement, fiber, tamari_join, tamari_leq, tamari_meet, verify_congruence
from .tree import (
    canonicalize,
    eastpush_labeling,
    first_inversion_tree,
    format_labeled_tree,
    format_plane_tree,
    parse_labeled_tree,
    parse_plane_tree,
    perm_from_increasing_tree,
    plane_shape,
    plane_trees,
    rooted_trees,
    tree_from_first_inversions,
    westpop_labeling,
)

__all__ = [
    "__version__",
    "Winner",
    "census_second_player_wins",
    "optimal_move",
    "winner",
    "PruningLattice",
    "placements_match_prunings",
    "rank_generating_function",
    "SeparatorPlacement",
    "avoids",
    "enumerate_fixing_one",
    "first_inversions",
    "format_permutation",
    "inversions",
    "parse_permutation",
    "separator_placements",
    "weak_leq",
    "Poly",
    "event_frequency",
    "game_polynomial",
    "game_polynomial_from_prunings",
    "Fiber",
    "TamariElement",
    "fiber",
    "tamari_join",
    "tamari_leq",
    "tamari_meet",
    "verify_congruence",
    "canonicalize",
    "eastpush_labeling",
    "first_inversion_tree",
    "format_labeled_tree",
    "format_plane_tree",
    "parse_labeled_tree",
    "parse_plane_tree",
    "perm_from_increasing_tree",
    "plane_shape",
    "plane_trees",
    "rooted_trees",
    "tree_from_first_inversions",
    "westpop_labeling",
]
