"""Constructive toolkit for group-cordial graph labelings.

Builds, verifies, and searches for cordial labelings of trees over the Klein
four-group and of friendship graphs over cyclic groups, with additively
disjoint pair families as the main construction engine and an exhaustive
search oracle as ground truth.
"""

__version__ = "0.1.0"

from .friendship import (
    ConstructionResult,
    FriendshipLabeling,
    add,
    div3_range_construction,
    epsilon,
    half_construction,
    label_friendship,
    mad_construction,
    obstruction,
    shift_circumferential,
    to_half_construction,
    two_thirds_construction,
    uniform_block_even,
    uniform_block_odd,
)
from .graphs import (
    CordialityReport,
    FrequencyProfile,
    Graph,
    Labeling,
    apply_group_map,
    edge_profile,
    friendship,
    from_edge_list,
    greedy_large_group_label,
    induced_edge_label,
    is_cordial,
    path,
    shift_labels,
    star,
    vertex_profile,
)
from .groups import (
    KLEIN,
    Element,
    FiniteAbelianGroup,
    centered,
    centered_range,
    unit_scale,
    uncentered,
    zero_fixing_bijections,
)
from .harness import verify_friendship_conjecture, verify_trees
from .mad import (
    MadFamily,
    MadPair,
    alpha,
    disjoint_pairs_in_set,
    expected_family_size,
    family_search,
    mad_pairs,
    verify_additively_disjoint,
)
from .search import SearchConfig, SearchResult, search_cordial
from .treegen import canonical_code, canonical_layout, free_trees, random_tree
from .trees import (
    RemovalPlan,
    TreeLabelResult,
    choose_removal_plan,
    deficit_edge_label,
    extend_four,
    greedy_leaf_extend,
    label_tree_z22,
    path_label_z22,
)

__all__ = [
    "__version__",
    "ConstructionResult",
    "CordialityReport",
    "Element",
    "FiniteAbelianGroup",
    "FrequencyProfile",
    "FriendshipLabeling",
    "Graph",
    "KLEIN",
    "Labeling",
    "MadFamily",
    "MadPair",
    "RemovalPlan",
    "SearchConfig",
    "SearchResult",
    "TreeLabelResult",
    "add",
    "alpha",
    "apply_group_map",
    "canonical_code",
    "canonical_layout",
    "centered",
    "centered_range",
    "choose_removal_plan",
    "deficit_edge_label",
    "disjoint_pairs_in_set",
    "div3_range_construction",
    "edge_profile",
    "epsilon",
    "expected_family_size",
    "extend_four",
    "family_search",
    "free_trees",
    "friendship",
    "from_edge_list",
    "greedy_large_group_label",
    "greedy_leaf_extend",
    "half_construction",
    "induced_edge_label",
    "is_cordial",
    "label_friendship",
    "label_tree_z22",
    "mad_construction",
    "mad_pairs",
    "obstruction",
    "path",
    "path_label_z22",
    "random_tree",
    "search_cordial",
    "shift_circumferential",
    "shift_labels",
    "star",
    "to_half_construction",
    "two_thirds_construction",
    "uncentered",
    "unit_scale",
    "uniform_block_even",
    "uniform_block_odd",
    "verify_additively_disjoint",
    "verify_friendship_conjecture",
    "verify_trees",
    "vertex_profile",
    "zero_fixing_bijections",
]
