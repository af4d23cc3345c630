"""Chain decompositions of finite posets.

Dilworth minimum decompositions, homogeneous decompositions and their unique
minimal refinement, the chain graph with its acyclic orientation and the
automorphism embedding, admissible cuts with the signed chain-count identity,
noncrossing decompositions, 132-avoiding permutations and descent minima, and
the plane-tree construction tying them together.
"""

from .chains import (
    ChainDecomposition,
    decomposition_from_lines,
    enumerate_chain_decompositions,
    is_antichain,
    is_chain,
    is_chain_decomposition,
    maximum_antichain,
    minimum_chain_decomposition,
    width,
)
from .cut import (
    Cut,
    CutIdentityReport,
    d_matrix,
    enumerate_admissible_cuts,
    enumerate_proper_cuts,
    integer_determinant,
    is_admissible,
    is_proper,
    j_matrix,
    make_cut,
    sample_admissible_cuts,
    verify_cut_identity,
)
from .errors import (
    CheckFailure,
    CycleError,
    FormatError,
    InternalInconsistencyError,
    InvalidDecompositionError,
    NotHomogeneousError,
    PosetError,
    ScatteringError,
    ScopeExceededError,
    UnknownElementError,
)
from .generate import (
    FAMILIES,
    antichain,
    boolean_lattice,
    chain,
    make_family,
    random_poset,
    two_chain_fan,
    wrap_forest,
)
from .hcd import (
    ChainGraph,
    DeletionBoundReport,
    EmbeddingReport,
    acyclic_orientation,
    chain_comparability,
    chain_graph,
    deletion_bounds,
    graph_automorphisms,
    induced_chain_permutation,
    is_homogeneous,
    mhcd,
    min_homogeneous,
    preserves_length_classes,
    verify_embedding,
)
from .kernels import BACKEND
from .nccd import (
    ChainBoundsReport,
    DescentProfile,
    TreeNode,
    WrapOrder,
    all_132_avoiding,
    ascending_runs_decomposition,
    attachment_tree,
    canonical_chain_order,
    chain_concatenation,
    count_noncrossing_decompositions,
    crossing_witness,
    derived_extension,
    descent_optimal_permutation,
    descent_profile,
    is_132_avoiding,
    is_132_avoiding_in_extension,
    is_noncrossing,
    min_descents_over_avoiders,
    min_descents_over_extension_avoiders,
    minimum_noncrossing_decomposition,
    tree_to_text,
    verify_chain_bounds,
    wrap_order,
    wrap_relation,
)
from .poset import (
    Poset,
    count_linear_extensions,
    enumerate_posets,
    is_linear_extension,
    linear_extensions,
    mobius,
    mobius_matrix,
    signed_chain_count,
    signed_chain_count_matrix,
    transitive_closure,
)
from .textio import dump, dumps, load, loads

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ChainBoundsReport",
    "ChainDecomposition",
    "ChainGraph",
    "CheckFailure",
    "Cut",
    "CutIdentityReport",
    "CycleError",
    "DeletionBoundReport",
    "DescentProfile",
    "EmbeddingReport",
    "FAMILIES",
    "FormatError",
    "InternalInconsistencyError",
    "InvalidDecompositionError",
    "NotHomogeneousError",
    "Poset",
    "PosetError",
    "ScatteringError",
    "ScopeExceededError",
    "TreeNode",
    "UnknownElementError",
    "WrapOrder",
    "acyclic_orientation",
    "all_132_avoiding",
    "antichain",
    "ascending_runs_decomposition",
    "attachment_tree",
    "boolean_lattice",
    "canonical_chain_order",
    "chain",
    "chain_comparability",
    "chain_concatenation",
    "chain_graph",
    "count_linear_extensions",
    "count_noncrossing_decompositions",
    "crossing_witness",
    "d_matrix",
    "decomposition_from_lines",
    "deletion_bounds",
    "derived_extension",
    "descent_optimal_permutation",
    "descent_profile",
    "dump",
    "dumps",
    "enumerate_admissible_cuts",
    "enumerate_chain_decompositions",
    "enumerate_posets",
    "enumerate_proper_cuts",
    "graph_automorphisms",
    "induced_chain_permutation",
    "integer_determinant",
    "is_132_avoiding",
    "is_132_avoiding_in_extension",
    "is_admissible",
    "is_antichain",
    "is_chain",
    "is_chain_decomposition",
    "is_homogeneous",
    "is_linear_extension",
    "is_noncrossing",
    "is_proper",
    "j_matrix",
    "linear_extensions",
    "load",
    "loads",
    "make_cut",
    "make_family",
    "maximum_antichain",
    "mhcd",
    "min_descents_over_avoiders",
    "min_descents_over_extension_avoiders",
    "min_homogeneous",
    "minimum_chain_decomposition",
    "minimum_noncrossing_decomposition",
    "mobius",
    "mobius_matrix",
    "preserves_length_classes",
    "random_poset",
    "sample_admissible_cuts",
    "signed_chain_count",
    "signed_chain_count_matrix",
    "transitive_closure",
    "tree_to_text",
    "two_chain_fan",
    "verify_chain_bounds",
    "verify_cut_identity",
    "verify_embedding",
    "wrap_forest",
    "wrap_order",
    "wrap_relation",
]
