"""Symmetry parameters of hypercube-variant graph families.

Builds the seven families (hypercubes, powers, Hamming, folded, enhanced,
augmented, locally twisted), models their automorphism groups structurally
and by search, and computes determining numbers, distinguishing numbers and
the cost of 2-distinguishing, with every reported value backed by a checked
witness.
"""

__version__ = "0.1.0"

from .bitgraph import (
    BitVertex,
    FamilySpec,
    Graph,
    augmented_hypercube,
    build_family,
    cartesian_product,
    complement,
    enhanced_hypercube,
    folded_hypercube,
    graph_distance,
    hamming_distance,
    hamming_graph,
    hypercube,
    hypercube_power,
    induced_subgraph,
    locally_twisted_hypercube,
)

__all__ = [
    "BitVertex",
    "FamilySpec",
    "Graph",
    "augmented_hypercube",
    "build_family",
    "cartesian_product",
    "complement",
    "enhanced_hypercube",
    "folded_hypercube",
    "graph_distance",
    "hamming_distance",
    "hamming_graph",
    "hypercube",
    "hypercube_power",
    "induced_subgraph",
    "locally_twisted_hypercube",
    "__version__",
]
