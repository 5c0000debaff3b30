from __future__ import annotations

import pytest

from cubesym import (
    augmented_hypercube,
    folded_hypercube,
    hamming_graph,
    hypercube,
    hypercube_power,
    locally_twisted_hypercube,
    enhanced_hypercube,
)
from cubesym.params import automorphism_group


CORPUS_SPECS = {
    "Q_3": lambda: hypercube(3),
    "Q_4": lambda: hypercube(4),
    "Q_4^2": lambda: hypercube_power(4, 2),
    "FQ_3": lambda: folded_hypercube(3),
    "FQ_4": lambda: folded_hypercube(4),
    "Q_{4,1}": lambda: enhanced_hypercube(4, 1),
    "Q_{4,2}": lambda: enhanced_hypercube(4, 2),
    "Q_{4,3}": lambda: enhanced_hypercube(4, 3),
    "AQ_3": lambda: augmented_hypercube(3),
    "AQ_4": lambda: augmented_hypercube(4),
    "LTQ_3": lambda: locally_twisted_hypercube(3),
    "LTQ_4": lambda: locally_twisted_hypercube(4),
    "H(3,2)": lambda: hamming_graph(3, 2),
    "H(2,4)": lambda: hamming_graph(2, 4),
}


@pytest.fixture(scope="session")
def corpus():
    """The full <=32-vertex cross-validation corpus, graphs only."""
    return {name: make() for name, make in CORPUS_SPECS.items()}


@pytest.fixture(scope="session")
def corpus_groups(corpus):
    return {name: automorphism_group(g) for name, g in corpus.items()}
