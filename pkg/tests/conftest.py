"""Shared fixtures: the worked example pair and the random disjoint corpus."""

from __future__ import annotations

import pytest

from regsep.generators import random_net_pair
from regsep.petri import (
    LabeledPetriNet,
    Transition,
    identity_labeled,
    label_expand,
    restrict_to_shared_labels,
)
from regsep.separator import separate


def make_worked_pair() -> tuple[LabeledPetriNet, LabeledPetriNet]:
    """N1 accepts a^(>=2); N2 accepts {empty word, a}."""
    n1 = LabeledPetriNet(
        places=("p",),
        alphabet=("a",),
        transitions=(Transition("t_a", "a", (0,), (1,)),),
        initial=(0,),
        final=(2,),
    )
    n2 = LabeledPetriNet(
        places=("q",),
        alphabet=("a",),
        transitions=(Transition("s_a", "a", (1,), (0,)),),
        initial=(2,),
        final=(1,),
    )
    return n1, n2


@pytest.fixture(scope="session")
def worked_pair() -> tuple[LabeledPetriNet, LabeledPetriNet]:
    return make_worked_pair()


def corpus_seeds(count: int = 50) -> list[int]:
    """The first `count` seeds whose generated pair is disjoint."""
    seeds = []
    seed = 0
    while len(seeds) < count:
        if random_net_pair(seed).disjoint:
            seeds.append(seed)
        seed += 1
    return seeds


def transformed(
    n1: LabeledPetriNet, n2: LabeledPetriNet, fast: bool
) -> tuple[LabeledPetriNet, LabeledPetriNet]:
    """The (expanded first net, deterministic second net) pair the core
    automaton was built from, matching the pipeline's fast-path choice."""
    if fast:
        return restrict_to_shared_labels(n1, n2), n2
    return label_expand(n1, n2), identity_labeled(n2)


@pytest.fixture(scope="session")
def disjoint_corpus():
    """(n1, n2, bundle) for 50 seeded disjoint random pairs."""
    out = []
    for seed in corpus_seeds(50):
        pair = random_net_pair(seed)
        out.append((seed, pair.n1, pair.n2, separate(pair.n1, pair.n2)))
    return out
