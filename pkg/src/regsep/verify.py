"""Exact separator verification and the bounded-word oracles used in tests."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .automata import Nfa, complement, determinize, minimize, net_automaton_intersection_witness
from .config import DEFAULT, Settings
from .errors import BudgetExceededError, InputError
from .ideals import Marking
from .petri import LabeledPetriNet, covers

Word = tuple[str, ...]


@dataclass
class SeparatorReport:
    disjointness_ok: bool
    containment_ok: bool
    disjointness_witness: Word | None = None
    containment_witness: Word | None = None

    @property
    def passed(self) -> bool:
        return self.disjointness_ok and self.containment_ok


def verify_separator(
    n1: LabeledPetriNet, n2: LabeledPetriNet, b: Nfa
) -> SeparatorReport:
    """Exactly check that L(n1) avoids L(b) and L(n2) is contained in L(b).

    Both checks reduce to coverability on a synchronized encoding; failures
    come with a concrete witness word.
    """
    sigma = set(n1.alphabet) | set(n2.alphabet)
    if set(b.alphabet) != sigma:
        raise InputError(
            f"alphabet mismatch: automaton has {sorted(b.alphabet)}, nets need {sorted(sigma)}"
        )
    # minimizing first is language-preserving and keeps the synchronized
    # coverability encodings small
    dfa = minimize(determinize(b))
    w1 = net_automaton_intersection_witness(n1, dfa)
    w2 = net_automaton_intersection_witness(n2, complement(dfa))
    return SeparatorReport(
        disjointness_ok=w1 is None,
        containment_ok=w2 is None,
        disjointness_witness=w1,
        containment_witness=w2,
    )


def _maximal(markings: Iterable[Marking]) -> list[Marking]:
    ms = list(dict.fromkeys(markings))
    return [
        m
        for m in ms
        if not any(n != m and all(x <= y for x, y in zip(m, n)) for n in ms)
    ]


def bounded_language(
    net: LabeledPetriNet, maxlen: int, settings: Settings = DEFAULT
) -> tuple[Word, ...]:
    """All accepted words of length at most `maxlen`, by exhaustive search.

    Per word only the maximal reached markings are kept; this is exact for
    coverability acceptance since both acceptance and future behavior are
    upward compatible.  Exceeding the node budget raises instead of
    silently truncating.
    """
    if maxlen > settings.sample_maxlen_cap:
        raise InputError(
            f"maxlen {maxlen} exceeds the configured cap {settings.sample_maxlen_cap}"
        )
    frontier: dict[Word, list[Marking]] = {(): [net.initial]}
    accepted: set[Word] = set()
    nodes = 1
    for length in range(maxlen + 1):
        for word, markings in frontier.items():
            if any(covers(m, net.final) for m in markings):
                accepted.add(word)
        if length == maxlen:
            break
        nxt: dict[Word, list[Marking]] = {}
        for word, markings in frontier.items():
            for t in net.transitions:
                reached = []
                for m in markings:
                    if all(x >= p for x, p in zip(m, t.pre)):
                        reached.append(
                            tuple(x - p + q for x, p, q in zip(m, t.pre, t.post))
                        )
                if not reached:
                    continue
                key = word + (t.label,)
                nxt.setdefault(key, []).extend(reached)
        frontier = {}
        for word, markings in nxt.items():
            kept = _maximal(markings)
            nodes += len(kept)
            if nodes > settings.node_budget:
                raise BudgetExceededError(
                    f"bounded language exploration exceeded {settings.node_budget} nodes"
                )
            frontier[word] = kept
    return tuple(sorted(accepted, key=lambda w: (len(w), w)))


def image_words(words: Iterable[Word], mapping: dict[str, str]) -> tuple[Word, ...]:
    """Apply a letter homomorphism to a set of words; deterministic order."""
    out = {tuple(mapping[x] for x in w) for w in words}
    return tuple(sorted(out, key=lambda w: (len(w), w)))
