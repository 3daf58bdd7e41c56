"""Inductive invariants as ideal decompositions, plus the size-bound checks.

The greatest inductive invariant of a net with empty language is the
complement of the backward-reachable cone; its ideal decomposition is
obtained exactly via `complement_upset`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .backward import BackwardResult, prestar_basis
from .errors import InputError
from .ideals import (
    DownSet,
    OmegaMarking,
    UpSet,
    coord_leq,
    complement_upset,
    member_down,
    omega_leq,
    vector_str,
)
from .petri import LabeledPetriNet, ideal_succ


@dataclass(frozen=True)
class BackwardBound:
    """The basis bound as base**exponent, kept factored.

    Materializing the power is feasible only for very small nets (the
    exponent is itself exponential in the place count), so comparisons go
    through `at_least`, which caps the computation at the compared value.
    """

    base: int
    exponent: int

    def value(self) -> int:
        return self.base ** self.exponent

    def at_least(self, v: int) -> bool:
        """True iff base**exponent >= v, without materializing huge powers."""
        if v <= 0:
            return True
        if self.base <= 1 or self.exponent == 0:
            return (1 if self.exponent == 0 else self.base) >= v
        acc = 1
        steps = 0
        while acc < v and steps < self.exponent:
            acc *= self.base
            steps += 1
        return acc >= v


@dataclass
class InvariantCertificate:
    down: DownSet
    source_basis: UpSet
    bound: BackwardBound
    bound_ideal_count: int

    @property
    def bound_g(self) -> int:
        """Materialized basis bound; only sensible for very small nets."""
        return self.bound.value()


@dataclass
class InvariantReport:
    initial_ok: bool
    final_ok: bool
    closed_ok: bool
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.initial_ok and self.final_ok and self.closed_ok


def backward_bound(net: LabeledPetriNet, constant: int = 4) -> BackwardBound:
    """Upper bound on basis cardinality and norms of the backward saturation.

    The hidden constant in the doubly-exponential exponent is not
    recoverable exactly; it is exposed as `constant` (default 4) and the
    bound is used as a sanity assertion only.
    """
    t = len(net.transitions)
    if t == 0:
        return BackwardBound(base=0, exponent=1)
    p = len(net.places)
    flow_norm = max((c for tr in net.transitions for c in tr.pre + tr.post), default=0)
    base = t * (flow_norm + max(net.initial, default=0) + max(net.final, default=0) + 2)
    exponent = 2 ** (p * ((p + 1).bit_length() - 1) + constant)
    return BackwardBound(base=base, exponent=exponent)


def theoretical_bound(net: LabeledPetriNet, constant: int = 4) -> int:
    """Materialized form of `backward_bound`; 0 for transition-free nets."""
    return backward_bound(net, constant).value()


def invariant_from_backward(
    net: LabeledPetriNet,
    constant: int = 4,
    backward: BackwardResult | None = None,
) -> InvariantCertificate:
    """Greatest inductive invariant, as the complement of the backward cone.

    Requires the net's language to be empty; otherwise no invariant exists.
    """
    if backward is None:
        backward = prestar_basis(net)
    if backward.coverable:
        raise InputError("net is coverable: no inductive invariant exists")
    down = complement_upset(backward.basis)
    return InvariantCertificate(
        down=down,
        source_basis=backward.basis,
        bound=backward_bound(net, constant),
        bound_ideal_count=(backward.basis.norm() + 2) ** net.dimension,
    )


def _ideal_meets_final(u: OmegaMarking, final) -> bool:
    # the ideal of u intersects the upward cone of the final marking iff
    # u dominates it coordinatewise, with OMEGA above everything
    return all(coord_leq(f, c) for f, c in zip(final, u))


def check_invariant(net: LabeledPetriNet, x: DownSet) -> InvariantReport:
    """Verify the three defining properties of an inductive invariant.

    (i) the initial marking belongs to the set, (ii) no ideal meets the
    final cone, (iii) every ideal successor stays below some ideal.
    """
    if x.dimension != net.dimension:
        raise InputError(f"dimension mismatch: {x.dimension} vs {net.dimension}")
    failures: list[str] = []
    initial_ok = member_down(net.initial, x)
    if not initial_ok:
        failures.append(f"initial marking {net.initial} is not in the invariant")
    final_ok = True
    for u in x.ideals:
        if _ideal_meets_final(u, net.final):
            final_ok = False
            failures.append(f"ideal {vector_str(u)} meets the final cone")
    closed_ok = True
    for u in x.ideals:
        for t in net.transitions:
            s = ideal_succ(net, u, t.name)
            if s is None:
                continue
            if not any(omega_leq(s, r) for r in x.ideals):
                closed_ok = False
                failures.append(
                    f"successor {vector_str(s)} of {vector_str(u)} under {t.name} escapes"
                )
    return InvariantReport(
        initial_ok=initial_ok, final_ok=final_ok, closed_ok=closed_ok, failures=failures
    )
