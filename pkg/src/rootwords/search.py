"""Greedy Whitehead minimization and equivalence-class enumeration.

Minimization repeatedly applies the first one-letter automorphism that
strictly shortens the word; a non-minimal word always admits one.  At the
minimal level, the full automorphism orbit is the closure under the eight
permutations and the length-preserving one-letter moves.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automorphisms import (
    ReductionTrace,
    all_permutations,
    apply_permutation,
    apply_whitehead,
    one_letter_representatives,
)
from .minimality import is_minimal, is_root
from .words import CyclicWord, Word, cyclic_reduce

DEFAULT_MEMBER_LIMIT = 10**6


class MemberLimitExceeded(RuntimeError):
    """An equivalence class grew past the configured member ceiling."""


@dataclass(frozen=True)
class EquivalenceClass:
    """All minimal words of one automorphism-equivalence class."""

    length: int
    members: frozenset[CyclicWord]
    is_root_class: bool

    def sorted_members(self) -> list[CyclicWord]:
        return sorted(self.members)


def minimize(w: Word | CyclicWord) -> tuple[CyclicWord, ReductionTrace]:
    """Shorten w to a minimal representative of its equivalence class.

    Greedy descent: while the count test fails, apply the first one-letter
    automorphism (in the fixed representative order) that strictly
    shortens.  Each step drops the length by at least one, so there are at
    most len(w) steps.
    """
    current = w if isinstance(w, CyclicWord) else cyclic_reduce(w)
    steps = []
    while not is_minimal(current):
        for s in one_letter_representatives():
            image = apply_whitehead(s, current)
            if len(image) < len(current):
                steps.append((s, image))
                current = image
                break
        else:
            # A non-minimal word always has a strictly shortening one-letter
            # move; reaching this line means the descent theory is broken.
            raise RuntimeError(f"no shortening move for non-minimal word {current}")
    return current, ReductionTrace(tuple(steps))


def minimal_class(
    w: Word | CyclicWord, member_limit: int = DEFAULT_MEMBER_LIMIT
) -> EquivalenceClass:
    """Enumerate every minimal word equivalent to w.

    Breadth-first closure of the minimized word under the eight
    permutations and the level one-letter moves.  This move set is
    complete: a chain between equivalent minimal words never changes
    length, marked-set automorphisms in rank 2 are one-letter or inner
    (inner ones fix every cyclic word), and the four representatives cover
    all eight one-letter automorphisms modulo inner ones.
    """
    seed, _ = minimize(w)
    length = len(seed)
    members = {seed}
    frontier = [seed]
    perms = all_permutations()
    reps = one_letter_representatives()
    while frontier:
        next_frontier = []
        for word in sorted(frontier):
            images = [apply_permutation(p, word) for p in perms]
            for s in reps:
                image = apply_whitehead(s, word)
                if len(image) == length:
                    images.append(image)
            for image in images:
                if image not in members:
                    members.add(image)
                    next_frontier.append(image)
                    if len(members) > member_limit:
                        raise MemberLimitExceeded(
                            f"class of {seed} exceeds {member_limit} members"
                        )
        frontier = next_frontier
    return EquivalenceClass(
        length=length, members=frozenset(members), is_root_class=is_root(seed)
    )


def are_equivalent(u: Word | CyclicWord, v: Word | CyclicWord) -> bool:
    """Whether some automorphism carries u to v (as conjugacy classes)."""
    mu, _ = minimize(u)
    mv, _ = minimize(v)
    if len(mu) != len(mv):
        return False
    if mu == mv:
        return True
    return mv in minimal_class(mu).members


def verify_root_class(c: EquivalenceClass) -> bool:
    """Check that root-ness is uniform across a class.

    Always true mathematically; a false return means the implementation
    is buggy.
    """
    flags = {is_root(member) for member in c.members}
    return len(flags) == 1 and c.is_root_class in flags
