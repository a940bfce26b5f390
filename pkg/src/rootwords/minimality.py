"""Minimality and root-word tests, and the growing operations (children, parents).

A word is minimal when no automorphism shortens it, which in rank 2 comes
down to the two-letter count inequality |(ab) - (aB)| <= min((aa), (bb)).
Root words are the minimal words that cannot be grown from a shorter
minimal word by lengthening a run; they satisfy the inequality with
equality on both sides.  Each test has an oracle twin that decides the
same question by direct automorphism application instead of counting.
"""

from __future__ import annotations

from .automorphisms import apply_whitehead, one_letter_representatives
from .words import CyclicWord, LETTERS, profile


def is_minimal(w: CyclicWord) -> bool:
    """Count test: no automorphism shortens w.

    The empty word is minimal by convention.
    """
    if len(w) == 0:
        return True
    p = profile(w)
    return p.imbalance <= min(p.n_aa, p.n_bb)


def is_minimal_oracle(w: CyclicWord) -> bool:
    """Decide minimality by applying the four one-letter automorphisms.

    Independent of the count test; used to cross-check it.
    """
    n = len(w)
    return all(len(apply_whitehead(s, w)) >= n for s in one_letter_representatives())


def children(w: CyclicWord) -> frozenset[CyclicWord]:
    """Words one letter longer obtained by lengthening a run of w.

    Every letter of the empty word's children set is a child by the
    convention that any single letter grows from the empty word.
    """
    if len(w) == 0:
        return frozenset(CyclicWord((letter,)) for letter in LETTERS)
    seq = w.letters
    out = set()
    for i, letter in enumerate(seq):
        # Duplicating the letter at position i lengthens its run; duplicating
        # anywhere else in the same run gives the same cyclic word.
        if i > 0 and seq[i - 1] == letter:
            continue
        out.add(CyclicWord(seq[: i + 1] + seq[i:]))
    return frozenset(out)


def parents(w: CyclicWord) -> frozenset[CyclicWord]:
    """Words one letter shorter that w grows from; empty for alternating words.

    Inverse of children: v is a parent of w exactly when w is a child of v.
    """
    n = len(w)
    if n == 0:
        return frozenset()
    if n == 1:
        return frozenset({CyclicWord()})
    seq = w.letters
    out = set()
    for i, letter in enumerate(seq):
        # Cyclic runs of length >= 2: drop one letter from each.
        if seq[(i + 1) % n] == letter:
            out.add(CyclicWord(seq[:i] + seq[i + 1 :]))
    return frozenset(out)


def is_root(w: CyclicWord) -> bool:
    """Count test: w is minimal and no minimal word grows into it.

    Boundary case of the minimality inequality: |(ab) - (aB)| = (aa) = (bb).
    """
    if len(w) == 0:
        return False
    p = profile(w)
    return p.imbalance == p.n_aa == p.n_bb and is_minimal(w)


def is_root_oracle(w: CyclicWord) -> bool:
    """Decide root-ness from the definition: minimal with no minimal parent.

    Uses the automorphism-application oracle throughout, so it shares no
    counting code with is_root.  The empty word is not a root by the same
    convention used by is_root.
    """
    if len(w) == 0:
        return False
    if not is_minimal_oracle(w):
        return False
    return not any(is_minimal_oracle(v) for v in parents(w))


def concat_minimal_check(w: CyclicWord, v: CyclicWord) -> CyclicWord:
    """Concatenate minimal words along a shared initial letter.

    Picks rotations of w and v starting with their least common letter and
    returns the (necessarily minimal) cyclic concatenation.
    """
    if not (is_minimal(w) and is_minimal(v)):
        raise ValueError("both inputs must be minimal")
    common = set(w.letters) & set(v.letters)
    if not common:
        raise ValueError("no rotations share an initial letter")
    head = min(common)
    combined = CyclicWord(_least_rotation_from(w, head) + _least_rotation_from(v, head))
    # Guaranteed: the cyclic two-letter subwords of the concatenation are the
    # disjoint union of those of w and v, so the inequality adds.
    assert is_minimal(combined)
    return combined


def _least_rotation_from(w: CyclicWord, head: int) -> tuple[int, ...]:
    seq = w.letters
    n = len(seq)
    return min(seq[i:] + seq[:i] for i in range(n) if seq[i] == head)
