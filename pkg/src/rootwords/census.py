"""Exhaustive census of canonical cyclic words, root words, and root classes.

Generation walks a DFS over letter sequences, pruning both free-reduction
violations and prefixes that cannot be the least rotation of any
completion, so only canonical forms are ever materialized.  Desk-scale
sweeps (length <= 20) finish in minutes; larger requests are refused.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .automorphisms import (
    ImageCounts,
    apply_whitehead,
    is_level,
    one_letter_representatives,
    predict_profile,
)
from .minimality import (
    children,
    is_minimal,
    is_minimal_oracle,
    is_root,
    is_root_oracle,
    parents,
)
from .search import minimal_class, verify_root_class
from .words import (
    LETTERS,
    CyclicWord,
    _count_cyclic,
    _PAIR_FIELD,
    _run_scan,
    inverse,
    is_alternating,
    letter_count,
    longest_run,
    profile,
)

DESK_GUARD = 20
_PARALLEL_MIN_LENGTH = 8
_PREFIX_DEPTH = 4


class ResourceGuardError(RuntimeError):
    """A sweep was requested past the desk-scale guard."""


def _trusted_cyclic(letters: tuple[int, ...]) -> CyclicWord:
    # The walker only emits canonical cyclically reduced tuples, so skip
    # the reducing constructor.
    w = CyclicWord.__new__(CyclicWord)
    object.__setattr__(w, "letters", letters)
    return w


class _CanonicalWalker:
    """Incremental canonical-prefix state for the word DFS.

    A prefix survives only while every rotation of any completion could
    still be >= the completion itself.  ``ties`` tracks the rotation
    starts that are still tied with the front of the word; a rotation
    that ever goes lexicographically below kills the prefix, and one that
    goes above is discarded for good.
    """

    __slots__ = ("word", "ties")

    def __init__(self):
        self.word: list[int] = []
        self.ties: list[tuple[int, ...]] = []

    def push(self, c: int) -> bool:
        word = self.word
        t = len(word)
        if t == 0:
            word.append(c)
            self.ties.append(())
            return True
        if c == word[-1] ^ 2:
            return False
        first = word[0]
        if c < first:
            return False
        survivors = []
        for j in self.ties[-1]:
            prev = word[t - j]
            if c < prev:
                return False
            if c == prev:
                survivors.append(j)
        if c == first:
            survivors.append(t)
        word.append(c)
        self.ties.append(tuple(survivors))
        return True

    def pop(self) -> None:
        self.word.pop()
        self.ties.pop()

    def leaf_ok(self) -> bool:
        word = self.word
        n = len(word)
        if n >= 2 and word[-1] == word[0] ^ 2:
            return False
        for j in self.ties[-1]:
            # Tied through the end: the rotation starting at j is smaller
            # exactly when its wrapped tail precedes the word's tail.
            if word[:j] < word[n - j :]:
                return False
        return True


def _iter_words(n: int, prefix: tuple[int, ...] = ()):
    """Canonical cyclically reduced letter tuples of length n, in lex order,
    restricted to completions of the given prefix."""
    if n == 0:
        if not prefix:
            yield ()
        return
    walker = _CanonicalWalker()
    for c in prefix:
        if not walker.push(c):
            return
    base = len(prefix)
    depth = base
    next_try = [0] * (n + 1)
    while True:
        if depth == n:
            if walker.leaf_ok():
                yield tuple(walker.word)
            depth -= 1
            if depth < base:
                return
            walker.pop()
            continue
        c = next_try[depth]
        if c == 4:
            depth -= 1
            if depth < base:
                return
            walker.pop()
            continue
        next_try[depth] = c + 1
        if walker.push(c):
            depth += 1
            next_try[depth] = 0


def enumerate_cyclic_words(n: int):
    """Stream every canonical cyclically reduced word of length n, in
    lexicographic order under a < b < A < B, each exactly once."""
    if n < 0:
        raise ValueError("length must be nonnegative")
    for letters in _iter_words(n):
        yield _trusted_cyclic(letters)


def _viable_prefixes(n: int, depth: int) -> list[tuple[int, ...]]:
    walker = _CanonicalWalker()
    out: list[tuple[int, ...]] = []

    def rec(t: int) -> None:
        if t == depth:
            out.append(tuple(walker.word))
            return
        for c in LETTERS:
            if walker.push(c):
                rec(t + 1)
                walker.pop()

    rec(0)
    return out


def _census_chunk(args: tuple[int, tuple[int, ...]]):
    """Totals for the words of length n under one prefix.

    The minimality and root verdicts inline the two-letter count tests;
    the equivalence suites check this fast path against the definitional
    oracles on every word up to length 12.
    """
    n, prefix = args
    pair_field = _PAIR_FIELD
    total = 0
    minimal = 0
    roots: list[tuple[int, ...]] = []
    max_run = 0
    for letters in _iter_words(n, prefix):
        total += 1
        aa = bb = ab = aB = 0
        prev = letters[-1]
        for cur in letters:
            f = pair_field[4 * prev + cur]
            if f == 0:
                aa += 1
            elif f == 1:
                bb += 1
            elif f == 2:
                ab += 1
            elif f == 3:
                aB += 1
            prev = cur
        imbalance = ab - aB if ab >= aB else aB - ab
        if imbalance <= (aa if aa <= bb else bb):
            minimal += 1
            if imbalance == aa and aa == bb:
                roots.append(letters)
                run = _run_scan(letters)
                if run > max_run:
                    max_run = run
    return total, minimal, roots, max_run


def _sweep_lengths(lengths, threads: int):
    """Run census chunks over the given lengths, deterministically.

    Returns {n: (total, minimal_count, root_tuples, max_run_over_roots)}.
    Splitting by canonical prefix keeps multi-worker output identical to
    the single pass: prefix blocks concatenate in lexicographic order.
    """
    tasks: list[tuple[int, tuple[int, ...]]] = []
    for n in lengths:
        if threads > 1 and n >= _PARALLEL_MIN_LENGTH:
            tasks.extend((n, p) for p in _viable_prefixes(n, _PREFIX_DEPTH))
        else:
            tasks.append((n, ()))
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            chunk_results = list(pool.map(_census_chunk, tasks))
    else:
        chunk_results = [_census_chunk(t) for t in tasks]
    merged: dict[int, tuple[int, int, list[tuple[int, ...]], int]] = {}
    for (n, _), (total, minimal, roots, max_run) in zip(tasks, chunk_results):
        if n not in merged:
            merged[n] = (0, 0, [], 0)
        t0, m0, r0, run0 = merged[n]
        r0.extend(roots)
        merged[n] = (t0 + total, m0 + minimal, r0, max(run0, max_run))
    return merged


def _check_scale(max_len: int, guard: int) -> None:
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    if max_len > guard:
        raise ResourceGuardError(
            f"max_len {max_len} exceeds the desk-scale guard ({guard}); "
            f"raise the guard explicitly to go further"
        )


def enumerate_root_words(
    max_len: int, threads: int = 1, guard: int = DESK_GUARD
) -> list[tuple[int, frozenset[CyclicWord]]]:
    """All canonical root words per length, for lengths 1..max_len."""
    _check_scale(max_len, guard)
    sweep = _sweep_lengths(range(1, max_len + 1), threads)
    out = []
    for n in range(1, max_len + 1):
        _, _, roots, _ = sweep[n]
        out.append((n, frozenset(_trusted_cyclic(r) for r in roots)))
    return out


def _partition_into_classes(roots: list[CyclicWord]):
    """Split same-length root words into automorphism classes."""
    root_set = frozenset(roots)
    remaining = set(root_set)
    classes = []
    for w in roots:
        if w not in remaining:
            continue
        cls = minimal_class(w)
        if not cls.members <= root_set:
            stray = sorted(cls.members - root_set)[0]
            raise RuntimeError(
                f"class of root word {w} contains the non-root {stray}"
            )
        remaining -= cls.members
        classes.append(cls)
    return classes


def enumerate_root_classes(
    max_len: int, threads: int = 1, guard: int = DESK_GUARD
):
    """Root-word equivalence classes up to max_len, ordered by length and
    least member; classes partition the root words of each length."""
    classes = []
    for _, roots in enumerate_root_words(max_len, threads=threads, guard=guard):
        classes.extend(_partition_into_classes(sorted(roots)))
    return classes


@dataclass(frozen=True)
class CensusRecord:
    length: int
    total_cyclic_words: int
    minimal_count: int
    root_count: int
    root_class_count: int
    max_run_over_roots: int

    def to_json_dict(self) -> dict:
        return {
            "length": self.length,
            "total_cyclic_words": self.total_cyclic_words,
            "minimal_count": self.minimal_count,
            "root_count": self.root_count,
            "root_class_count": self.root_class_count,
            "max_run_over_roots": self.max_run_over_roots,
        }


def census_records(
    max_len: int, threads: int = 1, guard: int = DESK_GUARD
) -> list[CensusRecord]:
    """One record per length 1..max_len."""
    _check_scale(max_len, guard)
    sweep = _sweep_lengths(range(1, max_len + 1), threads)
    records = []
    for n in range(1, max_len + 1):
        total, minimal, root_tuples, max_run = sweep[n]
        roots = [_trusted_cyclic(r) for r in root_tuples]
        records.append(
            CensusRecord(
                length=n,
                total_cyclic_words=total,
                minimal_count=minimal,
                root_count=len(roots),
                root_class_count=len(_partition_into_classes(roots)),
                max_run_over_roots=max_run,
            )
        )
    return records


def extremal_root_word(n: int) -> CyclicWord:
    """The length-4n root word whose longest run meets the n+1 bound:
    a^(n+1) (ba)^(n-1) b^(n+1)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    letters = [0] * (n + 1)
    letters.extend([1, 0] * (n - 1))
    letters.extend([1] * (n + 1))
    return CyclicWord(letters)


def _paired_count(letters: tuple[int, ...], pattern: tuple[int, ...]) -> int:
    inv_pattern = tuple(inverse(p) for p in reversed(pattern))
    return _count_cyclic(letters, pattern) + _count_cyclic(letters, inv_pattern)


def _measured_image_counts(s, v: CyclicWord) -> ImageCounts:
    (y,) = s.marked
    x = s.multiplier
    return ImageCounts(
        yy=_paired_count(v.letters, (y, y)),
        yx=_paired_count(v.letters, (y, x)),
        yx_inv=_paired_count(v.letters, (y, inverse(x))),
        xx=_paired_count(v.letters, (x, x)),
    )


def run_verification(max_len: int, threads: int = 1, guard: int = DESK_GUARD) -> dict:
    """Execute the theorem suites and report pass/fail per statement.

    Suites with fixed exhaustive scopes are capped at their own bounds;
    requesting beyond the desk guard yields a partial report flagged
    incomplete rather than an error.
    """
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    effective = min(max_len, guard)
    reps = one_letter_representatives()

    small_cap = min(effective, 12)
    by_len = {n: list(enumerate_cyclic_words(n)) for n in range(small_cap + 1)}

    def corpus(lo: int, hi: int):
        return itertools.chain.from_iterable(
            by_len[n] for n in range(lo, min(hi, small_cap) + 1)
        )

    theorems: dict[str, dict] = {}

    def record(name: str, corpus_desc: str, checked: int, failures: list[str]):
        theorems[name] = {
            "corpus": corpus_desc,
            "checked": checked,
            "passed": not failures,
            "failures": failures[:5],
        }

    # Two-letter balance: (xy)_w = (yx)_w for letters from distinct generators.
    cap = min(effective, 10)
    checked = 0
    failures = []
    cross_pairs = [
        (x, y) for x in LETTERS for y in LETTERS if y not in (x, inverse(x))
    ]
    for w in corpus(1, cap):
        checked += 1
        for x, y in cross_pairs:
            if _paired_count(w.letters, (x, y)) != _paired_count(w.letters, (y, x)):
                failures.append(str(w))
                break
    record("two-letter-balance", f"all cyclic words of length 1..{cap}", checked, failures)

    # The four stored counts account for the whole word.
    checked = 0
    failures = []
    for w in corpus(1, cap):
        checked += 1
        if profile(w).total != len(w):
            failures.append(str(w))
    record("pair-count-sum", f"all cyclic words of length 1..{cap}", checked, failures)

    # Count test for minimality == automorphism-application oracle.
    cap = min(effective, 12)
    checked = 0
    failures = []
    for w in corpus(0, cap):
        checked += 1
        if is_minimal(w) != is_minimal_oracle(w):
            failures.append(str(w))
    record(
        "minimality-inequality",
        f"all cyclic words of length 0..{cap}",
        checked,
        failures,
    )

    # Count test for root words == definitional oracle.
    checked = 0
    failures = []
    for w in corpus(0, cap):
        checked += 1
        if is_root(w) != is_root_oracle(w):
            failures.append(str(w))
    record("root-word-equality", f"all cyclic words of length 0..{cap}", checked, failures)

    # Predicted image counts match measured ones for one-letter moves.
    cap = min(effective, 10)
    checked = 0
    failures = []
    for w in corpus(1, cap):
        checked += 1
        for s in reps:
            predicted = predict_profile(s, w)
            if predicted != _measured_image_counts(s, apply_whitehead(s, w)):
                failures.append(f"{w} under {s.token()}")
                break
    record(
        "cyclic-word-count-update",
        f"all cyclic words of length 1..{cap}, four one-letter moves each",
        checked,
        failures,
    )

    # Length preservation == the count criterion for level moves.
    checked = 0
    failures = []
    for w in corpus(1, cap):
        checked += 1
        for s in reps:
            (y,) = s.marked
            x = s.multiplier
            by_counts = _paired_count(w.letters, (y, inverse(x))) == _paired_count(
                w.letters, (y, x)
            ) + _paired_count(w.letters, (y, y))
            if is_level(s, w) != by_counts:
                failures.append(f"{w} under {s.token()}")
                break
    record(
        "level-criterion",
        f"all cyclic words of length 1..{cap}, four one-letter moves each",
        checked,
        failures,
    )

    # Children of minimal words stay minimal.
    cap = min(effective, 10)
    checked = 0
    failures = []
    for w in corpus(0, cap):
        if not is_minimal(w):
            continue
        checked += 1
        if not all(is_minimal(c) for c in children(w)):
            failures.append(str(w))
    record(
        "children-of-minimal",
        f"all minimal cyclic words of length 0..{cap}",
        checked,
        failures,
    )

    # Growing down and growing up are inverse relations.
    cap = min(effective, 8)
    checked = 0
    failures = []
    for w in corpus(0, cap):
        checked += 1
        if not all(w in children(v) for v in parents(w)):
            failures.append(str(w))
            continue
        if not all(w in parents(c) for c in children(w)):
            failures.append(str(w))
    record(
        "parent-child-duality",
        f"all cyclic words of length 0..{cap}",
        checked,
        failures,
    )

    # Root sieve sweeps, up to the requested length.
    roots_by_len = enumerate_root_words(effective, threads=threads, guard=guard)

    checked = 0
    failures = []
    lengths_with_roots = set()
    for n, roots in roots_by_len:
        if roots:
            lengths_with_roots.add(n)
        for w in roots:
            checked += 1
            if n % 4 != 0:
                failures.append(str(w))
    for n in range(4, effective + 1, 4):
        family = extremal_root_word(n // 4)
        if family not in dict(roots_by_len)[n]:
            failures.append(f"missing extremal word {family} at length {n}")
    record(
        "divisibility-by-4",
        f"all root words of length 1..{effective}",
        checked,
        failures,
    )

    checked = 0
    failures = []
    for n, roots in roots_by_len:
        bound = n // 4 + 1
        for w in roots:
            checked += 1
            if longest_run(w) > bound:
                failures.append(str(w))
    for n in range(4, effective + 1, 4):
        family = extremal_root_word(n // 4)
        if longest_run(family) != n // 4 + 1:
            failures.append(f"extremal word {family} misses the bound")
    record(
        "run-length-bound",
        f"all root words of length 1..{effective}",
        checked,
        failures,
    )

    checked = 0
    failures = []
    for _, roots in roots_by_len:
        for w in roots:
            checked += 1
            if letter_count(w, 0) != letter_count(w, 1):
                failures.append(str(w))
    record(
        "root-letter-balance",
        f"all root words of length 1..{effective}",
        checked,
        failures,
    )

    # Root-ness is preserved and reflected by powers.
    cap = min(effective, 8)
    checked = 0
    failures = []
    for w in corpus(1, cap):
        checked += 1
        flag = is_root(w)
        if any(is_root(w**k) != flag for k in (2, 3)):
            failures.append(str(w))
    record("root-powers", f"all cyclic words of length 1..{cap}", checked, failures)

    # Classes of root words are uniformly root.
    cap = min(effective, 12)
    checked = 0
    failures = []
    for n, roots in roots_by_len:
        if n > cap:
            break
        try:
            classes = _partition_into_classes(sorted(roots))
        except RuntimeError as err:
            failures.append(str(err))
            continue
        for cls in classes:
            checked += 1
            if not (verify_root_class(cls) and cls.is_root_class):
                failures.append(str(min(cls.members)))
    record(
        "root-class-uniformity",
        f"classes of all root words of length 1..{cap}",
        checked,
        failures,
    )

    # Level one-letter images of root words are root words.
    checked = 0
    failures = []
    for n, roots in roots_by_len:
        if n > cap:
            break
        for w in roots:
            checked += 1
            for s in reps:
                if is_level(s, w) and not is_root(apply_whitehead(s, w)):
                    failures.append(f"{w} under {s.token()}")
                    break
    record(
        "level-preserves-root",
        f"all root words of length 1..{cap}",
        checked,
        failures,
    )

    # For alternating words: minimal == root == all four moves level.
    # Single letters are degenerate (their one cyclic pair repeats the
    # letter), so the triad starts at length 2.
    cap = min(effective, 14)
    checked = 0
    failures = []
    for n in range(2, cap + 1):
        words_n = by_len[n] if n <= small_cap else enumerate_cyclic_words(n)
        for w in words_n:
            if not is_alternating(w):
                continue
            checked += 1
            a = is_minimal(w)
            b = is_root(w)
            c = all(is_level(s, w) for s in reps)
            if not (a == b == c):
                failures.append(str(w))
    record(
        "alternating-triad",
        f"all alternating cyclic words of length 2..{cap}",
        checked,
        failures,
    )

    return {
        "requested_max_len": max_len,
        "max_len": effective,
        "complete": effective == max_len,
        "passed": all(t["passed"] for t in theorems.values()),
        "theorems": theorems,
    }
