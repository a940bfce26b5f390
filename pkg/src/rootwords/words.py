"""Letters, words, and cyclic words in the free group on two generators.

Letters are the small integers 0, 1, 2, 3 standing for a, b, a^-1, b^-1.
Inversion is ``letter ^ 2``, and the integer order realizes the canonical
letter order a < b < A < B used for lexicographically least rotations.
Text I/O uses the alphabet {a, b, A, B} with uppercase meaning inverse.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

LETTER_A = 0
LETTER_B = 1
LETTER_A_INV = 2
LETTER_B_INV = 3

LETTERS = (LETTER_A, LETTER_B, LETTER_A_INV, LETTER_B_INV)

_CHARS = "abAB"
_CHAR_TO_LETTER = {c: i for i, c in enumerate(_CHARS)}


class ParseError(ValueError):
    """Raised for word text containing characters outside {a, b, A, B}."""

    def __init__(self, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(
            f"invalid character {text[position]!r} at position {position}; "
            f"words use the alphabet a, b, A, B"
        )


def inverse(letter: int) -> int:
    """Inverse letter: a <-> A, b <-> B."""
    return letter ^ 2


def letter_to_char(letter: int) -> str:
    return _CHARS[letter]


def letter_from_char(char: str) -> int:
    try:
        return _CHAR_TO_LETTER[char]
    except KeyError:
        raise ValueError(f"not a letter: {char!r}") from None


def generator_index(letter: int) -> int:
    """0 for a/A, 1 for b/B."""
    return letter & 1


def _free_reduce(raw: Iterable[int]) -> tuple[int, ...]:
    # Stack cancellation; free reduction is confluent, so this one order
    # gives the unique reduced form.
    out: list[int] = []
    for letter in raw:
        if out and out[-1] == letter ^ 2:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def _spell(letters: Sequence[int]) -> str:
    return "".join(_CHARS[letter] for letter in letters)


class Word:
    """A freely reduced word, the identity being the empty word.

    The constructor reduces its input, so every instance is reduced.

    >>> str(Word.parse("abAB") * Word.parse("baBA"))
    'abABbaBA'
    >>> Word.parse("aA")
    Word('')
    """

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[int] = ()):
        object.__setattr__(self, "letters", _free_reduce(letters))

    @classmethod
    def parse(cls, text: str) -> "Word":
        return parse_word(text)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash((Word, self.letters))

    def __lt__(self, other: "Word") -> bool:
        return self.letters < other.letters

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __invert__(self) -> "Word":
        return Word(tuple(letter ^ 2 for letter in reversed(self.letters)))

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return (~self) ** (-n)
        return Word(self.letters * n)

    def __str__(self) -> str:
        return _spell(self.letters)

    def __repr__(self) -> str:
        return f"Word({_spell(self.letters)!r})"


class CyclicWord:
    """A conjugacy class representative: cyclically reduced, least rotation.

    Two CyclicWords are equal exactly when the underlying words are
    conjugate (equivalent under inner automorphisms).  The constructor
    accepts any letter sequence and reduces it.

    >>> CyclicWord.parse("Bab") == CyclicWord.parse("a")
    True
    >>> str(CyclicWord.parse("ABaBabba"))
    'aabbAB'
    """

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[int] = ()):
        reduced = _free_reduce(letters)
        while len(reduced) >= 2 and reduced[0] == reduced[-1] ^ 2:
            reduced = reduced[1:-1]
        object.__setattr__(self, "letters", _least_rotation(reduced))

    @classmethod
    def parse(cls, text: str) -> "CyclicWord":
        return cls(parse_word(text).letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CyclicWord) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash((CyclicWord, self.letters))

    def __lt__(self, other: "CyclicWord") -> bool:
        return self.letters < other.letters

    def __pow__(self, n: int) -> "CyclicWord":
        # A power of a cyclically reduced word is cyclically reduced.
        return CyclicWord(self.letters * n)

    def __str__(self) -> str:
        return _spell(self.letters)

    def __repr__(self) -> str:
        return f"CyclicWord({_spell(self.letters)!r})"

    def rotations(self) -> Iterator[tuple[int, ...]]:
        seq = self.letters
        for i in range(len(seq)):
            yield seq[i:] + seq[:i]


def parse_word(text: str) -> Word:
    """Parse a/b/A/B text into a freely reduced word.

    >>> parse_word("AbAbabba")
    Word('AbAbabba')
    >>> len(parse_word("aA"))
    0
    """
    letters = []
    for position, char in enumerate(text):
        letter = _CHAR_TO_LETTER.get(char)
        if letter is None:
            raise ParseError(text, position)
        letters.append(letter)
    return Word(letters)


def free_reduce(raw: Iterable[int]) -> Word:
    """Cancel adjacent inverse pairs until none remain."""
    return Word(raw)


def cyclic_reduce(w: Word | Iterable[int]) -> CyclicWord:
    """Map a word to its conjugacy class representative.

    Conjugates collapse: cyclic_reduce(u w u^-1) == cyclic_reduce(w).
    """
    letters = w.letters if isinstance(w, Word) else tuple(w)
    return CyclicWord(letters)


def canonical_rotation(letters: Sequence[int]) -> CyclicWord:
    """Canonical form of an already cyclically reduced letter sequence.

    Rejects input that is not cyclically reduced; use cyclic_reduce for
    arbitrary sequences.
    """
    seq = tuple(letters)
    for i in range(len(seq) - 1):
        if seq[i + 1] == seq[i] ^ 2:
            raise ValueError(f"not freely reduced at position {i}")
    if len(seq) >= 2 and seq[0] == seq[-1] ^ 2:
        raise ValueError("not cyclically reduced: last letter inverts the first")
    return CyclicWord(seq)


def _least_rotation(seq: tuple[int, ...]) -> tuple[int, ...]:
    # Words stay at desk scale, so comparing all rotations of the doubled
    # sequence (tuple comparison runs in C) beats a cleverer linear scan.
    n = len(seq)
    if n < 2:
        return seq
    doubled = seq + seq
    return min(doubled[i : i + n] for i in range(n))


def subword_count(w: CyclicWord, pattern: Word, directed: bool = False) -> int:
    """Number of cyclic occurrences of a pattern (and, by default, its inverse).

    Counts starting positions 0..len(w)-1 at which the pattern matches
    reading around the cycle, so a length-n word has exactly n two-letter
    subwords.  With directed=True only the pattern itself is counted.

    >>> w = CyclicWord.parse("aaaBBAbaB")
    >>> subword_count(w, Word.parse("aa"))
    2
    >>> subword_count(w, Word.parse("aB"))
    2
    """
    k = len(pattern)
    if k == 0:
        raise ValueError("empty pattern")
    if k > len(w):
        raise ValueError(f"pattern of length {k} is longer than the word ({len(w)})")
    total = _count_cyclic(w.letters, pattern.letters)
    if not directed:
        total += _count_cyclic(w.letters, (~pattern).letters)
    return total


def _count_cyclic(seq: tuple[int, ...], pattern: tuple[int, ...]) -> int:
    # Occurrences at each of the len(seq) cyclic start positions, reading
    # indices mod len(seq).  Patterns up to one letter longer than the word
    # wrap past the seam exactly once; profile() relies on this for the
    # single-letter word edge case.
    n = len(seq)
    if n == 0:
        return 0
    count = 0
    for start in range(n):
        for j, p in enumerate(pattern):
            if seq[(start + j) % n] != p:
                break
        else:
            count += 1
    return count


@dataclass(frozen=True)
class PairCounts:
    """The four independent two-letter subword counts of a cyclic word.

    n_aa + n_bb + 2*n_ab + 2*n_aB equals the length of the word: the ab
    and aB classes also account for their reversed readings, whose counts
    agree by the two-letter balance theorem.
    """

    n_aa: int
    n_bb: int
    n_ab: int
    n_aB: int

    @property
    def imbalance(self) -> int:
        return abs(self.n_ab - self.n_aB)

    @property
    def total(self) -> int:
        return self.n_aa + self.n_bb + 2 * self.n_ab + 2 * self.n_aB


# Directed pair -> PairCounts field, indexed by 4*p + q; -1 means the pair
# belongs to a reversed reading (ba, AB, Ba, Ab) counted by the other
# member of its class.  aa/AA -> 0, bb/BB -> 1, ab/BA -> 2, aB/bA -> 3.
_PAIR_FIELD = [-1] * 16
for _p, _q, _f in ((0, 0, 0), (2, 2, 0), (1, 1, 1), (3, 3, 1),
                   (0, 1, 2), (3, 2, 2), (0, 3, 3), (1, 2, 3)):
    _PAIR_FIELD[4 * _p + _q] = _f
del _p, _q, _f


def profile(w: CyclicWord) -> PairCounts:
    """Two-letter subword counts (aa, bb, ab, aB) of a cyclic word.

    The single-letter word x has one cyclic position and wrap-around
    reading gives it (xx) = 1.

    >>> profile(CyclicWord.parse("aaaBBAbaB"))
    PairCounts(n_aa=2, n_bb=1, n_ab=1, n_aB=2)
    """
    seq = w.letters
    n = len(seq)
    if n == 0:
        raise ValueError("the empty word has no two-letter subwords")
    counts = [0, 0, 0, 0]
    prev = seq[-1]
    for cur in seq:
        field = _PAIR_FIELD[4 * prev + cur]
        if field >= 0:
            counts[field] += 1
        prev = cur
    return PairCounts(*counts)


def _run_scan(seq: tuple[int, ...]) -> int:
    n = len(seq)
    if n == 0:
        return 0
    first = seq[0]
    if all(letter == first for letter in seq):
        return n
    best = run = 1
    prev = first
    # Doubling the scan joins the wrap-around run; capped by the branch above.
    for cur in seq[1:] + seq:
        if cur == prev:
            run += 1
            if run > best:
                best = run
        else:
            run = 1
        prev = cur
    return best


def longest_run(w: CyclicWord) -> int:
    """Length of the longest cyclic run of a repeated letter.

    The word x^n is a single run of length n; the empty word has no runs.

    >>> longest_run(CyclicWord.parse("aaaBBAbaB"))
    3
    """
    return _run_scan(w.letters)


def is_alternating(w: CyclicWord) -> bool:
    """True when no letter repeats, i.e. the longest run has length 1."""
    return longest_run(w) == 1


def letter_count(w: CyclicWord, letter: int) -> int:
    """Number of positions holding the letter or its inverse."""
    pair = (letter, letter ^ 2)
    return sum(1 for x in w.letters if x in pair)


EMPTY_WORD = Word()
EMPTY_CYCLIC = CyclicWord()
