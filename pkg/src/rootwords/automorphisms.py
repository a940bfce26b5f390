"""Whitehead automorphisms of the rank-2 free group and their action on words.

Two kinds: permutations of the four letters commuting with inversion
(eight exist), and marked-set automorphisms (A, x) sending y to
x^-1^[y^-1 in A] * y * x^[y in A].  With the multiplier and its inverse
kept out of the marked set, the only marked-set automorphisms in rank 2
are the one-letter ones and the inner ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Union

from .words import (
    LETTERS,
    CyclicWord,
    Word,
    _count_cyclic,
    inverse,
    letter_to_char,
)


@dataclass(frozen=True)
class Permutation:
    """A letter permutation commuting with inversion."""

    image: tuple[int, int, int, int]

    def __post_init__(self):
        if sorted(self.image) != list(LETTERS):
            raise ValueError(f"not a bijection on the letters: {self.image}")
        for y in LETTERS:
            if self.image[inverse(y)] != inverse(self.image[y]):
                raise ValueError(f"does not commute with inversion: {self.image}")

    def __call__(self, letter: int) -> int:
        return self.image[letter]

    def token(self) -> str:
        pairs = ",".join(
            f"{letter_to_char(y)}->{letter_to_char(self.image[y])}" for y in (0, 1)
        )
        return f"perm:{pairs}"

    def __repr__(self) -> str:
        return f"Permutation({self.token()!r})"


@dataclass(frozen=True)
class WhiteheadAuto:
    """A marked-set automorphism (A, x): multiplier x, marked set A."""

    multiplier: int
    marked: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "marked", frozenset(self.marked))
        if self.multiplier in self.marked or inverse(self.multiplier) in self.marked:
            raise ValueError("multiplier and its inverse may not be marked")

    @property
    def is_one_letter(self) -> bool:
        return len(self.marked) == 1

    def letter_image(self, y: int) -> tuple[int, ...]:
        x = self.multiplier
        out = []
        if inverse(y) in self.marked:
            out.append(inverse(x))
        out.append(y)
        if y in self.marked:
            out.append(x)
        return tuple(out)

    def token(self) -> str:
        inside = ",".join(letter_to_char(y) for y in sorted(self.marked))
        return f"wh:{{{inside}}}*{letter_to_char(self.multiplier)}"

    def __repr__(self) -> str:
        return f"WhiteheadAuto({self.token()!r})"


Automorphism = Union[Permutation, WhiteheadAuto]


def all_permutations() -> tuple[Permutation, ...]:
    """The eight letter permutations, in a fixed order starting at the identity."""
    perms = []
    for image_a in LETTERS:
        for image_b in LETTERS:
            if image_b in (image_a, inverse(image_a)):
                continue
            perms.append(
                Permutation(
                    _image_tuple(image_a, image_b)
                )
            )
    return tuple(perms)


def _image_tuple(image_a: int, image_b: int) -> tuple[int, int, int, int]:
    image = [0, 0, 0, 0]
    image[0] = image_a
    image[1] = image_b
    image[2] = inverse(image_a)
    image[3] = inverse(image_b)
    return tuple(image)


def one_letter_representatives() -> tuple[WhiteheadAuto, ...]:
    """The four one-letter automorphisms that decide minimality.

    ({a},b), ({a},B), ({b},a), ({b},A); the other four one-letter
    automorphisms differ from these by inner automorphisms, so on cyclic
    words these images cover all eight.
    """
    return (
        WhiteheadAuto(1, frozenset({0})),
        WhiteheadAuto(3, frozenset({0})),
        WhiteheadAuto(0, frozenset({1})),
        WhiteheadAuto(2, frozenset({1})),
    )


def apply_permutation(p: Permutation, w: CyclicWord) -> CyclicWord:
    """Letterwise image, re-canonicalized; always preserves length."""
    image = p.image
    return CyclicWord(image[letter] for letter in w.letters)


def apply_whitehead(s: WhiteheadAuto, w):
    """Image of a Word or CyclicWord under a marked-set automorphism.

    Substitutes letterwise and reduces; a CyclicWord comes back as the
    canonical form of its image class.
    """
    x = s.multiplier
    x_inv = inverse(x)
    marked = s.marked
    out = []
    for y in w.letters:
        if inverse(y) in marked:
            out.append(x_inv)
        out.append(y)
        if y in marked:
            out.append(x)
    return CyclicWord(out) if isinstance(w, CyclicWord) else Word(out)


def apply_automorphism(s: Automorphism, w: CyclicWord) -> CyclicWord:
    if isinstance(s, Permutation):
        return apply_permutation(s, w)
    return apply_whitehead(s, w)


def is_level(s: Automorphism, w: CyclicWord) -> bool:
    """True when applying s preserves the cyclic length of w."""
    if isinstance(s, Permutation):
        return True
    return len(apply_whitehead(s, w)) == len(w)


class ImageCounts(NamedTuple):
    """Predicted two-letter counts of S(w) for S = ({y},x), in the (y, x) basis."""

    yy: int
    yx: int
    yx_inv: int
    xx: int


def predict_profile(s: WhiteheadAuto, w: CyclicWord) -> ImageCounts:
    """Two-letter counts of the image of w under a one-letter automorphism,
    computed from subword counts of w alone.

    For S = ({y},x) and v = S(w):

        (yy)_v = (y x^-1 y)_w
        (yx)_v = (yx)_w + (yy)_w
        (y x^-1)_v = (y x^-1)_w - (y x^-1 y)_w
        (xx)_v = (yx)_w - (y x y^-1)_w + (xx)_w - (y x^-1 x^-1)_w
    """
    if not s.is_one_letter:
        raise ValueError("profile prediction is defined for one-letter automorphisms")
    (y,) = s.marked
    x = s.multiplier
    if x in (y, inverse(y)):
        raise ValueError("multiplier must involve the other generator")
    xi, yi = inverse(x), inverse(y)
    count = w.letters

    def paired(*pattern: int) -> int:
        inv_pattern = tuple(inverse(p) for p in reversed(pattern))
        return _count_cyclic(count, pattern) + _count_cyclic(count, inv_pattern)

    yy_w = paired(y, y)
    yx_w = paired(y, x)
    yxi_w = paired(y, xi)
    xx_w = paired(x, x)
    yxiy_w = paired(y, xi, y)
    yxyi_w = paired(y, x, yi)
    yxixi_w = paired(y, xi, xi)
    return ImageCounts(
        yy=yxiy_w,
        yx=yx_w + yy_w,
        yx_inv=yxi_w - yxiy_w,
        xx=yx_w - yxyi_w + xx_w - yxixi_w,
    )


@dataclass(frozen=True)
class ReductionTrace:
    """Chain of automorphisms applied during length reduction.

    Each step records the automorphism and the cyclic word it produced;
    lengths decrease strictly along the chain.
    """

    steps: tuple[tuple[Automorphism, CyclicWord], ...] = ()

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def lengths(self) -> tuple[int, ...]:
        return tuple(len(word) for _, word in self.steps)
