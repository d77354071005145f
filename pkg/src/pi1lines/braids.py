"""Braid words and their Artin action on the free group.

A braid word on ``n`` strands is a tuple of signed letters: ``+i`` is the
positive crossing of strands ``i`` and ``i+1`` and ``-i`` its inverse.
Letters act left to right, so the first letter of a word acts first.

The action is fixed as

    sigma_i :  x_i -> x_{i+1},   x_{i+1} -> x_{i+1} x_i x_{i+1}^-1

and ``sigma_i^-1`` is the inverse substitution. It preserves the boundary
word ``x_n ... x_2 x_1``, the loop around all punctures in the order used
by the projective relation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import GeneratorOutOfRange, StrandMismatch
from .words import Word, free_reduce


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            if letter == 0 or abs(letter) >= self.strands:
                raise IndexError(f"letter {letter} invalid on {self.strands} strands")

    def __add__(self, other: "BraidWord") -> "BraidWord":
        if other.strands != self.strands:
            raise StrandMismatch(f"{self.strands} vs {other.strands} strands")
        return BraidWord(self.strands, self.letters + other.letters)

    def __len__(self):
        return len(self.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def widen(self, strands: int) -> "BraidWord":
        """The same word viewed on more strands."""
        if strands < self.strands:
            raise ValueError("cannot narrow a braid")
        return BraidWord(strands, self.letters)

    def __str__(self):
        return format_braid(self)

    @classmethod
    def parse(cls, text: str, strands: int) -> "BraidWord":
        letters = []
        for tok in text.split():
            base, _, exp = tok.partition("^")
            if not base.startswith("s"):
                raise ValueError(f"bad braid letter {tok!r}")
            i = int(base[1:])
            sign = -1 if exp == "-1" else 1
            if exp not in ("", "1", "-1"):
                raise ValueError(f"bad exponent in {tok!r}")
            letters.append(sign * i)
        return cls(strands, tuple(letters))


def format_braid(braid: BraidWord) -> str:
    return " ".join(f"s{x}" if x > 0 else f"s{-x}^-1" for x in braid.letters)


def compose(braids: Sequence[BraidWord], strands: int | None = None) -> BraidWord:
    """Concatenate braids; the first one in the sequence acts first."""
    if strands is None:
        strands = braids[0].strands if braids else 1
    letters: list[int] = []
    for b in braids:
        if b.strands != strands:
            raise StrandMismatch(f"{b.strands} vs {strands} strands")
        letters.extend(b.letters)
    return BraidWord(strands, tuple(letters))


def half_twist(a: int, b: int, n: int) -> BraidWord:
    """Positive half-twist on strands ``a..b`` of an ``n``-strand braid.

    Written as ``(s_a)(s_{a+1} s_a)...(s_{b-1} ... s_a)``.
    """
    if not (1 <= a < b <= n):
        raise IndexError(f"need 1 <= a < b <= n, got a={a}, b={b}, n={n}")
    letters = []
    for top in range(a, b):
        letters.extend(range(top, a - 1, -1))
    return BraidWord(n, tuple(letters))


def _apply_letter(letter: int, word: Word) -> Word:
    i = abs(letter)
    j = i + 1
    if letter > 0:
        # x_i -> x_j, x_j -> x_j x_i x_j^-1
        img = {i: (j,), j: (j, i, -j)}
    else:
        # x_j -> x_i, x_i -> x_i^-1 x_j x_i
        img = {j: (i,), i: (-i, j, i)}
    out: list[int] = []
    for x in word:
        g = abs(x)
        if g in img:
            piece = img[g]
            if x < 0:
                piece = tuple(-y for y in reversed(piece))
            out.extend(piece)
        else:
            out.append(x)
    return free_reduce(out)


def artin_apply(braid: BraidWord, word: Iterable[int]) -> Word:
    word = free_reduce(word)
    for x in word:
        if abs(x) > braid.strands:
            raise GeneratorOutOfRange(f"x{abs(x)} on a {braid.strands}-strand braid")
    for letter in braid.letters:
        word = _apply_letter(letter, word)
    return word


def generator_images(braid: BraidWord) -> list[Word]:
    """Images of ``x_1 .. x_n``; entry ``i-1`` is the image of ``x_i``."""
    return [artin_apply(braid, (i,)) for i in range(1, braid.strands + 1)]


def braid_equal(b1: BraidWord, b2: BraidWord) -> bool:
    """Equality in the braid group, decided through the faithful Artin action."""
    if b1.strands != b2.strands:
        raise StrandMismatch(f"{b1.strands} vs {b2.strands} strands")
    return generator_images(b1) == generator_images(b2)


def underlying_permutation(braid: BraidWord) -> dict[int, int]:
    """Where each strand position ends up, letters applied left to right.

    ``s1 s2`` on three strands sends 1 -> 2 -> 3, 2 -> 1 and 3 -> 2.
    """
    position = list(range(braid.strands + 1))  # position[strand] = current slot
    for letter in braid.letters:
        i = abs(letter)
        for s in range(1, braid.strands + 1):
            if position[s] == i:
                position[s] = i + 1
            elif position[s] == i + 1:
                position[s] = i
    return {s: position[s] for s in range(1, braid.strands + 1)}
