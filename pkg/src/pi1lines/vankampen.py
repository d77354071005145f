"""Braid monodromy tables and van Kampen presentations.

Generators ``x_1..x_n`` are loops around the lines in their leftmost wire
order, bottom to top. For the j-th point the local loops are the images of
``x_a..x_b`` under the half-twists of all earlier points, the nearest point
acting first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .braids import BraidWord, _apply_letter, half_twist
from .errors import PrecondParallel, SimplificationFailure
from .geometry import Arrangement, LefschetzPairList, append_transversal_line, prepare
from .presentation import Presentation, projective_relator
from .words import Word, commutator, concat, cyclic_canonical, free_reduce, inverse, partially_commutative_reduce

Source = Union[Arrangement, LefschetzPairList]


@dataclass(frozen=True)
class MonodromyEntry:
    point: int
    pair: tuple[int, int]
    braid: BraidWord
    generators: tuple[Word, ...]

    @property
    def multiplicity(self) -> int:
        return self.pair[1] - self.pair[0] + 1


def pair_list(source: Source) -> LefschetzPairList:
    if isinstance(source, LefschetzPairList):
        return source
    return prepare(source)[1]


def _substitute_images(word: Word, images: list[Word]) -> Word:
    out: list[int] = []
    for x in word:
        out.extend(images[x - 1] if x > 0 else inverse(images[-x - 1]))
    return free_reduce(out)


def monodromy_table(pl: LefschetzPairList) -> list[MonodromyEntry]:
    n = pl.n
    # images[i] = image of x_{i+1} under the current conjugating braid
    images: list[Word] = [(i,) for i in range(1, n + 1)]
    letters: list[int] = []
    entries = []
    for j, (a, b) in enumerate(pl.pairs):
        ys = tuple(images[t - 1] for t in range(a, b + 1))
        entries.append(MonodromyEntry(j + 1, (a, b), BraidWord(n, tuple(letters)), ys))
        # prepend this point's half-twist: it acts before everything collected so far
        twist = half_twist(a, b, n)
        letters = list(twist.letters) + letters
        new_images = []
        for i in range(1, n + 1):
            w: Word = (i,)
            for letter in twist.letters:
                w = _apply_letter(letter, w)
            new_images.append(_substitute_images(w, images))
        images = new_images
    return entries


def cyclic_relators(ys: tuple[Word, ...]) -> list[Word]:
    """``y_m...y_1 = y_s...y_1 y_m...y_{s+1}`` for ``s = 1..m-1``, as relators."""
    m = len(ys)
    full = concat(*reversed(ys))
    out = []
    for s in range(1, m):
        rotated = concat(*reversed(ys[:s]), *reversed(ys[s:]))
        out.append(concat(full, inverse(rotated)))
    return out


def point_relations(entry: MonodromyEntry) -> list[Word]:
    return cyclic_relators(entry.generators)


def _presentation_from_table(n: int, table: list[MonodromyEntry]) -> Presentation:
    rels, labels = [], []
    for e in table:
        for s, r in enumerate(point_relations(e), 1):
            rels.append(r)
            labels.append(f"p{e.point}.{s}")
    return Presentation(n, tuple(rels), tuple(labels))


def affine_presentation(source: Source) -> Presentation:
    pl = pair_list(source)
    return _presentation_from_table(pl.n, monodromy_table(pl))


def projective_presentation(source: Source) -> Presentation:
    aff = affine_presentation(source)
    return Presentation(
        aff.generators,
        aff.relators + (projective_relator(aff.generators),),
        aff.labels + ("proj",),
    )


@dataclass(frozen=True)
class TransversalRelations:
    """Relations contributed by the transversal line's crossings.

    ``raw[j-1]`` comes from the crossing whose loop is conjugate to ``x_j``
    (``j = 1`` is the first crossing after the original points).
    """

    n: int
    raw: tuple[Word, ...]
    simplified: tuple[Word, ...]


def expected_transversal_relator(n: int, j: int) -> Word:
    """``[x_n ... x_{j+1} x_j x_{j+1}^-1 ... x_n^-1, x_{n+1}]``."""
    conj = tuple(range(n, j, -1))
    return commutator(concat(conj, (j,), inverse(conj)), (n + 1,))


def transversal_relations(pl: LefschetzPairList) -> TransversalRelations:
    """Generate the transversal crossings' relations and simplify them.

    They are processed from the last crossing back to the first; each step
    reduces a relator using the commutations with ``x_{n+1}`` already
    established and must end up literally equal to ``[x_j, x_{n+1}]``.
    """
    if not pl.all_pairs_meet():
        raise PrecondParallel("some lines never meet; the transversal relations need every pair to cross")
    n = pl.n
    k = len(pl.pairs)
    table = monodromy_table(append_transversal_line(pl))
    raw = tuple(point_relations(e)[0] for e in table[k:])
    g = n + 1
    established: set[int] = set()

    def commutes(u: int, v: int) -> bool:
        return (u == g and v in established) or (v == g and u in established)

    simplified: list[Word] = [()] * n
    for j in range(n, 0, -1):
        reduced = partially_commutative_reduce(raw[j - 1], commutes, cyclic=True)
        target = commutator((j,), (g,))
        if cyclic_canonical(reduced) != cyclic_canonical(target):
            raise SimplificationFailure(
                f"crossing {j} of the transversal gives {list(reduced)}, expected [x{j}, x{g}]"
            )
        simplified[j - 1] = target
        established.add(j)
    return TransversalRelations(n, raw, tuple(simplified))


def affine_via_transversal(source: Source) -> Presentation:
    """Presentation of the complement of the arrangement plus a transversal line.

    ``< x_1..x_{n+1} | R ; [x_i, x_{n+1}], 1 <= i <= n ; x_{n+1} x_n ... x_1 >``
    where ``R`` are the relations of the original points.
    """
    pl = pair_list(source)
    if not pl.all_pairs_meet():
        raise PrecondParallel("arrangement has parallel lines")
    tr = transversal_relations(pl)
    base = affine_presentation(pl)
    n = pl.n
    rels = base.relators + tr.simplified + (projective_relator(n + 1),)
    labels = base.labels + tuple(f"L.{i}" for i in range(1, n + 1)) + ("proj",)
    return Presentation(n + 1, rels, labels)
