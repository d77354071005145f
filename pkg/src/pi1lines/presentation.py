"""Finite presentations and the Tietze moves used by the decomposition check."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field, replace
from typing import Iterable

from .errors import (
    GeneratorOutOfRange,
    MissingProjectiveRelation,
    NotCentral,
    SelfReference,
    UnbalancedRelator,
)
from .words import (
    Word,
    commutator,
    cyclic_canonical,
    exponent_sum,
    format_word,
    free_reduce,
    generators_in,
    inverse,
    rename,
)


@dataclass(frozen=True)
class Presentation:
    """``<x_1..x_n | relators>``.

    ``names`` records the original index of each generator so that
    presentations obtained by deleting generators still print as ``x2..``.
    ``labels`` optionally says where each relator came from.
    """

    generators: int
    relators: tuple[Word, ...] = ()
    labels: tuple[str, ...] | None = None
    names: tuple[int, ...] = field(default=())

    def __post_init__(self):
        rels = tuple(free_reduce(r) for r in self.relators)
        object.__setattr__(self, "relators", rels)
        if not self.names:
            object.__setattr__(self, "names", tuple(range(1, self.generators + 1)))
        if len(self.names) != self.generators:
            raise ValueError("names must list every generator")
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
            if len(self.labels) != len(rels):
                raise ValueError("labels must parallel relators")
        for r in rels:
            for x in r:
                if abs(x) > self.generators:
                    raise GeneratorOutOfRange(f"x{abs(x)} in a presentation on {self.generators} generators")

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else f"r{i + 1}"

    def canonical_relators(self) -> Counter:
        """Multiset of canonical relators, trivial ones dropped."""
        return Counter(c for c in map(cyclic_canonical, self.relators) if c)

    def same_relators(self, other: "Presentation") -> bool:
        return self.generators == other.generators and self.canonical_relators() == other.canonical_relators()

    def to_text(self) -> str:
        lines = [f"gens: {self.generators}"]
        lines.extend(" ".join(str(x) for x in r) for r in self.relators)
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        out = {"gens": self.generators, "relators": [list(r) for r in self.relators]}
        if self.names != tuple(range(1, self.generators + 1)):
            out["names"] = list(self.names)
        if self.labels is not None:
            out["labels"] = list(self.labels)
        return out

    def to_json(self) -> str:
        return json.dumps({"schema": 1, **self.to_dict()}, sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "Presentation":
        return cls(
            data["gens"],
            tuple(tuple(r) for r in data["relators"]),
            tuple(data["labels"]) if "labels" in data else None,
            tuple(data.get("names", ())),
        )

    def pretty(self) -> str:
        gens = ", ".join(f"x{i}" for i in self.names)
        named = [format_word(rename(r, dict(enumerate(self.names, 1)))) for r in self.relators]
        return f"< {gens} | " + " ; ".join(named) + " >"


def parse_presentation_text(text: str) -> Presentation:
    rows = [ln.strip() for ln in text.splitlines() if ln.strip()]
    head = rows[0]
    if not head.startswith("gens:"):
        raise ValueError("presentation text must start with 'gens: n'")
    n = int(head.split(":", 1)[1])
    return Presentation(n, tuple(tuple(int(t) for t in row.split()) for row in rows[1:]))


def substitute(p: Presentation, gen: int, w: Iterable[int]) -> Presentation:
    """Replace every ``x_gen`` by ``w`` (and its inverse by ``w^-1``)."""
    w = free_reduce(w)
    if gen in generators_in(w):
        raise SelfReference(f"x{gen} occurs in its own replacement")
    w_inv = inverse(w)
    rels = []
    for r in p.relators:
        out: list[int] = []
        for x in r:
            if x == gen:
                out.extend(w)
            elif x == -gen:
                out.extend(w_inv)
            else:
                out.append(x)
        rels.append(free_reduce(out))
    return replace(p, relators=tuple(rels))


def projective_relator(n: int) -> Word:
    """``x_n x_{n-1} ... x_1``."""
    return tuple(range(n, 0, -1))


def drop_generator(p: Presentation, gen: int) -> Presentation:
    """Remove a generator that no relator mentions, renumbering the rest."""
    for r in p.relators:
        if gen in generators_in(r):
            raise ValueError(f"x{gen} still occurs in {list(r)}")
    mapping = {i: (i if i < gen else i - 1) for i in range(1, p.generators + 1) if i != gen}
    names = tuple(nm for i, nm in enumerate(p.names, 1) if i != gen)
    return Presentation(
        p.generators - 1, tuple(rename(r, mapping) for r in p.relators), p.labels, names
    )


def eliminate_by_projective_relation(p: Presentation) -> Presentation:
    """Use ``x_N ... x_1 = 1`` to remove ``x_1``.

    The relator is dropped, ``x_1`` is replaced by ``x_2^-1 ... x_N^-1`` and
    the remaining generators are renumbered from 1.
    """
    n = p.generators
    target = cyclic_canonical(projective_relator(n)) if n else None
    idx = next(
        (i for i, r in enumerate(p.relators) if n and cyclic_canonical(r) == target),
        None,
    )
    if idx is None:
        raise MissingProjectiveRelation(f"no relator x{n}...x1 in presentation")
    rels = p.relators[:idx] + p.relators[idx + 1 :]
    labels = None if p.labels is None else p.labels[:idx] + p.labels[idx + 1 :]
    rest = Presentation(n, rels, labels, p.names)
    rest = substitute(rest, 1, tuple(-i for i in range(2, n + 1)))
    return drop_generator(rest, 1)


def central_commutator(i: int, g: int) -> Word:
    return commutator((i,), (g,))


def cancel_central_generator(p: Presentation, g: int) -> Presentation:
    """Split off a central generator whose exponent sum vanishes in every relator.

    Needs ``[x_i, x_g]`` literally present for every other ``i``. The
    commutators are dropped, ``x_g`` is erased from the other relators, relators
    that become trivial are dropped, and ``x_g`` is removed from the generators.
    """
    present = {cyclic_canonical(r) for r in p.relators}
    for i in range(1, p.generators + 1):
        if i != g and cyclic_canonical(central_commutator(i, g)) not in present:
            raise NotCentral(f"[x{p.names[i - 1]}, x{p.names[g - 1]}] is not a relator")
    for r in p.relators:
        if exponent_sum(r, g) != 0:
            raise UnbalancedRelator(r, p.names[g - 1])
    central = {cyclic_canonical(central_commutator(i, g)) for i in range(1, p.generators + 1) if i != g}
    rels, labels = [], []
    for k, r in enumerate(p.relators):
        if cyclic_canonical(r) in central:
            continue
        stripped = free_reduce(x for x in r if abs(x) != g)
        if not stripped:
            continue
        rels.append(stripped)
        labels.append(p.label(k))
    out = Presentation(p.generators, tuple(rels), tuple(labels) if p.labels is not None else None, p.names)
    return drop_generator(out, g)
