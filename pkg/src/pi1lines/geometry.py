"""Real line arrangements with exact rational coordinates.

Lines are ``a*x + b*y + c = 0``. The sweep runs left to right in ``x``;
wires are numbered bottom to top by ``y``, starting at 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DegenerateLine, DuplicateLine, InternalError, ParseError

Line = tuple[Fraction, Fraction, Fraction]


def _frac(token: str) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational: {token!r}") from exc


def _normalize(line: Line) -> Line:
    a, b, c = line
    lead = next(v for v in (a, b) if v != 0)
    return (a / lead, b / lead, c / lead)


@dataclass(frozen=True)
class Arrangement:
    lines: tuple[Line, ...]

    def __post_init__(self):
        lines = tuple(tuple(Fraction(v) for v in ln) for ln in self.lines)
        if not lines:
            raise ValueError("an arrangement needs at least one line")
        seen: dict[Line, int] = {}
        for idx, (a, b, c) in enumerate(lines, start=1):
            if a == 0 and b == 0:
                raise DegenerateLine(f"line {idx} has zero normal vector")
            key = _normalize((a, b, c))
            if key in seen:
                raise DuplicateLine(f"lines {seen[key]} and {idx} coincide")
            seen[key] = idx
        object.__setattr__(self, "lines", lines)

    @property
    def n(self) -> int:
        return len(self.lines)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence]) -> "Arrangement":
        return cls(tuple(tuple(Fraction(v) for v in row) for row in rows))

    def parallel_pairs(self) -> list[tuple[int, int]]:
        out = []
        for (i, (a1, b1, _)), (j, (a2, b2, _)) in combinations(enumerate(self.lines, 1), 2):
            if a1 * b2 - a2 * b1 == 0:
                out.append((i, j))
        return out

    def has_parallels(self) -> bool:
        return bool(self.parallel_pairs())

    def union(self, other: "Arrangement") -> "Arrangement":
        return Arrangement(self.lines + other.lines)

    def to_text(self) -> str:
        return "".join(" ".join(str(v) for v in ln) + "\n" for ln in self.lines)


@dataclass(frozen=True)
class IntersectionPoint:
    position: tuple[Fraction, Fraction]
    incident: tuple[int, ...]

    @property
    def multiplicity(self) -> int:
        return len(self.incident)


@dataclass(frozen=True)
class LefschetzPairList:
    n: int
    pairs: tuple[tuple[int, int], ...]
    point_ids: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple((int(a), int(b)) for a, b in self.pairs))
        if not self.point_ids:
            object.__setattr__(self, "point_ids", tuple(range(len(self.pairs))))
        if len(self.point_ids) != len(self.pairs):
            raise ValueError("point_ids must parallel pairs")
        for a, b in self.pairs:
            if not (1 <= a < b <= self.n):
                raise ValueError(f"pair [{a},{b}] invalid for n={self.n}")

    def permutation(self) -> tuple[int, ...]:
        """Wire order after the last point, as leftmost positions bottom to top."""
        order = list(range(1, self.n + 1))
        for a, b in self.pairs:
            order[a - 1 : b] = reversed(order[a - 1 : b])
        return tuple(order)

    def all_pairs_meet(self) -> bool:
        """True when every two wires cross, i.e. no parallel lines."""
        return self.permutation() == tuple(range(self.n, 0, -1))

    def to_text(self) -> str:
        body = " ".join(f"[{a},{b}]" for a, b in self.pairs)
        return f"n={self.n}\n{body}\n"


def parse_arrangement(text: str) -> Arrangement:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        tokens = body.split()
        if len(tokens) != 3:
            raise ParseError(f"line {lineno}: expected 3 rationals, got {len(tokens)}")
        rows.append(tuple(_frac(t) for t in tokens))
    if not rows:
        raise ParseError("no lines in arrangement")
    return Arrangement(tuple(rows))


def parse_pairs(text: str) -> LefschetzPairList:
    """Read ``pairs: n=<n>; [a,b] ...`` (or the ``n=<n>`` block printed by ``pairs``)."""
    body = " ".join(raw.split("#", 1)[0] for raw in text.splitlines()).strip()
    if body.startswith("pairs:"):
        body = body[len("pairs:") :]
    body = body.replace(";", " ").strip()
    if not body.startswith("n="):
        raise ParseError("pairs input must start with n=<n>")
    head, _, rest = body.partition(" ")
    try:
        n = int(head[2:])
        pairs = []
        for tok in rest.split():
            if not (tok.startswith("[") and tok.endswith("]")):
                raise ValueError(tok)
            a, b = tok[1:-1].split(",")
            pairs.append((int(a), int(b)))
        return LefschetzPairList(n, tuple(pairs))
    except ValueError as exc:
        raise ParseError(f"malformed pairs input: {exc}") from exc


def looks_like_pairs(text: str) -> bool:
    for raw in text.splitlines():
        body = raw.split("#", 1)[0].strip()
        if body:
            return body.startswith("pairs:") or body.startswith("n=")
    return False


def shear(arr: Arrangement, t) -> Arrangement:
    """Image under ``(x, y) -> (x + t*y, y)``."""
    t = Fraction(t)
    return Arrangement(tuple((a, b - a * t, c) for a, b, c in arr.lines))


def _meet(l1: Line, l2: Line) -> tuple[Fraction, Fraction] | None:
    a1, b1, c1 = l1
    a2, b2, c2 = l2
    det = a1 * b2 - a2 * b1
    if det == 0:
        return None
    return ((b1 * c2 - b2 * c1) / det, (a2 * c1 - a1 * c2) / det)


def _points(arr: Arrangement) -> list[IntersectionPoint]:
    incident: dict[tuple[Fraction, Fraction], set[int]] = {}
    for (i, li), (j, lj) in combinations(enumerate(arr.lines, 1), 2):
        p = _meet(li, lj)
        if p is not None:
            incident.setdefault(p, set()).update((i, j))
    return [IntersectionPoint(p, tuple(sorted(s))) for p, s in incident.items()]


def is_generic(arr: Arrangement) -> bool:
    if any(b == 0 for _, b, _ in arr.lines):
        return False
    xs = [p.position[0] for p in _points(arr)]
    return len(xs) == len(set(xs))


def _shear_candidates():
    yield 0
    k = 1
    while True:
        yield k
        yield -k
        k += 1


def genericity_transform(arr: Arrangement) -> tuple[Arrangement, Fraction]:
    """Shear so that no line is vertical and all points have distinct x.

    Tries ``t = 0, 1, -1, 2, -2, ...`` and returns the first admissible one.
    A shear fixes ``y`` and moves ``x`` affinely, so incidences are unchanged.
    """
    for t in _shear_candidates():
        candidate = shear(arr, t)
        if is_generic(candidate):
            return candidate, Fraction(t)
    raise InternalError("unreachable")  # pragma: no cover


def intersection_lattice(arr: Arrangement) -> list[IntersectionPoint]:
    pts = _points(arr)
    pts.sort(key=lambda p: (p.position[0], p.position[1]))
    return pts


def _slope_intercept(line: Line) -> tuple[Fraction, Fraction]:
    a, b, c = line
    if b == 0:
        raise InternalError("vertical line in sweep; apply genericity_transform first")
    return (-a / b, -c / b)


def leftmost_order(arr: Arrangement) -> list[int]:
    """Line ids bottom to top as x -> -infinity."""
    keyed = []
    for idx, line in enumerate(arr.lines, 1):
        m, q = _slope_intercept(line)
        keyed.append(((-m, q), idx))
    keyed.sort()
    return [idx for _, idx in keyed]


def lefschetz_pairs(arr: Arrangement) -> LefschetzPairList:
    if not is_generic(arr):
        raise InternalError("arrangement is not in generic sweep position")
    order = leftmost_order(arr)
    pairs = []
    ids = []
    for pid, pt in enumerate(intersection_lattice(arr)):
        slots = sorted(order.index(line) for line in pt.incident)
        a, b = slots[0] + 1, slots[-1] + 1
        if b - a + 1 != pt.multiplicity:
            raise InternalError(f"incident lines of point {pt.position} are not consecutive wires")
        pairs.append((a, b))
        ids.append(pid)
        order[a - 1 : b] = reversed(order[a - 1 : b])
    return LefschetzPairList(arr.n, tuple(pairs), tuple(ids))


def sweep_wire_orders(arr: Arrangement) -> list[list[int]]:
    """Wire order (line ids bottom to top) before the first point and after each point."""
    order = leftmost_order(arr)
    out = [list(order)]
    for a, b in lefschetz_pairs(arr).pairs:
        order[a - 1 : b] = reversed(order[a - 1 : b])
        out.append(list(order))
    return out


def append_transversal_line(pl: LefschetzPairList) -> LefschetzPairList:
    """Pair list of the arrangement together with a transversal line.

    The transversal's ``n`` simple crossings follow the original points as
    ``[n,n+1], [n-1,n], ..., [1,2]``; the new line gets index ``n+1``.
    """
    n = pl.n
    extra = tuple((i, i + 1) for i in range(n, 0, -1))
    next_id = max(pl.point_ids, default=-1) + 1
    ids = pl.point_ids + tuple(range(next_id, next_id + n))
    return LefschetzPairList(n + 1, pl.pairs + extra, ids)


def prepare(arr: Arrangement) -> tuple[Arrangement, LefschetzPairList]:
    """Shear into generic position and compute the pair list."""
    generic, _ = genericity_transform(arr)
    return generic, lefschetz_pairs(generic)
