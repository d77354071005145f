"""Group invariants used to cross-check presentations.

Abelianization by Smith normal form, Fan's structure formula for arrangements
whose graph of higher singularities is a forest, the product check for two
arrangements in transversal position, and invariant tables for comparing two
arrangements.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import NotTransversal
from .geometry import Arrangement, IntersectionPoint, genericity_transform, intersection_lattice, lefschetz_pairs, leftmost_order
from .presentation import Presentation
from .vankampen import affine_presentation, projective_presentation
from .words import Word, commutator, cyclic_canonical, exponent_sum, free_reduce, partially_commutative_reduce, rename


# -- Smith normal form -------------------------------------------------------

def smith_normal_form(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Invariant factors ``d_1 | d_2 | ...`` (``min(rows, cols)`` of them, zeros last)."""
    a = [[int(v) for v in row] for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag = []
    for t in range(min(rows, cols)):
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            diag.extend([0] * (min(rows, cols) - t))
            break
        i, j = pivot
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            # clear column t below the pivot, then row t right of it
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
            leftover = [(i, t) for i in range(t + 1, rows) if a[i][t]]
            leftover += [(t, j) for j in range(t + 1, cols) if a[t][j]]
            if not leftover:
                bad = next(
                    ((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                # pull an entry p does not divide into row t
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                continue
            i, j = min(leftover, key=lambda ij: abs(a[ij[0]][ij[1]]))
            if j == t:
                a[t], a[i] = a[i], a[t]
            else:
                for row in a:
                    row[t], row[j] = row[j], row[t]
        diag.append(abs(a[t][t]))
    return diag


def exponent_matrix(p: Presentation) -> list[list[int]]:
    return [[exponent_sum(r, g) for g in range(1, p.generators + 1)] for r in p.relators]


def abelianization(p: Presentation) -> tuple[int, tuple[int, ...]]:
    """``(free rank, torsion coefficients)`` of the abelianized group."""
    factors = smith_normal_form(exponent_matrix(p)) if p.relators and p.generators else []
    rank = sum(1 for d in factors if d)
    return p.generators - rank, tuple(d for d in factors if d > 1)


def format_abelian(rank: int, torsion: Sequence[int]) -> str:
    parts = [f"Z^{rank}"] if rank else []
    parts += [f"Z/{d}" for d in torsion]
    return " + ".join(parts) if parts else "0"


# -- Fan's formula ----------------------------------------------------------

@dataclass
class FanPrediction:
    applicable: bool
    n: int
    higher_points: list[tuple[tuple[Fraction, Fraction], int]]
    edges: list[tuple[int, int]]
    r: int
    cycle: list[int] = field(default_factory=list)

    @property
    def free_ranks(self) -> list[int]:
        return [m - 1 for _, m in self.higher_points]

    def projective(self) -> str:
        return _format_structure(self.r, self.free_ranks)

    def affine(self) -> str:
        return _format_structure(self.r + 1, self.free_ranks)

    def to_dict(self) -> dict:
        return {
            "applicable": self.applicable,
            "n": self.n,
            "higherPoints": [
                {"position": [str(c) for c in pos], "multiplicity": m} for pos, m in self.higher_points
            ],
            "edges": [list(e) for e in self.edges],
            "cycle": self.cycle,
            "r": self.r,
            "projective": self.projective() if self.applicable else None,
            "affine": self.affine() if self.applicable else None,
        }


def _format_structure(r: int, free_ranks: list[int]) -> str:
    parts = [f"Z^{r}"] if r else []
    parts += [f"F{k}" for k in free_ranks]
    return " + ".join(parts) if parts else "1"


def fan_graph(arr: Arrangement) -> tuple[list[IntersectionPoint], list[tuple[int, int]]]:
    """Higher singularities and edges between consecutive ones along each line."""
    generic, _ = genericity_transform(arr)
    pts = intersection_lattice(generic)
    higher = [p for p in pts if p.multiplicity >= 3]
    edges = set()
    for line in range(1, arr.n + 1):
        on_line = [i for i, p in enumerate(higher) if line in p.incident]  # already x-sorted
        for u, v in zip(on_line, on_line[1:]):
            edges.add((u, v))
    return higher, sorted(edges)


def _find_cycle(k: int, edges: list[tuple[int, int]]) -> list[int]:
    adj: dict[int, list[int]] = {v: [] for v in range(k)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    parent: dict[int, int | None] = {}
    for root in range(k):
        if root in parent:
            continue
        parent[root] = None
        stack = [root]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v == parent[u]:
                    continue
                if v in parent:
                    # walk both ends up to their common ancestor
                    path_u, path_v = [u], [v]
                    while path_u[-1] is not None:
                        path_u.append(parent[path_u[-1]])
                    while path_v[-1] is not None:
                        path_v.append(parent[path_v[-1]])
                    common = next(x for x in path_u if x in path_v)
                    cyc = path_u[: path_u.index(common) + 1]
                    cyc += list(reversed(path_v[: path_v.index(common)]))
                    return cyc
                parent[v] = u
                stack.append(v)
    return []


def fan_predict(arr: Arrangement) -> FanPrediction:
    higher, edges = fan_graph(arr)
    cycle = _find_cycle(len(higher), edges)
    k = len(higher)
    r = arr.n + k - 1 - sum(p.multiplicity for p in higher)
    pred = FanPrediction(
        applicable=not cycle,
        n=arr.n,
        higher_points=[(p.position, p.multiplicity) for p in higher],
        edges=edges,
        r=r,
        cycle=cycle,
    )
    if r + sum(pred.free_ranks) != arr.n - 1:
        raise AssertionError("Fan rank identity violated")  # pure arithmetic; guards the bookkeeping
    return pred


def fan_consistency(arr: Arrangement) -> dict:
    pred = fan_predict(arr)
    proj_rank, proj_tor = abelianization(projective_presentation(arr))
    aff_rank, aff_tor = abelianization(affine_presentation(arr))
    expected_proj = pred.r + sum(pred.free_ranks)
    checks = {
        "identity": expected_proj == arr.n - 1,
        "projective_rank": proj_rank == expected_proj and not proj_tor,
        "affine_rank": aff_rank == expected_proj + 1 and aff_rank == arr.n and not aff_tor,
    }
    return {
        "applicable": pred.applicable,
        "prediction": pred.to_dict(),
        "projective_abelianization": format_abelian(proj_rank, proj_tor),
        "affine_abelianization": format_abelian(aff_rank, aff_tor),
        "checks": checks,
        "match": pred.applicable and all(checks.values()),
    }


# -- transversal unions -----------------------------------------------------

@dataclass
class TransversalReport:
    n1: int
    n2: int
    cross_points: int
    abelian_union: tuple[int, tuple[int, ...]]
    abelian_parts: tuple[int, tuple[int, ...]]
    cross_commutators_derived: int
    relators_match: bool | None
    details: dict = field(default_factory=dict)

    @property
    def abelian_match(self) -> bool:
        return self.abelian_union == self.abelian_parts

    @property
    def transversal(self) -> bool:
        return self.cross_points == self.n1 * self.n2

    def to_dict(self) -> dict:
        return {
            "n1": self.n1,
            "n2": self.n2,
            "crossPoints": self.cross_points,
            "transversal": self.transversal,
            "abelianUnion": format_abelian(*self.abelian_union),
            "abelianParts": format_abelian(*self.abelian_parts),
            "abelianMatch": self.abelian_match,
            "crossCommutatorsDerived": self.cross_commutators_derived,
            "relatorsMatch": self.relators_match,
            **self.details,
        }


def _add_abelian(a, b):
    return (a[0] + b[0], tuple(sorted(a[1] + b[1])))


def oka_sakamoto_check(arr1: Arrangement, arr2: Arrangement, relator_limit: int = 6) -> TransversalReport:
    """Compare the union of two transversal arrangements with its parts.

    Transversal means every line of one meets every line of the other in a
    double point. Abelianizations are always compared; when the union has at
    most ``relator_limit`` lines the relators are compared literally after
    deriving every cross commutation from the cross points' relations.
    """
    n1, n2 = arr1.n, arr2.n
    union = arr1.union(arr2)
    generic, t = genericity_transform(union)
    side = {line: (1 if line <= n1 else 2) for line in range(1, n1 + n2 + 1)}

    cross_points = 0
    for p in intersection_lattice(generic):
        sides = {side[line] for line in p.incident}
        if len(sides) == 2:
            if p.multiplicity != 2:
                raise NotTransversal(f"point {tuple(map(str, p.position))} joins {p.incident}", p)
            cross_points += 1
    if cross_points != n1 * n2:
        raise NotTransversal(f"{cross_points} cross points, expected {n1 * n2} (parallel lines across the parts)")

    union_aff = affine_presentation(generic)
    part1 = Arrangement(generic.lines[:n1])
    part2 = Arrangement(generic.lines[n1:])
    parts_ab = _add_abelian(abelianization(affine_presentation(part1)), abelianization(affine_presentation(part2)))
    report = TransversalReport(n1, n2, cross_points, abelianization(union_aff), parts_ab, 0, None)

    if n1 + n2 <= relator_limit:
        _compare_relators(generic, n1, part1, part2, report)
    return report


def _compare_relators(generic: Arrangement, n1: int, part1: Arrangement, part2: Arrangement, report: TransversalReport):
    # union generator index for each line id
    union_pos = {line: i for i, line in enumerate(leftmost_order(generic), 1)}
    gen_side = {union_pos[line]: (1 if line <= n1 else 2) for line in union_pos}

    pl = lefschetz_pairs(generic)
    pts = intersection_lattice(generic)
    pres = affine_presentation(pl)

    cross_relators: list[tuple[Word, tuple[int, int]]] = []
    other: list[Word] = []
    for idx, label in enumerate(pres.labels):
        point = pts[pl.point_ids[int(label[1:].split(".")[0]) - 1]]
        sides = {1 if line <= n1 else 2 for line in point.incident}
        if len(sides) == 2:
            u, v = (union_pos[line] for line in point.incident)
            cross_relators.append((pres.relators[idx], (u, v)))
        else:
            other.append(pres.relators[idx])

    established: set[frozenset] = set()

    def commutes(u: int, v: int) -> bool:
        return frozenset((u, v)) in established

    progress = True
    while progress:
        progress = False
        for rel, (u, v) in cross_relators:
            key = frozenset((u, v))
            if key in established:
                continue
            reduced = partially_commutative_reduce(rel, commutes, cyclic=True)
            if cyclic_canonical(reduced) == cyclic_canonical(commutator((u,), (v,))):
                established.add(key)
                progress = True
    report.cross_commutators_derived = len(established)
    if len(established) != len(cross_relators):
        report.relators_match = False
        report.details["reason"] = "not every cross commutation could be derived"
        return

    # with all cross commutations the group is a direct product, so a relator
    # is trivial iff both of its projections are
    simplified = Counter()
    for rel in other:
        for s in (1, 2):
            proj = cyclic_canonical(free_reduce(x for x in rel if gen_side[abs(x)] == s))
            if proj:
                simplified[proj] += 1

    expected = Counter()
    for part, offset in ((part1, 0), (part2, n1)):
        order = leftmost_order(part)
        mapping = {i: union_pos[line + offset] for i, line in enumerate(order, 1)}
        for rel in affine_presentation(part).relators:
            expected[cyclic_canonical(rename(rel, mapping))] += 1

    report.relators_match = simplified == expected
    if not report.relators_match:
        report.details["unmatched_union"] = [list(r) for r in sorted(simplified - expected)]
        report.details["unmatched_parts"] = [list(r) for r in sorted(expected - simplified)]


# -- comparison -------------------------------------------------------------

def invariant_profile(arr: Arrangement) -> dict:
    pts = intersection_lattice(genericity_transform(arr)[0])
    fan = fan_predict(arr)
    aff = affine_presentation(arr)
    proj = projective_presentation(arr)
    return {
        "n": arr.n,
        "parallel_pairs": len(arr.parallel_pairs()),
        "multiplicities": sorted((p.multiplicity for p in pts), reverse=True),
        "fan": fan.projective() if fan.applicable else "n/a",
        "affine_abelianization": format_abelian(*abelianization(aff)),
        "projective_abelianization": format_abelian(*abelianization(proj)),
        "relator_count": len(aff.relators),
        "relator_lengths": sorted(len(r) for r in aff.relators),
    }


def compare_arrangements(arr1: Arrangement, arr2: Arrangement) -> dict:
    """Tabulate invariants of two arrangements.

    Differences prove the groups differ; agreement proves nothing, so the
    verdict is either ``distinguished`` or ``inconclusive``.
    """
    p1, p2 = invariant_profile(arr1), invariant_profile(arr2)
    differing = [k for k in p1 if p1[k] != p2[k]]
    return {
        "schema": 1,
        "first": p1,
        "second": p2,
        "differing": differing,
        "verdict": "distinguished" if differing else "inconclusive",
    }


def format_comparison(report: dict) -> str:
    keys = list(report["first"])
    width = max(len(k) for k in keys)
    rows = [f"{'invariant':<{width}}  first | second"]
    for k in keys:
        a, b = report["first"][k], report["second"][k]
        mark = " *" if k in report["differing"] else ""
        rows.append(f"{k:<{width}}  {a} | {b}{mark}")
    verdict = report["verdict"]
    rows.append("invariants distinguish" if verdict == "distinguished" else "invariants agree (inconclusive)")
    return "\n".join(rows) + "\n"
