"""Write the arrangement corpus and its expected invariants.

Expected values come from closed forms for each family, never from the
pipeline: a pencil of n lines has one n-fold point; n tangents to a conic
have C(n,2) double points; a near-pencil has one (n-1)-fold point and n-1
double points. H1 of the affine complement of n lines is Z^n and of the
projective complement Z^(n-1).
"""

import json
from math import comb
from pathlib import Path

from pi1lines import corpus as C

OUT = Path(__file__).resolve().parent.parent / "corpus"


def fan_r(n, higher):
    return n + len(higher) - 1 - sum(higher)


def expected():
    exp = {}
    for n in range(3, 7):
        exp[f"pencil-{n}"] = dict(n=n, multiplicities=[n], fan_r=fan_r(n, [n]))
    for n in range(2, 7):
        exp[f"generic-{n}"] = dict(n=n, multiplicities=[2] * comb(n, 2), fan_r=fan_r(n, []))
    for n in range(4, 7):
        exp[f"near-pencil-{n}"] = dict(n=n, multiplicities=[n - 1] + [2] * (n - 1), fan_r=fan_r(n, [n - 1]))
    exp["triangle"] = dict(n=3, multiplicities=[2, 2, 2], fan_r=2, pairs=[[1, 2], [2, 3], [1, 2]])
    exp["four-lines-mid-triple"] = dict(n=4, multiplicities=[3, 2, 2, 2], fan_r=fan_r(4, [3]))
    exp["two-triple-points"] = dict(n=5, multiplicities=[3, 3, 2, 2, 2, 2], fan_r=fan_r(5, [3, 3]))
    exp["single-line"] = dict(n=1, multiplicities=[], fan_r=0, pairs=[])
    exp["parallels"] = dict(n=3, multiplicities=[2, 2], fan_r=2)
    for name, e in exp.items():
        e["affine_rank"] = e["n"]
        e["projective_rank"] = e["n"] - 1
        e["parallels"] = name == "parallels"
    return exp


def main():
    OUT.mkdir(exist_ok=True)
    arrangements = C.corpus()
    for name, arr in arrangements.items():
        header = f"# {name}: a b c per line, a*x + b*y + c = 0\n"
        (OUT / f"{name}.txt").write_text(header + arr.to_text(), encoding="utf-8")
    (OUT / "triangle.pairs").write_text("pairs: n=3; [1,2] [2,3] [1,2]\n", encoding="utf-8")
    (OUT / "expected.json").write_text(json.dumps(expected(), indent=2, sort_keys=True) + "\n", encoding="utf-8")
    print(f"wrote {len(arrangements)} arrangements to {OUT}")


if __name__ == "__main__":
    main()
