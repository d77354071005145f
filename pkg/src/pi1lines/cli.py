"""Command-line front end.

Exit codes: 0 ok, 1 verification failure, 2 usage or input error,
10 when ``compare`` finds distinguishing invariants.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .decomposition import FAILURE, verify_decomposition
from .errors import Pi1Error
from .geometry import (
    Arrangement,
    LefschetzPairList,
    genericity_transform,
    intersection_lattice,
    lefschetz_pairs,
    looks_like_pairs,
    parse_arrangement,
    parse_pairs,
)
from .invariants import (
    abelianization,
    compare_arrangements,
    fan_consistency,
    format_abelian,
    format_comparison,
    oka_sakamoto_check,
)
from .vankampen import affine_presentation, affine_via_transversal, monodromy_table, projective_presentation
from .words import format_word

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_ERROR = 2
EXIT_DISTINGUISHED = 10


class InputError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    input_path: Path
    mode: str  # "pairs" or "geometry"
    output_format: str = "text"


def load(path: str, mode: str = "auto") -> tuple[RunConfig, Arrangement | LefschetzPairList]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    if mode == "auto":
        mode = "pairs" if looks_like_pairs(text) else "geometry"
    cfg = RunConfig(Path(path), mode)
    if mode == "pairs":
        return cfg, parse_pairs(text)
    return cfg, parse_arrangement(text)


def load_geometry(path: str) -> Arrangement:
    _, src = load(path, "geometry")
    return src


def _emit(args, text: str, data: dict):
    if args.format == "json":
        print(json.dumps({"schema": 1, **data}, sort_keys=True))
    else:
        sys.stdout.write(text)


def _pairs_of(src) -> LefschetzPairList:
    if isinstance(src, LefschetzPairList):
        return src
    return lefschetz_pairs(genericity_transform(src)[0])


def cmd_pairs(args) -> int:
    _, src = load(args.file, args.mode)
    pl = _pairs_of(src)
    data = {"n": pl.n, "pairs": [list(p) for p in pl.pairs]}
    if isinstance(src, Arrangement):
        generic, t = genericity_transform(src)
        pts = intersection_lattice(generic)
        data["shear"] = str(t)
        data["points"] = [
            {"position": [str(c) for c in pts[i].position], "lines": list(pts[i].incident)} for i in pl.point_ids
        ]
    _emit(args, pl.to_text(), data)
    return EXIT_OK


def cmd_pi1(args) -> int:
    _, src = load(args.file, args.mode)
    if args.transversal:
        pres = affine_via_transversal(src)
    elif args.projective:
        pres = projective_presentation(src)
    else:
        pres = affine_presentation(src)
    _emit(args, pres.to_text(), pres.to_dict())
    return EXIT_OK


def _verify_one(path: str, mode: str):
    _, src = load(path, mode)
    return verify_decomposition(src)


def cmd_verify(args) -> int:
    if args.jobs > 1 and len(args.files) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_verify_one, args.files, [args.mode] * len(args.files)))
    else:
        reports = [_verify_one(f, args.mode) for f in args.files]
    status = EXIT_OK
    for path, rep in zip(args.files, reports):
        if len(args.files) > 1 and args.format == "text":
            print(f"== {path}")
        if args.format == "json":
            print(rep.to_json())
        else:
            sys.stdout.write(rep.to_text())
        if rep.verdict == FAILURE:
            status = EXIT_FAILED
    return status


def cmd_fan(args) -> int:
    arr = load_geometry(args.file)
    rep = fan_consistency(arr)
    pred = rep["prediction"]
    lines = [f"applicable: {'yes' if rep['applicable'] else 'no'}", f"r={pred['r']}"]
    for hp in pred["higherPoints"]:
        lines.append(f"higher point ({', '.join(hp['position'])}) multiplicity {hp['multiplicity']}")
    if rep["applicable"]:
        lines.append(f"projective: {pred['projective']}")
        lines.append(f"affine: {pred['affine']}")
    else:
        lines.append(f"cycle: {pred['cycle']}")
    lines.append(f"abelianization: projective {rep['projective_abelianization']}, affine {rep['affine_abelianization']}")
    lines.append(f"consistency: {'match' if rep['match'] else 'mismatch'}")
    _emit(args, "\n".join(lines) + "\n", rep)
    return EXIT_OK


def cmd_abelianize(args) -> int:
    _, src = load(args.file, args.mode)
    pres = projective_presentation(src) if args.projective else affine_presentation(src)
    rank, torsion = abelianization(pres)
    _emit(args, format_abelian(rank, torsion) + "\n", {"rank": rank, "torsion": list(torsion)})
    return EXIT_OK


def cmd_compare(args) -> int:
    rep = compare_arrangements(load_geometry(args.file1), load_geometry(args.file2))
    if args.format == "json":
        print(json.dumps(rep, sort_keys=True))
    else:
        sys.stdout.write(format_comparison(rep))
    return EXIT_DISTINGUISHED if rep["verdict"] == "distinguished" else EXIT_OK


def cmd_braid(args) -> int:
    _, src = load(args.file, args.mode)
    pl = _pairs_of(src)
    rows, data = [], []
    for e in monodromy_table(pl):
        braid = str(e.braid) or "1"
        gens = ", ".join(format_word(y) for y in e.generators)
        rows.append(f"p{e.point} [{e.pair[0]},{e.pair[1]}]: {braid}\n  loops: {gens}")
        data.append({"point": e.point, "pair": list(e.pair), "braid": list(e.braid.letters),
                     "generators": [list(y) for y in e.generators]})
    _emit(args, "\n".join(rows) + ("\n" if rows else ""), {"n": pl.n, "entries": data})
    return EXIT_OK


def cmd_oka(args) -> int:
    rep = oka_sakamoto_check(load_geometry(args.file1), load_geometry(args.file2))
    d = rep.to_dict()
    text = "".join(f"{k}: {v}\n" for k, v in d.items())
    _emit(args, text, d)
    ok = rep.abelian_match and rep.relators_match is not False
    return EXIT_OK if ok else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pi1lines", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, mode=True):
        p.add_argument("--format", choices=("text", "json"), default="text")
        if mode:
            p.add_argument("--mode", choices=("auto", "pairs", "geometry"), default="auto",
                           help="input kind; auto detects 'pairs:'/'n=' files")

    p = sub.add_parser("pairs", help="Lefschetz pairs in sweep order")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_pairs)

    p = sub.add_parser("pi1", help="fundamental group presentation")
    p.add_argument("file")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--affine", action="store_true")
    g.add_argument("--projective", action="store_true")
    g.add_argument("--transversal", action="store_true", help="affine group through an added transversal line")
    common(p)
    p.set_defaults(func=cmd_pi1)

    p = sub.add_parser("verify", help="replay the affine = projective x Z splitting")
    p.add_argument("files", nargs="+")
    p.add_argument("--jobs", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fan", help="Fan's structure prediction and consistency check")
    p.add_argument("file")
    common(p, mode=False)
    p.set_defaults(func=cmd_fan)

    p = sub.add_parser("abelianize", help="first homology of the complement")
    p.add_argument("file")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--affine", action="store_true")
    g.add_argument("--projective", action="store_true")
    common(p)
    p.set_defaults(func=cmd_abelianize)

    p = sub.add_parser("compare", help="invariant table for two arrangements")
    p.add_argument("file1")
    p.add_argument("file2")
    common(p, mode=False)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("braid", help="conjugating braids and local loops per point")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_braid)

    p = sub.add_parser("oka", help="product check for two arrangements in transversal position")
    p.add_argument("file1")
    p.add_argument("file2")
    common(p, mode=False)
    p.set_defaults(func=cmd_oka)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (Pi1Error, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
