"""Run every pipeline stage over the corpus and print a summary table."""

import argparse
import time
from pathlib import Path

from pi1lines.decomposition import verify_decomposition
from pi1lines.geometry import parse_arrangement, prepare
from pi1lines.invariants import abelianization, fan_predict, format_abelian
from pi1lines.vankampen import affine_presentation, projective_presentation

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--corpus", type=Path, default=CORPUS)
    args = ap.parse_args()
    print(f"{'arrangement':24} {'n':>2} {'pts':>4} {'verify':>9} {'fan':>14} {'H1 aff':>7} {'H1 proj':>8} {'ms':>7}")
    for path in sorted(args.corpus.glob("*.txt")):
        arr = parse_arrangement(path.read_text())
        t0 = time.perf_counter()
        _, pl = prepare(arr)
        rep = verify_decomposition(arr)
        fan = fan_predict(arr)
        aff = format_abelian(*abelianization(affine_presentation(arr)))
        proj = format_abelian(*abelianization(projective_presentation(arr)))
        ms = 1000 * (time.perf_counter() - t0)
        fan_s = fan.projective() if fan.applicable else "n/a"
        print(f"{path.stem:24} {arr.n:>2} {len(pl.pairs):>4} {rep.verdict:>9} {fan_s:>14} {aff:>7} {proj:>8} {ms:7.1f}")


if __name__ == "__main__":
    main()
