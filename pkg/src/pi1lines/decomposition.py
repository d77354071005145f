"""Mechanical check that the affine group splits off a central Z.

The affine complement is presented through an added transversal line; the
projective relation removes ``x_1`` on both sides, the transversal's loop is
then central with zero exponent sum everywhere and can be erased, and what is
left must coincide literally with the projective presentation after the same
elimination.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import Pi1Error
from .presentation import (
    Presentation,
    cancel_central_generator,
    eliminate_by_projective_relation,
)
from .vankampen import Source, affine_presentation, affine_via_transversal, pair_list, projective_presentation
from .words import exponent_sum

SUCCESS = "success"
FAILURE = "failure"
DEGRADED = "degraded"


@dataclass
class DecompositionReport:
    verdict: str
    steps: list[tuple[str, Presentation]] = field(default_factory=list)
    split_generator: int | None = None
    certificate: dict = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.verdict == SUCCESS

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "verdict": self.verdict,
            "steps": [{"title": t, "presentation": p.to_dict()} for t, p in self.steps],
            "splitGenerator": self.split_generator,
            "certificate": self.certificate,
            "warnings": self.warnings,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_text(self) -> str:
        out = [f"verdict: {self.verdict}"]
        for w in self.warnings:
            out.append(f"warning: {w}")
        for i, (title, p) in enumerate(self.steps, 1):
            out.append(f"step {i}: {title}")
            out.append(f"  {p.pretty()}")
        if self.split_generator is not None:
            out.append(f"split generator: x{self.split_generator}")
        for key in sorted(self.certificate):
            out.append(f"{key}: {self.certificate[key]}")
        return "\n".join(out) + "\n"


def _degraded(source: Source, reason: str) -> DecompositionReport:
    from .invariants import abelianization

    aff = affine_presentation(source)
    proj = projective_presentation(source)
    a_rank, a_tor = abelianization(aff)
    p_rank, p_tor = abelianization(proj)
    return DecompositionReport(
        DEGRADED,
        [("affine presentation", aff), ("projective presentation", proj)],
        certificate={
            "affine_abelianization": {"rank": a_rank, "torsion": list(a_tor)},
            "projective_abelianization": {"rank": p_rank, "torsion": list(p_tor)},
            "ranks_differ_by_one": a_rank == p_rank + 1 and not a_tor and not p_tor,
        },
        warnings=[reason],
    )


def verify_decomposition(source: Source, projective: Presentation | None = None) -> DecompositionReport:
    """Replay the splitting argument step by step.

    ``projective`` overrides the projective presentation built from the
    arrangement; it exists so that a tampered target can be fed in.
    """
    pl = pair_list(source)
    if not pl.all_pairs_meet():
        return _degraded(pl, "arrangement has parallel lines; only invariant-level evidence reported")

    n = pl.n
    report = DecompositionReport(FAILURE, split_generator=n + 1)
    try:
        affine = affine_via_transversal(pl)
        report.steps.append(("affine group via transversal line", affine))
        proj = projective if projective is not None else projective_presentation(pl)
        report.steps.append(("projective group", proj))

        affine_elim = eliminate_by_projective_relation(affine)
        report.steps.append((f"affine: x1 <= x2^-1 ... x{n + 1}^-1", affine_elim))
        proj_elim = eliminate_by_projective_relation(proj)
        report.steps.append((f"projective: x1 <= x2^-1 ... x{n}^-1", proj_elim))

        g = n  # x_{n+1} after dropping x_1
        unbalanced = [list(r) for r in affine_elim.relators if exponent_sum(r, g) != 0]
        report.certificate["unbalanced"] = unbalanced
        if unbalanced:
            report.certificate["reason"] = f"relators unbalanced in x{n + 1}"
            return report

        cancelled = cancel_central_generator(affine_elim, g)
        report.steps.append((f"affine: cancel central x{n + 1}", cancelled))
    except Pi1Error as exc:
        report.certificate["reason"] = f"{type(exc).__name__}: {exc}"
        return report

    lhs = cancelled.canonical_relators()
    rhs = proj_elim.canonical_relators()
    missing = sorted(rhs - lhs)
    extra = sorted(lhs - rhs)
    report.certificate.update(
        {
            "matched": sum((lhs & rhs).values()),
            "missing_from_affine": [list(r) for r in missing],
            "extra_in_affine": [list(r) for r in extra],
            "generator_names": list(cancelled.names),
        }
    )
    if cancelled.generators == proj_elim.generators and not missing and not extra:
        report.verdict = SUCCESS
    else:
        report.certificate["reason"] = "relator sets differ"
    return report
