"""Named test arrangements.

Every builder returns lines ``a*x + b*y + c = 0`` with small integer
coefficients so the shipped corpus files stay readable.
"""

from __future__ import annotations

from .geometry import Arrangement


def pencil(n: int) -> Arrangement:
    """``n`` lines through the origin: ``y = i*x`` for ``i = 0..n-1``."""
    return Arrangement.from_rows([(i, -1, 0) for i in range(n)])


def generic(n: int) -> Arrangement:
    """Tangents ``y = 2i*x - i^2`` to the parabola ``y = x^2``.

    Tangents to a conic are pairwise non-parallel and no three are concurrent.
    """
    return Arrangement.from_rows([(2 * i, -1, -i * i) for i in range(1, n + 1)])


def near_pencil(n: int) -> Arrangement:
    """A pencil of ``n-1`` lines plus ``y = -x + 1``."""
    return Arrangement.from_rows([(i, -1, 0) for i in range(n - 1)] + [(1, 1, -1)])


def triangle() -> Arrangement:
    """``y = x``, ``y = 0``, ``y = -x + 2``."""
    return Arrangement.from_rows([(1, -1, 0), (0, 1, 0), (1, 1, -2)])


def four_lines_mid_triple() -> Arrangement:
    """Four lines with a triple point between double points in the sweep.

    ``y = 0``, ``y = x``, ``y = -x + 2`` and ``y = 2x - 1``; the last three
    meet at (1, 1).
    """
    return Arrangement.from_rows([(0, 1, 0), (1, -1, 0), (1, 1, -2), (2, -1, -1)])


def two_triple_points() -> Arrangement:
    """Lines A, B, C through P = (0, 0) and A, D, E through Q = (4, 0).

    A: y = 0, B: y = x, C: y = 2x, D: y = -x + 4, E: y = -2x + 8. The double
    points B∩D and C∩E share x = 2, so this one needs a shear.
    """
    return Arrangement.from_rows([(0, 1, 0), (1, -1, 0), (2, -1, 0), (1, 1, -4), (2, 1, -8)])


def with_parallels() -> Arrangement:
    """``y = 0``, ``y = 1`` and ``y = x``."""
    return Arrangement.from_rows([(0, 1, 0), (0, 1, -1), (1, -1, 0)])


def corpus() -> dict[str, Arrangement]:
    out: dict[str, Arrangement] = {}
    for n in range(3, 7):
        out[f"pencil-{n}"] = pencil(n)
    for n in range(2, 7):
        out[f"generic-{n}"] = generic(n)
    for n in range(4, 7):
        out[f"near-pencil-{n}"] = near_pencil(n)
    out["triangle"] = triangle()
    out["four-lines-mid-triple"] = four_lines_mid_triple()
    out["two-triple-points"] = two_triple_points()
    out["single-line"] = Arrangement.from_rows([(0, 1, 0)])
    out["parallels"] = with_parallels()
    return out
