"""Fraction-free Gaussian elimination over the integers."""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class InconsistentSystem(ValueError):
    pass


class NotUnique(ValueError):
    pass


def _normalize(row: dict[int, int], rhs: int) -> tuple[dict[int, int], int]:
    g = abs(rhs)
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row, rhs
    if g > 1:
        row = {c: v // g for c, v in row.items()}
        rhs //= g
    return row, rhs


def solve_exact(rows, rhs, ncols: int) -> list[Fraction]:
    """Solve ``A x = b`` exactly, requiring a consistent system of full column rank.

    ``rows`` holds sparse integer rows (dicts column -> coefficient).  Rows are
    combined as ``p * r - q * pivot`` and divided by their content, so entries
    stay integral; only back substitution touches fractions.  Raises
    :class:`InconsistentSystem` when some residual row reduces to ``0 = c``
    with ``c != 0`` and :class:`NotUnique` when the rank is below ``ncols``.
    """
    work = [(dict(r), int(b)) for r, b in zip(rows, rhs)]
    pivots: list[tuple[int, dict[int, int], int]] = []
    for col in range(ncols):
        at = next((i for i, (r, _) in enumerate(work) if r.get(col)), None)
        if at is None:
            raise NotUnique(f"column {col} has no pivot")
        prow, pb = work.pop(at)
        p = prow[col]
        rest = []
        for r, b in work:
            q = r.get(col)
            if q:
                merged = {c: p * v for c, v in r.items()}
                for c, v in prow.items():
                    nv = merged.get(c, 0) - q * v
                    if nv:
                        merged[c] = nv
                    else:
                        merged.pop(c, None)
                r, b = _normalize(merged, p * b - q * pb)
            if r or b:
                rest.append((r, b))
            # rows reduced to 0 = 0 are dropped
        work = rest
        pivots.append((col, prow, pb))
    for r, b in work:
        if not r and b:
            raise InconsistentSystem("residual row 0 = %d" % b)
        raise AssertionError("unreduced row left after elimination")
    x = [Fraction(0)] * ncols
    for col, prow, pb in reversed(pivots):
        s = Fraction(pb) - sum(v * x[c] for c, v in prow.items() if c != col)
        x[col] = s / prow[col]
    return x
