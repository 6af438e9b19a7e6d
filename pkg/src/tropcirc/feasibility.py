"""Exact feasibility of ``A x = b, x >= 0`` over the rationals.

Dense phase-one simplex with Bland's rule on :class:`fractions.Fraction`.
When the system is infeasible the final reduced costs give a Farkas vector
``y`` with ``y.A_j <= 0`` for every column and ``y.b > 0``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Sequence


class Feasibility(NamedTuple):
    feasible: bool
    solution: list[Fraction] | None
    certificate: list[Fraction] | None


def solve_nonneg(A: Sequence[Sequence], b: Sequence) -> Feasibility:
    m = len(A)
    ncols = len(A[0]) if m else 0
    if len(b) != m or any(len(row) != ncols for row in A):
        raise ValueError("inconsistent system dimensions")
    sign = [(-1 if v < 0 else 1) for v in b]
    width = ncols + m
    # rows: [A' | I | b'] with b' >= 0
    rows = []
    for i in range(m):
        s = sign[i]
        row = [Fraction(s * v) for v in A[i]]
        row += [Fraction(int(k == i)) for k in range(m)]
        row.append(Fraction(s * b[i]))
        rows.append(row)
    basis = list(range(ncols, width))
    cost = [Fraction(0)] * width + [Fraction(0)]
    for row in rows:
        for j in range(ncols):
            cost[j] -= row[j]
        cost[-1] -= row[-1]

    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        leave, best = None, None
        for i, row in enumerate(rows):
            a = row[enter]
            if a > 0:
                ratio = row[-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    leave, best = i, ratio
        # phase one is bounded below by zero, so a pivot row always exists
        prow = rows[leave]
        piv = prow[enter]
        if piv != 1:
            prow[:] = [v / piv for v in prow]
        for i, row in enumerate(rows):
            f = row[enter]
            if i != leave and f:
                row[:] = [v - f * pv for v, pv in zip(row, prow)]
        f = cost[enter]
        cost[:] = [v - f * pv for v, pv in zip(cost, prow)]
        basis[leave] = enter

    if cost[-1] == 0:
        x = [Fraction(0)] * ncols
        for i, j in enumerate(basis):
            if j < ncols:
                x[j] = rows[i][-1]
        return Feasibility(True, x, None)
    y = [sign[i] * (1 - cost[ncols + i]) for i in range(m)]
    return Feasibility(False, None, y)


def convex_combination(p: Sequence, points: Sequence[Sequence]) -> Feasibility:
    """Weights ``w >= 0``, ``sum w = 1`` with ``sum w_k points[k] = p``.

    On failure the certificate ``(y, y0)`` satisfies ``y.s + y0 <= 0`` for
    every point and ``y.p + y0 > 0``.
    """
    dim = len(p)
    A = [[s[i] for s in points] for i in range(dim)] + [[1] * len(points)]
    return solve_nonneg(A, list(p) + [1])
