"""Exact rational feasibility by the phase-one simplex method.

Finds x >= 0 with A x = b over the rationals, or reports infeasibility.
All arithmetic uses ``fractions.Fraction``; pivots follow Bland's least-index
rule, which rules out cycling, so termination is unconditional.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def solve_feasibility(
    rows: Sequence[Sequence[Fraction | int]],
    rhs: Sequence[Fraction | int],
) -> list[Fraction] | None:
    """A basic feasible solution of ``A x = b, x >= 0``, or None.

    One artificial variable per row is introduced and their sum minimized;
    feasibility holds exactly when the phase-one optimum is zero.
    """
    m = len(rows)
    if m == 0:
        return []
    n = len(rows[0])
    a = [[Fraction(v) for v in row] for row in rows]
    b = [Fraction(v) for v in rhs]
    if len(b) != m or any(len(row) != n for row in a):
        raise ValueError("inconsistent system dimensions")
    for i in range(m):
        if b[i] < 0:
            a[i] = [-v for v in a[i]]
            b[i] = -b[i]

    # Tableau columns: n original variables, then m artificials, then rhs.
    width = n + m
    tab = [a[i] + [Fraction(int(i == j)) for j in range(m)] + [b[i]] for i in range(m)]
    basis = [n + i for i in range(m)]
    # Reduced-cost row for min(sum of artificials) with the artificial basis.
    cost = [Fraction(0)] * (width + 1)
    for j in range(width + 1):
        s = sum(tab[i][j] for i in range(m))
        if j < n or j == width:
            cost[j] = -s
        else:
            cost[j] = Fraction(1) - s

    while True:
        enter = -1
        for j in range(width):
            if cost[j] < 0:
                enter = j
                break
        if enter < 0:
            break
        leave = -1
        best: Fraction | None = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][width] / tab[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:
            # Unbounded phase-one objective cannot happen (it is bounded below
            # by zero); guard anyway.
            raise ArithmeticError("phase-one simplex became unbounded")
        piv = tab[leave][enter]
        tab[leave] = [v / piv for v in tab[leave]]
        for i in range(m):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [v - f * w for v, w in zip(tab[i], tab[leave])]
        if cost[enter] != 0:
            f = cost[enter]
            cost = [v - f * w for v, w in zip(cost, tab[leave])]
        basis[leave] = enter

    objective = -cost[width]
    if objective != 0:
        return None
    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        if j < n:
            x[j] = tab[i][width]
    return x
