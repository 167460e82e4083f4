"""Smith normal form of integer matrices.

Pure-integer row/column reduction (no overflow: Python ints).  Pivot choice is
deterministic: smallest nonzero absolute value, row-major tie-break.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Sequence

IntMatrix = Sequence[Sequence[int]]


@dataclass(frozen=True)
class SmithForm:
    """Invariant factors d1 | d2 | ... plus the count of zero diagonal entries.

    The diagonal of the Smith form of an m x n matrix has min(m, n) entries;
    ``invariant_factors`` lists the nonzero ones (positive, in divisibility
    order) and ``rank_deficiency`` counts the zeros.
    """

    invariant_factors: tuple[int, ...]
    rank_deficiency: int

    def __post_init__(self) -> None:
        for d in self.invariant_factors:
            if d <= 0:
                raise ValueError("invariant factors must be positive")
        for a, b in zip(self.invariant_factors, self.invariant_factors[1:]):
            if b % a != 0:
                raise ValueError(f"divisibility chain violated: {a} does not divide {b}")
        if self.rank_deficiency < 0:
            raise ValueError("rank deficiency must be nonnegative")

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


def _pivot(m: list[list[int]], start: int) -> tuple[int, int] | None:
    best: tuple[int, int] | None = None
    best_val = None
    for i in range(start, len(m)):
        for j in range(start, len(m[0])):
            v = abs(m[i][j])
            if v and (best_val is None or v < best_val):
                best, best_val = (i, j), v
    return best


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with g = s*a + t*b and g = gcd(a, b) > 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def smith_normal_form(matrix: IntMatrix) -> SmithForm:
    """Diagonalize by unimodular row/column operations; return the invariants.

    Column and row entries are cleared with 2x2 Bezout transforms (one gcd
    step per entry, which keeps intermediate entries small); the diagonal is
    then brought into divisibility order by gcd/lcm exchanges, which preserve
    equivalence on diagonal pairs.
    """
    m = [list(map(int, row)) for row in matrix]
    if m and any(len(row) != len(m[0]) for row in m):
        raise ValueError("ragged matrix")
    rows = len(m)
    cols = len(m[0]) if m else 0
    size = min(rows, cols)
    diag: list[int] = []

    t = 0
    while t < size:
        pos = _pivot(m, t)
        if pos is None:
            break
        i, j = pos
        m[t], m[i] = m[i], m[t]
        for row in m:
            row[t], row[j] = row[j], row[t]

        # alternate clearing column t and row t; each full round either
        # finishes or strictly shrinks |pivot| (it becomes a proper gcd)
        while True:
            pivot_before = abs(m[t][t])
            for i in range(t + 1, rows):
                a, b = m[t][t], m[i][t]
                if not b:
                    continue
                if b % a == 0:
                    q = b // a
                    for k in range(t, cols):
                        m[i][k] -= q * m[t][k]
                else:
                    g, s, u = _xgcd(a, b)
                    av, bv = a // g, b // g
                    for k in range(t, cols):
                        rt, ri = m[t][k], m[i][k]
                        m[t][k] = s * rt + u * ri
                        m[i][k] = -bv * rt + av * ri
            for j in range(t + 1, cols):
                a, b = m[t][t], m[t][j]
                if not b:
                    continue
                if b % a == 0:
                    q = b // a
                    for k in range(t, rows):
                        m[k][j] -= q * m[k][t]
                else:
                    g, s, u = _xgcd(a, b)
                    av, bv = a // g, b // g
                    for k in range(t, rows):
                        ct, cj = m[k][t], m[k][j]
                        m[k][t] = s * ct + u * cj
                        m[k][j] = -bv * ct + av * cj
            column_clear = all(m[i][t] == 0 for i in range(t + 1, rows))
            if column_clear and abs(m[t][t]) == pivot_before:
                break
        diag.append(abs(m[t][t]))
        t += 1

    # gcd/lcm exchange: diag(a, b) is equivalent to diag(gcd, lcm)
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            if diag[j] % diag[i]:
                g = gcd(diag[i], diag[j])
                diag[i], diag[j] = g, diag[i] * diag[j] // g
    return SmithForm(invariant_factors=tuple(diag), rank_deficiency=size - len(diag))


def determinantal_divisor(matrix: IntMatrix, k: int) -> int:
    """Gcd of all k x k minors (0 if all vanish).  Brute-force enumeration."""
    m = [list(map(int, row)) for row in matrix]
    rows, cols = len(m), len(m[0]) if m else 0
    if k <= 0:
        return 1
    if k > min(rows, cols):
        return 0
    g = 0
    for ris in combinations(range(rows), k):
        for cjs in combinations(range(cols), k):
            g = gcd(g, _det([[m[i][j] for j in cjs] for i in ris]))
    return g


def _det(m: list[list[int]]) -> int:
    n = len(m)
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        if m[0][j]:
            minor = [row[:j] + row[j + 1 :] for row in m[1:]]
            total += (-1) ** j * m[0][j] * _det(minor)
    return total


def in_row_space(matrix: IntMatrix, vector: Sequence[int]) -> bool:
    """Is the vector an integer combination of the matrix rows?

    The row lattice of M equals that of M extended by v exactly when both
    stacked matrices have the same rank and invariant factors.
    """
    m = [list(map(int, row)) for row in matrix]
    v = list(map(int, vector))
    if m and len(v) != len(m[0]):
        raise ValueError("vector length does not match matrix width")
    if not m:
        return all(x == 0 for x in v)
    base = smith_normal_form(m)
    extended = smith_normal_form(m + [v])
    return (
        base.rank == extended.rank
        and base.invariant_factors == extended.invariant_factors
    )
