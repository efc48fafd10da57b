"""Exact determinants and Pfaffians of rational-function matrices.

Matrices stay tiny at desk scale (<= 8x8), so both routines favour
exactness over asymptotics.  To keep intermediate swell down, the
determinant clears each row's factored denominator first and runs a
polynomial cofactor expansion; the Pfaffian uses the recursive
first-row expansion, accumulating over a common factored denominator
and reducing once at the end.
"""

from __future__ import annotations

from typing import Dict, List, Sequence, Tuple

from .poly import MultiPoly, Rat
from .ratfun import RationalFn, factor_poly


def _poly_det(m: List[List[MultiPoly]], alphabet) -> MultiPoly:
    n = len(m)
    cache: Dict = {}

    def minor(row: int, cols: frozenset) -> MultiPoly:
        if not cols:
            return MultiPoly.const(alphabet, 1)
        key = (row, cols)
        if key in cache:
            return cache[key]
        total = MultiPoly.zero(alphabet)
        for pos, c in enumerate(sorted(cols)):
            if m[row][c].is_zero():
                continue
            term = m[row][c] * minor(row + 1, cols - {c})
            total = total + (term if pos % 2 == 0 else -term)
        cache[key] = total
        return total

    return minor(0, frozenset(range(n)))


def determinant(m: Sequence[Sequence[RationalFn]]) -> RationalFn:
    """Exact determinant, fraction-free: rows are cleared to polynomials."""
    n = len(m)
    if n == 0:
        raise ValueError("empty matrix")
    for row in m:
        if len(row) != n:
            raise ValueError("matrix is not square")
    alphabet = m[0][0].alphabet
    cleared: List[List[MultiPoly]] = []
    full_den: Dict = {}
    for row in m:
        row_den: Dict = {}
        for entry in row:
            for atom, e in entry.den.items():
                row_den[atom] = max(row_den.get(atom, 0), e)
        new_row = []
        for entry in row:
            p = entry.num
            for atom, e in row_den.items():
                k = e - entry.den.get(atom, 0)
                if k:
                    p = p * factor_poly(alphabet, atom) ** k
            new_row.append(p)
        cleared.append(new_row)
        for atom, e in row_den.items():
            full_den[atom] = full_den.get(atom, 0) + e
    return RationalFn(_poly_det(cleared, alphabet), full_den)


def _raw_scale_to(num: MultiPoly, den: Dict, target: Dict, alphabet) -> MultiPoly:
    for atom, e in target.items():
        k = e - den.get(atom, 0)
        if k:
            num = num * factor_poly(alphabet, atom) ** k
    return num


def pfaffian(m: Sequence[Sequence[RationalFn]]) -> RationalFn:
    """Pf via the first-row expansion Pf(M) = sum_j (-1)^j M_1j Pf(M_1j)."""
    n = len(m)
    for row in m:
        if len(row) != n:
            raise ValueError("matrix is not square")
    if n % 2 != 0:
        raise ValueError("Pfaffian needs even size")
    if n == 0:
        raise ValueError("empty matrix")
    alphabet = m[0][0].alphabet
    for i in range(n):
        for j in range(i, n):
            if not (m[i][j] == -m[j][i]):
                raise ValueError(f"matrix is not antisymmetric at ({i}, {j})")

    def pf(rows: Tuple[int, ...]) -> Tuple[MultiPoly, Dict]:
        # unreduced (numerator, factored denominator) accumulation
        if not rows:
            return MultiPoly.const(alphabet, 1), {}
        first, rest = rows[0], rows[1:]
        total_num = MultiPoly.zero(alphabet)
        total_den: Dict = {}
        for pos, r in enumerate(rest):
            entry = m[first][r]
            if entry.is_zero():
                continue
            sub_num, sub_den = pf(tuple(x for x in rest if x != r))
            num = entry.num * sub_num
            den = dict(entry.den)
            for atom, e in sub_den.items():
                den[atom] = den.get(atom, 0) + e
            merged = {a: max(total_den.get(a, 0), den.get(a, 0))
                      for a in set(total_den) | set(den)}
            total_num = _raw_scale_to(total_num, total_den, merged, alphabet)
            num = _raw_scale_to(num, den, merged, alphabet)
            total_num = total_num + (num if pos % 2 == 0 else -num)
            total_den = merged
        return total_num, total_den

    num, den = pf(tuple(range(n)))
    return RationalFn(num, den)
