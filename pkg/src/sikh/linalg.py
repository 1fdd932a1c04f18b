"""Exact sparse elimination: ranks over F2 and Q, Smith normal form over Z.

Matrices are given column-wise as ``{col: {row: value}}`` or as a list of
``(row, col, value)`` entries; everything here is exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Tuple

Entries = Iterable[Tuple[int, int, object]]


def _rows(entries: Entries) -> Dict[int, Dict[int, object]]:
    rows: Dict[int, Dict[int, object]] = {}
    for r, c, v in entries:
        if v:
            rows.setdefault(r, {})[c] = v
    return rows


def rank_f2(entries: Entries, order: str = "forward") -> int:
    """Rank over F2 using integer bitsets for rows."""
    rows: Dict[int, int] = {}
    for r, c, v in entries:
        if v & 1:
            rows[r] = rows.get(r, 0) ^ (1 << c)
    keys = sorted(rows, reverse=(order == "reverse"))
    pivots: Dict[int, int] = {}
    for r in keys:
        x = rows[r]
        while x:
            top = x.bit_length() - 1
            p = pivots.get(top)
            if p is None:
                pivots[top] = x
                break
            x ^= p
    return len(pivots)


def rank_q(entries: Entries, order: str = "forward") -> int:
    """Rank over Q; each new pivot row is normalized to 1 at its pivot column."""
    rows = _rows(entries)
    keys = sorted(rows, reverse=(order == "reverse"))
    pick = max if order == "reverse" else min
    pivots: Dict[int, Dict[int, Fraction]] = {}
    for r in keys:
        x = {c: Fraction(v) for c, v in rows[r].items()}
        while x:
            c = pick(x)
            p = pivots.get(c)
            if p is None:
                inv = 1 / x[c]
                pivots[c] = {cc: vv * inv for cc, vv in x.items()}
                break
            f = x[c]
            for cc, vv in p.items():
                nv = x.get(cc, 0) - f * vv
                if nv:
                    x[cc] = nv
                else:
                    x.pop(cc, None)
    return len(pivots)


def invariant_factors(diagonal: Iterable[int]) -> List[int]:
    """Turn a list of non-zero diagonal entries into a divisibility chain."""
    ones = 0
    d = []
    for x in diagonal:
        x = abs(x)
        if x == 1:
            ones += 1
        elif x:
            d.append(x)
    changed = True
    while changed:
        changed = False
        d.sort()
        for i in range(len(d)):
            for j in range(i + 1, len(d)):
                g = gcd(d[i], d[j])
                if g != d[i]:
                    d[i], d[j] = g, d[i] * d[j] // g
                    changed = True
    ones += sum(1 for x in d if x == 1)
    return [1] * ones + sorted(x for x in d if x != 1)


def smith_diagonal(entries: Entries, order: str = "forward") -> List[int]:
    """Non-zero diagonal of a Smith form (up to reordering) of an integer matrix.

    Pivots on an entry of smallest magnitude, clears its column with row
    operations and its row with column operations, and re-pivots on any
    non-zero remainder.
    """
    rows = {r: {c: int(v) for c, v in row.items()} for r, row in _rows(entries).items()}
    cols: Dict[int, set] = {}
    for r, row in rows.items():
        for c in row:
            cols.setdefault(c, set()).add(r)
    rev = order == "reverse"
    diag = []

    def smallest():
        best = None
        for r in sorted(rows, reverse=rev):
            for c in sorted(rows[r], reverse=rev):
                a = abs(rows[r][c])
                if best is None or a < best[0]:
                    best = (a, r, c)
                    if a == 1:
                        return best
        return best

    def set_entry(r, c, v):
        row = rows.setdefault(r, {})
        if v:
            row[c] = v
            cols.setdefault(c, set()).add(r)
        else:
            row.pop(c, None)
            cols.get(c, set()).discard(r)
            if not row:
                rows.pop(r, None)

    while rows:
        _, r, c = smallest()
        while True:
            p = rows[r][c]
            rest = None
            for r2 in sorted(cols[c] - {r}, reverse=rev):
                a = rows[r2][c]
                q = a // p
                for cc, vv in list(rows[r].items()):
                    set_entry(r2, cc, rows.get(r2, {}).get(cc, 0) - q * vv)
                if r2 in rows and c in rows[r2]:
                    rest = (r2, c)
            if rest is not None:
                r, c = rest
                continue
            for c2 in sorted(set(rows[r]) - {c}, reverse=rev):
                a = rows[r][c2]
                set_entry(r, c2, a - (a // p) * p)
                if c2 in rows.get(r, {}):
                    rest = (r, c2)
            if rest is not None:
                r, c = rest
                continue
            break
        diag.append(abs(rows[r][c]))
        set_entry(r, c, 0)
        cols.pop(c, None)
    return diag


def smith_invariants(entries: Entries, order: str = "forward") -> Tuple[int, List[int]]:
    """``(rank, invariant factors > 1)`` of an integer matrix."""
    diag = smith_diagonal(entries, order)
    factors = invariant_factors(diag)
    return len(diag), [x for x in factors if x > 1]
