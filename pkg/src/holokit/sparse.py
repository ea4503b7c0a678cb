"""Exact sparse elimination over the integers.

Rows are dicts ``column -> int``.  :class:`SparseEchelon` keeps an echelon
basis incrementally using fraction-free updates (``p*row - a*pivot_row``
followed by division by the content), so coefficients stay integral and
small.  The basis row inserted k-th never contains the pivot column of an
earlier row; reducing a new row therefore always eliminates the present
pivot column whose row is oldest, which guarantees termination for any
pivot-column choice.

Pivot columns are chosen Markowitz-style: the column occurring in the fewest
stored rows, preferring unit coefficients, ties broken by lowest column.
"""
from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable


def _primitive(row: dict) -> dict:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {k: v // g for k, v in row.items()}
    return row


def integral_row(row: dict) -> dict:
    """Scale a row with Fraction/int entries to a primitive integer row."""
    den = 1
    for v in row.values():
        if isinstance(v, Fraction):
            den = lcm(den, v.denominator)
    out = {}
    for k, v in row.items():
        if v:
            out[k] = int(v * den)
    return _primitive(out)


class SparseEchelon:
    def __init__(self, late_columns: int | None = None):
        # columns >= late_columns are pivoted only when nothing earlier is available
        self.late = late_columns
        self.rows: list[dict] = []
        self.pivots: list[int] = []
        self.pivot_of: dict[int, int] = {}
        self.col_count: dict[int, int] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, row: dict) -> dict:
        row = {k: v for k, v in row.items() if v}
        pivot_of = self.pivot_of
        heap = [(pivot_of[c], c) for c in row if c in pivot_of]
        heapq.heapify(heap)
        seen = {c for _, c in heap}
        scaled = 0
        while heap:
            idx, c = heapq.heappop(heap)
            a = row.get(c)
            if a is None:
                continue
            prow = self.rows[idx]
            p = prow[c]
            g = gcd(p, a)
            mp, ma = p // g, a // g
            if mp != 1:
                for k in row:
                    row[k] *= mp
                scaled += 1
            for k, v in prow.items():
                nv = row.get(k, 0) - ma * v
                if nv:
                    row[k] = nv
                    if k not in seen:
                        j = pivot_of.get(k)
                        if j is not None:
                            seen.add(k)
                            heapq.heappush(heap, (j, k))
                else:
                    del row[k]
            if scaled > 8:
                row = _primitive(row)
                scaled = 0
        return _primitive(row) if row else row

    def _choose_pivot(self, row: dict) -> int:
        cc = self.col_count
        late = self.late
        if late is not None:
            early = [c for c in row if c < late]
            if early:
                return min(early, key=lambda c: (abs(row[c]) != 1, cc.get(c, 0), c))
        return min(row, key=lambda c: (abs(row[c]) != 1, cc.get(c, 0), c))

    def add(self, row: dict) -> bool:
        """Insert a row; return True if it increased the rank."""
        row = self.reduce(row)
        if not row:
            return False
        c = self._choose_pivot(row)
        if row[c] < 0:
            row = {k: -v for k, v in row.items()}
        self.pivot_of[c] = len(self.rows)
        self.rows.append(row)
        self.pivots.append(c)
        cc = self.col_count
        for k in row:
            cc[k] = cc.get(k, 0) + 1
        return True

    def extend(self, rows: Iterable[dict]) -> list[int]:
        """Insert rows, returning the positions of those that were independent."""
        return [i for i, r in enumerate(rows) if self.add(r)]

    def fully_reduce(self) -> None:
        """Back-substitute so each row meets only its own pivot among pivot columns."""
        for k in range(len(self.rows) - 1, -1, -1):
            row = self.rows[k]
            own = self.pivots[k]
            changed = False
            for c in [c for c in row if c != own and c in self.pivot_of]:
                j = self.pivot_of[c]
                if c not in row:
                    continue
                prow = self.rows[j]
                p, a = prow[c], row[c]
                g = gcd(p, a)
                mp, ma = p // g, a // g
                row = {kk: v * mp for kk, v in row.items()}
                for kk, v in prow.items():
                    nv = row.get(kk, 0) - ma * v
                    if nv:
                        row[kk] = nv
                    else:
                        row.pop(kk, None)
                changed = True
            if changed:
                row = _primitive(row)
                if row[own] < 0:
                    row = {kk: -v for kk, v in row.items()}
                self.rows[k] = row


def rank_of(rows: Iterable[dict], late_columns: int | None = None) -> int:
    ech = SparseEchelon(late_columns)
    for r in rows:
        ech.add(integral_row(r))
    return ech.rank


def quotient(rows: Iterable[dict], ncols: int, late_columns: int | None = None) -> tuple[list[int], list[dict]]:
    """Basis of ``Q^ncols / span(rows)`` and the projection onto it.

    Returns ``(free, images)``: ``free`` lists the non-pivot columns (they form
    the quotient basis, in increasing order) and ``images[c]`` is the class of
    unit vector ``c`` as ``{basis_index: coefficient}``; coefficients are ints
    or Fractions.
    """
    ech = SparseEchelon(late_columns)
    for r in rows:
        ech.add(integral_row(r))
    ech.fully_reduce()
    free = [c for c in range(ncols) if c not in ech.pivot_of]
    pos = {c: i for i, c in enumerate(free)}
    images: list[dict] = []
    for c in range(ncols):
        if c in pos:
            images.append({pos[c]: 1})
            continue
        row = ech.rows[ech.pivot_of[c]]
        p = row[c]
        img = {}
        for k, v in row.items():
            if k == c:
                continue
            q = -v // p if v % p == 0 else Fraction(-v, p)
            img[pos[k]] = q
        images.append(img)
    return free, images
