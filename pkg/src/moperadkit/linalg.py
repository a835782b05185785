"""Exact sparse linear algebra over the rationals.

Vectors are plain dicts ``{column: Fraction}`` with no zero entries.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction


def axpy(target: dict, coef, vec: dict) -> None:
    """target += coef * vec, in place, dropping zeros."""
    if not coef:
        return
    for k, v in vec.items():
        s = target.get(k, 0) + coef * v
        if s:
            target[k] = s
        else:
            target.pop(k, None)


def scaled(vec: dict, coef) -> dict:
    if not coef:
        return {}
    return {k: coef * v for k, v in vec.items()}


class EchelonSpace:
    """Incrementally grown subspace kept in semi-echelon form.

    Each row's pivot is its largest column and no two rows share a pivot.
    Rows are not back-substituted into each other, so inserts stay cheap;
    reduction clears pivots largest first, which never reintroduces a
    column already cleared. The reduced vector has only non-pivot columns.
    """

    def __init__(self):
        self.rows: dict = {}  # pivot column -> row with row[pivot] == 1

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec: dict) -> dict:
        out = dict(vec)
        rows = self.rows
        heap = [-c for c in out if c in rows]
        heapq.heapify(heap)
        while heap:
            p = -heapq.heappop(heap)
            c = out.get(p)
            if not c:
                continue
            row = rows[p]
            for k, v in row.items():
                s = out.get(k, 0) - c * v
                if s:
                    if k not in out and k in rows:
                        heapq.heappush(heap, -k)
                    out[k] = s
                else:
                    out.pop(k, None)
        return out

    def add(self, vec: dict) -> bool:
        """Insert a vector; return True if it enlarged the space."""
        v = self.reduce(vec)
        if not v:
            return False
        p = max(v)
        inv = 1 / Fraction(v[p])
        self.rows[p] = {k: c * inv for k, c in v.items()}
        return True

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)

    def pivots(self) -> set:
        return set(self.rows)


@dataclass
class AffineSolution:
    solution: list | None  # None when inconsistent
    rank: int
    nullity: int
    n_equations: int
    n_unknowns: int
    pivots: list
    inconsistent_row: dict | None = None


def solve_affine(rows: list, rhs: list, n_unknowns: int) -> AffineSolution:
    """Solve sum_j rows[i][j] x_j = rhs[i] exactly.

    Gauss-Jordan with pivots chosen left to right; free unknowns are set to
    zero, which gives the deterministic, small-support representative.
    """
    aug = []
    for r, b in zip(rows, rhs):
        v = {k: Fraction(c) for k, c in r.items() if c}
        if b:
            v[n_unknowns] = Fraction(b)
        if v:
            aug.append(v)
    pivrows: dict = {}
    bad = None
    for v in aug:
        for p in sorted(c for c in v if c in pivrows):
            c = v.get(p)
            if c:
                axpy(v, -c, pivrows[p])
        cols = [c for c in v if c < n_unknowns]
        if not cols:
            if v and bad is None:
                bad = v
            continue
        p = min(cols)
        inv = 1 / v[p]
        v = {k: c * inv for k, c in v.items()}
        for q, row in pivrows.items():
            c = row.get(p)
            if c:
                axpy(row, -c, v)
        pivrows[p] = v
    rank = len(pivrows)
    piv = sorted(pivrows)
    if bad is not None:
        return AffineSolution(None, rank, n_unknowns - rank, len(aug), n_unknowns, piv, bad)
    x = [Fraction(0)] * n_unknowns
    for p, row in pivrows.items():
        x[p] = row.get(n_unknowns, Fraction(0))
    return AffineSolution(x, rank, n_unknowns - rank, len(aug), n_unknowns, piv)
