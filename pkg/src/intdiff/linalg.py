"""Exact sparse linear algebra over Q.

Vectors are dicts {column: value}; columns can be any hashable keys. Each
:class:`Echelon` interns columns as integers in order of first appearance and
eliminates by the largest interned column, so the stored basis has pairwise
distinct leading columns.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Hashable, Iterable, Mapping


def _axpy(target: dict, lam: Fraction, source: Mapping) -> None:
    for col, v in source.items():
        w = target.get(col, 0) + lam * v
        if w:
            target[col] = w
        else:
            target.pop(col, None)


class Echelon:
    """Incrementally maintained echelon basis of a subspace.

    When ``track`` is set, every stored row remembers which combination of
    inserted vectors produced it, which lets :meth:`add` report kernel
    relations among the inserted vectors.
    """

    def __init__(self, track: bool = False):
        self.rows: dict[Hashable, dict] = {}
        self.combos: dict[Hashable, dict] = {}
        self.track = track
        self.relations: list[dict] = []
        self._count = 0
        self._cols: dict = {}

    def _intern(self, vector: Mapping, grow: bool) -> dict | None:
        cols = self._cols
        out = {}
        for k, v in vector.items():
            if not v:
                continue
            idx = cols.get(k)
            if idx is None:
                if not grow:
                    return None
                idx = cols[k] = len(cols)
            out[idx] = Fraction(v)
        return out

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _reduce(self, vec: dict, combo: dict | None):
        while vec:
            lead = max(vec)
            row = self.rows.get(lead)
            if row is None:
                return lead
            lam = -vec[lead] / row[lead]
            _axpy(vec, lam, row)
            if combo is not None:
                _axpy(combo, lam, self.combos[lead])
        return None

    def reduce(self, vector: Mapping) -> dict:
        """Remainder of ``vector`` with every pivot column cleared (zero iff in span)."""
        vec = self._intern(vector, grow=True)
        heap = [-c for c in vec if c in self.rows]
        heapq.heapify(heap)
        while heap:
            col = -heapq.heappop(heap)
            if col not in vec:
                continue
            row = self.rows[col]
            _axpy(vec, -vec[col] / row[col], row)
            for c in row:
                if c < col and c in vec and c in self.rows:
                    heapq.heappush(heap, -c)
        names = {i: k for k, i in self._cols.items()}
        return {names[i]: v for i, v in vec.items()}

    def contains(self, vector: Mapping) -> bool:
        vec = self._intern(vector, grow=False)
        if vec is None:
            return False  # touches a column no stored row has
        self._reduce(vec, None)
        return not vec

    def add(self, vector: Mapping) -> bool:
        """Insert ``vector``; return True if it enlarged the span."""
        vec = self._intern(vector, grow=True)
        combo = {self._count: Fraction(1)} if self.track else None
        self._count += 1
        lead = self._reduce(vec, combo)
        if lead is None:
            if combo is not None:
                self.relations.append(combo)
            return False
        self.rows[lead] = vec
        if combo is not None:
            self.combos[lead] = combo
        return True


def rank(vectors: Iterable[Mapping]) -> int:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return ech.rank


def in_span(vector: Mapping, vectors: Iterable[Mapping]) -> bool:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return ech.contains(vector)


def kernel(images: list[Mapping]) -> list[dict[int, Fraction]]:
    """Basis of {c : sum_j c_j images[j] = 0}, as dicts {j: c_j}."""
    ech = Echelon(track=True)
    for img in images:
        ech.add(img)
    return ech.relations


def det(matrix: list[list]) -> Fraction:
    """Determinant by fraction-exact Gaussian elimination."""
    m = [[Fraction(v) for v in row] for row in matrix]
    size = len(m)
    result = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if m[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            result = -result
        p = m[col][col]
        result *= p
        for r in range(col + 1, size):
            if m[r][col]:
                factor = m[r][col] / p
                row, prow = m[r], m[col]
                for c in range(col, size):
                    row[c] -= factor * prow[c]
    return result


def inverse(matrix: list[list]) -> list[list[Fraction]]:
    """Gauss-Jordan inverse; raises ZeroDivisionError on a singular matrix."""
    size = len(matrix)
    m = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(size)]
         for i, row in enumerate(matrix)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if m[r][col]), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        m[col], m[pivot] = m[pivot], m[col]
        inv = 1 / m[col][col]
        m[col] = [v * inv for v in m[col]]
        for r in range(size):
            if r != col and m[r][col]:
                factor = m[r][col]
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return [row[size:] for row in m]
