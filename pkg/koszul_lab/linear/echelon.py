"""
Sparse Gaussian elimination over any coefficient field.

Vectors are dicts column → nonzero value. EchelonForm keeps one row per pivot
column; each row's pivot is its smallest column and has value 1. Rows are
inserted in semi-echelon form and `finalize()` back-substitutes to the
reduced row echelon form, which is canonical for the row space.
"""

import heapq
from typing import Any, Dict, Iterable, List, Optional

from ..algebra.fields import Field

Vector = Dict[int, Any]


def axpy(target: Vector, scale: Any, row: Vector, field: Field) -> None:
    """target -= scale·row, in place, dropping zeros."""
    for col, value in row.items():
        new = field.sub(target.get(col, field.zero()), field.mul(scale, value))
        if field.is_zero(new):
            target.pop(col, None)
        else:
            target[col] = new


class EchelonForm:
    """Incrementally built echelon basis of a row space."""

    def __init__(self, field: Field):
        self.field = field
        self.rows: Dict[int, Vector] = {}
        self.reduced = True

    @classmethod
    def from_rref(cls, field: Field, rows: Iterable[Vector]) -> 'EchelonForm':
        """Seed with rows already in reduced row echelon form (not re-checked)."""
        form = cls(field)
        for row in rows:
            form.rows[min(row)] = dict(row)
        return form

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vector: Vector) -> Vector:
        """Residual of vector after eliminating every pivot column it touches."""
        f = self.field
        rows = self.rows
        residual = {c: v for c, v in vector.items() if not f.is_zero(v)}
        if not rows:
            return residual
        heap = [c for c in residual if c in rows]
        heapq.heapify(heap)
        while heap:
            col = heapq.heappop(heap)
            value = residual.get(col)
            if value is None:
                continue
            row = rows[col]
            for c in row:
                if c not in residual and c in rows and c != col:
                    heapq.heappush(heap, c)
            axpy(residual, value, row, f)
        return residual

    def insert(self, vector: Vector) -> bool:
        """Add vector to the row space; False when it was already inside."""
        residual = self.reduce(vector)
        if not residual:
            return False
        f = self.field
        pivot = min(residual)
        scale = f.inv(residual[pivot])
        self.rows[pivot] = {c: f.mul(scale, v) for c, v in residual.items()}
        self.reduced = False
        return True

    def extend(self, vectors: Iterable[Vector]) -> int:
        added = 0
        for vector in vectors:
            if self.insert(vector):
                added += 1
        return added

    def contains(self, vector: Vector) -> bool:
        return not self.reduce(vector)

    def finalize(self) -> List[Vector]:
        """Back-substitute to reduced row echelon form; rows sorted by pivot."""
        f = self.field
        rows = self.rows
        if not self.reduced:
            for pivot in sorted(rows, reverse=True):
                row = rows[pivot]
                hits = [c for c in row if c != pivot and c in rows]
                for c in hits:
                    value = row.get(c)
                    if value is not None:
                        axpy(row, value, rows[c], f)
            self.reduced = True
        return [rows[p] for p in sorted(rows)]


def rank(field: Field, vectors: Iterable[Vector]) -> int:
    form = EchelonForm(field)
    form.extend(vectors)
    return form.rank


def solve(field: Field, equations: Iterable[Vector], unknowns: int) -> Optional[List[Any]]:
    """
    Solve a linear system given as augmented rows.

    Each equation maps unknown index (0..unknowns-1) to its coefficient and the
    key `unknowns` to the right-hand side. Returns one solution (free
    unknowns set to 0) or None when the system is inconsistent.
    """
    form = EchelonForm(field)
    form.extend(equations)
    rows = form.finalize()
    solution = [field.zero()] * unknowns
    for row in rows:
        pivot = min(row)
        if pivot == unknowns:
            return None
        solution[pivot] = row.get(unknowns, field.zero())
    return solution
