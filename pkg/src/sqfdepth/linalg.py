"""Exact rank and kernel computations over prime fields and the rationals.

Boundary matrices of the per-multidegree complexes have entries in
{-1, 0, 1}, so rank over F_p is plain modular elimination and rank over Q
is fraction-free integer elimination.  Dense elimination is used up to a
size cutoff, a sparse elimination with Markowitz-style pivot selection
above it.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import NoKernelError, SqfdepthError

DEFAULT_PRIME = 32003
DENSE_CUTOFF = 2048

SparseColumns = list[list[tuple[int, int]]]  # per column: (row index, entry)


def _is_prime(p: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond 2**64."""
    if p < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if p % q == 0:
            return p == q
    d = p - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in small:
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(r - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True, slots=True)
class FieldSpec:
    """The coefficient field: F_p for a prime p, or Q when p is None."""

    p: int | None = DEFAULT_PRIME

    def __post_init__(self) -> None:
        if self.p is not None and not _is_prime(self.p):
            raise SqfdepthError(f"field characteristic {self.p} is not prime")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(None)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Accepts 'q' or 'fp:<prime>'."""
        body = text.strip().lower()
        if body == "q":
            return cls(None)
        if body.startswith("fp:"):
            try:
                return cls(int(body[3:]))
            except ValueError as exc:
                raise SqfdepthError(f"bad field spec {text!r}") from exc
        raise SqfdepthError(f"bad field spec {text!r} (use 'q' or 'fp:<prime>')")

    @property
    def label(self) -> str:
        return "q" if self.p is None else f"fp:{self.p}"

    @property
    def is_rational(self) -> bool:
        return self.p is None


DEFAULT_FIELD = FieldSpec(DEFAULT_PRIME)
RATIONALS = FieldSpec(None)
GF2 = FieldSpec(2)


def _rank_dense_mod_p(dense: np.ndarray, p: int) -> int:
    a = np.remainder(dense.astype(np.int64), p)
    n_rows, n_cols = a.shape
    rank = 0
    for col in range(n_cols):
        if rank == n_rows:
            break
        pivot = None
        for row in range(rank, n_rows):
            if a[row, col]:
                pivot = row
                break
        if pivot is None:
            continue
        if pivot != rank:
            a[[rank, pivot]] = a[[pivot, rank]]
        inv = pow(int(a[rank, col]), p - 2, p)
        a[rank] = a[rank] * inv % p
        below = a[rank + 1 :, col]
        nz = np.nonzero(below)[0]
        if nz.size:
            rows = nz + rank + 1
            a[rows] = (a[rows] - np.outer(a[rows, col], a[rank])) % p
        rank += 1
    return rank


def _rank_dense_fraction(rows: list[list[int]]) -> int:
    """Plain Gaussian elimination over Fraction; the slow exact fallback."""
    m = [[Fraction(v) for v in r] for r in rows]
    if not m or not m[0]:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    for col in range(n_cols):
        if rank == n_rows:
            break
        pivot = next((i for i in range(rank, n_rows) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pv = m[rank][col]
        for i in range(rank + 1, n_rows):
            if m[i][col]:
                f = m[i][col] / pv
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def _rank_dense_bareiss(rows: list[list[int]]) -> int:
    """Fraction-free elimination; exact rank over Q for integer input."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(n_cols):
        if rank == n_rows:
            break
        pivot = next((i for i in range(rank, n_rows) if m[i][col]), None)
        if pivot is None:
            continue
        if pivot != rank:
            m[rank], m[pivot] = m[pivot], m[rank]
        pv = m[rank][col]
        for i in range(rank + 1, n_rows):
            head = m[i][col]
            row_i, row_r = m[i], m[rank]
            for j in range(col + 1, n_cols):
                num = row_i[j] * pv - head * row_r[j]
                q, rem = divmod(num, prev)
                if rem:
                    # should be unreachable; keep an exact fallback anyway
                    return _rank_dense_fraction(rows)
                row_i[j] = q
            row_i[col] = 0
        prev = pv
        rank += 1
    return rank


def _rank_sparse(rows: list[dict[int, object]], field: FieldSpec) -> int:
    """Markowitz-style sparse elimination over the given field."""
    p = field.p
    if p is None:
        live = [
            {c: Fraction(v) for c, v in row.items() if v}
            for row in rows
        ]
    else:
        live = [
            {c: v % p for c, v in row.items() if v % p}
            for row in rows
        ]
    live = [row for row in live if row]
    rank = 0
    while live:
        col_count: dict[int, int] = {}
        for row in live:
            for c in row:
                col_count[c] = col_count.get(c, 0) + 1
        best = None
        for i, row in enumerate(live):
            for c in row:
                cost = (len(row) - 1) * (col_count[c] - 1)
                key = (cost, len(row), c, i)
                if best is None or key < best[0]:
                    best = (key, i, c)
        _, pi, pc = best
        pivot_row = live.pop(pi)
        pv = pivot_row[pc]
        if p is None:
            inv = Fraction(1) / pv
        else:
            inv = pow(int(pv), p - 2, p)
        nxt = []
        for row in live:
            head = row.get(pc)
            if head is not None:
                factor = head * inv if p is None else head * inv % p
                for c, v in pivot_row.items():
                    cur = row.get(c, 0 if p else Fraction(0))
                    nv = cur - factor * v
                    if p is not None:
                        nv %= p
                    if nv:
                        row[c] = nv
                    elif c in row:
                        del row[c]
            if row:
                nxt.append(row)
        live = nxt
        rank += 1
    return rank


def rank_sparse_columns(n_rows: int, cols: SparseColumns, field: FieldSpec) -> int:
    """Rank of a matrix given by sparse columns of integer entries."""
    n_cols = len(cols)
    if n_rows == 0 or n_cols == 0:
        return 0
    if max(n_rows, n_cols) <= DENSE_CUTOFF:
        if field.is_rational:
            dense = [[0] * n_cols for _ in range(n_rows)]
            for c, col in enumerate(cols):
                for r, v in col:
                    dense[r][c] = v
            return _rank_dense_bareiss(dense)
        dense = np.zeros((n_rows, n_cols), dtype=np.int64)
        for c, col in enumerate(cols):
            for r, v in col:
                dense[r, c] = v
        return _rank_dense_mod_p(dense, field.p)
    rows: list[dict[int, int]] = [dict() for _ in range(n_rows)]
    for c, col in enumerate(cols):
        for r, v in col:
            rows[r][c] = v
    return _rank_sparse(rows, field)


def rank_rows(rows: list[list[int]], field: FieldSpec) -> int:
    """Rank of a dense integer row-major matrix over the field."""
    if not rows or not rows[0]:
        return 0
    if field.is_rational:
        return _rank_dense_bareiss(rows)
    return _rank_dense_mod_p(np.asarray(rows, dtype=np.int64), field.p)


def kernel_vector(rows: list[list[int]], n_cols: int, field: FieldSpec) -> list:
    """A nonzero kernel vector of the homogeneous system rows * x = 0.

    Reduced row echelon form with canonical pivot order (leftmost nonzero,
    topmost row); the returned vector is the kernel basis element attached
    to the first free column: 1 there, pivot entries back-substituted.
    Raises NoKernelError when every column is a pivot column.

    Entries are ints in [0, p) over F_p and Fractions over Q.
    """
    p = field.p
    if p is None:
        work = [[Fraction(v) for v in row] for row in rows]
        zero, one = Fraction(0), Fraction(1)
    else:
        work = [[v % p for v in row] for row in rows]
        zero, one = 0, 1
    n_rows = len(work)
    pivots: list[tuple[int, int]] = []  # (row, col)
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if work[i][c] != zero), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        pv = work[r][c]
        inv = (one / pv) if p is None else pow(int(pv), p - 2, p)
        work[r] = [
            (v * inv if p is None else v * inv % p) for v in work[r]
        ]
        for i in range(n_rows):
            if i != r and work[i][c] != zero:
                f = work[i][c]
                if p is None:
                    work[i] = [a - f * b for a, b in zip(work[i], work[r])]
                else:
                    work[i] = [(a - f * b) % p for a, b in zip(work[i], work[r])]
        pivots.append((r, c))
        r += 1
        if r == n_rows:
            break
    pivot_cols = {c for _, c in pivots}
    free = next((c for c in range(n_cols) if c not in pivot_cols), None)
    if free is None:
        raise NoKernelError("system has full column rank")
    x = [zero] * n_cols
    x[free] = one
    for row, col in pivots:
        v = -work[row][free]
        x[col] = v % p if p is not None else v
    return x


def element_to_str(value, field: FieldSpec) -> str:
    """Serialize a field element (JSON carries field elements as strings)."""
    if field.is_rational:
        return str(value)
    return str(int(value) % field.p)
