"""Exact matrix rank over GF(p) and over the rationals.

Matrices are passed as a list of sparse rows (``{column: value}``) together
with the column count.  Over GF(p) small matrices go through a dense numpy
elimination and wide ones through a sparse row-reduction; both must agree.
Over Q the rank comes from fraction-free (Bareiss) elimination on integers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ResourceError

SparseRow = dict[int, int]

DENSE_COLUMN_LIMIT = 512
# largest prime for which p**2 still fits in int64
_DENSE_PRIME_LIMIT = 3037000499
DEFAULT_BIT_CAP = 4096


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: characteristic 0 (the rationals) or a prime p."""

    characteristic: int = 32003

    def __post_init__(self):
        c = self.characteristic
        if c != 0 and not is_prime(c):
            raise ValueError(f"field characteristic must be 0 or prime, got {c}")

    def __str__(self) -> str:
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


DEFAULT_FIELD = FieldSpec()


def rank_dense_mod_p(rows: list[SparseRow], ncols: int, p: int) -> int:
    if not rows or ncols == 0:
        return 0
    if p > _DENSE_PRIME_LIMIT:
        return rank_sparse_mod_p(rows, ncols, p)
    A = np.zeros((len(rows), ncols), dtype=np.int64)
    for r, row in enumerate(rows):
        for c, v in row.items():
            A[r, c] = v % p
    rank = 0
    nrows = A.shape[0]
    for c in range(ncols):
        if rank == nrows:
            break
        nz = np.nonzero(A[rank:, c])[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            A[[rank, piv]] = A[[piv, rank]]
        inv = pow(int(A[rank, c]), -1, p)
        A[rank] = (A[rank] * inv) % p
        below = A[rank + 1:, c].copy()
        if below.any():
            A[rank + 1:] = (A[rank + 1:] - np.outer(below, A[rank])) % p
        rank += 1
    return rank


def rank_sparse_mod_p(rows: list[SparseRow], ncols: int, p: int) -> int:
    pivots: dict[int, SparseRow] = {}
    for row in rows:
        cur = {c: v % p for c, v in row.items() if v % p}
        while cur:
            lead = min(cur)
            prow = pivots.get(lead)
            if prow is None:
                inv = pow(cur[lead], -1, p)
                pivots[lead] = {c: v * inv % p for c, v in cur.items()}
                break
            f = cur[lead]
            for c, v in prow.items():
                nv = (cur.get(c, 0) - f * v) % p
                if nv:
                    cur[c] = nv
                else:
                    cur.pop(c, None)
    return len(pivots)


def rank_rational(rows: list[SparseRow], ncols: int, bit_cap: int = DEFAULT_BIT_CAP) -> int:
    """Rank over Q of an integer matrix by Bareiss elimination."""
    if not rows or ncols == 0:
        return 0
    A = [[row.get(c, 0) for c in range(ncols)] for row in rows]
    nrows = len(A)
    rank = 0
    prev = 1
    for c in range(ncols):
        if rank == nrows:
            break
        piv = next((r for r in range(rank, nrows) if A[r][c] != 0), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        pr = A[rank]
        for r in range(rank + 1, nrows):
            row = A[r]
            a = row[c]
            for j in range(c, ncols):
                v = (pr[c] * row[j] - a * pr[j]) // prev
                if v.bit_length() > bit_cap:
                    raise ResourceError(
                        "rational elimination exceeded the integer size cap; use a prime field"
                    )
                row[j] = v
        prev = pr[c]
        rank += 1
    return rank


def rank(rows: list[SparseRow], ncols: int, field: FieldSpec = DEFAULT_FIELD) -> int:
    p = field.characteristic
    if p == 0:
        return rank_rational(rows, ncols)
    if ncols < DENSE_COLUMN_LIMIT:
        return rank_dense_mod_p(rows, ncols, p)
    return rank_sparse_mod_p(rows, ncols, p)
