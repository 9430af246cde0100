"""Packed-row GF(2) matrix helpers.

A matrix is a list of ints; bit j of rows[i] is the entry at row i,
column j.  These are the plain-Python building blocks shared by the
dense linear-algebra oracle and the pure kernel fallbacks.
"""

from __future__ import annotations


def circulant_rows(c: int, p: int) -> list[int]:
    """Dense rows of the circulant whose first column is c.

    Entry (i, j) is bit (i - j) mod p of c: row 0 is the cyclic reversal
    of c, and each later row is the previous one rotated up by one bit.
    """
    w0 = c & 1
    for j in range(1, p):
        w0 |= (c >> (p - j) & 1) << j
    mask = (1 << p) - 1
    rows = [w0]
    w = w0
    for _ in range(p - 1):
        w = ((w << 1) | (w >> (p - 1))) & mask
        rows.append(w)
    return rows


def identity_rows(n: int) -> list[int]:
    return [1 << i for i in range(n)]


def det_packed(rows: list[int], n: int) -> int:
    """Determinant over GF(2) by forward elimination with row swaps."""
    work = list(rows)
    rank = 0
    for col in range(n):
        pivot = -1
        for r in range(rank, n):
            if work[r] >> col & 1:
                pivot = r
                break
        if pivot < 0:
            return 0
        work[rank], work[pivot] = work[pivot], work[rank]
        for r in range(n):
            if r != rank and (work[r] >> col & 1):
                work[r] ^= work[rank]
        rank += 1
    return 1


def matmul_packed(a: list[int], b: list[int], n: int) -> list[int]:
    out = []
    for i in range(n):
        acc = 0
        row = a[i]
        while row:
            low = row & -row
            acc ^= b[low.bit_length() - 1]
            row ^= low
        out.append(acc)
    return out


def matpow_packed(rows: list[int], e: int, n: int) -> list[int]:
    result = identity_rows(n)
    base = list(rows)
    while e:
        if e & 1:
            result = matmul_packed(result, base, n)
        e >>= 1
        if e:
            base = matmul_packed(base, base, n)
    return result


def matvec_packed(rows: list[int], v: int) -> int:
    """Image of the packed vector v (bit j = coordinate j)."""
    out = 0
    for i, row in enumerate(rows):
        out |= ((row & v).bit_count() & 1) << i
    return out
