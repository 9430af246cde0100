"""Circulant matrices over GF(2) and the ring isomorphism with GF(2)[C_p].

A circulant stores only its first column; column j is the first column
rotated down by j.  Multiplication delegates to cyclic convolution of
first columns.  The dense path (materialization plus Gaussian
elimination) is deliberately not routed through the algebra side: it is
the independent oracle for invertibility and nullspace questions.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _gf2, galgebra, numtheory
from .backend import kernels
from .errors import BudgetExceededError, ModulusMismatchError

DEFAULT_SCAN_CAP = 13


@dataclass(frozen=True)
class CirculantMatrix:
    """p x p circulant over GF(2), stored as its first column bits."""

    p: int
    first_column: int

    def __post_init__(self):
        galgebra._validated_modulus(self.p)
        if not 0 <= self.first_column < 1 << self.p:
            raise ValueError(f"first column needs exactly {self.p} bits")

    def to_bitstring(self) -> str:
        return galgebra.GroupAlgebraElement(self.p, self.first_column).to_bitstring()

    def __str__(self):
        return f"circ[{self.p}]:{self.to_bitstring()}"


@dataclass(frozen=True)
class DenseBitMatrix:
    """Square bit matrix with packed rows (bit j of rows[i] = entry i,j)."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.n or any(not 0 <= r < 1 << self.n for r in self.rows):
            raise ValueError("need n rows of n bits each")

    @classmethod
    def identity(cls, n: int) -> "DenseBitMatrix":
        return cls(n, tuple(_gf2.identity_rows(n)))

    def entry(self, i: int, j: int) -> int:
        return self.rows[i] >> j & 1

    def matmul(self, other: "DenseBitMatrix") -> "DenseBitMatrix":
        if self.n != other.n:
            raise ModulusMismatchError("dimension mismatch")
        return DenseBitMatrix(self.n, tuple(_gf2.matmul_packed(list(self.rows), list(other.rows), self.n)))

    def matpow(self, e: int) -> "DenseBitMatrix":
        if e < 0:
            raise ValueError("negative exponent")
        return DenseBitMatrix(self.n, tuple(_gf2.matpow_packed(list(self.rows), e, self.n)))

    def mul_vector(self, v: int) -> int:
        return _gf2.matvec_packed(list(self.rows), v)


def identity(p: int) -> CirculantMatrix:
    return CirculantMatrix(p, 1)


def all_ones(p: int) -> CirculantMatrix:
    """The matrix J; image of the norm element."""
    return CirculantMatrix(p, (1 << p) - 1)


def to_circulant(a: galgebra.GroupAlgebraElement) -> CirculantMatrix:
    """The ring isomorphism: coefficients become the first column."""
    return CirculantMatrix(a.p, a.bits)


def from_circulant(m: CirculantMatrix) -> galgebra.GroupAlgebraElement:
    """Inverse of the isomorphism."""
    return galgebra.GroupAlgebraElement(m.p, m.first_column)


def materialize(m: CirculantMatrix) -> DenseBitMatrix:
    """Dense form; derived on demand, never the stored truth."""
    return DenseBitMatrix(m.p, tuple(_gf2.circulant_rows(m.first_column, m.p)))


def matmul(a: CirculantMatrix, b: CirculantMatrix) -> CirculantMatrix:
    """Product via cyclic convolution of first columns."""
    if a.p != b.p:
        raise ModulusMismatchError(f"mixed dimensions {a.p} and {b.p}")
    return CirculantMatrix(a.p, galgebra.cyclic_convolve_bits(a.first_column, b.first_column, a.p))


def matpow(a: CirculantMatrix, e: int) -> CirculantMatrix:
    """a**e by square-and-multiply; a**0 is the identity."""
    if e < 0:
        raise ValueError("negative exponent")
    result = identity(a.p)
    base = a
    while e:
        if e & 1:
            result = matmul(result, base)
        e >>= 1
        if e:
            base = matmul(base, base)
    return result


def det_gf2(m: CirculantMatrix | DenseBitMatrix) -> int:
    """Determinant over GF(2) by Gaussian elimination on the dense rows.

    This path never consults the algebra-side unit test; the two must
    agree on every circulant, which the invariant suite checks.
    """
    if isinstance(m, CirculantMatrix):
        m = materialize(m)
    return _gf2.det_packed(list(m.rows), m.n)


def nullspace_contains_all_ones(m: CirculantMatrix) -> bool:
    """True iff A applied to the all-ones vector gives zero.

    Every row of a circulant has the same weight, so A*1 vanishes exactly
    when the first-column weight is even (equivalently, the preimage
    under the isomorphism lies in the augmentation kernel).
    """
    return m.first_column.bit_count() & 1 == 0


def is_permutation_circulant(m: CirculantMatrix) -> bool:
    """True iff the first column has a single set bit."""
    return m.first_column.bit_count() == 1


def scan_flags(p: int, cap: int = DEFAULT_SCAN_CAP) -> tuple[bytes, bytes]:
    """Per-column flag bytes over all 2**p circulants:
    (invertible by elimination, matrix power A**p equals I)."""
    numtheory.require_odd_prime(p)
    if p > cap:
        raise BudgetExceededError(f"circulant scan capped at p <= {cap}, got {p}")
    return kernels().circulant_scan_flags(p)


def enumerate_invertible_circulants(
    p: int, cap: int = DEFAULT_SCAN_CAP, return_list: bool = False
) -> int | tuple[int, list[CirculantMatrix]]:
    """Count (and optionally collect) the invertible circulants among all
    2**p first columns, each decided by Gaussian elimination."""
    invertible, _ = scan_flags(p, cap)
    count = sum(invertible)
    if not return_list:
        return count
    matrices = [CirculantMatrix(p, c) for c in range(1 << p) if invertible[c]]
    return count, matrices
