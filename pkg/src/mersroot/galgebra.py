"""Arithmetic in the group algebra GF(2)[C_p] = GF(2)[x]/(x**p - 1).

An element carries its modulus index p and a bit-packed coefficient
vector (bit i = coefficient of x**i).  Addition is XOR; multiplication is
cyclic convolution of the packed words; unit testing runs through the
polynomial gcd with x**p + 1 so that the dense convolution and the gcd
machinery stay independent of one another.

Text encoding: little-endian bitstrings ("1101" is 1 + x + x**3) and the
hex form of the packed integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import cyclotomic, numtheory
from .backend import kernels
from .errors import BudgetExceededError, ModulusMismatchError, NonUnitError

DEFAULT_ENUMERATION_CAP = 13


@lru_cache(maxsize=None)
def _validated_modulus(p: int) -> int:
    numtheory.require_odd_prime(p)
    return p


@dataclass(frozen=True)
class GroupAlgebraElement:
    """An element of GF(2)[C_p], packed as p coefficient bits."""

    p: int
    bits: int

    def __post_init__(self):
        _validated_modulus(self.p)
        if not 0 <= self.bits < 1 << self.p:
            raise ValueError(f"coefficient vector needs exactly {self.p} bits")

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return add(self, other)

    def __mul__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return mul(self, other)

    def __pow__(self, e: int) -> "GroupAlgebraElement":
        return power(self, e)

    def to_bitstring(self) -> str:
        return cyclotomic.poly_to_bitstring(self.bits, self.p)

    def to_hex(self) -> str:
        return cyclotomic.poly_to_hex(self.bits)

    def __str__(self):
        return f"F2C{self.p}:{self.to_bitstring()}"


def zero(p: int) -> GroupAlgebraElement:
    return GroupAlgebraElement(p, 0)


def identity(p: int) -> GroupAlgebraElement:
    return GroupAlgebraElement(p, 1)


def generator(p: int) -> GroupAlgebraElement:
    """The group generator x."""
    return GroupAlgebraElement(p, 0b10)


def norm_element(p: int) -> GroupAlgebraElement:
    """The sum of all group elements: every coefficient bit set.

    Annihilated by 1 + x, hence a zero divisor, never a unit.
    """
    return GroupAlgebraElement(p, (1 << p) - 1)


def from_bitstring(p: int, s: str) -> GroupAlgebraElement:
    """Parse the little-endian coefficient string, padding with zeros."""
    bits = cyclotomic.poly_from_bitstring(s)
    if len(s) > p:
        raise ValueError(f"bitstring longer than p={p}")
    return GroupAlgebraElement(p, bits)


def from_coefficients(p: int, coeffs) -> GroupAlgebraElement:
    bits = 0
    for i, c in enumerate(coeffs):
        if c:
            bits |= 1 << i
    return GroupAlgebraElement(p, bits)


def _match(a: GroupAlgebraElement, b: GroupAlgebraElement) -> None:
    if a.p != b.p:
        raise ModulusMismatchError(f"mixed moduli {a.p} and {b.p}")


def add(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    """Coefficientwise XOR."""
    _match(a, b)
    return GroupAlgebraElement(a.p, a.bits ^ b.bits)


def cyclic_convolve_bits(a: int, b: int, p: int) -> int:
    """Cyclic convolution of two packed p-bit words modulo x**p + 1."""
    product = cyclotomic.poly_mul(a, b)
    return (product & ((1 << p) - 1)) ^ (product >> p)


def mul(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    """Cyclic convolution over GF(2)."""
    _match(a, b)
    return GroupAlgebraElement(a.p, cyclic_convolve_bits(a.bits, b.bits, a.p))


def mul_naive(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    """Quadratic double-loop convolution; the independent oracle for mul."""
    _match(a, b)
    p = a.p
    out = 0
    for i in range(p):
        if a.bits >> i & 1:
            for j in range(p):
                if b.bits >> j & 1:
                    out ^= 1 << ((i + j) % p)
    return GroupAlgebraElement(p, out)


def power(a: GroupAlgebraElement, e: int) -> GroupAlgebraElement:
    """a**e by square-and-multiply; e = 0 yields the identity."""
    if e < 0:
        raise ValueError("negative exponents are not defined; invert first")
    p = a.p
    result = 1
    base = a.bits
    while e:
        if e & 1:
            result = cyclic_convolve_bits(result, base, p)
        e >>= 1
        if e:
            base = cyclic_convolve_bits(base, base, p)
    return GroupAlgebraElement(p, result)


def augmentation(a: GroupAlgebraElement) -> int:
    """Sum of the coefficients in GF(2); a ring homomorphism onto GF(2)."""
    return a.bits.bit_count() & 1


def _modulus_poly(p: int) -> int:
    return (1 << p) | 1  # x**p + 1


def is_unit(a: GroupAlgebraElement) -> bool:
    """True iff a is invertible, i.e. gcd(a(x), x**p + 1) = 1."""
    return cyclotomic.poly_gcd(a.bits, _modulus_poly(a.p)) == 1


def inverse(a: GroupAlgebraElement) -> GroupAlgebraElement:
    """Multiplicative inverse via the extended Euclidean algorithm."""
    g, s, _ = cyclotomic.poly_gcdext(a.bits, _modulus_poly(a.p))
    if g != 1:
        raise NonUnitError(f"not invertible: gcd with x**{a.p}+1 has degree {cyclotomic.poly_degree(g)}")
    return GroupAlgebraElement(a.p, cyclotomic.poly_mod(s, _modulus_poly(a.p)))


def zero_divisor_partner(a: GroupAlgebraElement) -> GroupAlgebraElement:
    """For a nonzero non-unit: a nonzero b with a*b = 0, the cofactor of
    the gcd inside x**p + 1."""
    if a.bits == 0:
        raise ValueError("the zero element has no distinguished partner")
    g = cyclotomic.poly_gcd(a.bits, _modulus_poly(a.p))
    if g == 1:
        raise NonUnitError("units are not zero divisors")
    return GroupAlgebraElement(a.p, cyclotomic.poly_divmod(_modulus_poly(a.p), g)[0])


def has_order_exactly_p(a: GroupAlgebraElement) -> bool:
    """True iff a != 1 and a**p = 1 (p prime, so such orders are exact)."""
    return a.bits != 1 and power(a, a.p).bits == 1


def unit_count(p: int) -> int:
    """|units of GF(2)[C_p]| = (2**d - 1)**((p-1)/d), d = ord_p(2)."""
    numtheory.require_odd_prime(p)
    d = numtheory.mult_order(2, p)
    return ((1 << d) - 1) ** ((p - 1) // d)


def order_p_unit_count(p: int) -> int:
    """Number of units of order exactly p: p**((p-1)/ord_p(2)) - 1."""
    numtheory.require_odd_prime(p)
    d = numtheory.mult_order(2, p)
    return p ** ((p - 1) // d) - 1


def enumerate_units(p: int, cap: int = DEFAULT_ENUMERATION_CAP) -> list[GroupAlgebraElement]:
    """Every unit, found by applying the unit test to all 2**p patterns."""
    numtheory.require_odd_prime(p)
    if p > cap:
        raise BudgetExceededError(f"enumeration over 2**{p} elements exceeds cap p <= {cap}")
    modulus = _modulus_poly(p)
    return [
        GroupAlgebraElement(p, bits)
        for bits in range(1 << p)
        if cyclotomic.poly_gcd(bits, modulus) == 1
    ]


def scan_tables(p: int):
    """Per-bit residue-update tables against the factors of x**p + 1,
    packed side by side into single words for the scan kernels."""
    factors = cyclotomic.factor_x_p_minus_1(p).factors
    assert factors[0] == 0b11, "canonical ordering puts x+1 first"
    offsets, masks = [], []
    position = 0
    for f in factors:
        d = cyclotomic.poly_degree(f)
        offsets.append(position)
        masks.append((1 << d) - 1)
        position += d
    flips = []
    for i in range(p):
        word = 0
        for f, off in zip(factors, offsets):
            word |= cyclotomic.poly_mod(1 << i, f) << off
        flips.append(word)
    return flips, offsets, masks


def unit_scan_counts(p: int, cap: int = 25) -> tuple[int, int]:
    """(unit count, count of non-units with augmentation 1) over all 2**p
    patterns, via the residue-walk kernel.

    The second count equals 1 exactly when every element outside the
    augmentation kernel other than the norm element is a unit.
    """
    numtheory.require_odd_prime(p)
    if p > cap:
        raise BudgetExceededError(f"unit scan capped at p <= {cap}, got {p}")
    flips, offsets, masks = scan_tables(p)
    n_units, n_eps1_nonunit = kernels().unit_scan(p, flips, offsets, masks)
    return int(n_units), int(n_eps1_nonunit)


def unit_order_census(p: int, cap: int = DEFAULT_ENUMERATION_CAP) -> tuple[int, int, bool]:
    """(unit count, count of order-p units, every nontrivial unit has
    order p), by exhaustive scan."""
    numtheory.require_odd_prime(p)
    if p > cap:
        raise BudgetExceededError(f"order census capped at p <= {cap}, got {p}")
    flips, offsets, masks = scan_tables(p)
    n_units, n_order_p, all_nontrivial = kernels().unit_order_scan(p, flips, offsets, masks)
    return int(n_units), int(n_order_p), bool(all_nontrivial)
