"""GF(2)[x] arithmetic on bit-packed polynomials, and the factorization of
x**p - 1 into (x + 1) times distinct irreducibles of one common degree.

A polynomial is a nonnegative Python int: bit i is the coefficient of x**i.
Every nonzero polynomial is automatically monic in this encoding, and the
degree is one less than the bit length.  Addition is XOR.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from . import numtheory
from .errors import BudgetExceededError

DEFAULT_FACTOR_CAP = 521


def poly_degree(a: int) -> int:
    """Degree of a; the zero polynomial reports -1."""
    return a.bit_length() - 1


def poly_mul(a: int, b: int) -> int:
    """Carry-less product, accumulated over the set bits of the smaller
    operand."""
    if a < b:
        a, b = b, a
    acc = 0
    while b:
        low = b & -b
        acc ^= a << (low.bit_length() - 1)
        b ^= low
    return acc


def poly_divmod(a: int, b: int) -> tuple[int, int]:
    """Quotient and remainder of a by b, for nonzero b."""
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    q = 0
    db = poly_degree(b)
    da = poly_degree(a)
    while da >= db:
        shift = da - db
        q |= 1 << shift
        a ^= b << shift
        da = poly_degree(a)
    return q, a


def poly_mod(a: int, b: int) -> int:
    """Remainder of a modulo b, for nonzero b."""
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = poly_degree(b)
    da = poly_degree(a)
    while da >= db:
        a ^= b << (da - db)
        da = poly_degree(a)
    return a


def poly_gcd(a: int, b: int) -> int:
    """Greatest common divisor (monic by construction)."""
    while b:
        a, b = b, poly_mod(a, b)
    return a


def poly_gcdext(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b)."""
    s0, s1 = 1, 0
    t0, t1 = 0, 1
    while b:
        q, r = poly_divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 ^ poly_mul(q, s1)
        t0, t1 = t1, t0 ^ poly_mul(q, t1)
    return a, s0, t0


def poly_pow_mod(a: int, e: int, m: int) -> int:
    """a**e reduced modulo m, by square-and-multiply."""
    if e < 0:
        raise ValueError("negative exponent")
    result = 1
    a = poly_mod(a, m)
    while e:
        if e & 1:
            result = poly_mod(poly_mul(result, a), m)
        e >>= 1
        if e:
            a = poly_mod(poly_mul(a, a), m)
    return result


def poly_derivative(a: int) -> int:
    """Formal derivative: only odd-degree terms survive, shifted down."""
    n = a.bit_length()
    if n & 1:
        n += 1
    mask = ((1 << n) - 1) // 3  # 0b0101...01
    return (a >> 1) & mask


def poly_to_bitstring(a: int, width: int | None = None) -> str:
    """Little-endian coefficient string: "1101" encodes 1 + x + x**3."""
    if width is None:
        width = max(a.bit_length(), 1)
    return "".join("1" if a >> i & 1 else "0" for i in range(width))


def poly_from_bitstring(s: str) -> int:
    if not s or set(s) - {"0", "1"}:
        raise ValueError(f"not a bitstring: {s!r}")
    return int(s[::-1], 2)


def poly_to_hex(a: int) -> str:
    """Hex form of the packed coefficient integer."""
    return format(a, "x")


def is_irreducible(f: int) -> bool:
    """Irreducibility via absence of factors of degree <= deg(f)//2.

    gcd(f, x**(2**k) + x) collects exactly the irreducible factors of f
    whose degree divides k, so scanning k up to deg(f)//2 rules out every
    possible proper factor.
    """
    d = poly_degree(f)
    if d <= 0:
        return False
    if d == 1:
        return True
    if not f & 1:
        return f == 2  # divisible by x
    r = 2  # the polynomial x
    for _ in range(d // 2):
        r = poly_mod(poly_mul(r, r), f)
        if poly_gcd(f, r ^ 2) != 1:
            return False
    return True


@dataclass(frozen=True)
class CyclotomicFactorization:
    """Complete factorization of x**p + 1 over GF(2).

    Factors are sorted by (degree, packed coefficient value); the linear
    factor x + 1 always sorts first.
    """

    p: int
    factors: tuple[int, ...]

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(poly_degree(f) for f in self.factors)


def cyclotomic_poly(p: int) -> int:
    """The all-ones polynomial 1 + x + ... + x**(p-1)."""
    numtheory.require_odd_prime(p)
    return (1 << p) - 1


def _equal_degree_split(f: int, d: int, rng: random.Random) -> int:
    """A proper factor of f, a product of >= 2 distinct irreducibles of
    degree d, found by gcds against traces of random elements (the
    characteristic-2 splitting method)."""
    n = poly_degree(f)
    while True:
        r = rng.getrandbits(n)
        if r == 0:
            continue
        cur = poly_mod(r, f)
        trace = cur
        for _ in range(d - 1):
            cur = poly_mod(poly_mul(cur, cur), f)
            trace ^= cur
        g = poly_gcd(f, trace)
        if 0 < poly_degree(g) < n:
            return g


@lru_cache(maxsize=None)
def factor_x_p_minus_1(p: int, seed: int = 0, cap: int = DEFAULT_FACTOR_CAP) -> CyclotomicFactorization:
    """Factor x**p + 1 = (x + 1) * (product of irreducibles of degree
    ord_p(2)) over GF(2).

    Distinct-degree splitting is immediate here: every nonlinear factor of
    the all-ones part shares the degree ord_p(2), so only equal-degree
    splitting is needed.  The splitter draws from a seeded generator;
    the output ordering is canonical and therefore seed-independent.
    """
    numtheory.require_odd_prime(p)
    if p > cap:
        raise BudgetExceededError(f"factorization capped at p <= {cap}, got {p}")
    d = numtheory.mult_order(2, p)
    rng = random.Random(seed)
    work = [cyclotomic_poly(p)]
    done = [0b11]  # x + 1
    while work:
        f = work.pop()
        if poly_degree(f) == d:
            done.append(f)
            continue
        g = _equal_degree_split(f, d, rng)
        work.append(g)
        work.append(poly_divmod(f, g)[0])
    done.sort(key=lambda f: (poly_degree(f), f))
    return CyclotomicFactorization(p, tuple(done))


def verify_factor_profile(fact: CyclotomicFactorization) -> bool:
    """Check a factorization against the expected shape: the factor x + 1,
    plus (p-1)/ord_p(2) distinct irreducible factors of degree ord_p(2),
    multiplying back to x**p + 1."""
    p = fact.p
    d = numtheory.mult_order(2, p)
    factors = fact.factors
    if len(set(factors)) != len(factors):
        return False
    if 0b11 not in factors:
        return False
    nonlinear = [f for f in factors if f != 0b11]
    if len(nonlinear) != (p - 1) // d:
        return False
    if any(poly_degree(f) != d for f in nonlinear):
        return False
    product = 1
    for f in factors:
        product = poly_mul(product, f)
    return product == (1 << p) | 1
