"""Elementary number theory: primality, multiplicative orders, binomial
parity, mod-8 residues, and the Josephus product permutation.

Everything here is deterministic.  The strong-probable-prime test uses a
fixed base set that is known to be exact for all n below 2**64, which is
the full input range this package accepts.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

# Witnesses making Miller-Rabin deterministic below 3.3 * 10**24 > 2**64.
_SPRP_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test for 0 <= n < 2**64."""
    if n < 0:
        raise ValueError("primality is defined for nonnegative integers")
    if n >= 1 << 64:
        raise ValueError("inputs must stay below 2**64 for a deterministic verdict")
    if n < 2:
        return False
    for b in _SPRP_BASES:
        if n % b == 0:
            return n == b
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for b in _SPRP_BASES:
        x = pow(b, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def require_odd_prime(p: int) -> None:
    """Raise ValueError unless p is an odd prime."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")


def _factorize(n: int) -> dict[int, int]:
    # Trial division; the arguments here are p-1 values at desk scale.
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _sorted_divisors(n: int) -> list[int]:
    divs = [1]
    for q, e in _factorize(n).items():
        divs = [d * q**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def mult_order(a: int, p: int) -> int:
    """Least t >= 1 with a**t = 1 mod p, by walking the divisors of p-1
    in increasing order."""
    require_odd_prime(p)
    if math.gcd(a, p) != 1:
        raise ValueError(f"{a} is not invertible mod {p}")
    for d in _sorted_divisors(p - 1):
        if pow(a, d, p) == 1:
            return d
    raise AssertionError("unreachable: the order divides p-1")


def is_mersenne_prime(p: int) -> bool:
    """True iff the prime p is one less than a power of two."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return (p + 1) & p == 0


def is_two_rooted(p: int) -> bool:
    """True iff 2 generates the full multiplicative group mod p."""
    require_odd_prime(p)
    return mult_order(2, p) == p - 1


def binom_parity(m: int, n: int) -> int:
    """C(m, n) mod 2: 1 exactly when the base-2 digits of n sit inside
    those of m (digit domination)."""
    if m < 0 or n < 0:
        raise ValueError("arguments must be nonnegative")
    return 1 if n & ~m == 0 else 0


def binom_parity_digit_product(m: int, n: int) -> int:
    """C(m, n) mod 2 as the product of per-digit binomials.

    Independent second implementation kept for cross-checking against
    :func:`binom_parity`.
    """
    if m < 0 or n < 0:
        raise ValueError("arguments must be nonnegative")
    result = 1
    while result and (m or n):
        result *= math.comb(m & 1, n & 1)
        m >>= 1
        n >>= 1
    return result & 1


@dataclass(frozen=True)
class BinomialParityRow:
    """Row p of Pascal's triangle reduced mod 2."""

    p: int
    parities: tuple[int, ...]  # index r holds C(p, r) mod 2


def binomial_parity_row(p: int) -> BinomialParityRow:
    require_odd_prime(p)
    return BinomialParityRow(p, tuple(binom_parity(p, r) for r in range(p + 1)))


def row_all_odd(p: int) -> bool:
    """True iff every C(p, r), 0 <= r <= p, is odd."""
    require_odd_prime(p)
    return all(binom_parity(p, r) for r in range(p + 1))


def power_of_two_binoms_odd(p: int) -> bool:
    """True iff C(p, 2**m) is odd for every power of two up to p."""
    require_odd_prime(p)
    m = 1
    while m <= p:
        if not binom_parity(p, m):
            return False
        m <<= 1
    return True


def triple_symmetry(p: int) -> bool:
    """Check C(p, r) = C(p, 3r mod p) mod 2 for every 1 <= r <= p-1."""
    if p <= 3:
        raise ValueError("the symmetry statement applies to primes p > 3")
    require_odd_prime(p)
    for r in range(1, p):
        s = 3 * r % p
        if (r & ~p == 0) != (s & ~p == 0):
            return False
    return True


def mod8_residue(p: int) -> int:
    """p mod 8, for odd primes (always one of 1, 3, 5, 7)."""
    require_odd_prime(p)
    return p & 7


def josephus_transitive(p: int) -> bool:
    """Compose (1,2)(1,2,3)...(1,2,...,m) for p = 2m+1 and report whether
    the product is a single m-cycle.

    Convention: cycles compose right-to-left, so the longest cycle
    (1,2,...,m) acts first.  This is calibrated so that p=7 yields a
    product fixing the point 1 (not transitive) while p=11 yields a single
    5-cycle; see the calibration test.

    Appending k and rotating left implements composition with (1,2,...,k)
    on the right: the partial product sigma extends by sigma(k) = k, and
    precomposing with (1,2,...,k) shifts the argument, which on the image
    array is exactly a one-step left rotation.
    """
    require_odd_prime(p)
    m = (p - 1) // 2
    if m == 1:
        return True  # empty product, and {1} is trivially a single cycle
    perm = deque((2, 1))
    for k in range(3, m + 1):
        perm.append(k)
        perm.rotate(-1)
    images = list(perm)
    seen = 1
    j = images[0]
    while j != 1:
        j = images[j - 1]
        seen += 1
    return seen == m


def primes_in_range(lo: int, hi: int) -> list[int]:
    """All primes p with lo <= p <= hi (inclusive), by sieve."""
    if hi < 2 or hi < lo:
        return []
    sieve = bytearray([1]) * (hi + 1)
    sieve[0:2] = b"\x00\x00"
    for q in range(2, math.isqrt(hi) + 1):
        if sieve[q]:
            sieve[q * q :: q] = b"\x00" * len(sieve[q * q :: q])
    return [n for n in range(max(lo, 2), hi + 1) if sieve[n]]
