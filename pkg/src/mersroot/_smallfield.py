"""Arithmetic tables for finite fields of size at most 256.

Elements are integers 0..q-1.  For prime q this is plain modular
arithmetic; for q = p**k the integer's base-p digits are the coordinates
in the polynomial basis, so for characteristic 2 the encoding is the
usual bit pattern.  GF(4) and GF(8) use the fixed reduction polynomials
x**2 + x + 1 and x**3 + x + 1; other extensions take the lexicographically
smallest monic irreducible.

Each field's tables pass a construction-time axiom check: identities,
commutativity, inverses for every nonzero element, and associativity/
distributivity (exhaustive for q <= 9, on a fixed deterministic sample
of triples above that).
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

# Fixed reduction polynomials (top-bit-first ints over GF(2)).
_FIXED_BINARY_MODULI = {4: 0b111, 8: 0b1011}


def _prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if q % p == 0:
            k = 0
            value = q
            while value % p == 0:
                value //= p
                k += 1
            if value != 1:
                raise ValueError(f"{q} is not a prime power")
            return p, k
    raise ValueError(f"{q} is not a prime power")


def is_prime_power(q: int) -> bool:
    try:
        _prime_power(q)
    except ValueError:
        return False
    return True


def _digits(value: int, base: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        out.append(value % base)
        value //= base
    return out


def _undigits(digits: list[int], base: int) -> int:
    value = 0
    for d in reversed(digits):
        value = value * base + d
    return value


def _poly_mul_modp(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _poly_rem_modp(a: list[int], modulus: list[int], p: int) -> list[int]:
    a = list(a)
    dm = len(modulus) - 1
    while len(a) - 1 >= dm:
        lead = a[-1]
        if lead:
            shift = len(a) - 1 - dm
            for i, c in enumerate(modulus):
                a[shift + i] = (a[shift + i] - lead * c) % p
        while len(a) > dm and a and a[-1] == 0:
            a.pop()
        if not a:
            a = [0]
    a += [0] * (dm - len(a))
    return a[:dm]


def _find_irreducible(p: int, k: int) -> list[int]:
    """Smallest monic irreducible of degree k over GF(p), by trial
    division against all smaller-degree monic polynomials."""
    if p == 2 and p**k in _FIXED_BINARY_MODULI:
        bits = _FIXED_BINARY_MODULI[p**k]
        return [bits >> i & 1 for i in range(k + 1)]
    for tail in range(p**k):
        coeffs = _digits(tail, p, k) + [1]
        if _is_irreducible_modp(coeffs, p, k):
            return coeffs
    raise AssertionError("unreachable: irreducibles of every degree exist")


def _is_irreducible_modp(coeffs: list[int], p: int, k: int) -> bool:
    if coeffs[0] == 0:
        return k == 1
    for deg in range(1, k // 2 + 1):
        for tail in range(p**deg):
            divisor = _digits(tail, p, deg) + [1]
            if _divides_modp(divisor, coeffs, p):
                return False
    return True


def _divides_modp(divisor: list[int], coeffs: list[int], p: int) -> bool:
    rem = list(coeffs)
    dd = len(divisor) - 1
    while len(rem) - 1 >= dd and any(rem):
        lead = rem[-1]
        if lead:
            shift = len(rem) - 1 - dd
            for i, c in enumerate(divisor):
                rem[shift + i] = (rem[shift + i] - lead * c) % p
        rem.pop()
    return not any(rem)


class SmallField:
    """GF(q) with full add/sub/mul tables and an inverse table."""

    def __init__(self, q: int):
        self.q = q
        self.char, self.degree = _prime_power(q)
        if q > 256:
            raise ValueError("table-backed fields stop at q = 256")
        p, k = self.char, self.degree
        if k == 1:
            add = [[(a + b) % p for b in range(p)] for a in range(p)]
            sub = [[(a - b) % p for b in range(p)] for a in range(p)]
            mul = [[a * b % p for b in range(p)] for a in range(p)]
        else:
            modulus = _find_irreducible(p, k)
            self.modulus = modulus
            digits = [_digits(v, p, k) for v in range(q)]
            add = [
                [_undigits([(x + y) % p for x, y in zip(digits[a], digits[b])], p) for b in range(q)]
                for a in range(q)
            ]
            sub = [
                [_undigits([(x - y) % p for x, y in zip(digits[a], digits[b])], p) for b in range(q)]
                for a in range(q)
            ]
            mul = []
            for a in range(q):
                row = []
                for b in range(q):
                    prod = _poly_mul_modp(digits[a], digits[b], p)
                    row.append(_undigits(_poly_rem_modp(prod, modulus, p), p))
                mul.append(row)
        self.add_table = np.array(add, dtype=np.uint8)
        self.sub_table = np.array(sub, dtype=np.uint8)
        self.mul_table = np.array(mul, dtype=np.uint8)
        inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if mul[a][b] == 1:
                    inv[a] = b
                    break
            else:
                raise AssertionError(f"no inverse for {a} in GF({q})")
        self.inv_table = np.array(inv, dtype=np.uint8)
        self._check_axioms()

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def sub(self, a: int, b: int) -> int:
        return int(self.sub_table[a, b])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return int(self.inv_table[a])

    def pow(self, a: int, e: int) -> int:
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        order = 1
        value = a
        while value != 1:
            value = self.mul(value, a)
            order += 1
        return order

    def _check_axioms(self):
        q = self.q
        mul = self.mul_table
        add = self.add_table
        if any(add[a, 0] != a or mul[a, 1] != a or mul[a, 0] != 0 for a in range(q)):
            raise AssertionError("identity axioms fail")
        if not (mul == mul.T).all() or not (add == add.T).all():
            raise AssertionError("commutativity fails")
        triples = (
            range(q)
            if q <= 9
            else sorted({0, 1, 2, self.char % q, q - 1} | set(range(3, q, max(1, q // 11))))
        )
        for a in triples:
            for b in triples:
                for c in triples:
                    if self.mul(a, self.mul(b, c)) != self.mul(self.mul(a, b), c):
                        raise AssertionError("associativity fails")
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)):
                        raise AssertionError("distributivity fails")


@lru_cache(maxsize=None)
def small_field(q: int) -> SmallField:
    return SmallField(q)
