"""Exhaustive verification of unit-power laws on small group algebras
k[C_n^r].

A ring is a "delta-n ring" when every unit u satisfies u**n = 1, and
strictly so when no proper divisor of n works.  The checks here simply
enumerate every element of k[C_n^r] within a budget: units are detected
by invertibility of the regular representation (or, for GF(2)[C_p],
through the polynomial gcd path of the algebra module), and each unit's
power is computed by honest convolution.

The classification theorems cover abelian groups only; for nonabelian G
of exponent p one direction still holds (such a group algebra forces p
to be Mersenne), but no converse is known and nothing here models
nonabelian groups.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from . import cyclotomic, galgebra, numtheory
from ._smallfield import SmallField, is_prime_power, small_field
from .backend import kernels
from .errors import BudgetExceededError

DEFAULT_BUDGET = 1 << 24


def _normalize_group(group: tuple[int, int]) -> tuple[int, int]:
    n, r = group
    if n < 1 or r < 0:
        raise ValueError(f"bad group shape C_{n}^{r}")
    if n == 1 or r == 0:
        return 1, 0
    return n, r


def _check_budget(q: int, n: int, r: int, budget: int) -> int:
    size = q ** (n**r)
    if size > budget:
        raise BudgetExceededError(
            f"GF({q})[C_{n}^{r}] has {size} elements, over the budget of {budget}"
        )
    return size


@lru_cache(maxsize=None)
def _group_tables(n: int, r: int) -> tuple[np.ndarray, np.ndarray]:
    """Index tables for C_n^r: products g_i * g_j and g_i * g_j**-1.

    Element index i encodes the exponent vector in base n.
    """
    size = n**r
    idx = np.arange(size, dtype=np.int64)
    digits = [(idx // n**k) % n for k in range(r)]
    gmul = np.zeros((size, size), dtype=np.int32)
    gdiv = np.zeros((size, size), dtype=np.int32)
    for k in range(r):
        col = digits[k]
        gmul += ((col[:, None] + col[None, :]) % n).astype(np.int32) * n**k
        gdiv += ((col[:, None] - col[None, :]) % n).astype(np.int32) * n**k
    return gmul.reshape(-1), gdiv.reshape(-1)


def _delta_scan(q: int, n: int, r: int, delta: int, early_exit: bool) -> tuple[int, int]:
    field = small_field(q)
    gmul, gdiv = _group_tables(n, r)
    return kernels().delta_scan(
        q,
        n,
        r,
        delta,
        gmul,
        gdiv,
        field.mul_table,
        field.add_table,
        field.sub_table,
        field.inv_table,
        early_exit,
    )


def _f2cp_delta_holds(p: int, delta: int) -> bool:
    # GF(2)[C_p] delegates to the algebra module: gcd-based unit test,
    # convolution-based powers.
    modulus = (1 << p) | 1
    for bits in range(1 << p):
        if cyclotomic.poly_gcd(bits, modulus) != 1:
            continue
        if galgebra.power(galgebra.GroupAlgebraElement(p, bits), delta).bits != 1:
            return False
    return True


def is_delta_n_ring(q: int, group: tuple[int, int], delta: int, budget: int = DEFAULT_BUDGET) -> bool:
    """True iff every unit u of GF(q)[C_n^r] satisfies u**delta = 1,
    verified by exhaustive enumeration."""
    if delta < 1:
        raise ValueError("delta must be positive")
    if not is_prime_power(q):
        raise ValueError(f"{q} is not a prime power")
    n, r = _normalize_group(group)
    if n == 1:
        # k[trivial group] = k itself.
        return _field_violations(q, delta) == 0
    _check_budget(q, n, r, budget)
    if q == 2 and r == 1 and n != 2:
        numtheory.require_odd_prime(n)
        return _f2cp_delta_holds(n, delta)
    _, violations = _delta_scan(q, n, r, delta, early_exit=True)
    return violations == 0


def unit_census(q: int, group: tuple[int, int], delta: int, budget: int = DEFAULT_BUDGET) -> tuple[int, int]:
    """(unit count, count of units with u**delta != 1), full enumeration."""
    n, r = _normalize_group(group)
    if n == 1:
        return q - 1, _field_violations(q, delta)
    _check_budget(q, n, r, budget)
    return _delta_scan(q, n, r, delta, early_exit=False)


def _field_violations(q: int, delta: int) -> int:
    field = small_field(q)
    return sum(1 for u in range(1, q) if field.pow(u, delta) != 1)


def is_strict_delta_n(q: int, group: tuple[int, int], delta: int, budget: int = DEFAULT_BUDGET) -> bool:
    """True iff the delta-law holds and fails at every proper divisor."""
    if not is_delta_n_ring(q, group, delta, budget):
        return False
    for d in range(1, delta):
        if delta % d == 0 and is_delta_n_ring(q, group, d, budget):
            return False
    return True


def delta_field_classification(delta: int) -> list[int]:
    """Field sizes q <= 256 whose every unit satisfies u**delta = 1, for
    prime delta: GF(2) always; GF(3) for delta = 2; GF(delta+1) when
    delta + 1 is a power of two."""
    if not numtheory.is_prime(delta):
        raise ValueError("the classification statement is for prime delta")
    out = {2}
    if delta == 2:
        out.add(3)
    if (delta + 1) & delta == 0:
        out.add(delta + 1)
    return sorted(out)


def enumerate_delta_fields(delta: int, max_size: int = 256) -> list[int]:
    """Brute-force cross-check of delta_field_classification: walk every
    prime power q <= max_size and test all q - 1 units."""
    out = []
    for q in range(2, max_size + 1):
        if not is_prime_power(q):
            continue
        field = small_field(q)
        if all(field.pow(u, delta) == 1 for u in range(1, q)):
            out.append(q)
    return out


def frobenius_fixed_check(q: int, group: tuple[int, int], budget: int = DEFAULT_BUDGET) -> bool:
    """True iff every element t of GF(q)[C_n^r] satisfies t**(n+1) = t.

    This is the power identity behind the Mersenne delta-ring examples;
    it requires q = n + 1 (a power of two) or q = 2.
    """
    n, r = _normalize_group(group)
    if n == 1:
        raise ValueError("the identity is about nontrivial groups")
    if not (q == 2 or (q == n + 1 and (q & (q - 1)) == 0)):
        raise ValueError("defined for q = 2 or q = n + 1 a power of two")
    _check_budget(q, n, r, budget)
    field = small_field(q)
    gmul, _ = _group_tables(n, r)
    return bool(
        kernels().frobenius_scan(q, n, r, n + 1, gmul, field.mul_table, field.add_table)
    )


def units_by_product_search(q: int, group: tuple[int, int], budget: int = 1 << 12) -> list[int]:
    """Unit indices found by the O(size**2) search for a partner with
    product 1; tiny-budget cross-check for the regular-representation and
    gcd paths."""
    n, r = _normalize_group(group)
    size = _check_budget(q, n, r, budget)
    field = small_field(q)
    gmul, _ = _group_tables(n, r)
    N = n**r
    elements = [_element_digits(v, q, N) for v in range(size)]
    units = []
    identity = [0] * N
    identity[0] = 1
    for a_idx, a in enumerate(elements):
        for b in elements:
            if _convolve(a, b, N, gmul, field) == identity:
                units.append(a_idx)
                break
    return units


def _element_digits(value: int, q: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        out.append(value % q)
        value //= q
    return out


def _convolve(a: list[int], b: list[int], N: int, gmul: np.ndarray, field: SmallField) -> list[int]:
    out = [0] * N
    for i in range(N):
        if a[i]:
            for j in range(N):
                if b[j]:
                    idx = int(gmul[i * N + j])
                    out[idx] = field.add(out[idx], field.mul(a[i], b[j]))
    return out
