"""Pure-Python kernel fallbacks, numpy-vectorized where the element count
makes it worthwhile.

Function signatures mirror the compiled module ``_speedups`` exactly; the
backend selector treats the two as interchangeable.
"""

from __future__ import annotations

import itertools

import numpy as np

from ._gf2 import circulant_rows, det_packed, identity_rows, matpow_packed

_VECTOR_THRESHOLD = 4096


def _convmod(a: int, b: int, p: int) -> int:
    # Cyclic convolution of two p-bit polynomials modulo x**p + 1.
    acc = 0
    while b:
        low = b & -b
        acc ^= a << (low.bit_length() - 1)
        b ^= low
    return (acc & ((1 << p) - 1)) ^ (acc >> p)


def _pow_exp_p(a: int, p: int) -> int:
    result = 1
    base = a
    e = p
    while e:
        if e & 1:
            result = _convmod(result, base, p)
        e >>= 1
        if e:
            base = _convmod(base, base, p)
    return result


def unit_scan(p, flips, offsets, masks):
    """Residue walk over all 2**p coefficient patterns.

    Returns (number of units, number of non-units with odd coefficient
    sum).  Residues of every pattern against each factor of x**p + 1 are
    linear, so they split into a low-bits table and a high-bits table
    combined by XOR.
    """
    flips = [int(f) for f in flips]
    h = min(p, 16)
    lo = np.zeros(1, dtype=np.uint64)
    for i in range(h):
        lo = np.concatenate([lo, lo ^ np.uint64(flips[i])])
    hi = np.zeros(1, dtype=np.uint64)
    for i in range(h, p):
        hi = np.concatenate([hi, hi ^ np.uint64(flips[i])])
    n_units = 0
    n_eps1_nonunit = 0
    eps_off = np.uint64(offsets[0])
    eps_mask = np.uint64(masks[0])
    for base in hi:
        words = base ^ lo
        unit = np.ones(words.shape, dtype=bool)
        for off, mask in zip(offsets, masks):
            unit &= (words >> np.uint64(off)) & np.uint64(mask) != 0
        eps1 = (words >> eps_off) & eps_mask != 0
        n_units += int(np.count_nonzero(unit))
        n_eps1_nonunit += int(np.count_nonzero(eps1 & ~unit))
    return n_units, n_eps1_nonunit


def unit_order_scan(p, flips, offsets, masks):
    """unit_scan plus an order test per unit: does u**p equal 1?

    Returns (n_units, count of units of order exactly p, whether every
    unit other than 1 has order p).
    """
    flips = [int(f) for f in flips]
    pairs = list(zip(offsets, masks))
    res = 0
    cur = 0
    n_units = 0
    n_order_p = 0
    all_nontrivial = True
    for k in range(1, 1 << p):
        bit = (k & -k).bit_length() - 1
        res ^= flips[bit]
        cur ^= 1 << bit
        if all((res >> off) & mask for off, mask in pairs):
            n_units += 1
            if _pow_exp_p(cur, p) == 1:
                if cur != 1:
                    n_order_p += 1
            else:
                all_nontrivial = False
    return n_units, n_order_p, all_nontrivial


def circulant_scan_flags(p):
    """Per-column flags over all 2**p circulants: (invertible, A**p == I).

    Invertibility comes from dense Gaussian elimination; the order flag
    from dense repeated squaring.  Both bytes objects have length 2**p.
    """
    total = 1 << p
    invertible = bytearray(total)
    pow_identity = bytearray(total)
    id_rows = identity_rows(p)
    for c in range(total):
        rows = circulant_rows(c, p)
        if det_packed(rows, p):
            invertible[c] = 1
            if matpow_packed(rows, p, p) == id_rows:
                pow_identity[c] = 1
    return bytes(invertible), bytes(pow_identity)


def matching_parity_flags(p):
    """Permanent parity (Ryser) of every circulant, as 2**p flag bytes."""
    total = 1 << p
    subsets = np.arange(total, dtype=np.uint32)
    out = bytearray(total)
    for c in range(total):
        rows = circulant_rows(c, p)
        good = np.ones(total, dtype=bool)
        for w in rows:
            good &= (np.bitwise_count(subsets & np.uint32(w)) & 1).astype(bool)
            if not good.any():
                break
        out[c] = int(np.count_nonzero(good)) & 1
    return bytes(out)


def ryser_parity(rows, n):
    """Permanent mod 2 by Ryser's formula: the parity of the number of
    column subsets meeting every row an odd number of times."""
    subsets = np.arange(1 << n, dtype=np.uint32)
    good = np.ones(1 << n, dtype=bool)
    for w in rows:
        good &= (np.bitwise_count(subsets & np.uint32(w)) & 1).astype(bool)
        if not good.any():
            return 0
    return int(np.count_nonzero(good)) & 1


_PERMS_CACHE: dict[int, np.ndarray] = {}


def permanent_permsum(rows, n):
    """Permanent as the literal sum over all n! permutations."""
    if n == 0:
        return 1
    if n <= 9:
        perms = _PERMS_CACHE.get(n)
        if perms is None:
            perms = np.array(list(itertools.permutations(range(n))), dtype=np.int8)
            _PERMS_CACHE[n] = perms
        bits = np.array([[row >> j & 1 for j in range(n)] for row in rows], dtype=bool)
        acc = np.ones(len(perms), dtype=bool)
        for i in range(n):
            acc &= bits[i][perms[:, i]]
            if not acc.any():
                return 0
        return int(np.count_nonzero(acc))
    return _permsum_recursive(list(rows), 0, 0, n)


def _permsum_recursive(rows, i, used, n):
    if i == n:
        return 1
    total = 0
    avail = rows[i] & ~used
    while avail:
        low = avail & -avail
        total += _permsum_recursive(rows, i + 1, used | low, n)
        avail ^= low
    return total


# ---------------------------------------------------------------------------
# Small group-algebra scans over k[C_n^r]


def _digits(value: int, base: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        out.append(value % base)
        value //= base
    return out


def _order_n_element(q, n, fmul):
    # An element of multiplicative order exactly n in GF(q); requires n | q-1.
    for candidate in range(2, q):
        power = candidate
        order = 1
        while power != 1:
            power = fmul[power][candidate]
            order += 1
            if order > n:
                break
        if order == n:
            return candidate
    raise ValueError(f"no element of order {n} in a field of size {q}")


def delta_scan(q, n, r, delta, gmul, gdiv, fmul, fadd, fsub, finv, early_exit=True):
    """Enumerate all q**(n**r) elements of k[C_n^r]; return (unit count,
    count of units whose delta-th power is not 1).

    Large semisimple cases (n dividing q-1) go through vectorized
    character evaluation, which diagonalizes the regular representation;
    everything else walks elements one by one with Gaussian elimination
    on the regular representation.
    """
    size = q ** (n**r)
    if (q - 1) % n == 0 and size >= _VECTOR_THRESHOLD:
        return _delta_scan_vectorized(q, n, r, delta, gmul, fmul, fadd)
    return _delta_scan_loop(q, n, r, delta, gmul, gdiv, fmul, fadd, fsub, finv, early_exit)


def frobenius_scan(q, n, r, exponent, gmul, fmul, fadd):
    """True iff t**exponent == t for every element of k[C_n^r]."""
    size = q ** (n**r)
    if size >= _VECTOR_THRESHOLD:
        arr = _all_elements(q, n**r, size)
        powered = _pow_vec(arr, exponent, n**r, q, np.asarray(gmul), _flat(fmul, q), _flat(fadd, q))
        return bool((powered == arr).all())
    N = n**r
    fmul_l = _table_lists(fmul)
    fadd_l = _table_lists(fadd)
    gmul_l = list(gmul)
    for value in range(size):
        t = _digits(value, q, N)
        if _pow_tab(t, exponent, N, gmul_l, fmul_l, fadd_l) != t:
            return False
    return True


def _table_lists(table):
    return table.tolist() if hasattr(table, "tolist") else [list(row) for row in table]


def _flat(table, q):
    arr = np.asarray(table, dtype=np.uint8)
    return arr.reshape(q * q)


def _all_elements(q, N, size):
    idx = np.arange(size, dtype=np.int64)
    arr = np.empty((size, N), dtype=np.uint8)
    for k in range(N):
        arr[:, k] = (idx // q**k) % q
    return arr


def _conv_vec(a, b, N, q, gmul, fmul_flat, fadd_flat):
    out = np.zeros(a.shape, dtype=np.uint8)
    for i in range(N):
        ai = a[:, i].astype(np.int32) * q
        for j in range(N):
            product = fmul_flat[ai + b[:, j]]
            idx = int(gmul[i * N + j])
            out[:, idx] = fadd_flat[out[:, idx].astype(np.int32) * q + product]
    return out


def _pow_vec(a, e, N, q, gmul, fmul_flat, fadd_flat):
    result = np.zeros(a.shape, dtype=np.uint8)
    result[:, 0] = 1
    base = a
    while e:
        if e & 1:
            result = _conv_vec(result, base, N, q, gmul, fmul_flat, fadd_flat)
        e >>= 1
        if e:
            base = _conv_vec(base, base, N, q, gmul, fmul_flat, fadd_flat)
    return result


def _delta_scan_vectorized(q, n, r, delta, gmul, fmul, fadd):
    N = n**r
    size = q**N
    gmul = np.asarray(gmul)
    fmul_flat = _flat(fmul, q)
    fadd_flat = _flat(fadd, q)
    fmul_l = _table_lists(fmul)
    arr = _all_elements(q, N, size)

    omega = _order_n_element(q, n, fmul_l)
    omega_pow = [1]
    for _ in range(n - 1):
        omega_pow.append(fmul_l[omega_pow[-1]][omega])
    group_digits = [_digits(g, n, r) for g in range(N)]

    unit = np.ones(size, dtype=bool)
    for char_index in range(N):
        chi_digits = _digits(char_index, n, r)
        values = np.zeros(size, dtype=np.uint8)
        for g in range(N):
            chi_g = omega_pow[sum(c * d for c, d in zip(chi_digits, group_digits[g])) % n]
            term = fmul_flat[arr[:, g].astype(np.int32) * q + chi_g]
            values = fadd_flat[values.astype(np.int32) * q + term]
        unit &= values != 0
    n_units = int(np.count_nonzero(unit))

    units = arr[unit]
    powered = _pow_vec(units, delta, N, q, gmul, fmul_flat, fadd_flat)
    violating = (powered[:, 0] != 1) | (powered[:, 1:] != 0).any(axis=1)
    return n_units, int(np.count_nonzero(violating))


def _regular_rep(t, N, gdiv):
    return [t[gdiv[i * N + j]] for i in range(N) for j in range(N)]


def _is_invertible_tab(m, N, fmul, fsub, finv):
    work = list(m)
    for col in range(N):
        pivot = -1
        for row in range(col, N):
            if work[row * N + col]:
                pivot = row
                break
        if pivot < 0:
            return False
        if pivot != col:
            for j in range(N):
                work[col * N + j], work[pivot * N + j] = work[pivot * N + j], work[col * N + j]
        inv_p = finv[work[col * N + col]]
        for row in range(col + 1, N):
            factor = fmul[work[row * N + col]][inv_p]
            if factor:
                for j in range(col, N):
                    work[row * N + j] = fsub[work[row * N + j]][fmul[factor][work[col * N + j]]]
    return True


def _conv_tab(a, b, N, gmul, fmul, fadd):
    out = [0] * N
    for i in range(N):
        ai = a[i]
        if ai:
            row = fmul[ai]
            base = i * N
            for j in range(N):
                bj = b[j]
                if bj:
                    idx = gmul[base + j]
                    out[idx] = fadd[out[idx]][row[bj]]
    return out


def _pow_tab(a, e, N, gmul, fmul, fadd):
    result = [0] * N
    result[0] = 1
    base = list(a)
    while e:
        if e & 1:
            result = _conv_tab(result, base, N, gmul, fmul, fadd)
        e >>= 1
        if e:
            base = _conv_tab(base, base, N, gmul, fmul, fadd)
    return result


def _delta_scan_loop(q, n, r, delta, gmul, gdiv, fmul, fadd, fsub, finv, early_exit):
    N = n**r
    size = q**N
    gmul_l = list(gmul)
    gdiv_l = list(gdiv)
    fmul_l = _table_lists(fmul)
    fadd_l = _table_lists(fadd)
    fsub_l = _table_lists(fsub)
    finv_l = list(finv)
    identity = [0] * N
    identity[0] = 1
    n_units = 0
    n_violations = 0
    for value in range(size):
        t = _digits(value, q, N)
        if not _is_invertible_tab(_regular_rep(t, N, gdiv_l), N, fmul_l, fsub_l, finv_l):
            continue
        n_units += 1
        if _pow_tab(t, delta, N, gmul_l, fmul_l, fadd_l) != identity:
            n_violations += 1
            if early_exit:
                return n_units, n_violations
    return n_units, n_violations
