# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels.

Same surface as ``_purekernels``: unit scans over GF(2)[C_p], circulant
invertibility/order sweeps, permanent parity, and the small group-algebra
element loops.
"""

from libc.stdint cimport int32_t, int64_t, uint8_t, uint32_t, uint64_t


def unit_scan(int p, object flips, object offsets, object masks):
    """Gray-code residue walk over all 2**p coefficient patterns.

    Returns (number of units, number of non-units with odd coefficient
    sum)."""
    cdef uint64_t[64] flip_arr
    cdef uint64_t[64] mask_arr
    cdef int[64] off_arr
    cdef int nfac = len(offsets)
    cdef int i, j
    for i in range(p):
        flip_arr[i] = flips[i]
    for j in range(nfac):
        mask_arr[j] = masks[j]
        off_arr[j] = offsets[j]
    cdef uint64_t res = 0
    cdef uint64_t k, kk, total = (<uint64_t>1) << p
    cdef int64_t n_units = 0, n_eps1_nonunit = 0
    cdef int bit
    cdef bint unit
    for k in range(1, total):
        kk = k
        bit = 0
        while not (kk & 1):
            kk >>= 1
            bit += 1
        res ^= flip_arr[bit]
        unit = True
        for j in range(nfac):
            if not ((res >> off_arr[j]) & mask_arr[j]):
                unit = False
                break
        if unit:
            n_units += 1
        elif (res >> off_arr[0]) & mask_arr[0]:
            n_eps1_nonunit += 1
    return n_units, n_eps1_nonunit


cdef inline uint64_t _convmod(uint64_t a, uint64_t b, int p):
    # Cyclic convolution modulo x**p + 1 for p <= 31.
    cdef uint64_t acc = 0
    cdef int i
    for i in range(p):
        if (b >> i) & 1:
            acc ^= a << i
    return (acc & (((<uint64_t>1) << p) - 1)) ^ (acc >> p)


cdef inline uint64_t _pow_exp_p(uint64_t a, int p):
    cdef uint64_t result = 1, base = a
    cdef int e = p
    while e:
        if e & 1:
            result = _convmod(result, base, p)
        e >>= 1
        if e:
            base = _convmod(base, base, p)
    return result


def unit_order_scan(int p, object flips, object offsets, object masks):
    """unit_scan plus an order test per unit: does u**p equal 1?

    Returns (n_units, count of units of order exactly p, whether every
    unit other than 1 has order p)."""
    cdef uint64_t[64] flip_arr
    cdef uint64_t[64] mask_arr
    cdef int[64] off_arr
    cdef int nfac = len(offsets)
    cdef int i, j
    for i in range(p):
        flip_arr[i] = flips[i]
    for j in range(nfac):
        mask_arr[j] = masks[j]
        off_arr[j] = offsets[j]
    cdef uint64_t res = 0, cur = 0
    cdef uint64_t k, kk, total = (<uint64_t>1) << p
    cdef int64_t n_units = 0, n_order_p = 0
    cdef bint all_nontrivial = True, unit
    cdef int bit
    for k in range(1, total):
        kk = k
        bit = 0
        while not (kk & 1):
            kk >>= 1
            bit += 1
        res ^= flip_arr[bit]
        cur ^= (<uint64_t>1) << bit
        unit = True
        for j in range(nfac):
            if not ((res >> off_arr[j]) & mask_arr[j]):
                unit = False
                break
        if unit:
            n_units += 1
            if _pow_exp_p(cur, p) == 1:
                if cur != 1:
                    n_order_p += 1
            else:
                all_nontrivial = False
    return n_units, n_order_p, all_nontrivial


cdef inline void _circulant_rows(uint32_t c, int p, uint32_t* rows):
    cdef uint32_t w0 = c & 1
    cdef int j
    for j in range(1, p):
        w0 |= ((c >> (p - j)) & 1) << j
    cdef uint32_t mask = ((<uint32_t>1) << p) - 1
    rows[0] = w0
    cdef uint32_t w = w0
    for j in range(1, p):
        w = ((w << 1) | (w >> (p - 1))) & mask
        rows[j] = w


cdef inline bint _det_packed(uint32_t* rows, int n):
    cdef uint32_t[32] work
    cdef int i, col, r, rank = 0, pivot
    cdef uint32_t tmp
    for i in range(n):
        work[i] = rows[i]
    for col in range(n):
        pivot = -1
        for r in range(rank, n):
            if (work[r] >> col) & 1:
                pivot = r
                break
        if pivot < 0:
            return False
        tmp = work[rank]
        work[rank] = work[pivot]
        work[pivot] = tmp
        for r in range(n):
            if r != rank and ((work[r] >> col) & 1):
                work[r] ^= work[rank]
        rank += 1
    return True


cdef inline void _dense_matmul(uint32_t* a, uint32_t* b, uint32_t* out, int n):
    cdef int i, j
    cdef uint32_t acc, row
    for i in range(n):
        acc = 0
        row = a[i]
        for j in range(n):
            if (row >> j) & 1:
                acc ^= b[j]
        out[i] = acc
    return


cdef inline bint _dense_pow_is_identity(uint32_t* rows, int e, int n):
    cdef uint32_t[32] result
    cdef uint32_t[32] base
    cdef uint32_t[32] scratch
    cdef int i
    for i in range(n):
        result[i] = (<uint32_t>1) << i
        base[i] = rows[i]
    while e:
        if e & 1:
            _dense_matmul(result, base, scratch, n)
            for i in range(n):
                result[i] = scratch[i]
        e >>= 1
        if e:
            _dense_matmul(base, base, scratch, n)
            for i in range(n):
                base[i] = scratch[i]
    for i in range(n):
        if result[i] != (<uint32_t>1) << i:
            return False
    return True


def circulant_scan_flags(int p):
    """Per-column flags over all 2**p circulants: (invertible, A**p == I)."""
    cdef uint32_t total = (<uint32_t>1) << p
    invertible = bytearray(total)
    pow_identity = bytearray(total)
    cdef uint8_t[::1] inv_mv = invertible
    cdef uint8_t[::1] pow_mv = pow_identity
    cdef uint32_t[32] rows
    cdef uint32_t c
    for c in range(total):
        _circulant_rows(c, p, rows)
        if _det_packed(rows, p):
            inv_mv[c] = 1
            if _dense_pow_is_identity(rows, p, p):
                pow_mv[c] = 1
    return bytes(invertible), bytes(pow_identity)


cdef inline int _ryser_parity(uint32_t* rows, int n):
    # Permanent mod 2: parity of the count of column subsets meeting
    # every row an odd number of times.
    cdef uint32_t subset, total = (<uint32_t>1) << n
    cdef int64_t hits = 0
    cdef int i
    cdef uint32_t v
    cdef bint all_odd
    for subset in range(1, total):
        all_odd = True
        for i in range(n):
            v = rows[i] & subset
            v ^= v >> 16
            v ^= v >> 8
            v ^= v >> 4
            v ^= v >> 2
            v ^= v >> 1
            if not (v & 1):
                all_odd = False
                break
        if all_odd:
            hits += 1
    return <int>(hits & 1)


def matching_parity_flags(int p):
    """Permanent parity (Ryser) of every circulant, as 2**p flag bytes."""
    cdef uint32_t total = (<uint32_t>1) << p
    out = bytearray(total)
    cdef uint8_t[::1] out_mv = out
    cdef uint32_t[32] rows
    cdef uint32_t c
    for c in range(total):
        _circulant_rows(c, p, rows)
        out_mv[c] = _ryser_parity(rows, p)
    return bytes(out)


def ryser_parity(object rows_obj, int n):
    """Permanent mod 2 of a packed-row 0/1 matrix, n <= 31."""
    cdef uint32_t[32] rows
    cdef int i
    for i in range(n):
        rows[i] = rows_obj[i]
    return _ryser_parity(rows, n)


cdef int64_t _permsum(uint32_t* rows, int i, uint32_t used, int n):
    if i == n:
        return 1
    cdef int64_t total = 0
    cdef uint32_t avail = rows[i] & ~used
    cdef uint32_t low
    while avail:
        low = avail & (0 - avail)
        total += _permsum(rows, i + 1, used | low, n)
        avail ^= low
    return total


def permanent_permsum(object rows_obj, int n):
    """Permanent as the literal sum over all n! permutations (pruned at
    zero entries)."""
    if n == 0:
        return 1
    cdef uint32_t[32] rows
    cdef int i
    for i in range(n):
        rows[i] = rows_obj[i]
    return _permsum(rows, 0, 0, n)


# ---------------------------------------------------------------------------
# Small group-algebra scans over k[C_n^r]


cdef inline bint _is_invertible_rep(uint8_t* m, int N, uint8_t* fmul,
                                    uint8_t* fsub, uint8_t* finv, int q):
    cdef int col, row, j, pivot
    cdef uint8_t inv_p, factor, tmp
    for col in range(N):
        pivot = -1
        for row in range(col, N):
            if m[row * N + col]:
                pivot = row
                break
        if pivot < 0:
            return False
        if pivot != col:
            for j in range(N):
                tmp = m[col * N + j]
                m[col * N + j] = m[pivot * N + j]
                m[pivot * N + j] = tmp
        inv_p = finv[m[col * N + col]]
        for row in range(col + 1, N):
            factor = fmul[m[row * N + col] * q + inv_p]
            if factor:
                for j in range(col, N):
                    m[row * N + j] = fsub[m[row * N + j] * q + fmul[factor * q + m[col * N + j]]]
    return True


cdef inline void _conv_rep(uint8_t* a, uint8_t* b, uint8_t* out, int N,
                           int32_t* gmul, uint8_t* fmul, uint8_t* fadd, int q):
    cdef int i, j, idx
    cdef uint8_t ai
    for i in range(N):
        out[i] = 0
    for i in range(N):
        ai = a[i]
        if ai:
            for j in range(N):
                if b[j]:
                    idx = gmul[i * N + j]
                    out[idx] = fadd[out[idx] * q + fmul[ai * q + b[j]]]
    return


cdef inline bint _pow_is_identity_rep(uint8_t* t, int e, int N, int32_t* gmul,
                                      uint8_t* fmul, uint8_t* fadd, int q):
    cdef uint8_t[32] result
    cdef uint8_t[32] base
    cdef uint8_t[32] scratch
    cdef int i
    for i in range(N):
        result[i] = 0
        base[i] = t[i]
    result[0] = 1
    while e:
        if e & 1:
            _conv_rep(result, base, scratch, N, gmul, fmul, fadd, q)
            for i in range(N):
                result[i] = scratch[i]
        e >>= 1
        if e:
            _conv_rep(base, base, scratch, N, gmul, fmul, fadd, q)
            for i in range(N):
                base[i] = scratch[i]
    if result[0] != 1:
        return False
    for i in range(1, N):
        if result[i]:
            return False
    return True


def delta_scan(int q, int n, int r, int delta,
               int32_t[::1] gmul, int32_t[::1] gdiv,
               uint8_t[:, ::1] fmul, uint8_t[:, ::1] fadd,
               uint8_t[:, ::1] fsub, uint8_t[::1] finv,
               bint early_exit=True):
    """Walk all q**(n**r) elements; units via Gaussian elimination on the
    regular representation, then a delta-th power check per unit.

    Returns (unit count, count of units with u**delta != 1); with
    early_exit the walk stops at the first violation."""
    cdef int N = n ** r
    cdef int64_t size = q ** N
    cdef uint8_t[32] t
    cdef uint8_t[1024] rep
    cdef int32_t* gmul_p = &gmul[0]
    cdef int32_t* gdiv_p = &gdiv[0]
    cdef uint8_t* fmul_p = &fmul[0, 0]
    cdef uint8_t* fadd_p = &fadd[0, 0]
    cdef uint8_t* fsub_p = &fsub[0, 0]
    cdef uint8_t* finv_p = &finv[0]
    cdef int64_t n_units = 0, n_violations = 0
    cdef int64_t step
    cdef int i, j, k
    for i in range(N):
        t[i] = 0
    for step in range(size):
        for i in range(N):
            for j in range(N):
                rep[i * N + j] = t[gdiv_p[i * N + j]]
        if _is_invertible_rep(rep, N, fmul_p, fsub_p, finv_p, q):
            n_units += 1
            if not _pow_is_identity_rep(t, delta, N, gmul_p, fmul_p, fadd_p, q):
                n_violations += 1
                if early_exit:
                    return n_units, n_violations
        # odometer increment; carry test precedes the += so q = 256 cannot
        # wrap the uint8 digit
        k = 0
        while k < N:
            if t[k] == q - 1:
                t[k] = 0
                k += 1
            else:
                t[k] += 1
                break
    return n_units, n_violations


def frobenius_scan(int q, int n, int r, int exponent,
                   int32_t[::1] gmul, uint8_t[:, ::1] fmul, uint8_t[:, ::1] fadd):
    """True iff t**exponent == t for every element of k[C_n^r]."""
    cdef int N = n ** r
    cdef int64_t size = q ** N
    cdef uint8_t[32] t
    cdef uint8_t[32] result
    cdef uint8_t[32] base
    cdef uint8_t[32] scratch
    cdef int32_t* gmul_p = &gmul[0]
    cdef uint8_t* fmul_p = &fmul[0, 0]
    cdef uint8_t* fadd_p = &fadd[0, 0]
    cdef int64_t step
    cdef int i, k, e
    cdef bint same
    for i in range(N):
        t[i] = 0
    for step in range(size):
        e = exponent
        for i in range(N):
            result[i] = 0
            base[i] = t[i]
        result[0] = 1
        while e:
            if e & 1:
                _conv_rep(result, base, scratch, N, gmul_p, fmul_p, fadd_p, q)
                for i in range(N):
                    result[i] = scratch[i]
            e >>= 1
            if e:
                _conv_rep(base, base, scratch, N, gmul_p, fmul_p, fadd_p, q)
                for i in range(N):
                    base[i] = scratch[i]
        same = True
        for i in range(N):
            if result[i] != t[i]:
                same = False
                break
        if not same:
            return False
        k = 0
        while k < N:
            if t[k] == q - 1:
                t[k] = 0
                k += 1
            else:
                t[k] += 1
                break
    return True
