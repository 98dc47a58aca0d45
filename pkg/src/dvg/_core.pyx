# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled matrix kernels over a truncated Witt ring.

Mirror of `dvg._kernel_py` for rings whose modulus fits comfortably in a
machine word (modulus < 2^31, so products never overflow int64) and whose
residue degree is at most 8.  Elements are length-m int64 coefficient
vectors; matrices are C-contiguous (r, r, m) arrays.  See `dvg.kernel` for
the dispatch logic and the exact eligibility rules.

The algorithms match the pure versions line for line: Berkowitz for the
characteristic polynomial, minimum-valuation pivoting for Smith valuations,
Fermat inversion in the residue field followed by Newton lifting for unit
inverses.
"""

import numpy as np


cdef inline void elem_mul(long long* out, const long long* a, const long long* b,
                          const long long[:, ::1] xred, long long modulus, int m) noexcept:
    """out = a * b in (Z/modulus)[x]/(f), using the x^(m+k) reduction table."""
    cdef long long conv[15]
    cdef int i, j, k
    cdef long long ai, ck
    for k in range(2 * m - 1):
        conv[k] = 0
    for i in range(m):
        ai = a[i]
        if ai != 0:
            for j in range(m):
                conv[i + j] = (conv[i + j] + ai * b[j]) % modulus
    for i in range(m):
        out[i] = conv[i]
    for k in range(m, 2 * m - 1):
        ck = conv[k]
        if ck != 0:
            for i in range(m):
                out[i] = (out[i] + ck * xred[k - m, i]) % modulus


cdef inline void elem_addmul(long long* acc, const long long* a, const long long* b,
                             const long long[:, ::1] xred, long long modulus, int m) noexcept:
    """acc += a * b."""
    cdef long long tmp[8]
    cdef int i
    elem_mul(tmp, a, b, xred, modulus, m)
    for i in range(m):
        acc[i] = (acc[i] + tmp[i]) % modulus


cdef inline void elem_submul(long long* acc, const long long* a, const long long* b,
                             const long long[:, ::1] xred, long long modulus, int m) noexcept:
    """acc -= a * b."""
    cdef long long tmp[8]
    cdef int i
    cdef long long t
    elem_mul(tmp, a, b, xred, modulus, m)
    for i in range(m):
        t = (acc[i] - tmp[i]) % modulus
        if t < 0:
            t += modulus
        acc[i] = t


cdef inline int elem_valuation(const long long* a, long long p, int precision, int m) noexcept:
    cdef int best = precision
    cdef int i, v
    cdef long long c
    for i in range(m):
        c = a[i]
        if c != 0:
            v = 0
            while v < best and c % p == 0:
                c = c // p
                v += 1
            if v < best:
                best = v
            if best == 0:
                return 0
    return best


cdef int elem_inverse(long long* out, const long long* a, const long long[:, ::1] xred,
                      const long long[::1] fbar, long long modulus, long long p,
                      int precision, int m) noexcept:
    """out = a^(-1) mod p^N for a unit a.  Returns -1 if a is not a unit.

    Residue-field inverse by Fermat (u^(q-2) in GF(q)), then Newton rounds
    b <- b * (2 - a*b), each doubling the correct precision.
    """
    cdef long long base[8]
    cdef long long res[8]
    cdef long long conv[15]
    cdef long long b[8]
    cdef long long t[8]
    cdef int i, j, k, prec
    cdef long long e, ck, lead
    cdef bint nonzero = False

    for i in range(m):
        base[i] = a[i] % p
        if base[i] != 0:
            nonzero = True
    if not nonzero:
        return -1

    # res = base^(q-2) mod (fbar, p), q = p^m
    for i in range(m):
        res[i] = 1 if i == 0 else 0
    e = 1
    for i in range(m):
        e *= p
    e -= 2
    while e > 0:
        if e & 1:
            _fq_mul(res, res, base, fbar, p, m, conv)
        _fq_mul(base, base, base, fbar, p, m, conv)
        e >>= 1

    for i in range(m):
        b[i] = res[i]
    prec = 1
    while prec < precision:
        # t = 2 - a*b
        elem_mul(t, a, b, xred, modulus, m)
        for i in range(m):
            ck = (-t[i]) % modulus
            if ck < 0:
                ck += modulus
            t[i] = ck
        t[0] = (t[0] + 2) % modulus
        elem_mul(b, b, t, xred, modulus, m)
        prec *= 2
    for i in range(m):
        out[i] = b[i]
    return 0


cdef inline void _fq_mul(long long* out, const long long* a, const long long* b,
                         const long long[::1] fbar, long long p, int m,
                         long long* conv) noexcept:
    """out = a*b in GF(p)[x]/(fbar), fbar monic of degree m."""
    cdef int i, j, k
    cdef long long c
    for k in range(2 * m - 1):
        conv[k] = 0
    for i in range(m):
        if a[i] != 0:
            for j in range(m):
                conv[i + j] = (conv[i + j] + a[i] * b[j]) % p
    for k in range(2 * m - 2, m - 1, -1):
        c = conv[k]
        if c != 0:
            conv[k] = 0
            for i in range(m):
                conv[k - m + i] = (conv[k - m + i] - c * fbar[i]) % p
                if conv[k - m + i] < 0:
                    conv[k - m + i] += p
    for i in range(m):
        out[i] = conv[i]


def mat_mul(long long[:, :, ::1] a, long long[:, :, ::1] b,
            long long[:, ::1] xred, long long modulus):
    cdef int r = a.shape[0]
    cdef int m = a.shape[2]
    out_arr = np.zeros((r, r, m), dtype=np.int64)
    cdef long long[:, :, ::1] out = out_arr
    cdef int i, j, k
    for i in range(r):
        for j in range(r):
            for k in range(r):
                elem_addmul(&out[i, j, 0], &a[i, k, 0], &b[k, j, 0], xred, modulus, m)
    return out_arr


def mat_sigma(long long[:, :, ::1] a, long long[:, ::1] sig, long long modulus):
    """Apply the linear map `sig` (a power of sigma in the power basis) entrywise."""
    cdef int r = a.shape[0]
    cdef int m = a.shape[2]
    out_arr = np.zeros((r, r, m), dtype=np.int64)
    cdef long long[:, :, ::1] out = out_arr
    cdef int i, j, t, u
    cdef long long acc
    for i in range(r):
        for j in range(r):
            for t in range(m):
                acc = 0
                for u in range(m):
                    if a[i, j, u] != 0:
                        acc = (acc + sig[t, u] * a[i, j, u]) % modulus
                out[i, j, t] = acc
    return out_arr


def phi_power(long long[:, :, ::1] a, int n, long long[:, :, ::1] sigmas,
              long long[:, ::1] xred, long long modulus):
    cdef int deg = sigmas.shape[0]
    out = np.array(a, dtype=np.int64)
    cdef int k
    for k in range(1, n):
        twisted = mat_sigma(a, sigmas[k % deg], modulus)
        out = mat_mul(out, twisted, xred, modulus)
    return out


def charpoly(long long[:, :, ::1] a, long long[:, ::1] xred, long long modulus):
    """Berkowitz characteristic polynomial; (r+1, m) coefficients, monic first."""
    cdef int r = a.shape[0]
    cdef int m = a.shape[2]
    coeffs_arr = np.zeros((r + 1, m), dtype=np.int64)
    toep_arr = np.zeros((r + 2, m), dtype=np.int64)
    new_arr = np.zeros((r + 1, m), dtype=np.int64)
    w_arr = np.zeros((r, m), dtype=np.int64)
    wn_arr = np.zeros((r, m), dtype=np.int64)
    cdef long long[:, ::1] coeffs = coeffs_arr
    cdef long long[:, ::1] toep = toep_arr
    cdef long long[:, ::1] new = new_arr
    cdef long long[:, ::1] w = w_arr
    cdef long long[:, ::1] wn = wn_arr
    cdef int k, i, j, t, jlo, jhi, clen
    cdef long long v

    coeffs[0, 0] = 1 % modulus
    clen = 1
    for k in range(1, r + 1):
        # toeplitz column: (1, -d, -R.S, -R.M.S, ..., -R.M^(k-2).S)
        for i in range(k + 1):
            for t in range(m):
                toep[i, t] = 0
        toep[0, 0] = 1 % modulus
        for t in range(m):
            v = (-a[k - 1, k - 1, t]) % modulus
            if v < 0:
                v += modulus
            toep[1, t] = v
        if k > 1:
            for i in range(k - 1):
                for t in range(m):
                    w[i, t] = a[i, k - 1, t]
            for i in range(2, k + 1):
                # toep[i] = -row . w, row = a[k-1, 0:k-1]
                for t in range(m):
                    toep[i, t] = 0
                for j in range(k - 1):
                    elem_submul(&toep[i, 0], &a[k - 1, j, 0], &w[j, 0], xred, modulus, m)
                if i < k:
                    # w <- M.w, M = a[0:k-1, 0:k-1]
                    for j in range(k - 1):
                        for t in range(m):
                            wn[j, t] = 0
                        for t in range(k - 1):
                            elem_addmul(&wn[j, 0], &a[j, t, 0], &w[t, 0], xred, modulus, m)
                    for j in range(k - 1):
                        for t in range(m):
                            w[j, t] = wn[j, t]
        for i in range(k + 1):
            for t in range(m):
                new[i, t] = 0
            jlo = i - k if i - k > 0 else 0
            jhi = i if i < clen - 1 else clen - 1
            for j in range(jlo, jhi + 1):
                elem_addmul(&new[i, 0], &toep[i - j, 0], &coeffs[j, 0], xred, modulus, m)
        clen = k + 1
        for i in range(clen):
            for t in range(m):
                coeffs[i, t] = new[i, t]
    return coeffs_arr


def smith_valuations(long long[:, :, ::1] a, long long[:, ::1] xred,
                     const long long[::1] fbar, long long modulus, long long p,
                     int precision):
    """Valuations of the Smith normal form diagonal, nondecreasing."""
    cdef int r = a.shape[0]
    cdef int m = a.shape[2]
    work_arr = np.array(a, dtype=np.int64)
    cdef long long[:, :, ::1] work = work_arr
    vals_arr = np.zeros(r, dtype=np.int64)
    cdef long long[::1] vals = vals_arr
    cdef long long unit[8]
    cdef long long inv_u[8]
    cdef long long q[8]
    cdef long long pe
    cdef int step, i, j, t, v, piv_v, piv_i, piv_j, floor_v
    cdef long long tmp

    floor_v = 0
    for step in range(r):
        piv_v = precision
        piv_i = -1
        piv_j = -1
        for i in range(step, r):
            for j in range(step, r):
                v = elem_valuation(&work[i, j, 0], p, precision, m)
                if v < piv_v:
                    piv_v = v
                    piv_i = i
                    piv_j = j
                    if v == floor_v:
                        break
            if piv_v == floor_v and piv_i >= 0:
                break
        if piv_i < 0:
            for i in range(step, r):
                vals[i] = precision
            return vals_arr
        if piv_i != step:
            for j in range(r):
                for t in range(m):
                    tmp = work[step, j, t]
                    work[step, j, t] = work[piv_i, j, t]
                    work[piv_i, j, t] = tmp
        if piv_j != step:
            for i in range(r):
                for t in range(m):
                    tmp = work[i, step, t]
                    work[i, step, t] = work[i, piv_j, t]
                    work[i, piv_j, t] = tmp
        pe = 1
        for t in range(piv_v):
            pe *= p
        for t in range(m):
            unit[t] = work[step, step, t] // pe
        if elem_inverse(inv_u, unit, xred, fbar, modulus, p, precision, m) != 0:
            # cannot happen: unit has valuation 0 by construction
            for i in range(step, r):
                vals[i] = precision
            return vals_arr
        for i in range(step + 1, r):
            if elem_valuation(&work[i, step, 0], p, precision, m) >= precision:
                continue
            for t in range(m):
                q[t] = work[i, step, t] // pe
            elem_mul(q, q, inv_u, xred, modulus, m)
            for j in range(step, r):
                elem_submul(&work[i, j, 0], &q[0], &work[step, j, 0], xred, modulus, m)
        vals[step] = piv_v
        floor_v = piv_v
    return vals_arr
