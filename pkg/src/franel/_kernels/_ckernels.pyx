# cython: language_level=3, boundscheck=False, wraparound=False
"""GMP-backed kernels. Same signatures and results as ``_pykernels``."""

from libc.stdlib cimport malloc, free


cdef extern from "gmp.h":
    ctypedef struct __mpz_struct:
        pass
    ctypedef __mpz_struct mpz_t[1]
    ctypedef __mpz_struct *mpz_ptr

    void mpz_init(mpz_ptr)
    void mpz_clear(mpz_ptr)
    void mpz_set(mpz_ptr, mpz_ptr)
    void mpz_set_ui(mpz_ptr, unsigned long)
    void mpz_set_si(mpz_ptr, long)
    void mpz_add(mpz_ptr, mpz_ptr, mpz_ptr)
    void mpz_sub(mpz_ptr, mpz_ptr, mpz_ptr)
    void mpz_mul(mpz_ptr, mpz_ptr, mpz_ptr)
    void mpz_neg(mpz_ptr, mpz_ptr)
    void mpz_addmul(mpz_ptr, mpz_ptr, mpz_ptr)
    void mpz_submul(mpz_ptr, mpz_ptr, mpz_ptr)
    void mpz_fdiv_q(mpz_ptr, mpz_ptr, mpz_ptr)
    int mpz_sgn(mpz_ptr)
    size_t mpz_sizeinbase(mpz_ptr, int)
    void mpz_import(mpz_ptr, size_t, int, size_t, int, size_t, const void *)
    void *mpz_export(void *, size_t *, int, size_t, int, size_t, mpz_ptr)


cdef void _to_mpz(mpz_ptr z, object x):
    cdef bint neg = x < 0
    if neg:
        x = -x
    cdef Py_ssize_t nbytes = (x.bit_length() + 7) // 8
    if nbytes == 0:
        mpz_set_ui(z, 0)
        return
    cdef bytes raw = x.to_bytes(nbytes, "little")
    mpz_import(z, nbytes, -1, 1, 0, 0, <const char *>raw)
    if neg:
        mpz_neg(z, z)


cdef object _to_int(mpz_ptr z):
    cdef int sign = mpz_sgn(z)
    if sign == 0:
        return 0
    cdef size_t size = (mpz_sizeinbase(z, 2) + 7) // 8
    cdef size_t count = 0
    cdef char *buf = <char *>malloc(size)
    if buf == NULL:
        raise MemoryError()
    try:
        mpz_export(buf, &count, -1, 1, 0, 0, z)
        value = int.from_bytes(buf[:count], "little")
    finally:
        free(buf)
    return -value if sign < 0 else value


cdef class _MpzArray:
    cdef mpz_ptr data
    cdef Py_ssize_t n

    def __cinit__(self, Py_ssize_t n):
        self.n = n
        self.data = <mpz_ptr>malloc(max(n, 1) * sizeof(__mpz_struct))
        if self.data == NULL:
            raise MemoryError()
        cdef Py_ssize_t i
        for i in range(n):
            mpz_init(&self.data[i])

    def __dealloc__(self):
        cdef Py_ssize_t i
        if self.data != NULL:
            for i in range(self.n):
                mpz_clear(&self.data[i])
            free(self.data)

    cdef void zero(self):
        cdef Py_ssize_t i
        for i in range(self.n):
            mpz_set_ui(&self.data[i], 0)


def cell_sum(coeffs, multipliers, breakpoints, scale, weights):
    cdef Py_ssize_t k = len(coeffs) - 1
    cdef Py_ssize_t m = len(multipliers)
    cdef Py_ssize_t deg = m * k
    cdef Py_ssize_t ncells = len(breakpoints) - 1
    cdef Py_ssize_t c, f, i, j, flen, plen

    L = scale
    cdef _MpzArray scaled = _MpzArray(k + 1)
    for j in range(k + 1):
        _to_mpz(&scaled.data[j], coeffs[j] * L ** (k - j))
    cdef _MpzArray wts = _MpzArray(deg + 1)
    for j in range(deg + 1):
        _to_mpz(&wts.data[j], weights[j])
    cdef _MpzArray avals = _MpzArray(m)
    for i in range(m):
        _to_mpz(&avals.data[i], multipliers[i])
    cdef _MpzArray pts = _MpzArray(ncells + 1)
    for i in range(ncells + 1):
        _to_mpz(&pts.data[i], breakpoints[i])

    cdef _MpzArray fac = _MpzArray(k + 1)
    cdef _MpzArray prod = _MpzArray(deg + 1)
    cdef _MpzArray tmp = _MpzArray(deg + 1)
    cdef _MpzArray lo = _MpzArray(deg + 2)
    cdef _MpzArray hi = _MpzArray(deg + 2)
    cdef mpz_t b, Lz, t, diff, total
    mpz_init(b); mpz_init(Lz); mpz_init(t); mpz_init(diff); mpz_init(total)
    _to_mpz(Lz, L)

    try:
        mpz_set_ui(&hi.data[0], 1)
        for j in range(1, deg + 2):
            mpz_mul(&hi.data[j], &hi.data[j - 1], &pts.data[0])
        for c in range(ncells):
            for j in range(deg + 2):
                mpz_set(&lo.data[j], &hi.data[j])
            mpz_set_ui(&hi.data[0], 1)
            for j in range(1, deg + 2):
                mpz_mul(&hi.data[j], &hi.data[j - 1], &pts.data[c + 1])

            prod.zero()
            mpz_set_ui(&prod.data[0], 1)
            plen = 1
            for f in range(m):
                # b = -floor(a t0 / L) * L
                mpz_mul(t, &avals.data[f], &pts.data[c])
                mpz_fdiv_q(t, t, Lz)
                mpz_mul(b, t, Lz)
                mpz_neg(b, b)
                fac.zero()
                mpz_set(&fac.data[0], &scaled.data[k])
                flen = 1
                for j in range(k - 1, -1, -1):
                    # fac <- fac * (a t + b) + scaled[j], updated from the top
                    mpz_mul(&fac.data[flen], &fac.data[flen - 1], &avals.data[f])
                    for i in range(flen - 1, 0, -1):
                        mpz_mul(&fac.data[i], &fac.data[i], b)
                        mpz_addmul(&fac.data[i], &fac.data[i - 1], &avals.data[f])
                    mpz_mul(&fac.data[0], &fac.data[0], b)
                    mpz_add(&fac.data[0], &fac.data[0], &scaled.data[j])
                    flen += 1
                for i in range(plen + flen - 1):
                    mpz_set_ui(&tmp.data[i], 0)
                for i in range(plen):
                    if mpz_sgn(&prod.data[i]) == 0:
                        continue
                    for j in range(flen):
                        mpz_addmul(&tmp.data[i + j], &prod.data[i], &fac.data[j])
                plen = plen + flen - 1
                for i in range(plen):
                    mpz_set(&prod.data[i], &tmp.data[i])
            for j in range(plen):
                if mpz_sgn(&prod.data[j]) == 0:
                    continue
                mpz_sub(diff, &hi.data[j + 1], &lo.data[j + 1])
                mpz_mul(diff, diff, &wts.data[j])
                mpz_addmul(total, diff, &prod.data[j])
        return _to_int(total)
    finally:
        mpz_clear(b); mpz_clear(Lz); mpz_clear(t); mpz_clear(diff); mpz_clear(total)


def lattice_numerator(multipliers, wpos, wneg, long bound):
    cdef Py_ssize_t m = len(multipliers)
    cdef long U = bound
    cdef long a, u, span, new_span, shift, idx, base, off
    cdef Py_ssize_t f, size
    cdef _MpzArray wp = _MpzArray(U)
    cdef _MpzArray wn = _MpzArray(U)
    for u in range(U):
        _to_mpz(&wp.data[u], wpos[u])
        _to_mpz(&wn.data[u], wneg[u])

    span = 0
    cdef _MpzArray state = _MpzArray(1)
    mpz_set_ui(&state.data[0], 1)
    cdef _MpzArray new
    for f in range(m - 1):
        a = multipliers[f]
        new_span = span + a * U
        new = _MpzArray(2 * new_span + 1)
        shift = new_span - span
        for idx in range(2 * span + 1):
            if mpz_sgn(&state.data[idx]) == 0:
                continue
            base = idx + shift
            for u in range(1, U + 1):
                mpz_addmul(&new.data[base + a * u], &state.data[idx], &wp.data[u - 1])
                mpz_addmul(&new.data[base - a * u], &state.data[idx], &wn.data[u - 1])
        state = new
        span = new_span

    a = multipliers[m - 1]
    cdef mpz_t total
    mpz_init(total)
    try:
        for u in range(1, U + 1):
            off = a * u
            if off > span:
                break
            mpz_addmul(total, &state.data[span - off], &wp.data[u - 1])
            mpz_addmul(total, &state.data[span + off], &wn.data[u - 1])
        return _to_int(total)
    finally:
        mpz_clear(total)
