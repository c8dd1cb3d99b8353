# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Native arithmetic kernel: GF(2^m) scalars and dense polynomials.

Mirrors char2sym._kernel.pure exactly (same signatures, same
normalization contract).  Elements are ints below 2^m with m <= 16, so
all intermediate products fit comfortably in 64 bits.
"""

from libc.stdlib cimport free, malloc

ctypedef unsigned long long u64

NAME = "native"


cdef inline u64 c_gf_mul(u64 a, u64 b, u64 mod, int m) noexcept nogil:
    cdef u64 r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if (a >> m) & 1:
            a ^= mod
    return r


cdef inline int c_deg(u64 x) noexcept nogil:
    cdef int d = -1
    while x:
        d += 1
        x >>= 1
    return d


cdef u64 c_gf2x_mul(u64 a, u64 b) noexcept nogil:
    cdef u64 r = 0
    while a:
        if a & 1:
            r ^= b
        a >>= 1
        b <<= 1
    return r


cdef u64 c_gf_inv(u64 a, u64 mod, int m) except? 0:
    if a == 0:
        raise ZeroDivisionError("inverse of zero in GF(2^m)")
    cdef u64 r0 = a, r1 = mod, s0 = 1, s1 = 0
    cdef u64 q, tmp
    cdef int shift
    while r1:
        # long division r0 / r1 over GF(2)
        q = 0
        while c_deg(r0) >= c_deg(r1) and r0:
            shift = c_deg(r0) - c_deg(r1)
            q ^= (<u64>1) << shift
            r0 ^= r1 << shift
        tmp = r0
        r0 = r1
        r1 = tmp
        tmp = s0 ^ c_gf2x_mul(q, s1)
        s0 = s1
        s1 = tmp
    if r0 != 1:
        raise ValueError("modulus is not irreducible")
    # reduce s0 modulo mod
    while c_deg(s0) >= m:
        s0 ^= mod << (c_deg(s0) - m)
    return s0


def gf_mul(a, b, mod, m):
    """Multiply in GF(2^m)."""
    return c_gf_mul(a, b, mod, m)


def gf_inv(a, mod, m):
    """Invert a nonzero element of GF(2^m)."""
    return c_gf_inv(a, mod, m)


def gf_pow(a, e, mod, m):
    """Raise a GF(2^m) element to a nonnegative power."""
    cdef u64 r = 1
    cdef u64 base = a
    cdef u64 mmod = mod
    cdef int mm = m
    cdef unsigned long long ee = e
    while ee:
        if ee & 1:
            r = c_gf_mul(r, base, mmod, mm)
        ee >>= 1
        base = c_gf_mul(base, base, mmod, mm)
    return r


cdef u64* _to_buf(list a) except NULL:
    cdef Py_ssize_t n = len(a)
    cdef u64* buf = <u64*> malloc((n if n else 1) * sizeof(u64))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        buf[i] = a[i]
    return buf


cdef list _to_list(u64* buf, Py_ssize_t n):
    cdef list out = [0] * n
    cdef Py_ssize_t i
    for i in range(n):
        out[i] = buf[i]
    return out


cdef Py_ssize_t _norm_len(u64* buf, Py_ssize_t n) noexcept nogil:
    while n and buf[n - 1] == 0:
        n -= 1
    return n


def gfp_mul(a, b, mod, m):
    """Dense polynomial product over GF(2^m)."""
    cdef Py_ssize_t la = len(a), lb = len(b)
    if la == 0 or lb == 0:
        return []
    cdef u64 mmod = mod
    cdef int mm = m
    cdef u64* av = _to_buf(a)
    cdef u64* bv
    cdef u64* out
    cdef Py_ssize_t i, j, lo = la + lb - 1
    cdef u64 c
    cdef bint square = a is b
    out = <u64*> malloc(lo * sizeof(u64))
    if out == NULL:
        free(av)
        raise MemoryError()
    for i in range(lo):
        out[i] = 0
    if square:
        with nogil:
            for i in range(la):
                if av[i]:
                    out[2 * i] = c_gf_mul(av[i], av[i], mmod, mm)
        result = _to_list(out, lo)
        free(av)
        free(out)
        return result
    bv = _to_buf(b)
    with nogil:
        for i in range(la):
            c = av[i]
            if c == 0:
                continue
            if c == 1:
                for j in range(lb):
                    out[i + j] ^= bv[j]
            else:
                for j in range(lb):
                    if bv[j]:
                        out[i + j] ^= c_gf_mul(c, bv[j], mmod, mm)
    result = _to_list(out, lo)
    free(av)
    free(bv)
    free(out)
    return result


cdef void c_rem_inplace(u64* r, Py_ssize_t* lr, u64* bv, Py_ssize_t lb,
                        u64 inv_lead, u64 mmod, int mm, u64* quo) noexcept nogil:
    """Reduce r (length *lr) modulo bv in place; optional quotient out."""
    cdef Py_ssize_t db = lb - 1
    cdef Py_ssize_t i, j, off
    cdef u64 c, f
    for i in range(lr[0] - 1, db - 1, -1):
        c = r[i]
        if c == 0:
            continue
        f = c if inv_lead == 1 else c_gf_mul(c, inv_lead, mmod, mm)
        if quo != NULL:
            quo[i - db] = f
        off = i - db
        if f == 1:
            for j in range(lb):
                if bv[j]:
                    r[off + j] ^= bv[j]
        else:
            for j in range(lb):
                if bv[j]:
                    r[off + j] ^= c_gf_mul(f, bv[j], mmod, mm)
    lr[0] = _norm_len(r, db if db < lr[0] else lr[0])


def gfp_divmod(a, b, mod, m):
    """Dense polynomial long division over GF(2^m)."""
    cdef Py_ssize_t la = len(a), lb = len(b)
    if lb == 0:
        raise ZeroDivisionError("polynomial division by zero")
    if la < lb:
        return [], list(a)
    cdef u64 mmod = mod
    cdef int mm = m
    cdef u64 lead = b[lb - 1]
    cdef u64 inv_lead = 1 if lead == 1 else c_gf_inv(lead, mmod, mm)
    cdef u64* rv = _to_buf(a)
    cdef u64* bv = _to_buf(b)
    cdef Py_ssize_t lq = la - lb + 1
    cdef u64* qv = <u64*> malloc(lq * sizeof(u64))
    if qv == NULL:
        free(rv)
        free(bv)
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(lq):
        qv[i] = 0
    cdef Py_ssize_t lr = la
    c_rem_inplace(rv, &lr, bv, lb, inv_lead, mmod, mm, qv)
    quotient = _to_list(qv, lq)
    remainder = _to_list(rv, lr)
    free(rv)
    free(bv)
    free(qv)
    return quotient, remainder


def gfp_rem(a, b, mod, m):
    """Remainder of dense polynomial division over GF(2^m)."""
    cdef Py_ssize_t la = len(a), lb = len(b)
    if lb == 0:
        raise ZeroDivisionError("polynomial division by zero")
    if la < lb:
        return list(a)
    cdef u64 mmod = mod
    cdef int mm = m
    cdef u64 lead = b[lb - 1]
    cdef u64 inv_lead = 1 if lead == 1 else c_gf_inv(lead, mmod, mm)
    cdef u64* rv = _to_buf(a)
    cdef u64* bv = _to_buf(b)
    cdef Py_ssize_t lr = la
    c_rem_inplace(rv, &lr, bv, lb, inv_lead, mmod, mm, NULL)
    remainder = _to_list(rv, lr)
    free(rv)
    free(bv)
    return remainder


def gfp_gcd(a, b, mod, m):
    """Monic gcd of dense polynomials over GF(2^m)."""
    cdef u64 mmod = mod
    cdef int mm = m
    cdef Py_ssize_t la = len(a), lb = len(b)
    cdef Py_ssize_t cap = (la if la > lb else lb) + 1
    cdef u64* x = <u64*> malloc(cap * sizeof(u64))
    cdef u64* y = <u64*> malloc(cap * sizeof(u64))
    if x == NULL or y == NULL:
        if x != NULL:
            free(x)
        if y != NULL:
            free(y)
        raise MemoryError()
    cdef Py_ssize_t i, lx = la, ly = lb
    for i in range(la):
        x[i] = a[i]
    for i in range(lb):
        y[i] = b[i]
    cdef u64* tmp
    cdef u64 inv_lead
    while ly:
        inv_lead = 1 if y[ly - 1] == 1 else c_gf_inv(y[ly - 1], mmod, mm)
        c_rem_inplace(x, &lx, y, ly, inv_lead, mmod, mm, NULL)
        tmp = x
        x = y
        y = tmp
        i = lx
        lx = ly
        ly = i
    if lx and x[lx - 1] != 1:
        inv_lead = c_gf_inv(x[lx - 1], mmod, mm)
        with nogil:
            for i in range(lx):
                if x[i]:
                    x[i] = c_gf_mul(x[i], inv_lead, mmod, mm)
    result = _to_list(x, lx)
    free(x)
    free(y)
    return result


def gfp_pow_mod(a, e, f, mod, m):
    """Compute a^e mod f over GF(2^m) by square-and-multiply."""
    cdef Py_ssize_t lf = len(f)
    if lf < 2:
        raise ValueError("modulus must have degree >= 1")
    cdef u64 mmod = mod
    cdef int mm = m
    cdef u64 lead = f[lf - 1]
    cdef u64 inv_lead = 1 if lead == 1 else c_gf_inv(lead, mmod, mm)
    cdef unsigned long long ee = e
    cdef Py_ssize_t cap = 2 * lf  # scratch for products of reduced polys
    cdef u64* fv = _to_buf(f)
    cdef u64* base = <u64*> malloc(cap * sizeof(u64))
    cdef u64* res = <u64*> malloc(cap * sizeof(u64))
    cdef u64* scratch = <u64*> malloc(cap * sizeof(u64))
    if base == NULL or res == NULL or scratch == NULL:
        free(fv)
        if base != NULL:
            free(base)
        if res != NULL:
            free(res)
        if scratch != NULL:
            free(scratch)
        raise MemoryError()
    cdef Py_ssize_t i, la = len(a), lbase, lres
    # base = a mod f (reduce in a buffer big enough for the raw input)
    cdef u64* abuf = _to_buf(a)
    lbase = la
    c_rem_inplace(abuf, &lbase, fv, lf, inv_lead, mmod, mm, NULL)
    for i in range(lbase):
        base[i] = abuf[i]
    free(abuf)
    res[0] = 1
    lres = 1
    cdef Py_ssize_t lprod
    while ee:
        if ee & 1:
            lprod = _mul_into(res, lres, base, lbase, scratch, mmod, mm)
            c_rem_inplace(scratch, &lprod, fv, lf, inv_lead, mmod, mm, NULL)
            for i in range(lprod):
                res[i] = scratch[i]
            lres = lprod
        ee >>= 1
        if ee:
            lprod = _mul_into(base, lbase, base, lbase, scratch, mmod, mm)
            c_rem_inplace(scratch, &lprod, fv, lf, inv_lead, mmod, mm, NULL)
            for i in range(lprod):
                base[i] = scratch[i]
            lbase = lprod
    result = _to_list(res, lres)
    free(fv)
    free(base)
    free(res)
    free(scratch)
    return result


cdef Py_ssize_t _mul_into(u64* a, Py_ssize_t la, u64* b, Py_ssize_t lb,
                          u64* out, u64 mmod, int mm) noexcept nogil:
    cdef Py_ssize_t i, j, lo
    cdef u64 c
    if la == 0 or lb == 0:
        return 0
    lo = la + lb - 1
    for i in range(lo):
        out[i] = 0
    if a == b:
        for i in range(la):
            if a[i]:
                out[2 * i] = c_gf_mul(a[i], a[i], mmod, mm)
        return lo
    for i in range(la):
        c = a[i]
        if c == 0:
            continue
        if c == 1:
            for j in range(lb):
                out[i + j] ^= b[j]
        else:
            for j in range(lb):
                if b[j]:
                    out[i + j] ^= c_gf_mul(c, b[j], mmod, mm)
    return lo
