# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled polynomial kernels over the integers.

Same contract as ``_pykernels``.  Coefficients are moved into C arrays when
every input fits in 56 bits, which keeps all intermediate sums inside a
128-bit accumulator; anything larger is handed back to the Python path.
"""

from libc.stdlib cimport malloc, free

from topvertex import _pykernels

NAME = "cython"

cdef extern from *:
    ctypedef long long int128 "__int128"

ctypedef long long i64

cdef i64 LIMIT = (<i64>1) << 56
cdef int128 I64_MAX = 9223372036854775807LL
cdef int128 I64_MIN = -I64_MAX - 1


cdef object _to_py(int128 v):
    if I64_MIN <= v <= I64_MAX:
        return <i64>v
    cdef bint neg = v < 0
    cdef int128 w = -v if neg else v
    cdef unsigned long long lo = <unsigned long long>(w & <int128>0xFFFFFFFFFFFFFFFF)
    cdef unsigned long long hi = <unsigned long long>(w >> 64)
    out = (int(hi) << 64) | int(lo)
    return -out if neg else out


cdef int _load(list src, i64* dst) except -1:
    """Copy ``src`` into ``dst``; return 1 if some entry is too large."""
    cdef Py_ssize_t i, n = len(src)
    cdef i64 v
    for i in range(n):
        x = src[i]
        if not (-LIMIT < x < LIMIT):
            return 1
        v = x
        dst[i] = v
    return 0


def mul(list a, list b):
    """Product of two dense integer polynomials."""
    cdef Py_ssize_t na = len(a), nb = len(b)
    if na == 0 or nb == 0:
        return []
    cdef Py_ssize_t n = na + nb - 1, i, j
    cdef i64* pa = <i64*>malloc(na * sizeof(i64))
    cdef i64* pb = <i64*>malloc(nb * sizeof(i64))
    cdef int128* acc = <int128*>malloc(n * sizeof(int128))
    cdef i64 x
    try:
        if _load(a, pa) or _load(b, pb):
            return _pykernels.mul(a, b)
        for i in range(n):
            acc[i] = 0
        for i in range(na):
            x = pa[i]
            if x == 0:
                continue
            for j in range(nb):
                acc[i + j] += <int128>x * pb[j]
        return [_to_py(acc[i]) for i in range(n)]
    finally:
        free(pa)
        free(pb)
        free(acc)


def divexact(list a, list b):
    """Quotient ``a / b`` if ``b`` divides ``a`` in Z[x], else None."""
    cdef Py_ssize_t n = len(a), m = len(b)
    if n == 0:
        return []
    if n < m:
        return None
    cdef Py_ssize_t i, j, nq = n - m + 1
    cdef i64* pb = <i64*>malloc(m * sizeof(i64))
    cdef i64* pa = <i64*>malloc(n * sizeof(i64))
    cdef int128* rem = <int128*>malloc(n * sizeof(int128))
    cdef int128* q = <int128*>malloc(nq * sizeof(int128))
    cdef int128 top, qi, lead
    cdef int128 bound = (<int128>1) << 120
    try:
        if _load(a, pa) or _load(b, pb):
            return _pykernels.divexact(a, b)
        for i in range(n):
            rem[i] = pa[i]
        lead = pb[m - 1]
        for i in range(nq - 1, -1, -1):
            top = rem[i + m - 1]
            if top % lead != 0:
                return None
            qi = top / lead
            q[i] = qi
            if qi != 0:
                if qi > LIMIT or qi < -LIMIT:
                    return _pykernels.divexact(a, b)
                for j in range(m):
                    rem[i + j] -= qi * pb[j]
                    if rem[i + j] > bound or rem[i + j] < -bound:
                        return _pykernels.divexact(a, b)
        for i in range(m - 1):
            if rem[i] != 0:
                return None
        return [_to_py(q[i]) for i in range(nq)]
    finally:
        free(pa)
        free(pb)
        free(rem)
        free(q)
