# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: prime sieve and Legendre-pattern scans.

Mirrors eideal._fallback exactly; int64 fast paths with big-int fallbacks.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memset
from libc.stdint cimport int64_t

BACKEND = "compiled"

cdef int64_t INT64_MAX = 9223372036854775807


cdef int _jacobi64(int64_t a, int64_t n) nogil:
    # n odd > 0, 0 <= a < n
    cdef int result = 1
    cdef int64_t t, r
    while a:
        while a % 2 == 0:
            a //= 2
            r = n % 8
            if r == 3 or r == 5:
                result = -result
        t = a
        a = n
        n = t
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    if n == 1:
        return result
    return 0


def _jacobi_big(a, n):
    # arbitrary-precision path, same algorithm
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def jacobi(a, n):
    """Jacobi symbol (a/n) for odd n >= 1; 0 iff gcd(a, n) > 1."""
    if n <= 0 or n % 2 == 0:
        raise ValueError("jacobi: modulus must be odd and positive, got %r" % (n,))
    if n <= INT64_MAX:
        return _jacobi64(a % n, n)
    return _jacobi_big(a, n)


cdef unsigned char* _sieve(int64_t bound) except NULL:
    # caller frees; composite[i] nonzero iff i composite (or i < 2)
    cdef int64_t size = bound + 1
    cdef unsigned char* composite = <unsigned char*> malloc(size)
    cdef int64_t p, q
    if composite == NULL:
        raise MemoryError()
    memset(composite, 0, size)
    composite[0] = 1
    if bound >= 1:
        composite[1] = 1
    p = 2
    while p * p <= bound:
        if not composite[p]:
            q = p * p
            while q <= bound:
                composite[q] = 1
                q += p
        p += 1
    return composite


def sieve_primes(bound):
    """All primes <= bound, ascending."""
    if bound < 2:
        return []
    cdef int64_t b = bound
    cdef unsigned char* composite = _sieve(b)
    cdef int64_t i
    out = []
    try:
        for i in range(2, b + 1):
            if not composite[i]:
                out.append(i)
    finally:
        free(composite)
    return out


def prime_count(bound):
    """pi(bound)."""
    if bound < 2:
        return 0
    cdef int64_t b = bound
    cdef unsigned char* composite = _sieve(b)
    cdef int64_t i, n = 0
    try:
        for i in range(2, b + 1):
            if not composite[i]:
                n += 1
    finally:
        free(composite)
    return n


cdef int _fill64(object ms, int64_t* cms) except -1:
    cdef Py_ssize_t i
    for i in range(len(ms)):
        if not (1 <= ms[i] <= INT64_MAX):
            return 0
        cms[i] = ms[i]
    return 1


def count_pattern(ms, signs, bound):
    """Count odd primes p <= bound with jacobi(m_i, p) == signs[i] for all i.

    Primes dividing any m_i (symbol 0) never match.
    """
    cdef Py_ssize_t k = len(ms)
    cdef int64_t b = bound
    cdef int64_t* cms = <int64_t*> malloc(k * sizeof(int64_t)) if k else NULL
    cdef int* csg = <int*> malloc(k * sizeof(int)) if k else NULL
    cdef unsigned char* composite
    cdef int64_t p, n = 0
    cdef Py_ssize_t i
    cdef bint ok
    if bound < 3:
        if cms != NULL:
            free(cms)
        if csg != NULL:
            free(csg)
        return 0
    if k and not _fill64(ms, cms):
        free(cms)
        free(csg)
        from eideal import _fallback
        return _fallback.count_pattern(ms, signs, bound)
    for i in range(k):
        csg[i] = signs[i]
    composite = _sieve(b)
    try:
        for p in range(3, b + 1, 2):
            if composite[p]:
                continue
            ok = True
            for i in range(k):
                if _jacobi64(cms[i] % p, p) != csg[i]:
                    ok = False
                    break
            if ok:
                n += 1
    finally:
        free(composite)
        if cms != NULL:
            free(cms)
        if csg != NULL:
            free(csg)
    return n


def pattern_primes(ms, signs, bound):
    """Like count_pattern but returns the matching primes, ascending."""
    cdef Py_ssize_t k = len(ms)
    cdef int64_t b = bound
    cdef int64_t* cms = <int64_t*> malloc(k * sizeof(int64_t)) if k else NULL
    cdef int* csg = <int*> malloc(k * sizeof(int)) if k else NULL
    cdef unsigned char* composite
    cdef int64_t p
    cdef Py_ssize_t i
    cdef bint ok
    out = []
    if bound < 3:
        if cms != NULL:
            free(cms)
        if csg != NULL:
            free(csg)
        return out
    if k and not _fill64(ms, cms):
        free(cms)
        free(csg)
        from eideal import _fallback
        return _fallback.pattern_primes(ms, signs, bound)
    for i in range(k):
        csg[i] = signs[i]
    composite = _sieve(b)
    try:
        for p in range(3, b + 1, 2):
            if composite[p]:
                continue
            ok = True
            for i in range(k):
                if _jacobi64(cms[i] % p, p) != csg[i]:
                    ok = False
                    break
            if ok:
                out.append(p)
    finally:
        free(composite)
        if cms != NULL:
            free(cms)
        if csg != NULL:
            free(csg)
    return out


def pattern_counts(ms, bound):
    """Histogram over all 2^len(ms) sign patterns for odd primes <= bound.

    Bit i of the index is set iff jacobi(ms[i], p) == -1.  Primes with any
    zero symbol (dividing some m_i) are skipped entirely.
    """
    cdef Py_ssize_t k = len(ms)
    cdef int64_t b = bound
    cdef int64_t* cms = <int64_t*> malloc(k * sizeof(int64_t)) if k else NULL
    cdef long long* hist = <long long*> malloc((1 << k) * sizeof(long long))
    cdef unsigned char* composite
    cdef int64_t p
    cdef Py_ssize_t i
    cdef int s
    cdef long idx
    if hist == NULL:
        raise MemoryError()
    memset(hist, 0, (1 << k) * sizeof(long long))
    if bound < 3:
        if cms != NULL:
            free(cms)
        out = [hist[i] for i in range(1 << k)]
        free(hist)
        return out
    if k and not _fill64(ms, cms):
        free(cms)
        free(hist)
        from eideal import _fallback
        return _fallback.pattern_counts(ms, bound)
    composite = _sieve(b)
    try:
        for p in range(3, b + 1, 2):
            if composite[p]:
                continue
            idx = 0
            for i in range(k):
                s = _jacobi64(cms[i] % p, p)
                if s == 0:
                    idx = -1
                    break
                if s == -1:
                    idx |= 1 << i
            if idx >= 0:
                hist[idx] += 1
    finally:
        free(composite)
        if cms != NULL:
            free(cms)
    out = [hist[i] for i in range(1 << k)]
    free(hist)
    return out
