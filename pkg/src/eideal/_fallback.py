"""Pure-Python kernels: prime sieve and Legendre-pattern scans.

Same surface as the compiled module ``eideal._speedups``; used whenever the
extension is missing.  All functions are exact for arbitrary int inputs.
"""

BACKEND = "python"


def jacobi(a, n):
    """Jacobi symbol (a/n) for odd n >= 1; 0 iff gcd(a, n) > 1."""
    if n <= 0 or n % 2 == 0:
        raise ValueError("jacobi: modulus must be odd and positive, got %r" % (n,))
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


def sieve_primes(bound):
    """All primes <= bound, ascending."""
    if bound < 2:
        return []
    size = bound + 1
    composite = bytearray(size)
    composite[0] = composite[1] = 1
    p = 2
    while p * p <= bound:
        if not composite[p]:
            composite[p * p :: p] = b"\x01" * len(range(p * p, size, p))
        p += 1
    return [i for i in range(2, size) if not composite[i]]


def prime_count(bound):
    """pi(bound)."""
    if bound < 2:
        return 0
    size = bound + 1
    composite = bytearray(size)
    composite[0] = composite[1] = 1
    p = 2
    while p * p <= bound:
        if not composite[p]:
            composite[p * p :: p] = b"\x01" * len(range(p * p, size, p))
        p += 1
    return size - 2 - sum(composite[2:])


def count_pattern(ms, signs, bound):
    """Count odd primes p <= bound with jacobi(m_i, p) == signs[i] for all i.

    Primes dividing any m_i (symbol 0) never match.
    """
    count = 0
    for p in sieve_primes(bound):
        if p == 2:
            continue
        for m, s in zip(ms, signs):
            if jacobi(m, p) != s:
                break
        else:
            count += 1
    return count


def pattern_primes(ms, signs, bound):
    """Like count_pattern but returns the matching primes, ascending."""
    out = []
    for p in sieve_primes(bound):
        if p == 2:
            continue
        for m, s in zip(ms, signs):
            if jacobi(m, p) != s:
                break
        else:
            out.append(p)
    return out


def pattern_counts(ms, bound):
    """Histogram over all 2^len(ms) sign patterns for odd primes <= bound.

    Bit i of the index is set iff jacobi(ms[i], p) == -1.  Primes with any
    zero symbol (dividing some m_i) are skipped entirely.
    """
    k = len(ms)
    counts = [0] * (1 << k)
    for p in sieve_primes(bound):
        if p == 2:
            continue
        idx = 0
        for i, m in enumerate(ms):
            s = jacobi(m, p)
            if s == 0:
                idx = -1
                break
            if s == -1:
                idx |= 1 << i
        if idx >= 0:
            counts[idx] += 1
    return counts
