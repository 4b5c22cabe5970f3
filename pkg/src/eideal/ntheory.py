"""Exact elementary number theory: Jacobi symbols, CRT, primality, orders.

Everything here is deterministic and exact; no floating point, no randomness.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from eideal import kernels

jacobi = kernels.jacobi

# Strong-pseudoprime battery: deterministic for all n below this bound
# (first composite passing bases 2..37 exceeds 3.3e24).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_LIMIT = 3_317_044_064_679_887_385_961_981
_TRIAL_LIMIT = 10**8


@dataclass(frozen=True)
class ResidueClass:
    """A congruence class residue mod modulus, canonicalized."""

    residue: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be positive, got %d" % self.modulus)
        object.__setattr__(self, "residue", self.residue % self.modulus)

    def __str__(self):
        return "%d mod %d" % (self.residue, self.modulus)


def egcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g = gcd(a, b)."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def modinv(a: int, m: int) -> int:
    g, x, _ = egcd(a, m)
    if g != 1:
        raise ValueError("%d is not invertible mod %d" % (a, m))
    return x % m


def crt_solve(congruences) -> ResidueClass:
    """Solve a system of congruences; modulus of the result is the lcm.

    Raises ValueError naming a conflicting pair when the system is
    inconsistent (pairwise compatibility is equivalent to solvability).
    """
    classes = [c if isinstance(c, ResidueClass) else ResidueClass(*c) for c in congruences]
    if not classes:
        raise ValueError("crt_solve: empty system")
    r0, m0 = classes[0].residue, classes[0].modulus
    for i, c in enumerate(classes[1:], start=1):
        r1, m1 = c.residue, c.modulus
        g = gcd(m0, m1)
        if (r1 - r0) % g:
            for j in range(i):
                cj = classes[j]
                gj = gcd(cj.modulus, m1)
                if (cj.residue - r1) % gj:
                    raise ValueError(
                        "inconsistent congruences: %s conflicts with %s" % (cj, c)
                    )
            raise ValueError("inconsistent congruences involving %s" % c)
        lcm = m0 // g * m1
        t = ((r1 - r0) // g * modinv(m0 // g, m1 // g)) % (m1 // g)
        r0 = (r0 + m0 * t) % lcm
        m0 = lcm
    return ResidueClass(r0, m0)


def _mr_witness(n: int, a: int) -> bool:
    # True iff a proves n composite
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_prime(n: int) -> bool:
    """Deterministic primality: trial division below 1e8, MR battery above."""
    if n < 0:
        raise ValueError("is_prime: expected n >= 0, got %d" % n)
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    if n < _TRIAL_LIMIT:
        f = 41
        while f * f <= n:
            if n % f == 0:
                return False
            f += 2
        return True
    if n >= _MR_LIMIT:
        raise ValueError("is_prime: %d exceeds the deterministic range" % n)
    return not any(_mr_witness(n, a) for a in _MR_BASES)


def primes_up_to(bound: int) -> list[int]:
    return kernels.sieve_primes(bound)


def primes_in_ap(rc: ResidueClass, bound: int) -> list[int]:
    """All primes p <= bound with p == rc.residue (mod rc.modulus), ascending.

    Requires gcd(residue, modulus) = 1 so the progression carries primes.
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    r, m = rc.residue, rc.modulus
    if gcd(r, m) != 1:
        raise ValueError("gcd(%d, %d) > 1: progression holds at most one prime" % (r, m))
    if m <= 30:
        return [p for p in kernels.sieve_primes(bound) if p % m == r]
    out = []
    n = r if r else m
    while n <= bound:
        if is_prime(n):
            out.append(n)
        n += m
    return out


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (desk-scale inputs)."""
    if n < 1:
        raise ValueError("factorize: expected n >= 1, got %d" % n)
    factors: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    f = 7
    while f * f <= n:
        while n % f == 0:
            factors[f] = factors.get(f, 0) + 1
            n //= f
        f += 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def is_squarefree(n: int) -> bool:
    if n < 1:
        return False
    return all(e == 1 for e in factorize(n).values())


def squarefree_part(n: int) -> int:
    """The squarefree kernel of n > 0."""
    out = 1
    for p, e in factorize(n).items():
        if e % 2:
            out *= p
    return out


def multiplicative_order(a: int, p: int) -> int:
    """Least t >= 1 with a^t == 1 mod p, for prime p not dividing a."""
    if not is_prime(p):
        raise ValueError("multiplicative_order: %d is not prime" % p)
    if a % p == 0:
        raise ValueError("multiplicative_order: %d divides %d" % (p, a))
    order = p - 1
    for q in factorize(p - 1):
        while order % q == 0 and pow(a, order // q, p) == 1:
            order //= q
    return order


def sqrt_mod(a: int, p: int) -> int:
    """A square root of a mod odd prime p (Tonelli-Shanks, deterministic scan).

    Returns the smaller of the two roots.  Raises if a is a non-residue.
    """
    a %= p
    if a == 0:
        return 0
    if jacobi(a, p) != 1:
        raise ValueError("%d is not a square mod %d" % (a, p))
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
        return min(r, p - r)
    # p == 1 mod 4: Tonelli-Shanks with the least non-residue as generator
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while jacobi(z, p) != -1:
        z += 1
    c = pow(z, q, p)
    r = pow(a, (q + 1) // 2, p)
    t = pow(a, q, p)
    m = s
    while t != 1:
        i = 0
        t2 = t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        r = r * b % p
        c = b * b % p
        t = t * c % p
        m = i
    return min(r, p - r)
