"""Empirical splitting statistics: complete-split densities and witness pools.

Densities are natural densities among the unramified primes up to a bound;
primes dividing the conductor are dropped from both numerator and
denominator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from eideal import kernels
from eideal.multiquad import (
    BiquadField,
    MultiquadField,
    conductor_multiquad,
    splitting_data,
)
from eideal.ntheory import factorize


@dataclass(frozen=True)
class DensityReport:
    field_label: str
    bound: int
    count: int
    pi_x: int
    ratio: Fraction
    target: Fraction

    def __post_init__(self):
        if not 0 <= self.count <= self.pi_x:
            raise ValueError("count %d outside [0, %d]" % (self.count, self.pi_x))


def _unramified_prime_count(M: MultiquadField, x: int) -> int:
    f = conductor_multiquad(M)
    ramified = sum(1 for p in factorize(f) if p <= x) if f > 1 else 0
    return kernels.prime_count(x) - ramified


def _splits_completely(p: int, M: MultiquadField) -> bool:
    sd = splitting_data(p, M)
    return sd.e == 1 and sd.f == 1


def complete_split_density(M: MultiquadField, x: int) -> DensityReport:
    """Density of unramified primes <= x splitting completely; target 1/[M:Q]."""
    if x < 100:
        raise ValueError("bound must be at least 100, got %d" % x)
    ms = list(M.subfield_radicands)
    if ms:
        count = kernels.count_pattern(ms, [1] * len(ms), x)
        if all(m % 4 == 1 for m in ms) and _splits_completely(2, M):
            count += 1
    else:
        count = kernels.prime_count(x)
    pi_x = _unramified_prime_count(M, x)
    return DensityReport(
        field_label="Q(%s)" % ", ".join("sqrt(%d)" % m for m in M.radicands) if M.radicands else "Q",
        bound=x,
        count=count,
        pi_x=pi_x,
        ratio=Fraction(count, pi_x),
        target=Fraction(1, M.degree),
    )


def witness_pool(K: BiquadField, x: int) -> tuple[list[int], DensityReport]:
    """Primes splitting completely in K but not in its class field; target 1/8.

    Characterized by the Legendre pattern (+1, -1, -1) over the family primes
    (q, k, r) or (2, p, q).
    """
    if K.family not in ("q3", "sqrt2", "hsu"):
        raise ValueError("family not covered: %r" % (K,))
    if x < 10:
        raise ValueError("bound must be at least 10, got %d" % x)
    gens = list(K.family_primes)
    pool = kernels.pattern_primes(gens, [1, -1, -1], x)
    if x >= 2 and _splits_completely(2, K) and not _splits_completely(2, K.hilbert):
        pool = [2] + pool
    pi_x = _unramified_prime_count(K, x)
    report = DensityReport(
        field_label="Q(%s) witness pool" % ", ".join("sqrt(%d)" % m for m in K.radicands),
        bound=x,
        count=len(pool),
        pi_x=pi_x,
        ratio=Fraction(len(pool), pi_x),
        target=Fraction(1, 8),
    )
    return pool, report


def pattern_density(K: BiquadField, signs, x: int) -> DensityReport:
    """Density of primes with the given Legendre signs over the family primes."""
    if K.family not in ("q3", "sqrt2", "hsu"):
        raise ValueError("family not covered: %r" % (K,))
    signs = tuple(signs)
    if len(signs) != 3 or any(s not in (1, -1) for s in signs):
        raise ValueError("expected three signs from {+1, -1}, got %r" % (signs,))
    count = kernels.count_pattern(list(K.family_primes), list(signs), x)
    pi_x = _unramified_prime_count(K, x)
    return DensityReport(
        field_label="Q(%s) pattern %s"
        % (
            ", ".join("sqrt(%d)" % m for m in K.radicands),
            "".join("+" if s == 1 else "-" for s in signs),
        ),
        bound=x,
        count=count,
        pi_x=pi_x,
        ratio=Fraction(count, pi_x),
        target=Fraction(1, 8),
    )


def pattern_partition(K: BiquadField, x: int) -> dict[tuple[int, int, int], int]:
    """Counts of all eight Legendre sign patterns over the family primes."""
    if K.family not in ("q3", "sqrt2", "hsu"):
        raise ValueError("family not covered: %r" % (K,))
    hist = kernels.pattern_counts(list(K.family_primes), x)
    out = {}
    for idx, n in enumerate(hist):
        signs = tuple(-1 if idx >> i & 1 else 1 for i in range(3))
        out[signs] = n
    return out
