"""Kernel selection: compiled extension when available, pure Python otherwise.

Set EIDEAL_PURE=1 to force the pure backend (used by the benchmark and the
backend-parity tests).
"""

import os

if os.environ.get("EIDEAL_PURE"):
    from eideal import _fallback as _impl
else:
    try:
        from eideal import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        from eideal import _fallback as _impl

BACKEND = _impl.BACKEND
jacobi = _impl.jacobi
sieve_primes = _impl.sieve_primes
prime_count = _impl.prime_count
count_pattern = _impl.count_pattern
pattern_primes = _impl.pattern_primes
pattern_counts = _impl.pattern_counts
