"""Class-number table generation for the three biquadratic families."""

from __future__ import annotations

import sys
from concurrent.futures import ProcessPoolExecutor

from eideal.certs import field_for_primes
from eideal.ntheory import is_prime, primes_up_to

HEADER = "q\tk\tr\th_K"


def family_tuples(family: str, q: int | None, k_max: int, r_max: int):
    """All (q, k, r) rows for a family, lexicographically sorted.

    k and r run over primes congruent to 1 mod 4 up to their bounds, k != r.
    """
    if family == "sqrt2":
        q = 2
    elif family == "q3":
        if q is None or not is_prime(q) or q % 4 != 3:
            raise ValueError("family q3 needs a prime q with q = 3 mod 4, got %r" % q)
    elif family == "hsu":
        if q is None or not is_prime(q) or q % 4 != 1:
            raise ValueError("family hsu needs a prime q with q = 1 mod 4, got %r" % q)
    else:
        raise ValueError("unknown family %r" % family)
    ks = [p for p in primes_up_to(k_max) if p % 4 == 1 and p != q]
    rs = [p for p in primes_up_to(r_max) if p % 4 == 1 and p != q]
    for k in ks:
        for r in rs:
            if k != r:
                yield (q, k, r)


def class_number_for_tuple(tup) -> int:
    return field_for_primes(tup).h


def _row_worker(tup):
    try:
        return tup, class_number_for_tuple(tup), None
    except Exception as exc:  # row failures must not kill the run
        return tup, None, str(exc)


def generate_table(tuples, workers: int = 1, diagnostics=None):
    """Yield TSV lines (header included) for the given tuples, in order.

    Rows that fail are reported on the diagnostics stream and skipped; the
    worker count never changes the emitted bytes.
    """
    diagnostics = diagnostics if diagnostics is not None else sys.stderr
    tuples = list(tuples)
    yield HEADER
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_row_worker, tuples, chunksize=4))
    else:
        results = [_row_worker(t) for t in tuples]
    for tup, h, err in results:
        if err is not None:
            print("error at %r: %s" % (tup, err), file=diagnostics)
            continue
        yield "%d\t%d\t%d\t%d" % (tup[0], tup[1], tup[2], h)
