"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with  pytest tests/test_acceptance.py -v -s  to see the per-criterion
lines and timings.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction
from math import lcm
from pathlib import Path

import pytest

from eideal.certs import (
    build_certificate,
    field_for_primes,
    growth_audit,
    verify_certificate,
)
from eideal.density import complete_split_density, witness_pool
from eideal.multiquad import (
    BiquadField,
    MultiquadField,
    conductor_multiquad,
    hilbert_class_field,
    quart_is_square,
    splitting_data,
    verify_unramified,
)
from eideal.ntheory import (
    ResidueClass,
    factorize,
    is_squarefree,
    jacobi,
    primes_in_ap,
    primes_up_to,
)
from eideal.quadratic import QuadField, quad_is_square

GOLDEN = Path(__file__).parent / "data" / "class_number_tables.tsv"

# One printed table entry is unattainable: (3, 29, 173) is listed with h = 6,
# but the subfield class numbers are (1, 2, 4) -- confirmed by the form-cycle
# engine and, independently, by the analytic class number formula (see
# test_quadratic) -- so h = Q*8/4 = 2Q for a unit index Q in {1, 2, 4, 8}.
# No unit index yields 6; the engine's value is 4.  Recorded, not adjusted.
DIVERGENT_ROWS = {(3, 29, 173): {"printed": 6, "computed": 4}}

STRESS_ROWS = {
    (3, 13, 61): 16,
    (3, 29, 149): 20,
    (2, 29, 97): 14,
    (2, 29, 149): 10,
    (2, 17, 193): 24,
    (2, 5, 197): 12,
}


def load_golden():
    rows = []
    for line in GOLDEN.read_text().splitlines()[1:]:
        q, k, r, h = (int(t) for t in line.split("\t"))
        rows.append(((q, k, r), h))
    return rows


_FIELDS: dict[tuple, BiquadField] = {}


def field_cached(tup) -> BiquadField:
    if tup not in _FIELDS:
        _FIELDS[tup] = field_for_primes(tup)
    return _FIELDS[tup]


def report(n, ok, detail):
    status = "PASS" if ok else "FAIL"
    print("\n[criterion %d] %s - %s" % (n, status, detail))
    assert ok, "criterion %d: %s" % (n, detail)


def test_criterion_1_golden_tables():
    t0 = time.time()
    rows = load_golden()
    assert len(rows) == 175
    mismatches = []
    divergences = []
    for tup, printed in rows:
        h = field_cached(tup).h
        if tup in DIVERGENT_ROWS:
            entry = DIVERGENT_ROWS[tup]
            assert printed == entry["printed"]
            assert h == entry["computed"]
            # the printed value is impossible under 4h = Q*h1*h2*h3
            hs = [F.h for F in field_cached(tup).quad_subfields]
            assert 4 * printed % (hs[0] * hs[1] * hs[2]) != 0 or (
                4 * printed // (hs[0] * hs[1] * hs[2]) not in (1, 2, 4, 8)
            )
            divergences.append((tup, entry))
            continue
        if h != printed:
            mismatches.append((tup, printed, h))
    for tup, expected in STRESS_ROWS.items():
        assert field_cached(tup).h == expected, tup
    elapsed = time.time() - t0
    for tup, entry in divergences:
        print(
            "\n[criterion 1] recorded divergence at %r: table prints %d, engine computes %d"
            % (tup, entry["printed"], entry["computed"])
        )
    report(
        1,
        not mismatches and elapsed < 600 and len(divergences) == len(DIVERGENT_ROWS),
        "%d/175 rows match, %d recorded divergence, stress values exact, %.1fs"
        % (175 - len(DIVERGENT_ROWS), len(divergences), elapsed),
    )


def test_criterion_2_conductors():
    ok = conductor_multiquad(BiquadField(3, 65)) == 780
    ok &= conductor_multiquad(BiquadField(2, 85)) == 680
    rng = random.Random(20240601)
    squarefree = [m for m in range(2, 400) if is_squarefree(m)]
    checked = 0
    while checked < 100:
        gens = rng.sample(squarefree, rng.choice((1, 2, 2, 3)))
        try:
            M = MultiquadField(gens)
        except ValueError:
            continue
        by_gens = lcm(*(m if m % 4 == 1 else 4 * m for m in M.radicands))
        by_subfields = lcm(*(m if m % 4 == 1 else 4 * m for m in M.subfield_radicands))
        ok &= conductor_multiquad(M) == by_gens == by_subfields
        checked += 1
    report(2, ok, "f(Q(s3,s65))=780, f(Q(s2,s85))=680, lcm law on %d random fields" % checked)


def test_criterion_3_hilbert_class_fields():
    count = 0
    ok = True
    for tup, printed in load_golden():
        if printed != 2 or tup in DIVERGENT_ROWS:
            continue
        K = field_cached(tup)
        H = hilbert_class_field(K)
        ok &= H.degree == 2 * K.degree
        unram, rows = verify_unramified(H, K)
        ok &= unram
        ok &= {row["prime"] for row in rows} == set(factorize(conductor_multiquad(H)))
        count += 1
    report(3, ok and count >= 40, "class field built and unramified at every conductor prime for %d h=2 tuples" % count)


def test_criterion_4_certificates():
    golden_h2 = [tup for tup, printed in load_golden() if printed == 2 and tup not in DIVERGENT_ROWS]
    ok = True
    for tup in golden_h2:
        cert = build_certificate(field_cached(tup))
        valid, _ = verify_certificate(cert)
        ok &= valid
    t0 = time.time()
    c1 = build_certificate(field_for_primes((3, 5, 13)))
    single = time.time() - t0
    ok &= c1.x0 == ResidueClass(683, 780) and c1.w == 683
    c2 = build_certificate(field_for_primes((2, 5, 17)))
    ok &= c2.x0 == ResidueClass(343, 680) and c2.w == 2383
    ok &= single < 1.0
    report(4, ok, "%d certificates built and re-verified; (3,5,13) and (2,5,17) frozen values hold; single build %.3fs" % (len(golden_h2), single))


def test_criterion_5_densities_at_1e6():
    t0 = time.time()
    K = field_cached((3, 5, 13))
    r_k = complete_split_density(K, 10**6)
    r_h = complete_split_density(K.hilbert, 10**6)
    _, r_pool = witness_pool(K, 10**6)
    elapsed = time.time() - t0
    tol = Fraction(1, 100)
    ok = abs(r_k.ratio - Fraction(1, 4)) <= tol
    ok &= abs(r_h.ratio - Fraction(1, 8)) <= tol
    ok &= abs(r_pool.ratio - Fraction(1, 8)) <= tol
    ok &= elapsed < 120
    report(
        5,
        ok,
        "K %.5f (1/4), H %.5f (1/8), pool %.5f (1/8), %.1fs"
        % (float(r_k.ratio), float(r_h.ratio), float(r_pool.ratio), elapsed),
    )


def test_criterion_6_condition_exhaustive():
    K = field_cached((3, 5, 13))
    H = K.hilbert
    primes = primes_in_ap(ResidueClass(683, 780), 10**5)
    exceptions = []
    for p in primes:
        if splitting_data(p, K).f != 1 or splitting_data(p, H).f != 2:
            exceptions.append(p)
    report(
        6,
        primes and not exceptions,
        "%d primes = 683 mod 780 below 1e5: f=1 in K and f=2 in H, zero exceptions" % len(primes),
    )


def test_criterion_7_growth_audit():
    K = field_cached((3, 5, 13))
    cert = build_certificate(K)
    rep = growth_audit(K, cert, [10**4, 10**5, 10**6])
    counts = [c["count"] for c in rep.checkpoints]
    ok = all(c > 0 for c in counts)
    ok &= counts[0] < counts[1] < counts[2]
    counted = [d for d in rep.prime_details if d["degree_one"] and d["nonprincipal"] and d["surjective"]]
    ok &= len(counted) == counts[-1]
    ok &= all(d["witness_unit"] is not None for d in counted)
    report(7, ok, "counts %s strictly increasing; every counted prime non-principal and surjective" % counts)


def test_criterion_8_property_suites():
    # quadratic reciprocity over all odd prime pairs below 200
    odd_primes = [p for p in primes_up_to(199) if p % 2]
    ok = all(
        jacobi(p, q) * jacobi(q, p) == (-1) ** ((p - 1) // 2 * (q - 1) // 2)
        for p in odd_primes
        for q in odd_primes
        if p != q
    )

    # narrow/wide relation for all squarefree m < 500: h+ equals h or 2h
    # according as the fundamental unit has norm -1 or +1
    for m in range(2, 500):
        if not is_squarefree(m):
            continue
        F = QuadField(m)
        _, norm = F.unit_data
        ok &= F.h_plus == F.h * (3 + norm) // 2

    # Kuroda integrality on 200 random real biquadratic fields
    rng = random.Random(911)
    squarefree = [m for m in range(2, 150) if is_squarefree(m)]
    checked = 0
    while checked < 200:
        a, b = rng.sample(squarefree, 2)
        try:
            K = BiquadField(a, b)
        except ValueError:
            continue
        h = K.h
        hs = [F.h for F in K.quad_subfields]
        ok &= 4 * h == K.unit_index * hs[0] * hs[1] * hs[2] and h >= 1
        checked += 1

    # square/root round trips: 1000 quadratic + 500 quartic fuzz cases
    rng = random.Random(4096)
    quad_fields = [QuadField(m) for m in (2, 3, 5, 6, 65, 105, 195)]
    for _ in range(1000):
        F = rng.choice(quad_fields)
        x = Fraction(rng.randint(-100, 100), rng.randint(1, 100))
        y = Fraction(rng.randint(-100, 100), rng.randint(1, 100))
        if x == 0 and y == 0:
            continue
        e = F.element(x, y)
        root = quad_is_square(e * e)
        ok &= root is not None and root * root == e * e and root in (e, -e)
    quart_fields = [BiquadField(2, 3), BiquadField(3, 65), BiquadField(5, 65), BiquadField(2, 85)]
    for _ in range(500):
        K = rng.choice(quart_fields)
        coords = [Fraction(rng.randint(-50, 50), rng.randint(1, 10)) for _ in range(4)]
        from eideal.multiquad import QuartElem

        e = QuartElem(K, coords)
        if e.is_zero():
            continue
        root = quart_is_square(e * e)
        ok &= root is not None and root * root == e * e

    report(8, ok, "reciprocity <200, narrow/wide for m<500, Kuroda integrality x200, 1500 root round-trips, all exact")
