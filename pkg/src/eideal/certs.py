"""Euclidean ideal class certificates and the growth-hypothesis audit.

A certificate fixes, for a class-number-2 field in one of the two covered
families, a residue class u mod l = lcm(16, f(K)) all of whose primes are
degree one and non-principal.  It is assembled from auxiliary primes (one
quadratic non-residue below each field prime, congruent to 3 mod 4), a CRT
solution, and the least witness prime in the progression; every condition
is stored and can be re-derived from scratch by the verifier.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from math import gcd, lcm

from eideal.multiquad import (
    BiquadField,
    QuartElem,
    conductor_multiquad,
    is_nonprincipal_split_prime,
    splitting_data,
)
from eideal.ntheory import (
    ResidueClass,
    crt_solve,
    is_prime,
    jacobi,
    modinv,
    multiplicative_order,
    primes_in_ap,
    primes_up_to,
    sqrt_mod,
)

COVERED_FAMILIES = ("q3", "sqrt2")


def pollack_prime(p: int) -> int:
    """Least prime t < p with t == 3 mod 4 and (t/p) = -1.

    Exists for every prime p >= 5.  For p = 3 no such prime exists below 3;
    the non-residue class 2 mod 3 is returned instead and callers flag it.
    """
    if p < 3 or not is_prime(p):
        raise ValueError("expected an odd prime >= 3, got %d" % p)
    if p == 3:
        return 2
    for t in primes_up_to(p - 1):
        if t % 4 == 3 and jacobi(t, p) == -1:
            return t
    raise AssertionError("no auxiliary prime below %d" % p)


@dataclass(frozen=True)
class Certificate:
    family: str
    primes: tuple[int, int, int]
    h: int
    l: int
    aux_primes: tuple[int, ...]
    fallback_flags: tuple[bool, ...]
    x0: ResidueClass
    w: int
    u: int
    checks: dict

    def to_obj(self) -> dict:
        """JSON-ready dict with fixed key order."""
        return {
            "family": self.family,
            "primes": list(self.primes),
            "h": self.h,
            "l": self.l,
            "aux_primes": list(self.aux_primes),
            "fallback_flags": list(self.fallback_flags),
            "x0": {"residue": self.x0.residue, "modulus": self.x0.modulus},
            "w": self.w,
            "checks": {
                "gcd_u": self.checks["gcd_u"],
                "gcd_u_minus_1_half": self.checks["gcd_u_minus_1_half"],
                "jacobi": list(self.checks["jacobi"]),
            },
        }

    @classmethod
    def from_obj(cls, obj: dict) -> "Certificate":
        return cls(
            family=obj["family"],
            primes=tuple(obj["primes"]),
            h=obj["h"],
            l=obj["l"],
            aux_primes=tuple(obj["aux_primes"]),
            fallback_flags=tuple(bool(f) for f in obj["fallback_flags"]),
            x0=ResidueClass(obj["x0"]["residue"], obj["x0"]["modulus"]),
            w=obj["w"],
            u=obj["w"],
            checks={
                "gcd_u": obj["checks"]["gcd_u"],
                "gcd_u_minus_1_half": obj["checks"]["gcd_u_minus_1_half"],
                "jacobi": tuple(obj["checks"]["jacobi"]),
            },
        )


def field_for_primes(primes) -> BiquadField:
    """The biquadratic field for a (q, k, r) or (2, p, q) triple."""
    q, k, r = primes
    return BiquadField(q, k * r)


def build_certificate(K: BiquadField, search_bound: int = 10**9) -> Certificate:
    """Assemble and self-check a certificate for a covered class-number-2 field."""
    if K.family not in COVERED_FAMILIES:
        raise ValueError("family not covered: %r (%s)" % (K, K.family))
    h = K.h
    if h != 2:
        raise ValueError("class number not 2 (h=%d) for %r" % (h, K))
    primes = K.family_primes
    l = lcm(16, conductor_multiquad(K))
    if K.family == "q3":
        q, k, r = primes
        aux = (pollack_prime(q), pollack_prime(k), pollack_prime(r))
        flags = (q == 3, False, False)
        system = [
            ResidueClass(aux[0], q),
            ResidueClass(aux[1], k),
            ResidueClass(aux[2], r),
            ResidueClass(3, 4),
        ]
    else:
        _, p, q = primes
        aux = (pollack_prime(p), pollack_prime(q))
        flags = (False, False)
        system = [
            ResidueClass(aux[0], p),
            ResidueClass(aux[1], q),
            ResidueClass(7, 8),
        ]
    x0 = crt_solve(system)
    w = 0
    n = x0.residue if x0.residue else x0.modulus
    while n <= search_bound:
        if is_prime(n):
            w = n
            break
        n += x0.modulus
    if not w:
        raise ValueError("search bound exhausted at %d for %s" % (search_bound, x0))
    u = w
    checks = {
        "gcd_u": gcd(u, l),
        "gcd_u_minus_1_half": gcd((u - 1) // 2, l),
        "jacobi": tuple(jacobi(t, w) for t in primes),
    }
    cert = Certificate(
        family=K.family,
        primes=primes,
        h=h,
        l=l,
        aux_primes=aux,
        fallback_flags=flags,
        x0=x0,
        w=w,
        u=u,
        checks=checks,
    )
    ok, report = verify_certificate(cert)
    if not ok:
        failed = [row for row in report if not row["ok"]]
        raise AssertionError("freshly built certificate failed its own checks: %r" % failed)
    return cert


def _cond(report, name, ok, detail):
    report.append({"condition": name, "ok": bool(ok), "detail": detail})
    return bool(ok)


def verify_certificate(cert: Certificate):
    """Re-derive every invariant from scratch; returns (valid, report)."""
    report = []
    ok = True

    q, k, r = cert.primes
    structural = (
        cert.family in COVERED_FAMILIES
        and all(is_prime(t) for t in (q, k, r))
        and k % 4 == 1
        and r % 4 == 1
        and k != r
        and ((cert.family == "q3" and q % 4 == 3) or (cert.family == "sqrt2" and q == 2))
    )
    ok &= _cond(report, "family_shape", structural, "family %s, primes %s" % (cert.family, (q, k, r)))
    if not structural:
        return False, report

    K = field_for_primes(cert.primes)
    h = K.h
    ok &= _cond(report, "class_number", h == 2 and cert.h == 2, "recomputed h=%d, stored h=%d" % (h, cert.h))

    l_expected = lcm(16, conductor_multiquad(K))
    ok &= _cond(report, "modulus_l", cert.l == l_expected, "l=%d, expected %d" % (cert.l, l_expected))

    targets = (q, k, r) if cert.family == "q3" else (k, r)
    aux_ok = len(cert.aux_primes) == len(targets) == len(cert.fallback_flags)
    aux_detail = []
    if aux_ok:
        for t, a, fb in zip(targets, cert.aux_primes, cert.fallback_flags):
            if fb:
                good = t == 3 and a == 2
            else:
                good = is_prime(a) and a < t and a % 4 == 3 and jacobi(a, t) == -1
            aux_ok &= good
            aux_detail.append("(%d below %d%s)" % (a, t, ", fallback" if fb else ""))
    ok &= _cond(report, "aux_primes", aux_ok, " ".join(aux_detail) or "wrong arity")

    mod_expected = 4 * q * k * r if cert.family == "q3" else 8 * k * r
    system_ok = cert.x0.modulus == mod_expected
    if aux_ok:
        for t, a in zip(targets, cert.aux_primes):
            system_ok &= cert.x0.residue % t == a % t
    if cert.family == "q3":
        system_ok &= cert.x0.residue % 4 == 3
    else:
        system_ok &= cert.x0.residue % 8 == 7
    ok &= _cond(report, "crt_solution", system_ok, "x0 = %s" % cert.x0)

    ok &= _cond(report, "witness_prime", is_prime(cert.w), "w=%d" % cert.w)
    ok &= _cond(
        report,
        "witness_in_class",
        cert.w % cert.x0.modulus == cert.x0.residue,
        "w=%d mod %d" % (cert.w % cert.x0.modulus, cert.x0.modulus),
    )
    ok &= _cond(report, "u_equals_w", cert.u == cert.w, "u=%d, w=%d" % (cert.u, cert.w))

    if cert.family == "q3":
        res_ok, res_detail = cert.u % 4 == 3, "u=%d mod 4 = %d (need 3)" % (cert.u, cert.u % 4)
    else:
        res_ok, res_detail = cert.u % 8 == 7, "u=%d mod 8 = %d (need 7)" % (cert.u, cert.u % 8)
    ok &= _cond(report, "u_residue", res_ok, res_detail)

    g1 = gcd(cert.u, cert.l)
    ok &= _cond(report, "gcd_u", g1 == 1 and cert.checks.get("gcd_u") == 1, "gcd(u, l) = %d" % g1)

    g2 = gcd((cert.u - 1) // 2, cert.l)
    half_ok = cert.u % 2 == 1 and g2 == 1 and cert.checks.get("gcd_u_minus_1_half") == 1
    ok &= _cond(report, "gcd_u_minus_1_half", half_ok, "gcd((u-1)/2, l) = %d" % g2)

    symbols = tuple(jacobi(t, cert.u) if cert.u % 2 and cert.u > 0 else 0 for t in cert.primes)
    pattern_ok = symbols == (1, -1, -1) and tuple(cert.checks.get("jacobi", ())) == symbols
    ok &= _cond(report, "legendre_pattern", pattern_ok, "(%d/u),(%d/u),(%d/u) = %s" % (q, k, r, (symbols,)))

    return bool(ok), report


def tamper(cert: Certificate, **fields) -> Certificate:
    """A copy with fields overridden (for negative tests)."""
    return replace(cert, **fields)


@dataclass(frozen=True)
class SplitPrimeEmbedding:
    """Reduction data at a degree-one prime above p: square roots of the radicands.

    roots = (s1, s2, s3) with s_i^2 = m_i mod p and s1*s2 = gcd(m1,m2)*s3,
    so that mapping sqrt(m_i) to s_i is a ring homomorphism onto Z/p.
    """

    p: int
    field: BiquadField
    roots: tuple[int, int, int]

    def reduce(self, e: QuartElem) -> int:
        p = self.p
        total = 0
        for c, s in zip(e.coords, (1,) + self.roots):
            den = c.denominator % p
            if den == 0:
                raise ValueError("denominator of %r is not invertible mod %d" % (e, p))
            total += c.numerator * modinv(den, p) * s
        return total % p


def split_prime_embedding(K: BiquadField, p: int, signs=(1, 1)) -> SplitPrimeEmbedding:
    """Embedding for a prime splitting completely in K; signs pick the conjugate."""
    if p == 2 or any(p == m for m in K.triple):
        raise ValueError("prime %d divides 2 or the field discriminant" % p)
    sd = splitting_data(p, K)
    if sd.e != 1 or sd.f != 1:
        raise ValueError("%d is not completely split in %r" % (p, K))
    m1, m2, _ = K.triple
    g = gcd(m1, m2)
    s1 = sqrt_mod(m1, p) * signs[0] % p
    s2 = sqrt_mod(m2, p) * signs[1] % p
    s3 = s1 * s2 * modinv(g, p) % p
    return SplitPrimeEmbedding(p, K, (s1, s2, s3))


def unit_surjectivity(emb: SplitPrimeEmbedding, K: BiquadField):
    """Does <-1, unit mod p> exhaust (Z/p)* for some subfield unit?

    The subgroup generated by -1 and a residue of order t has order
    lcm(2, t), so the test is lcm(2, order) == p - 1.
    """
    if emb.field != K:
        raise ValueError("embedding belongs to a different field")
    p = emb.p
    details = []
    overall = False
    for i, F in enumerate(K.quad_subfields):
        eps, _ = F.unit_data
        residue = emb.reduce(K.lift_quad(eps))
        order = multiplicative_order(residue, p)
        onto = lcm(2, order) == p - 1
        overall = overall or onto
        details.append(
            {"index": i + 1, "radicand": F.m, "unit_residue": residue, "order": order, "onto": onto}
        )
    return overall, details


@dataclass(frozen=True)
class GrowthReport:
    primes: tuple[int, int, int]
    u: int
    l: int
    checkpoints: tuple
    prime_details: tuple


def growth_audit(K: BiquadField, cert: Certificate, bounds) -> GrowthReport:
    """Count primes in u mod l passing all three per-prime checks, per bound.

    Checks per prime: degree one (splits completely in K), non-principal
    (inert in the class field over K), and unit surjectivity for at least
    one subfield unit.  Ratios are count * (log x)^2 / x.
    """
    valid, report = verify_certificate(cert)
    if not valid:
        failed = [row["condition"] for row in report if not row["ok"]]
        raise ValueError("certificate invalid, failing: %s" % ", ".join(failed))
    bounds = list(bounds)
    if not bounds:
        raise ValueError("no bounds given")
    details = []
    qualifying = []
    for p in primes_in_ap(ResidueClass(cert.u, cert.l), max(bounds)):
        sd = splitting_data(p, K)
        degree_one = sd.e == 1 and sd.f == 1
        nonprincipal = degree_one and is_nonprincipal_split_prime(p, K)
        onto = False
        witness_index = None
        if degree_one:
            ok_onto, unit_detail = unit_surjectivity(split_prime_embedding(K, p), K)
            onto = ok_onto
            for row in unit_detail:
                if row["onto"]:
                    witness_index = row["index"]
                    break
        details.append(
            {
                "p": p,
                "degree_one": degree_one,
                "nonprincipal": nonprincipal,
                "surjective": onto,
                "witness_unit": witness_index,
            }
        )
        if degree_one and nonprincipal and onto:
            qualifying.append(p)
    checkpoints = []
    for x in bounds:
        count = sum(1 for p in qualifying if p <= x)
        checkpoints.append(
            {"bound": x, "count": count, "ratio": count * math.log(x) ** 2 / x}
        )
    return GrowthReport(
        primes=cert.primes,
        u=cert.u,
        l=cert.l,
        checkpoints=tuple(checkpoints),
        prime_details=tuple(details),
    )
