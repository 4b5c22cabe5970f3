"""Command-line front end.

Subcommands: qf, bq, cert, verify, density, pool, growth.  All output is
deterministic; JSON uses fixed key order, ratios are emitted as exact
numerator/denominator pairs plus a 6-digit decimal rendering.

Exit codes: 0 success, 1 verification or computation failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from eideal.certs import (
    Certificate,
    build_certificate,
    field_for_primes,
    growth_audit,
    verify_certificate,
)
from eideal.density import complete_split_density, pattern_density, witness_pool
from eideal.multiquad import BiquadField
from eideal.ntheory import is_prime
from eideal.quadratic import QuadField
from eideal.tables import family_tuples, generate_table


def _frac_obj(fr: Fraction) -> dict:
    scaled = (fr.numerator * 10**6 * 2 + fr.denominator) // (2 * fr.denominator)
    return {
        "num": fr.numerator,
        "den": fr.denominator,
        "decimal": "%d.%06d" % divmod(scaled, 10**6),
    }


def _density_obj(report) -> dict:
    return {
        "field": report.field_label,
        "bound": report.bound,
        "count": report.count,
        "pi_x": report.pi_x,
        "ratio": _frac_obj(report.ratio),
        "target": _frac_obj(report.target),
    }


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _parse_tuple(args) -> tuple[int, int, int]:
    q, k, r = args.q, args.k, args.r
    for t in (q, k, r):
        if not is_prime(t):
            raise ValueError("%d is not prime" % t)
    if k % 4 != 1 or r % 4 != 1 or k == r:
        raise ValueError("need distinct primes k, r = 1 mod 4, got (%d, %d)" % (k, r))
    return q, k, r


def cmd_qf(args) -> int:
    F = QuadField(args.m)
    eps, norm = F.unit_data
    _emit(
        {
            "m": F.m,
            "discriminant": F.discriminant,
            "conductor": F.conductor,
            "fundamental_unit": {
                "x_num": eps.x.numerator,
                "x_den": eps.x.denominator,
                "y_num": eps.y.numerator,
                "y_den": eps.y.denominator,
            },
            "unit_norm": norm,
            "h_plus": F.h_plus,
            "h": F.h,
        }
    )
    return 0


def cmd_bq_info(args) -> int:
    K = BiquadField(args.a, args.b)
    obj = {
        "radicands": list(K.radicands),
        "subfields": list(K.triple),
        "conductor": K.conductor,
        "unit_index": K.unit_index,
        "h": K.h,
    }
    if K.h == 2 and K.family in ("q3", "sqrt2", "hsu"):
        obj["hilbert_class_field"] = list(K.hilbert.radicands)
    obj["family"] = K.family
    _emit(obj)
    return 0


def cmd_bq_table(args) -> int:
    if args.family == "q3" and (args.q is None or args.q % 4 != 3 or not is_prime(args.q)):
        print("usage error: --q must be a prime congruent to 3 mod 4 for --family q3", file=sys.stderr)
        return 2
    if args.family == "hsu" and (args.q is None or args.q % 4 != 1 or not is_prime(args.q)):
        print("usage error: --q must be a prime congruent to 1 mod 4 for --family hsu", file=sys.stderr)
        return 2
    tuples = family_tuples(args.family, args.q, args.k_max, args.r_max)
    for line in generate_table(tuples, workers=args.workers):
        print(line)
    return 0


def cmd_cert(args) -> int:
    K = field_for_primes(_parse_tuple(args))
    cert = build_certificate(K, search_bound=args.search_bound)
    _emit(cert.to_obj())
    return 0


def cmd_verify(args) -> int:
    with open(args.file, "r", encoding="utf-8") as fh:
        cert = Certificate.from_obj(json.load(fh))
    valid, report = verify_certificate(cert)
    _emit({"valid": valid, "conditions": report})
    return 0 if valid else 1


def cmd_density(args) -> int:
    K = field_for_primes(_parse_tuple(args))
    if args.pattern is not None:
        if len(args.pattern) != 3 or any(c not in "+-" for c in args.pattern):
            raise ValueError("pattern must be three characters from +-, got %r" % args.pattern)
        signs = [1 if c == "+" else -1 for c in args.pattern]
        report = pattern_density(K, signs, args.bound)
    elif args.field == "H":
        report = complete_split_density(K.hilbert, args.bound)
    else:
        report = complete_split_density(K, args.bound)
    _emit(_density_obj(report))
    return 0


def cmd_pool(args) -> int:
    K = field_for_primes(_parse_tuple(args))
    pool, _ = witness_pool(K, args.bound)
    for p in pool:
        print(p)
    return 0


def cmd_growth(args) -> int:
    bounds = [int(b) for b in args.bounds.split(",") if b]
    K = field_for_primes(_parse_tuple(args))
    cert = build_certificate(K)
    report = growth_audit(K, cert, bounds)
    _emit(
        {
            "primes": list(report.primes),
            "u": report.u,
            "l": report.l,
            "checkpoints": [
                {"bound": c["bound"], "count": c["count"], "ratio": "%.6f" % c["ratio"]}
                for c in report.checkpoints
            ],
            "prime_details": list(report.prime_details),
        }
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eideal", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    qf = sub.add_parser("qf", help="real quadratic field invariants")
    qf_sub = qf.add_subparsers(dest="qf_command", required=True)
    qf_info = qf_sub.add_parser("info", help="JSON invariants of Q(sqrt(m))")
    qf_info.add_argument("m", type=int)
    qf_info.set_defaults(func=cmd_qf)

    bq = sub.add_parser("bq", help="biquadratic field invariants and tables")
    bq_sub = bq.add_subparsers(dest="bq_command", required=True)
    bq_info = bq_sub.add_parser("info", help="JSON invariants of Q(sqrt(a), sqrt(b))")
    bq_info.add_argument("a", type=int)
    bq_info.add_argument("b", type=int)
    bq_info.set_defaults(func=cmd_bq_info)
    bq_table = bq_sub.add_parser("table", help="TSV class-number table for a family")
    bq_table.add_argument("--family", choices=("q3", "sqrt2", "hsu"), required=True)
    bq_table.add_argument("--q", type=int, default=None)
    bq_table.add_argument("--k-max", type=int, required=True)
    bq_table.add_argument("--r-max", type=int, required=True)
    bq_table.add_argument("--workers", type=int, default=1)
    bq_table.set_defaults(func=cmd_bq_table)

    def add_tuple_args(p):
        p.add_argument("q", type=int)
        p.add_argument("k", type=int)
        p.add_argument("r", type=int)

    cert = sub.add_parser("cert", help="build a certificate for (q, k, r) or (2, p, q)")
    add_tuple_args(cert)
    cert.add_argument("--search-bound", type=int, default=10**9)
    cert.set_defaults(func=cmd_cert)

    verify = sub.add_parser("verify", help="re-check a certificate file; exit 1 when invalid")
    verify.add_argument("file")
    verify.set_defaults(func=cmd_verify)

    density = sub.add_parser("density", help="complete-split or pattern density report")
    add_tuple_args(density)
    density.add_argument("--bound", type=int, required=True)
    density.add_argument("--field", choices=("K", "H"), default="K")
    density.add_argument("--pattern", default=None, help="three signs, e.g. +--")
    density.set_defaults(func=cmd_density)

    pool = sub.add_parser("pool", help="witness pool primes, one per line")
    add_tuple_args(pool)
    pool.add_argument("--bound", type=int, required=True)
    pool.set_defaults(func=cmd_pool)

    growth = sub.add_parser("growth", help="growth audit at the given bounds")
    add_tuple_args(growth)
    growth.add_argument("--bounds", default="10000,100000,1000000")
    growth.set_defaults(func=cmd_growth)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
