"""Command-line front end.

Every subcommand prints a single JSON document to stdout:

    {"status": "ok" | "verification-failed" | "invalid-input" | "exhausted",
     "payload": {...}}

with exit codes 0/1/2/3 respectively.  Big integers are decimal strings
throughout the payload.  Output is byte-stable for fixed inputs; ``--meta``
adds a sibling "meta" object (timestamp, version) without touching the
payload.  ``--csv`` switches the density scan to per-prime CSV rows.
"""

from __future__ import annotations

import argparse
import datetime
import json
import sys

from . import __version__
from .arith import Residue, factorize, set_random_seed
from .bounds import (
    MaximalityCertificate,
    count_primitive_primes,
    maximality_certificate,
    rho_upper_bound,
    verify_certificate,
)
from .constructor import DivisibilitySpec, build_parameter, verify_spec
from .density import density_report, density_scan_rows
from .errors import HenselHypothesisError, SearchExhaustedError
from .gleason import discriminant, gleason_poly, roots_mod_p
from .lifting import adjust_power, hensel_lift
from .orbit import (
    RationalParam,
    is_primitive_divisor,
    iterate_valuation,
    period_type_mod,
)
from .pcf import (
    check_condition_star,
    check_condition_star_star,
    condition_star_star_failures,
    correspondence_report,
    enumerate_pcf,
)

OK = "ok"
VERIFICATION_FAILED = "verification-failed"
INVALID_INPUT = "invalid-input"
EXHAUSTED = "exhausted"

_EXIT_CODES = {OK: 0, VERIFICATION_FAILED: 1, INVALID_INPUT: 2, EXHAUSTED: 3}


def _parse_int(text: str) -> int:
    try:
        return int(text)
    except ValueError as exc:
        raise ValueError(f"malformed integer {text!r}") from exc


def _cmd_orbit(args) -> tuple[str, dict]:
    c = Residue.reduce(_parse_int(args.c), args.p, args.t)
    ptype, entry = period_type_mod(args.d, c)
    return OK, {
        "d": args.d,
        "p": str(args.p),
        "t": args.t,
        "c": str(c.value),
        "period_type": {"m": ptype.tail, "n": ptype.period},
        "cycle_entry": str(entry),
    }


def _cmd_valuation(args) -> tuple[str, dict]:
    c = RationalParam.from_string(args.c)
    nu = iterate_valuation(args.d, c, args.n, args.p, cap=args.cap)
    return OK, {
        "d": args.d,
        "n": args.n,
        "p": str(args.p),
        "c": str(c),
        "valuation": nu.value,
        "exact": nu.exact,
    }


def _cmd_primitive(args) -> tuple[str, dict]:
    c = RationalParam.from_string(args.c)
    primitive, valuation = is_primitive_divisor(args.d, c, args.n, args.p)
    return OK, {
        "d": args.d,
        "n": args.n,
        "p": str(args.p),
        "c": str(c),
        "primitive": primitive,
        "valuation": valuation,
    }


def _cmd_gleason(args) -> tuple[str, dict]:
    poly = gleason_poly(args.d, args.n)
    return OK, {
        "d": args.d,
        "n": args.n,
        "coefficients": poly.to_decimal_strings(),
        "degree": poly.degree,
    }


def _cmd_disc(args) -> tuple[str, dict]:
    poly = gleason_poly(args.d, args.n)
    return OK, {
        "d": args.d,
        "n": args.n,
        "discriminant": str(discriminant(poly)),
    }


def _cmd_roots(args) -> tuple[str, dict]:
    poly = gleason_poly(args.d, args.n)
    roots = roots_mod_p(poly, args.p)
    return OK, {
        "d": args.d,
        "n": args.n,
        "p": str(args.p),
        "roots": [{"root": str(r), "multiplicity": m} for r, m in roots],
    }


def _cmd_lift(args) -> tuple[str, dict]:
    result = hensel_lift(args.d, args.n, args.p, _parse_int(args.c0), args.precision)
    return OK, result.to_json_dict()


def _cmd_adjust(args) -> tuple[str, dict]:
    precision = args.precision if args.precision else args.r + 2
    lift = hensel_lift(args.d, args.n, args.p, _parse_int(args.c0), precision)
    c_r = adjust_power(lift, args.r)
    return OK, {
        "d": args.d,
        "n": args.n,
        "p": str(args.p),
        "r": args.r,
        "c": str(c_r),
        "lift": lift.to_json_dict(),
    }


def _load_spec(path: str) -> DivisibilitySpec:
    with open(path, encoding="utf-8") as handle:
        doc = json.load(handle)
    return DivisibilitySpec.from_json_dict(doc)


def _cmd_construct(args) -> tuple[str, dict]:
    spec = _load_spec(args.spec)
    report = build_parameter(spec)
    status = OK if report.all_verified else VERIFICATION_FAILED
    return status, report.to_json_dict()


def _cmd_verify(args) -> tuple[str, dict]:
    spec = _load_spec(args.spec)
    checks = verify_spec(args.d, _parse_int(args.c), spec)
    payload = {
        "d": args.d,
        "c": args.c,
        "checks": [check.to_json_dict() for check in checks],
        "all_ok": all(check.ok for check in checks),
    }
    return (OK if payload["all_ok"] else VERIFICATION_FAILED), payload


def _cmd_pcf(args) -> tuple[str, dict]:
    census = enumerate_pcf(args.d, args.p)
    doc = census.to_json_dict()
    doc["condition_star_star"] = check_condition_star_star(args.d, args.p)
    return OK, doc


def _cmd_condition(args) -> tuple[str, dict]:
    if args.n is not None:
        ok, witnesses = check_condition_star(args.d, args.p, args.n)
        return OK, {
            "d": args.d,
            "p": str(args.p),
            "n": args.n,
            "condition_star": ok,
            "failures": [str(w) for w in witnesses],
        }
    ok = check_condition_star_star(args.d, args.p, max_period=args.max_period)
    failures = condition_star_star_failures(args.d, args.p, max_period=args.max_period)
    return OK, {
        "d": args.d,
        "p": str(args.p),
        "max_period": args.max_period,
        "condition_star_star": ok,
        "failures": [{"c": str(c), "period": n} for c, n in failures],
    }


def _cmd_correspond(args) -> tuple[str, dict]:
    report = correspondence_report(args.d, args.p, args.precision)
    return OK, report.to_json_dict()


def _cmd_density(args) -> tuple[str, dict] | None:
    if args.csv:
        rows = density_scan_rows(args.d, args.n, args.limit)
        sys.stdout.write("p,has_root\n")
        for p, flag in rows:
            sys.stdout.write(f"{p},{int(flag)}\n")
        return None
    report = density_report(args.d, args.n, args.limit, jobs=args.threads)
    return OK, report.to_json_dict()


def _cmd_bound(args) -> tuple[str, dict]:
    c = RationalParam.from_string(args.c)
    value = rho_upper_bound(args.d, args.n, c)
    return OK, {"d": args.d, "n": args.n, "c": str(c), "upper_bound": value}


def _cmd_rho(args) -> tuple[str, dict]:
    c = RationalParam.from_string(args.c)
    count, complete = count_primitive_primes(
        args.d, c, args.n, rho_iterations=args.budget
    )
    return OK, {
        "d": args.d,
        "n": args.n,
        "c": str(c),
        "count": count,
        "complete": complete,
    }


def _cmd_certify(args) -> tuple[str, dict]:
    if args.check:
        with open(args.check, encoding="utf-8") as handle:
            cert = MaximalityCertificate.from_json_dict(json.load(handle))
        ok = verify_certificate(cert)
        return (OK if ok else VERIFICATION_FAILED), {
            "checked": cert.to_json_dict(),
            "reproduced": ok,
        }
    if args.d is None or args.c is None or args.m is None:
        raise ValueError("certify needs --d, --c and --m (or --check FILE)")
    witnesses = None
    if args.witnesses:
        with open(args.witnesses, encoding="utf-8") as handle:
            raw = json.load(handle)
        witnesses = {int(n): int(p) for n, p in raw.items()}
    cert = maximality_certificate(
        args.d, _parse_int(args.c), args.m, witnesses=witnesses,
        scan_budget=args.budget,
    )
    return (OK if cert.complete else VERIFICATION_FAILED), cert.to_json_dict()


def _cmd_factor(args) -> tuple[str, dict]:
    fact = factorize(_parse_int(args.x), rho_iterations=args.budget)
    return OK, {
        "x": args.x,
        "factors": [{"p": str(p), "e": e} for p, e in fact.factors],
        "cofactor": str(fact.cofactor),
        "complete": fact.complete,
    }


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="critorbit",
        description="Critical-orbit arithmetic for x^d + c over residue rings",
    )
    parser.add_argument("--seed", type=int, default=None, help="reseed randomized internals")
    parser.add_argument("--meta", action="store_true", help="attach run metadata")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text):
        cmd = sub.add_parser(name, help=help_text)
        cmd.set_defaults(handler=handler)
        return cmd

    cmd = add("orbit", _cmd_orbit, "period type of the critical orbit in Z/p^t")
    cmd.add_argument("--d", type=int, required=True)
    cmd.add_argument("--p", type=int, required=True)
    cmd.add_argument("--t", type=int, default=1)
    cmd.add_argument("--c", required=True)

    cmd = add("valuation", _cmd_valuation, "nu_p of the n-th orbit numerator")
    cmd.add_argument("--d", type=int, required=True)
    cmd.add_argument("--c", required=True)
    cmd.add_argument("--n", type=int, required=True)
    cmd.add_argument("--p", type=int, required=True)
    cmd.add_argument("--cap", type=int, default=1 << 16)

    cmd = add("primitive", _cmd_primitive, "primitive-divisor test with valuation")
    cmd.add_argument("--d", type=int, required=True)
    cmd.add_argument("--c", required=True, help="integer or a/b")
    cmd.add_argument("--n", type=int, required=True)
    cmd.add_argument("--p", type=int, required=True)

    cmd = add("gleason", _cmd_gleason, "period-n Gleason polynomial coefficients")
    cmd.add_argument("--d", type=int, required=True)
    cmd.add_argument("--n", type=int, required=True)

    cmd = add("disc", _cmd_disc, "discriminant of the period-n Gleason polynomial")
    cmd.add_argument("--d", type=int, required=True)
    cmd.add_argument("--n", type=int, required=True)

    cmd = add("roots", _cmd_roots, "its F_p roots with multiplicities")
    cmd.add_argument("--d", type=int, required=True)
    cmd.add_argument("--n", type=int, required=True)
    cmd.add_argument("--p", type=int, required=True)

    cmd = add("lift", _cmd_lift, "Newton-lift a base parameter to Z/p^N")
    cmd.add_argument("--d", type=int, required=True)
    cmd.add_argument("--n", type=int, required=True)
    cmd.add_argument("--p", type=int, required=True)
    cmd.add_argument("--c0", required=True)
    cmd.add_argument("--precision", type=int, required=True)

    cmd = add("adjust", _cmd_adjust, "lift then force nu_p(f^n(0)) = r exactly")
    cmd.add_argument("--d", type=int, required=True)
    cmd.add_argument("--n", type=int, required=True)
    cmd.add_argument("--p", type=int, required=True)
    cmd.add_argument("--c0", required=True)
    cmd.add_argument("--r", type=int, required=True)
    cmd.add_argument("--precision", type=int, default=None)

    cmd = add("construct", _cmd_construct, "build c realizing a divisibility spec")
    cmd.add_argument("--spec", required=True, help="JSON spec file")

    cmd = add("verify", _cmd_verify, "verify a claimed (c, spec) pair")
    cmd.add_argument("--d", type=int, required=True)
    cmd.add_argument("--c", required=True)
    cmd.add_argument("--spec", required=True)

    cmd = add("pcf", _cmd_pcf, "census of critically finite parameters over F_p")
    cmd.add_argument("--d", type=int, required=True)
    cmd.add_argument("--p", type=int, required=True)

    cmd = add("condition", _cmd_condition, "simple-root condition checks")
    cmd.add_argument("--d", type=int, required=True)
    cmd.add_argument("--p", type=int, required=True)
    cmd.add_argument("--n", type=int, default=None)
    cmd.add_argument("--max-period", type=int, default=None)

    cmd = add("correspond", _cmd_correspond, "lifted census in Z/p^N")
    cmd.add_argument("--d", type=int, required=True)
    cmd.add_argument("--p", type=int, required=True)
    cmd.add_argument("--precision", type=int, required=True)

    cmd = add("density", _cmd_density, "prime-density formulas and empirical scan")
    cmd.add_argument("--d", type=int, required=True)
    cmd.add_argument("--n", type=int, required=True)
    cmd.add_argument("--limit", type=int, required=True)
    cmd.add_argument("--json", action="store_true", help="JSON report (the default)")
    cmd.add_argument("--csv", action="store_true")
    cmd.add_argument("--threads", type=int, default=1)

    cmd = add("bound", _cmd_bound, "upper bound on the primitive-prime count")
    cmd.add_argument("--d", type=int, required=True)
    cmd.add_argument("--n", type=int, required=True)
    cmd.add_argument("--c", required=True)

    cmd = add("rho", _cmd_rho, "count primitive primes by factoring a_n")
    cmd.add_argument("--d", type=int, required=True)
    cmd.add_argument("--c", required=True)
    cmd.add_argument("--n", type=int, required=True)
    cmd.add_argument("--budget", type=int, default=200_000)

    cmd = add("certify", _cmd_certify, "Galois-maximality witness certificate")
    cmd.add_argument("--d", type=int, default=None)
    cmd.add_argument("--c", default=None)
    cmd.add_argument("--m", type=int, default=None)
    cmd.add_argument("--witnesses", default=None, help="JSON map iterate -> prime")
    cmd.add_argument("--budget", type=int, default=100_000)
    cmd.add_argument("--check", default=None, help="re-verify a certificate JSON file")

    cmd = add("factor", _cmd_factor, "bounded integer factorization")
    cmd.add_argument("--x", required=True)
    cmd.add_argument("--budget", type=int, default=200_000)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.seed is not None:
        set_random_seed(args.seed)
    try:
        outcome = args.handler(args)
    except HenselHypothesisError as exc:
        outcome = (
            INVALID_INPUT,
            {
                "error": str(exc),
                "nu_value": exc.nu_value,
                "nu_derivative": exc.nu_derivative,
            },
        )
    except SearchExhaustedError as exc:
        outcome = (EXHAUSTED, {"error": str(exc), "bound": exc.bound})
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        outcome = (INVALID_INPUT, {"error": str(exc)})
    if outcome is None:  # CSV mode wrote raw rows already
        return 0
    status, payload = outcome
    doc = {"status": status, "payload": payload}
    if args.meta:
        doc["meta"] = {
            "version": __version__,
            "timestamp": datetime.datetime.now(datetime.timezone.utc).isoformat(),
        }
    json.dump(doc, sys.stdout, sort_keys=True, indent=2)
    sys.stdout.write("\n")
    return _EXIT_CODES[status]


if __name__ == "__main__":
    sys.exit(main())
