"""Upper bounds on primitive-prime counts, brute-force counting, and
Galois-maximality certificates.

The count of primitive prime divisors of the n-th orbit numerator a_n is at
most log2|a_n|, and |a_n| admits piecewise height bounds depending on where c
sits relative to -2, -2^(1/(d-1)), 0 and 1.  Interval membership is decided by
exact integer comparison, never floating point.

A maximality certificate collects, for each iterate n <= m, a witness prime
whose exact power in a_n is coprime to d (and which does not divide d); such
witnesses force the n-th iterated Galois layer to be as large as possible.
Witness valuations are always computed with modular orbits, so certificates
scale to iterates whose exact values would have billions of digits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import gcd, isqrt

from .arith import factorize, next_prime
from .errors import SizeGuardError, ZeroIterateError
from .orbit import (
    RationalParam,
    classify_integer_param,
    exact_iterate,
    is_primitive_divisor,
)

_FACTOR_DIGIT_GUARD = 100_000
_DEFAULT_PRIME_SCAN_BUDGET = 100_000


def height(c) -> int:
    """max(|a|, b) for c = a/b in lowest terms."""
    param = RationalParam.of(c)
    return max(abs(param.a), param.b)


def _log2_abs(x: int) -> float:
    if x == 0:
        raise ValueError("log2 of zero")
    x = abs(x)
    if x.bit_length() <= 900:
        return math.log2(x)
    head = x >> (x.bit_length() - 64)
    return (x.bit_length() - 64) + math.log2(head)


def rho_upper_bound(d: int, n: int, c) -> float:
    """Piecewise upper bound on the number of primitive prime divisors of a_n.

    Requires an infinite critical orbit; odd-degree negative parameters reduce
    to their positive mirror (the orbit values only change sign) before the
    case dispatch.
    """
    param = RationalParam.of(c)
    if d < 2 or n < 1:
        raise ValueError("need d >= 2 and n >= 1")
    if param.is_integer:
        kind = classify_integer_param(d, param.a)
        if kind.kind == "PCF-integer":
            raise ValueError(
                f"infinite-orbit precondition fails: {kind.reason} is critically finite"
            )
    a, b = param.a, param.b
    if d % 2 == 1 and a < 0:
        a = -a
    scale = d ** (n - 1)
    log_a1 = _log2_abs(a)
    log_b = _log2_abs(b) if b > 1 else 0.0
    if d % 2 == 0:
        if a <= -2 * b:
            return scale * log_a1
        if a < 0 and a ** (d - 1) < -2 * b ** (d - 1):
            return scale * (3 + log_b) - 1
        if a < 0:
            return (scale - 1) * log_b + log_a1
    if 0 < a < b:
        return (scale - 1) * (1 / (d - 1) + log_b) + log_a1
    if a >= b:
        return scale * (1 / (d - 1) + log_a1) - 1 / (d - 1)
    return rho_upper_bound_general(d, n, param)


def rho_upper_bound_general(d: int, n: int, c) -> float:
    """The coarse bound valid for every parameter with infinite critical orbit."""
    param = RationalParam.of(c)
    scale = d ** (n - 1)
    return scale * (3 + _log2_abs(height(param))) + _log2_abs(param.a)


def count_primitive_primes(
    d: int,
    c,
    n: int,
    trial_limit: int = 10**6,
    rho_iterations: int = 200_000,
) -> tuple[int, bool]:
    """Count primitive prime divisors of a_n by factoring it.

    Returns (count, complete); with an incomplete factorization the count is a
    lower bound over the primes actually found.
    """
    param = RationalParam.of(c)
    a_n, _ = exact_iterate(d, param, n)
    if a_n == 0:
        raise ZeroIterateError(f"f^{n}(0) = 0 for c = {param}")
    if abs(a_n) == 1:
        return 0, True
    fact = factorize(abs(a_n), trial_limit=trial_limit, rho_iterations=rho_iterations)
    count = 0
    for p in fact.primes():
        primitive, _ = is_primitive_divisor(d, param, n, p)
        if primitive:
            count += 1
    return count, fact.complete


def euler_phi(n: int) -> int:
    fact = factorize(n) if n > 1 else None
    out = 1
    if fact is None:
        return 1
    if not fact.complete:
        raise ValueError(f"cannot compute the totient of {n}: incomplete factorization")
    for p, e in fact.factors:
        out *= p ** (e - 1) * (p - 1)
    return out


@dataclass(frozen=True)
class CertificateEntry:
    """Witness prime for one iterate: valid iff primitive, nu coprime to d,
    and p does not divide d."""

    n: int
    p: int
    valuation: int
    primitive: bool
    valuation_coprime_to_degree: bool
    prime_coprime_to_degree: bool

    @property
    def valid(self) -> bool:
        return (
            self.primitive
            and self.valuation_coprime_to_degree
            and self.prime_coprime_to_degree
        )

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "p": str(self.p),
            "valuation": self.valuation,
            "checks": {
                "primitive": self.primitive,
                "valuation_coprime_to_degree": self.valuation_coprime_to_degree,
                "prime_coprime_to_degree": self.prime_coprime_to_degree,
            },
            "valid": self.valid,
        }


@dataclass(frozen=True)
class MaximalityCertificate:
    d: int
    c: int
    m: int
    entries: tuple[CertificateEntry, ...]
    missing: tuple[int, ...]  # iterates with no witness found within budget
    neg_c_is_square: bool | None  # d = 2 irreducibility note; None for d > 2

    @property
    def complete(self) -> bool:
        return not self.missing and all(e.valid for e in self.entries)

    @property
    def claimed_order_exponent(self) -> int | None:
        """Order phi(d) * d^(d^m - 1) as (totient, base, exponent); exponent part."""
        return self.d**self.m - 1 if self.complete else None

    def to_json_dict(self) -> dict:
        order = None
        if self.complete:
            exponent = self.d**self.m - 1
            order = {
                "totient_factor": euler_phi(self.d),
                "base": self.d,
                "exponent": str(exponent),
            }
            if exponent * math.log10(self.d) < 60:
                order["decimal"] = str(euler_phi(self.d) * self.d**exponent)
        return {
            "d": self.d,
            "c": str(self.c),
            "m": self.m,
            "entries": [e.to_json_dict() for e in self.entries],
            "missing": list(self.missing),
            "neg_c_is_square": self.neg_c_is_square,
            "complete": self.complete,
            "claimed_order": order,
        }

    @classmethod
    def from_json_dict(cls, doc: dict) -> "MaximalityCertificate":
        try:
            entries = tuple(
                CertificateEntry(
                    n=int(e["n"]),
                    p=int(e["p"]),
                    valuation=int(e["valuation"]),
                    primitive=bool(e["checks"]["primitive"]),
                    valuation_coprime_to_degree=bool(
                        e["checks"]["valuation_coprime_to_degree"]
                    ),
                    prime_coprime_to_degree=bool(
                        e["checks"]["prime_coprime_to_degree"]
                    ),
                )
                for e in doc["entries"]
            )
            return cls(
                d=int(doc["d"]),
                c=int(doc["c"]),
                m=int(doc["m"]),
                entries=entries,
                missing=tuple(int(n) for n in doc.get("missing", [])),
                neg_c_is_square=doc.get("neg_c_is_square"),
            )
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed certificate: {exc}") from exc


def _entry_for(d: int, c: int, n: int, p: int) -> CertificateEntry:
    primitive, valuation = is_primitive_divisor(d, c, n, p)
    return CertificateEntry(
        n=n,
        p=p,
        valuation=valuation,
        primitive=primitive,
        valuation_coprime_to_degree=valuation > 0 and gcd(valuation, d) == 1,
        prime_coprime_to_degree=d % p != 0,
    )


def _search_witness(
    d: int, c: int, n: int, scan_budget: int
) -> CertificateEntry | None:
    # factor-based candidates first, when the exact iterate is desk-scale;
    # rho only below ~120 digits (it cannot split numbers that size anyway,
    # and each iteration costs a full-width modular square)
    try:
        a_n, _ = exact_iterate(d, c, n, digit_guard=_FACTOR_DIGIT_GUARD)
    except SizeGuardError:
        a_n = None
    if a_n is not None and abs(a_n) > 1:
        rho = 200_000 if len(str(abs(a_n))) <= 120 else 0
        fact = factorize(abs(a_n), rho_iterations=rho)
        for p in fact.primes():
            if d % p == 0:
                continue
            entry = _entry_for(d, c, n, p)
            if entry.valid:
                return entry
    p = 2
    for _ in range(scan_budget):
        if d % p != 0:
            try:
                entry = _entry_for(d, c, n, p)
            except ZeroIterateError:
                raise
            if entry.valid:
                return entry
        p = next_prime(p)
    return None


def maximality_certificate(
    d: int,
    c: int,
    m: int,
    witnesses: dict[int, int] | None = None,
    scan_budget: int = _DEFAULT_PRIME_SCAN_BUDGET,
) -> MaximalityCertificate:
    """Build a per-iterate witness certificate for iterates 1..m.

    ``witnesses`` pins candidate primes per iterate (verification mode); any
    iterate without a pinned prime is searched: candidates from factoring a_n
    when feasible, then an ascending prime scan with the given budget.  Gaps
    are recorded, not raised.
    """
    if m < 1:
        raise ValueError("need m >= 1")
    entries = []
    missing = []
    for n in range(1, m + 1):
        pinned = witnesses.get(n) if witnesses else None
        if pinned is not None:
            entries.append(_entry_for(d, c, n, pinned))
            continue
        found = _search_witness(d, c, n, scan_budget)
        if found is None:
            missing.append(n)
        else:
            entries.append(found)
    neg_c_is_square = None
    if d == 2:
        neg = -c
        neg_c_is_square = neg >= 0 and isqrt(neg) ** 2 == neg
    return MaximalityCertificate(
        d=d,
        c=c,
        m=m,
        entries=tuple(entries),
        missing=tuple(missing),
        neg_c_is_square=neg_c_is_square,
    )


def verify_certificate(cert: MaximalityCertificate) -> bool:
    """Recompute every entry from scratch; True iff all reproduce and are valid."""
    for entry in cert.entries:
        fresh = _entry_for(cert.d, cert.c, entry.n, entry.p)
        if fresh != entry or not fresh.valid:
            return False
    return not cert.missing
