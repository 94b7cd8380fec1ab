"""Density of primes admitting a parameter with critical period exactly n.

Such primes are precisely those where the period-n Gleason polynomial has a
root, so their density equals the fixed-point proportion of the polynomial's
Galois group acting on its roots.  Under a full symmetric group that
proportion is the derangement-complement sum, which tends to 1 - 1/e; a crude
unconditional lower bound is 1/D!.  The empirical side scans primes up to a
limit and counts root existence, skipping (and reporting) the finitely many
primes dividing d or the discriminant.

All formula paths are exact rationals; floats appear only in display code.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import NamedTuple

from .arith import primes_up_to
from .gleason import gleason_degree, gleason_discriminant, gleason_poly, has_root_mod_p

CONDITIONAL_NOTE = "valid only under symmetric Galois group"


def fpp_symmetric(degree: int) -> Fraction:
    """Fraction of S_D permutations fixing at least one point:
    sum_{i=1..D} (-1)^(i+1) / i!."""
    if degree < 1:
        raise ValueError("degree must be >= 1")
    total = Fraction(0)
    for i in range(1, degree + 1):
        total += Fraction((-1) ** (i + 1), factorial(i))
    return total


def density_lower_bound(d: int, n: int) -> Fraction:
    """The unconditional bound 1 / D_{d,n}!."""
    return Fraction(1, factorial(gleason_degree(d, n)))


class LimitErrorBound(NamedTuple):
    bound: Fraction  # 1/(D+1)!
    coarse: Fraction  # 1/(2^(n-2))!


def limit_error_bound(n: int) -> LimitErrorBound:
    """Distance bounds between the degree-2 density and its limit 1 - 1/e."""
    if n < 2:
        raise ValueError("the limit bound is stated for n >= 2")
    degree = gleason_degree(2, n)
    return LimitErrorBound(
        bound=Fraction(1, factorial(degree + 1)),
        coarse=Fraction(1, factorial(2 ** (n - 2))),
    )


class EmpiricalDensity(NamedTuple):
    limit: int
    hits: int
    total: int
    fraction: Fraction
    skipped: tuple[int, ...]  # primes dividing d or the discriminant


def _scan_chunk(args: tuple[int, int, list[int]]) -> tuple[int, int, list[int]]:
    d, n, chunk = args
    poly = gleason_poly(d, n)
    disc = gleason_discriminant(d, n)
    hits = total = 0
    skipped = []
    for p in chunk:
        if d % p == 0 or disc % p == 0:
            skipped.append(p)
            continue
        total += 1
        if poly.degree >= 1 and has_root_mod_p(poly, p):
            hits += 1
    return hits, total, skipped


def empirical_density(d: int, n: int, limit: int, jobs: int = 1) -> EmpiricalDensity:
    """Fraction of primes p <= limit where the period-n Gleason polynomial has
    an F_p root.  Primes dividing d or the discriminant are excluded from both
    numerator and denominator and reported separately.

    ``jobs`` > 1 splits the prime range into contiguous chunks scanned in
    worker processes; the ordered merge keeps the result deterministic.
    """
    if limit < 2:
        raise ValueError("limit must be >= 2")
    primes = primes_up_to(limit)
    if jobs <= 1 or len(primes) < 4 * jobs:
        hits, total, skipped = _scan_chunk((d, n, primes))
    else:
        from concurrent.futures import ProcessPoolExecutor

        size = -(-len(primes) // jobs)
        chunks = [primes[i : i + size] for i in range(0, len(primes), size)]
        hits = total = 0
        skipped = []
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for h, t, s in pool.map(_scan_chunk, [(d, n, ch) for ch in chunks]):
                hits += h
                total += t
                skipped.extend(s)
    fraction = Fraction(hits, total) if total else Fraction(0)
    return EmpiricalDensity(limit, hits, total, fraction, tuple(skipped))


def density_scan_rows(d: int, n: int, limit: int) -> list[tuple[int, bool]]:
    """Per-prime (p, has_root) rows for external plotting; same skip rule."""
    poly = gleason_poly(d, n)
    disc = gleason_discriminant(d, n)
    rows = []
    for p in primes_up_to(limit):
        if d % p == 0 or disc % p == 0:
            continue
        rows.append((p, poly.degree >= 1 and has_root_mod_p(poly, p)))
    return rows


@dataclass(frozen=True)
class DensityReport:
    d: int
    n: int
    degree: int
    conditional_density: Fraction
    conditional_note: str
    lower_bound: Fraction
    empirical: EmpiricalDensity
    error_bound_vs_limit: Fraction | None

    def to_json_dict(self) -> dict:
        emp = self.empirical
        return {
            "d": self.d,
            "n": self.n,
            "degree": self.degree,
            "conditional_density": str(self.conditional_density),
            "conditional_density_float": float(self.conditional_density),
            "conditional_note": self.conditional_note,
            "lower_bound": str(self.lower_bound),
            "empirical": {
                "limit": emp.limit,
                "hits": emp.hits,
                "total": emp.total,
                "fraction": str(emp.fraction),
                "fraction_float": float(emp.fraction),
                "skipped_primes": [str(p) for p in emp.skipped],
            },
            "error_bound_vs_limit": (
                None if self.error_bound_vs_limit is None
                else str(self.error_bound_vs_limit)
            ),
        }


def density_report(d: int, n: int, limit: int, jobs: int = 1) -> DensityReport:
    degree = gleason_degree(d, n)
    return DensityReport(
        d=d,
        n=n,
        degree=degree,
        conditional_density=fpp_symmetric(degree),
        conditional_note=CONDITIONAL_NOTE,
        lower_bound=density_lower_bound(d, n),
        empirical=empirical_density(d, n, limit, jobs=jobs),
        error_bound_vs_limit=(
            limit_error_bound(n).bound if d == 2 and n >= 2 else None
        ),
    )
