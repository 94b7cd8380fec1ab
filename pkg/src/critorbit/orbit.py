"""Critical-orbit computations for x^d + c over Z/p^t and exact integers.

The critical point of x^d + c is 0; its forward orbit in a finite ring is
eventually periodic, and the period type (tail, period) of that orbit is the
basic observable everything else is built on.  For rational parameters
c = a/b the iterates are a_n / b^(d^(n-1)) where the integer numerators obey

    a_1 = a,   a_{i+1} = a_i^d + a * b^(d^i - 1),

so valuations at primes not dividing b reduce to modular orbits of that
recurrence.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import NamedTuple

from .arith import Residue, is_prime
from .errors import SizeGuardError, ZeroIterateError

_HASH_ORBIT_LIMIT = 10**6  # switch to Brent cycle detection beyond this
_DEFAULT_VALUATION_CAP = 1 << 16
_DEFAULT_DIGIT_GUARD = 2_000_000


@dataclass(frozen=True)
class PeriodType:
    """Tail length and exact period of a preperiodic orbit; tail 0 = periodic."""

    tail: int
    period: int

    def __post_init__(self):
        if self.tail < 0 or self.period < 1:
            raise ValueError("need tail >= 0 and period >= 1")


@dataclass(frozen=True)
class RationalParam:
    """A parameter c = a/b in lowest terms with b >= 1."""

    a: int
    b: int = 1

    def __post_init__(self):
        if self.b < 1:
            raise ValueError("denominator must be positive")
        if gcd(self.a, self.b) != 1:
            raise ValueError("a/b must be in lowest terms")

    @classmethod
    def from_string(cls, text: str) -> "RationalParam":
        frac = Fraction(text.strip())
        return cls(frac.numerator, frac.denominator)

    @classmethod
    def of(cls, c) -> "RationalParam":
        if isinstance(c, RationalParam):
            return c
        if isinstance(c, int):
            return cls(c, 1)
        if isinstance(c, Fraction):
            return cls(c.numerator, c.denominator)
        raise TypeError(f"cannot interpret {c!r} as a rational parameter")

    @property
    def is_integer(self) -> bool:
        return self.b == 1

    def as_fraction(self) -> Fraction:
        return Fraction(self.a, self.b)

    def __str__(self) -> str:
        return str(self.a) if self.b == 1 else f"{self.a}/{self.b}"


@dataclass(frozen=True)
class OrbitClassification:
    """Integer parameters split into the three finite-orbit families and the rest."""

    kind: str  # "PCF-integer" | "presumed-wandering"
    reason: str  # "c=0" | "c=-1 & d even" | "c=-2 & d=2" | "none"


def classify_integer_param(d: int, c: int) -> OrbitClassification:
    """Classify an integer parameter: finite critical orbit or (presumed) infinite."""
    if c == 0:
        return OrbitClassification("PCF-integer", "c=0")
    if c == -1 and d % 2 == 0:
        return OrbitClassification("PCF-integer", "c=-1 & d even")
    if c == -2 and d == 2:
        return OrbitClassification("PCF-integer", "c=-2 & d=2")
    return OrbitClassification("presumed-wandering", "none")


def _step(x: int, d: int, c: int, modulus: int) -> int:
    if d == 2:
        return (x * x + c) % modulus
    return (pow(x, d, modulus) + c) % modulus


def _orbit_period_ints(d: int, c: int, modulus: int) -> tuple[int, int, int]:
    """Minimal (tail, period) of 0 under x -> x^d + c in Z/modulus, plus the
    first point on the cycle.  Hash-map detection while the visited count is
    small; Brent's algorithm (constant memory) beyond."""
    seen: dict[int, int] = {}
    x = 0
    i = 0
    while x not in seen:
        if i >= _HASH_ORBIT_LIMIT:
            return _orbit_period_brent(d, c, modulus)
        seen[x] = i
        x = _step(x, d, c, modulus)
        i += 1
    # the first revisited value is the cycle entry f^tail(0)
    tail = seen[x]
    return tail, i - tail, x


def _orbit_period_brent(d: int, c: int, modulus: int) -> tuple[int, int, int]:
    power = period = 1
    tortoise = 0
    hare = _step(0, d, c, modulus)
    while tortoise != hare:
        if power == period:
            tortoise = hare
            power *= 2
            period = 0
        hare = _step(hare, d, c, modulus)
        period += 1
    tortoise = hare = 0
    for _ in range(period):
        hare = _step(hare, d, c, modulus)
    tail = 0
    while tortoise != hare:
        tortoise = _step(tortoise, d, c, modulus)
        hare = _step(hare, d, c, modulus)
        tail += 1
    return tail, period, tortoise


def period_type_mod(d: int, c: Residue) -> tuple[PeriodType, int]:
    """Period type of the critical orbit in Z/p^t, plus the cycle-entry value."""
    if d < 2:
        raise ValueError("degree must be >= 2")
    tail, period, entry = _orbit_period_ints(d, c.value, c.modulus)
    return PeriodType(tail, period), entry


def point_period_type_mod(d: int, c: Residue, start: int) -> tuple[PeriodType, int]:
    """Period type of an arbitrary starting point in Z/p^t, plus the cycle entry."""
    if d < 2:
        raise ValueError("degree must be >= 2")
    modulus = c.modulus
    seen: dict[int, int] = {}
    x = start % modulus
    i = 0
    while x not in seen:
        seen[x] = i
        x = _step(x, d, c.value, modulus)
        i += 1
    tail = seen[x]
    return PeriodType(tail, i - tail), x


def _an_mod(d: int, a: int, b: int, n: int, modulus: int) -> list[int]:
    """The numerators a_1..a_n of the critical orbit of c = a/b, mod modulus."""
    values = []
    x = a % modulus
    values.append(x)
    exponent = d  # d^i for i = 1 at the first loop turn
    for _ in range(n - 1):
        x = (pow(x, d, modulus) + a * pow(b, exponent - 1, modulus)) % modulus
        values.append(x)
        exponent *= d
    return values


class Valuation(NamedTuple):
    """A p-adic valuation; ``exact=False`` means only "at least value" is known."""

    value: int
    exact: bool


def iterate_valuation(
    d: int, c, n: int, p: int, cap: int = _DEFAULT_VALUATION_CAP
) -> Valuation:
    """nu_p of the n-th orbit numerator a_n, by adaptive-precision modular orbits.

    Starts at precision p^8 and doubles until a_n is nonzero mod p^T; if the
    cap is reached the result is the flag "at least cap".
    """
    param = RationalParam.of(c)
    if n < 1:
        raise ValueError("iterate index must be >= 1")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if param.b % p == 0:
        raise ValueError("p divides the denominator; no numerator valuation at p")
    t = 8
    while True:
        t = min(t, cap)
        an = _an_mod(d, param.a, param.b, n, p**t)[-1]
        if an != 0:
            v = 0
            while an % p == 0:
                an //= p
                v += 1
            return Valuation(v, True)
        if t >= cap:
            return Valuation(cap, False)
        t *= 2


def is_primitive_divisor(d: int, c, n: int, p: int) -> tuple[bool, int]:
    """Whether p divides a_n but none of a_1..a_{n-1}; returns (flag, nu_p(a_n)).

    Precondition: p does not divide the denominator of c, and a_n != 0.
    """
    param = RationalParam.of(c)
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if param.b % p == 0:
        raise ValueError("p divides the denominator of c")
    if _iterate_is_exactly_zero(d, param, n):
        raise ZeroIterateError(f"f^{n}(0) = 0 for c = {param} (PCF collision)")
    values = _an_mod(d, param.a, param.b, n, p)
    if values[-1] != 0:
        return False, 0
    primitive = all(v != 0 for v in values[:-1])
    nu = iterate_valuation(d, param, n, p)
    return primitive, nu.value


def _iterate_is_exactly_zero(d: int, param: RationalParam, n: int) -> bool:
    # a_n = 0 happens only for the integer PCF families with 0 in the cycle:
    # c = 0 (all n) and c = -1 with d even (even n).
    if not param.is_integer:
        return False
    if param.a == 0:
        return True
    if param.a == -1 and d % 2 == 0:
        return n % 2 == 0
    return False


def orbit_with_derivative(d: int, c: Residue, n: int) -> tuple[Residue, Residue]:
    """(f^n(0), d/dc f^n(0)) in Z/p^t via the coupled forward recurrence
    v <- v^d + c, w <- d * v^(d-1) * w + 1 from (v, w) = (0, 0)."""
    if n < 1:
        raise ValueError("iterate index must be >= 1")
    modulus = c.modulus
    v, w = 0, 0
    for _ in range(n):
        w = (d * pow(v, d - 1, modulus) * w + 1) % modulus
        v = _step(v, d, c.value, modulus)
    return Residue(c.p, c.t, v), Residue(c.p, c.t, w)


def exact_iterate(
    d: int, c, n: int, digit_guard: int = _DEFAULT_DIGIT_GUARD
) -> tuple[int, int]:
    """Exact numerator a_n and the denominator exponent d^(n-1).

    Refuses (with a size estimate) when a_n would exceed the digit guard:
    a_n has roughly d^(n-1) * digits(h(c)) digits.
    """
    param = RationalParam.of(c)
    if n < 1:
        raise ValueError("iterate index must be >= 1")
    height = max(abs(param.a), param.b, 2)
    estimated = d ** (n - 1) * (len(str(height)) + 1)
    if estimated > digit_guard:
        raise SizeGuardError(
            f"a_{n} would have ~{estimated} digits (guard {digit_guard})", estimated
        )
    x = param.a
    exponent = d
    for _ in range(n - 1):
        x = x**d + param.a * param.b ** (exponent - 1)
        exponent *= d
    return x, d ** (n - 1)


def multiplier_mod_p(d: int, c: int, r: int, p: int) -> tuple[PeriodType, int]:
    """Period type of r mod p and the multiplier of its eventual cycle,
    lambda = d^period * prod f^(tail+i)(r)^(d-1) mod p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    seen: dict[int, int] = {}
    x = r % p
    i = 0
    while x not in seen:
        seen[x] = i
        x = _step(x, d, c, p)
        i += 1
    tail = seen[x]
    period = i - tail
    entry = next(v for v, idx in seen.items() if idx == tail)
    lam = pow(d, period, p)
    y = entry
    for _ in range(period):
        lam = lam * pow(y, d - 1, p) % p
        y = _step(y, d, c, p)
    return PeriodType(tail, period), lam
