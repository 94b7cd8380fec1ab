"""Integer arithmetic primitives: valuations, CRT, Moebius, primality,
bounded factorization, and residues of Z/p^t.

Everything here is exact arbitrary-precision arithmetic on Python ints.
Primality is deterministic below the 3.3e24 Miller-Rabin bound (which covers
2^64) and probabilistic with error < 2^-128 above it.  The random witnesses
come from a module RNG with a fixed default seed so results are reproducible;
reseed with :func:`set_random_seed`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd, isqrt

# Deterministic Miller-Rabin witness set for n < 3317044064679887385961981
# (Sorenson-Webster), which covers everything below 2^64 and then some.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981
_MR_RANDOM_ROUNDS = 64  # error probability <= 4^-64 = 2^-128

_SIEVE_LIMIT = 10**7  # sieving beyond this is out of scope

_rng = random.Random(0x5EED)


def set_random_seed(seed: int) -> None:
    """Reseed the RNG behind probabilistic primality and Pollard rho."""
    _rng.seed(seed)


def _miller_rabin_round(n: int, a: int, d: int, r: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Miller-Rabin primality test; deterministic for n below ~3.3e24."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    if n < _MR_DETERMINISTIC_BOUND:
        witnesses = _MR_WITNESSES
    else:
        witnesses = tuple(_rng.randrange(2, n - 1) for _ in range(_MR_RANDOM_ROUNDS))
    return all(_miller_rabin_round(n, a, d, r) for a in witnesses)


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than n."""
    k = max(n + 1, 2)
    if k > 2 and k % 2 == 0:
        k += 1
    while not is_prime(k):
        k += 1 if k == 2 else 2
    return k


def primes_up_to(limit: int) -> list[int]:
    """All primes <= limit by a sieve of Eratosthenes (limit <= 10^7)."""
    if limit > _SIEVE_LIMIT:
        raise ValueError(f"sieve limit {limit} exceeds supported bound {_SIEVE_LIMIT}")
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for i in range(2, isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return [i for i in range(limit + 1) if flags[i]]


def val_p(x: int, p: int) -> int:
    """The p-adic valuation of a nonzero integer: largest e with p^e | x."""
    if x == 0:
        raise ValueError("infinite valuation: val_p(0) is undefined")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    e = 0
    while x % p == 0:
        x //= p
        e += 1
    return e


def crt(pairs: list[tuple[int, int]]) -> int:
    """Combine congruences x = v_i (mod m_i) with pairwise coprime moduli.

    Returns the least nonnegative solution in [0, prod m_i).
    """
    if not pairs:
        raise ValueError("crt requires at least one congruence")
    value, modulus = 0, 1
    for v, m in pairs:
        if m <= 1:
            raise ValueError(f"modulus {m} must exceed 1")
        if gcd(modulus, m) != 1:
            raise ValueError("moduli are not pairwise coprime")
        # x = value + modulus * t with t chosen so x = v (mod m)
        t = (v - value) * pow(modulus, -1, m) % m
        value += modulus * t
        modulus *= m
    return value % modulus


def moebius(n: int) -> int:
    """The Moebius function mu(n)."""
    if n < 1:
        raise ValueError("moebius is defined for positive integers")
    if n == 1:
        return 1
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


@dataclass(frozen=True)
class Factorization:
    """Possibly-partial factorization: prod p^e times cofactor equals the input.

    ``complete`` is True exactly when the cofactor is 1.  The primes are
    strictly increasing and each passes a primality check.
    """

    factors: tuple[tuple[int, int], ...]
    cofactor: int
    complete: bool

    def __post_init__(self):
        primes = [p for p, _ in self.factors]
        if primes != sorted(set(primes)):
            raise ValueError("factor primes must be strictly increasing")
        if any(not is_prime(p) for p in primes):
            raise ValueError("every listed factor must be prime")
        if any(e < 1 for _, e in self.factors):
            raise ValueError("factor exponents must be positive")
        if self.complete != (self.cofactor == 1):
            raise ValueError("complete flag inconsistent with cofactor")

    @property
    def value(self) -> int:
        out = self.cofactor
        for p, e in self.factors:
            out *= p**e
        return out

    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]


def _brent_rho(n: int, max_iterations: int) -> int | None:
    """Brent's variant of Pollard rho; returns a nontrivial factor or None."""
    if n % 2 == 0:
        return 2
    spent = 0
    while spent < max_iterations:
        y = _rng.randrange(1, n)
        c = _rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1 and spent < max_iterations:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            spent += r
            r <<= 1
        if g == n:
            # backtrack step by step from the last saved point
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if 1 < g < n:
            return g
    return None


def factorize(x: int, trial_limit: int = 10**6, rho_iterations: int = 200_000) -> Factorization:
    """Factor x > 1 by trial division then Brent rho with a bounded budget.

    Budget exhaustion is a normal outcome: the unfactored part is returned as
    a composite cofactor with ``complete=False``.
    """
    if x <= 1:
        raise ValueError("factorize requires an integer > 1")
    counts: dict[int, int] = {}
    rest = x
    for p in (2, 3, 5):
        while rest % p == 0:
            counts[p] = counts.get(p, 0) + 1
            rest //= p
    d = 7
    wheel = (4, 2, 4, 2, 4, 6, 2, 6)  # mod-30 wheel starting at 7
    wi = 0
    while d <= trial_limit and d * d <= rest:
        if rest % d == 0:
            e = 0
            while rest % d == 0:
                rest //= d
                e += 1
            counts[d] = e
        d += wheel[wi]
        wi = (wi + 1) % len(wheel)
    cofactor = 1
    pending = [rest] if rest > 1 else []
    while pending:
        m = pending.pop()
        if m == 1:
            continue
        if is_prime(m):
            counts[m] = counts.get(m, 0) + 1
            continue
        root = isqrt(m)
        if root * root == m:
            pending.extend((root, root))
            continue
        f = _brent_rho(m, rho_iterations)
        if f is None:
            cofactor *= m
        else:
            pending.extend((f, m // f))
    return Factorization(
        factors=tuple(sorted(counts.items())),
        cofactor=cofactor,
        complete=(cofactor == 1),
    )


@dataclass(frozen=True)
class Residue:
    """An element of Z/p^t with the prime and exponent carried explicitly.

    Values are stored fully reduced into [0, p^t); arithmetic reduces eagerly.
    """

    p: int
    t: int
    value: int

    def __post_init__(self):
        if self.t < 1:
            raise ValueError("exponent t must be >= 1")
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if not 0 <= self.value < self.p**self.t:
            raise ValueError("value out of range [0, p^t)")

    @classmethod
    def reduce(cls, x: int, p: int, t: int) -> "Residue":
        return cls(p, t, x % p**t)

    @property
    def modulus(self) -> int:
        return self.p**self.t

    def _check_ring(self, other: "Residue") -> None:
        if (self.p, self.t) != (other.p, other.t):
            raise ValueError("residues live in different rings")

    def __add__(self, other: "Residue") -> "Residue":
        self._check_ring(other)
        return Residue(self.p, self.t, (self.value + other.value) % self.modulus)

    def __sub__(self, other: "Residue") -> "Residue":
        self._check_ring(other)
        return Residue(self.p, self.t, (self.value - other.value) % self.modulus)

    def __mul__(self, other: "Residue") -> "Residue":
        self._check_ring(other)
        return Residue(self.p, self.t, self.value * other.value % self.modulus)

    def pow(self, e: int) -> "Residue":
        return Residue(self.p, self.t, pow(self.value, e, self.modulus))

