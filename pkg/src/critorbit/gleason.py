"""Exact polynomials in the parameter c.

The n-th critical value f^n(0) of x^d + c is an integer polynomial in c of
degree d^(n-1); its Moebius quotients are the Gleason polynomials

    G_{d,n}(c) = prod_{t|n} (f^t(0))^{mu(n/t)},

whose roots mod p are exactly the parameters with critically periodic orbit
of exact period n.  Iterate and Gleason polynomials are memoized per (d, n);
the cache is safe for concurrent reads.

Discriminants are computed by a CRT-modular resultant with a Hadamard-bound
termination; coefficient growth makes direct integer PRS uncompetitive.
"""

from __future__ import annotations

from functools import lru_cache
from math import isqrt

from .arith import _rng, is_prime, moebius
from .errors import InternalConsistencyError, SizeGuardError

_DEGREE_GUARD = 1 << 14
_BRUTE_ROOT_LIMIT = 10**6


class IntPoly:
    """Dense integer polynomial, constant term first, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> int:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return IntPoly(out)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, x in enumerate(other.coeffs):
            out[i] -= x
        return IntPoly(out)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        if self.is_zero or other.is_zero:
            return IntPoly([])
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    def divexact(self, divisor: "IntPoly") -> "IntPoly":
        """Exact division over Z; non-exactness is a fatal internal error."""
        if divisor.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        lead = divisor.leading()
        dd = divisor.degree
        if self.degree < dd:
            raise InternalConsistencyError("division is not exact (degree)")
        quot = [0] * (self.degree - dd + 1)
        for k in range(len(quot) - 1, -1, -1):
            head = rem[k + dd]
            if head % lead != 0:
                raise InternalConsistencyError("division is not exact (leading)")
            q = head // lead
            quot[k] = q
            if q:
                for i, x in enumerate(divisor.coeffs):
                    rem[k + i] -= q * x
        if any(rem):
            raise InternalConsistencyError("division is not exact (remainder)")
        return IntPoly(quot)

    def derivative(self) -> "IntPoly":
        return IntPoly([i * x for i, x in enumerate(self.coeffs)][1:])

    def evaluate(self, x: int) -> int:
        out = 0
        for coef in reversed(self.coeffs):
            out = out * x + coef
        return out

    def evaluate_mod(self, x: int, modulus: int) -> int:
        out = 0
        for coef in reversed(self.coeffs):
            out = (out * x + coef) % modulus
        return out

    def reduce_mod(self, p: int) -> list[int]:
        """Coefficients mod p, trailing zeros stripped (constant term first)."""
        out = [c % p for c in self.coeffs]
        while out and out[-1] == 0:
            out.pop()
        return out

    def to_decimal_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]


@lru_cache(maxsize=None)
def iterate_poly(d: int, n: int) -> IntPoly:
    """f^n(0) as an element of Z[c], by repeated substitution x -> x^d + c."""
    if d < 2 or n < 1:
        raise ValueError("need d >= 2 and n >= 1")
    if d ** (n - 1) > _DEGREE_GUARD:
        raise SizeGuardError(
            f"iterate polynomial degree {d}^{n - 1} exceeds guard {_DEGREE_GUARD}",
            d ** (n - 1),
        )
    if n == 1:
        return IntPoly([0, 1])
    prev = iterate_poly(d, n - 1)
    power = prev
    for _ in range(d - 1):
        power = power * prev
    return power + IntPoly([0, 1])


@lru_cache(maxsize=None)
def gleason_poly(d: int, n: int) -> IntPoly:
    """The Moebius quotient prod_{t|n} (f^t(0))^{mu(n/t)}, divided exactly."""
    numerator = IntPoly([1])
    denominator = IntPoly([1])
    for t in range(1, n + 1):
        if n % t == 0:
            mu = moebius(n // t)
            if mu == 1:
                numerator = numerator * iterate_poly(d, t)
            elif mu == -1:
                denominator = denominator * iterate_poly(d, t)
    return numerator.divexact(denominator)


@lru_cache(maxsize=None)
def gleason_discriminant(d: int, n: int) -> int:
    """Cached discriminant of the period-n Gleason polynomial (1 for degree < 1)."""
    poly = gleason_poly(d, n)
    if poly.degree < 1:
        return 1
    return discriminant(poly)


def gleason_degree(d: int, n: int) -> int:
    """deg G_{d,n} = sum over m|n of mu(n/m) d^(m-1), without building the polynomial."""
    if d < 2 or n < 1:
        raise ValueError("need d >= 2 and n >= 1")
    return sum(moebius(n // m) * d ** (m - 1) for m in range(1, n + 1) if n % m == 0)


# ---------------------------------------------------------------------------
# F_p[x] helpers (dense lists mod p, constant term first, no trailing zeros)


def _strip(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _polmod_p(f: list[int], g: list[int], p: int) -> list[int]:
    """f mod g in F_p[x]; g need not be monic."""
    f = f[:]
    inv = pow(g[-1], -1, p)
    while len(f) >= len(g):
        coef = f[-1] * inv % p
        if coef:
            shift = len(f) - len(g)
            for i, x in enumerate(g):
                f[shift + i] = (f[shift + i] - coef * x) % p
        f.pop()
        _strip(f)
        if not f:
            break
    return f


def _polmulmod_p(a: list[int], b: list[int], g: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _polmod_p(_strip(out), g, p)


def _gcd_p(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _strip(a[:]), _strip(b[:])
    while b:
        a, b = b, _polmod_p(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [x * inv % p for x in a]
    return a


def _xpow_mod(e: int, g: list[int], p: int) -> list[int]:
    """x^e mod g in F_p[x]."""
    result = [1]
    base = _polmod_p([0, 1], g, p)
    while e:
        if e & 1:
            result = _polmulmod_p(result, base, g, p)
        base = _polmulmod_p(base, base, g, p)
        e >>= 1
    return result


def _resultant_mod_p(f: list[int], g: list[int], p: int) -> int:
    """Res(f, g) in F_p by the Euclidean remainder recurrence."""
    f, g = _strip(f[:]), _strip(g[:])
    if not f or not g:
        return 0
    res = 1
    while True:
        if len(g) == 1:
            return res * pow(g[0], len(f) - 1, p) % p
        r = _polmod_p(f, g, p)
        deg_f, deg_g = len(f) - 1, len(g) - 1
        if not r:
            return 0
        deg_r = len(r) - 1
        res = res * pow(g[-1], deg_f - deg_r, p) % p
        if (deg_f * deg_g) % 2:
            res = (-res) % p
        f, g = g, r


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Res(f, g) over Z by CRT over word-size primes with Hadamard termination."""
    if f.is_zero or g.is_zero:
        return 0
    if f.degree == 0:
        return f.coeffs[0] ** g.degree
    if g.degree == 0:
        return g.coeffs[0] ** f.degree
    norm_f = isqrt(sum(c * c for c in f.coeffs)) + 1
    norm_g = isqrt(sum(c * c for c in g.coeffs)) + 1
    bound = 2 * norm_f**g.degree * norm_g**f.degree
    value, modulus = 0, 1
    q = (1 << 61) - 1
    while modulus <= bound:
        while True:
            q = _next_probable_prime_below(q)
            if f.leading() % q and g.leading() % q:
                break
        rq = _resultant_mod_p(f.reduce_mod(q), g.reduce_mod(q), q)
        t = (rq - value) * pow(modulus, -1, q) % q
        value += modulus * t
        modulus *= q
    if value > modulus // 2:
        value -= modulus
    return value


def _next_probable_prime_below(q: int) -> int:
    q -= 1
    while not is_prime(q):
        q -= 1
    return q


def discriminant(poly: IntPoly) -> int:
    """disc = (-1)^(D(D-1)/2) * Res(poly, poly') / lc(poly)."""
    if poly.is_zero or poly.degree < 1:
        raise ValueError("discriminant needs degree >= 1")
    d = poly.degree
    res = resultant(poly, poly.derivative())
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    lead = poly.leading()
    if res % lead != 0:
        raise InternalConsistencyError("resultant not divisible by leading coefficient")
    return sign * (res // lead)


def discriminant_mod_p(poly: IntPoly, p: int) -> int:
    """disc(poly) mod p for p not dividing the leading coefficient."""
    if poly.degree < 1:
        raise ValueError("discriminant needs degree >= 1")
    if poly.leading() % p == 0:
        raise ValueError("leading coefficient vanishes mod p")
    f = poly.reduce_mod(p)
    fp = _strip([i * poly.coeffs[i] % p for i in range(1, len(poly.coeffs))])
    if not fp:
        return 0
    d = len(f) - 1
    res = _resultant_mod_p(f, fp, p)
    # if the derivative dropped degree mod p, the Sylvester determinant picks
    # up lc(f)^(drop) relative to the reduced-pair resultant
    drop = (poly.degree - 1) - (len(fp) - 1)
    if drop:
        res = res * pow(f[-1], drop, p) % p
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * res * pow(f[-1], -1, p) % p


def has_root_mod_p(poly: IntPoly, p: int) -> bool:
    """Whether poly has a root in F_p, via gcd(x^p - x, poly)."""
    f = poly.reduce_mod(p)
    if not f:
        raise ValueError("polynomial vanishes identically mod p")
    if len(f) == 1:
        return False
    xp = _xpow_mod(p, f, p)
    diff = xp[:] + [0] * max(0, 2 - len(xp))
    diff[1] = (diff[1] - 1) % p
    return len(_gcd_p(f, _strip(diff), p)) - 1 >= 1


def roots_mod_p(poly: IntPoly, p: int) -> list[tuple[int, int]]:
    """All F_p roots with multiplicities, sorted by root.

    Brute-force evaluation below 10^6; x^p - x splitting with equal-degree
    refinement beyond.
    """
    f = poly.reduce_mod(p)
    if not f:
        raise ValueError("polynomial vanishes identically mod p")
    if len(f) == 1:
        return []
    if p < _BRUTE_ROOT_LIMIT:
        roots = [r for r in range(p) if _eval_list(f, r, p) == 0]
    else:
        xp = _xpow_mod(p, f, p)
        diff = xp[:] + [0] * max(0, 2 - len(xp))
        diff[1] = (diff[1] - 1) % p
        linear_part = _gcd_p(f, _strip(diff), p)
        roots = sorted(_split_linear(linear_part, p))
    return [(r, _root_multiplicity(f, r, p)) for r in roots]


def _eval_list(f: list[int], x: int, p: int) -> int:
    out = 0
    for coef in reversed(f):
        out = (out * x + coef) % p
    return out


def _split_linear(g: list[int], p: int) -> list[int]:
    """Roots of a squarefree product of distinct linear factors in F_p[x]."""
    if len(g) - 1 <= 0:
        return []
    if len(g) == 2:
        return [(-g[0]) * pow(g[1], -1, p) % p]
    while True:
        a = _rng.randrange(p)
        shifted = _xshift_pow(a, (p - 1) // 2, g, p)
        shifted = shifted[:] if shifted else [0]
        shifted[0] = (shifted[0] - 1) % p
        h = _gcd_p(g, _strip(shifted), p)
        if 0 < len(h) - 1 < len(g) - 1:
            rest = _quo_p(g, h, p)
            return _split_linear(h, p) + _split_linear(rest, p)


def _xshift_pow(a: int, e: int, g: list[int], p: int) -> list[int]:
    """(x + a)^e mod g in F_p[x]."""
    result = [1]
    base = _polmod_p([a, 1], g, p)
    while e:
        if e & 1:
            result = _polmulmod_p(result, base, g, p)
        base = _polmulmod_p(base, base, g, p)
        e >>= 1
    return result


def _quo_p(f: list[int], g: list[int], p: int) -> list[int]:
    f = f[:]
    inv = pow(g[-1], -1, p)
    quot = [0] * (len(f) - len(g) + 1)
    while len(f) >= len(g):
        coef = f[-1] * inv % p
        shift = len(f) - len(g)
        quot[shift] = coef
        for i, x in enumerate(g):
            f[shift + i] = (f[shift + i] - coef * x) % p
        f.pop()
        _strip(f)
        if not f:
            break
    return _strip(quot)


def _root_multiplicity(f: list[int], r: int, p: int) -> int:
    mult = 0
    g = f[:]
    while len(g) > 1:
        # synthetic division by (x - r)
        high = list(reversed(g))
        acc = 0
        out = []
        for coef in high:
            acc = (acc * r + coef) % p
            out.append(acc)
        remainder = out.pop()
        if remainder != 0:
            break
        g = list(reversed(out))
        mult += 1
    return mult


def is_simple_root(poly: IntPoly, p: int, c0: int) -> bool:
    """Whether c0 is a simple root of poly mod p (derivative nonzero there)."""
    if poly.evaluate_mod(c0, p) != 0:
        raise ValueError(f"{c0} is not a root of the polynomial mod {p}")
    return poly.derivative().evaluate_mod(c0, p) != 0
