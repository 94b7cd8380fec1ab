"""Independent reference implementations used to cross-check the package.

These deliberately use different algorithms from the library: fraction-exact
Sylvester determinants instead of CRT resultants, direct residue scans instead
of gcd machinery, and plain dict-based orbit walks.
"""

from fractions import Fraction


def sylvester_resultant(f: list[int], g: list[int]) -> int:
    """Res(f, g) as the exact Sylvester determinant (coefficients constant-first)."""
    f = list(f)
    g = list(g)
    while f and f[-1] == 0:
        f.pop()
    while g and g[-1] == 0:
        g.pop()
    n, m = len(f) - 1, len(g) - 1
    if n < 0 or m < 0:
        return 0
    if n == 0:
        return f[0] ** m
    if m == 0:
        return g[0] ** n
    size = n + m
    rows = []
    fh, gh = f[::-1], g[::-1]
    for r in range(m):
        rows.append([Fraction(0)] * r + [Fraction(x) for x in fh] + [Fraction(0)] * (size - r - n - 1))
    for r in range(n):
        rows.append([Fraction(0)] * r + [Fraction(x) for x in gh] + [Fraction(0)] * (size - r - m - 1))
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if rows[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, size):
            factor = rows[r][col] * inv
            if factor:
                for c in range(col, size):
                    rows[r][c] -= factor * rows[col][c]
    assert det.denominator == 1
    return det.numerator


def sylvester_discriminant(coeffs: list[int]) -> int:
    deg = len(coeffs) - 1
    deriv = [i * coeffs[i] for i in range(1, len(coeffs))]
    res = sylvester_resultant(coeffs, deriv)
    sign = -1 if (deg * (deg - 1) // 2) % 2 else 1
    assert res % coeffs[-1] == 0
    return sign * (res // coeffs[-1])


def orbit_walk(d: int, c: int, modulus: int, start: int = 0) -> tuple[int, int]:
    """(tail, period) of start under x -> x^d + c mod modulus, by plain dict walk."""
    seen = {}
    x = start % modulus
    i = 0
    while x not in seen:
        seen[x] = i
        x = (pow(x, d, modulus) + c) % modulus
        i += 1
    return seen[x], i - seen[x]


def brute_roots(coeffs: list[int], p: int) -> list[int]:
    """Roots of a polynomial mod p by evaluating at every residue."""
    out = []
    for r in range(p):
        acc = 0
        for coef in reversed(coeffs):
            acc = (acc * r + coef) % p
        if acc == 0:
            out.append(r)
    return out
