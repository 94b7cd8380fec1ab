"""Newton lifting of the parameter c at a primitive prime.

Given a base parameter c0 whose critical orbit mod p has exact period n,
Newton iteration on c |-> f^n(0) (evaluated by the orbit recurrence, never by
expanding the degree-d^(n-1) polynomial) converges in Z/p^N to the unique
parameter where 0 is exactly periodic p-adically, provided
nu(F(c0)) > 2 nu(F'(c0)).  The shift nu(lifted - c0) equals nu(F) - nu(F').

Perturbing the lifted value at the p^r digit then produces parameters whose
n-th orbit value carries p to the exact power r.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import Residue, is_prime, val_p
from .errors import HenselHypothesisError, InternalConsistencyError
from .orbit import (
    Valuation,
    is_primitive_divisor,
    iterate_valuation,
    orbit_with_derivative,
    period_type_mod,
)

_NEWTON_SLACK = 4


@dataclass(frozen=True)
class LiftResult:
    """A converged lift: f^n(0) = 0 mod p^precision at ``lifted_value``."""

    d: int
    n: int
    p: int
    precision: int
    lifted_value: Residue
    shift_valuation: int
    nu_value: int
    nu_derivative: int
    base_c0: int

    def to_json_dict(self) -> dict:
        return {
            "d": self.d,
            "n": self.n,
            "p": str(self.p),
            "precision": self.precision,
            "modulus": str(self.lifted_value.modulus),
            "value": str(self.lifted_value.value),
            "shift_valuation": self.shift_valuation,
            "nu_value": self.nu_value,
            "nu_derivative": self.nu_derivative,
            "base_c0": str(self.base_c0),
        }


def _derivative_valuation(d: int, n: int, p: int, c0: int, cap: int) -> Valuation:
    t = 8
    while True:
        t = min(t, cap)
        _, deriv = orbit_with_derivative(d, Residue.reduce(c0, p, t), n)
        if deriv.value != 0:
            return Valuation(val_p(deriv.value, p), True)
        if t >= cap:
            return Valuation(cap, False)
        t *= 2


def hensel_lift(d: int, n: int, p: int, c0: int, precision: int) -> LiftResult:
    """Lift c0 to the parameter where 0 has exact period n in Z/p^precision."""
    if d < 2 or n < 1 or precision < 1:
        raise ValueError("need d >= 2, n >= 1, precision >= 1")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    ptype, _ = period_type_mod(d, Residue.reduce(c0, p, 1))
    if ptype.tail != 0 or ptype.period != n:
        raise ValueError(
            f"0 is not periodic with exact period {n} mod {p} at c0 = {c0} "
            f"(found tail {ptype.tail}, period {ptype.period})"
        )
    cap = 4 * (precision + 8)
    nu_f = iterate_valuation(d, c0, n, p, cap=cap)
    nu_df = _derivative_valuation(d, n, p, c0, cap)
    if not nu_f.exact:
        # f^n(0) vanishes beyond any useful precision; for an integer base in
        # [0, p) this happens only when it vanishes exactly (c0 = 0, n = 1),
        # i.e. c0 is already the p-adic root.
        if not _is_exact_root(d, c0, n):
            raise InternalConsistencyError(
                f"nu_p(f^{n}(0)) >= {nu_f.value} at c0 = {c0} without an exact zero; "
                "raise the valuation cap"
            )
        lifted = Residue.reduce(c0, p, precision)
        return LiftResult(
            d=d,
            n=n,
            p=p,
            precision=precision,
            lifted_value=lifted,
            shift_valuation=precision,
            nu_value=nu_f.value,
            nu_derivative=nu_df.value,
            base_c0=c0,
        )
    if not nu_df.exact or nu_f.value <= 2 * nu_df.value:
        raise HenselHypothesisError(nu_f.value, nu_df.value)
    b = nu_df.value
    working = p ** (precision + b)
    target = p**precision
    unit_mod = target
    shifted = p**b
    c = c0 % working
    steps = 0
    max_steps = precision.bit_length() + _NEWTON_SLACK
    while True:
        value, deriv = orbit_with_derivative(d, Residue.reduce(c, p, precision + b), n)
        if value.value % target == 0:
            break
        steps += 1
        if steps > max_steps:
            raise InternalConsistencyError(
                f"Newton iteration failed to converge within {max_steps} steps"
            )
        delta = (value.value // shifted) * pow(deriv.value // shifted, -1, unit_mod)
        c = (c - delta) % working
    lifted = Residue.reduce(c, p, precision)
    shift = nu_f.value - nu_df.value
    delta0 = (lifted.value - c0) % p**precision
    if delta0 != 0 and val_p(delta0, p) != shift:
        raise InternalConsistencyError(
            "lift shift does not match nu(F) - nu(F'); shift identity hypotheses fail"
        )
    x = 0
    for i in range(1, n):
        x = (pow(x, d, p) + lifted.value) % p
        if x == 0:
            raise InternalConsistencyError(
                f"lifted parameter lost primitivity: f^{i}(0) = 0 mod {p}"
            )
    return LiftResult(
        d=d,
        n=n,
        p=p,
        precision=precision,
        lifted_value=lifted,
        shift_valuation=shift,
        nu_value=nu_f.value,
        nu_derivative=nu_df.value,
        base_c0=c0,
    )


def _is_exact_root(d: int, c0: int, n: int) -> bool:
    # exact vanishing of f^n(0) over Z for an integer parameter
    if c0 == 0:
        return True
    if c0 == -1 and d % 2 == 0 and n % 2 == 0:
        return True
    return False


def adjust_power(lift: LiftResult, r: int) -> int:
    """An integer c_r with p primitive for f^n(0) and nu_p(f^n(0)) = r exactly.

    Takes the lifted value mod p^(r+1) and perturbs the p^r digit by one, so
    nu_p(c_r - lifted) = r; by the shift identity (valid because the base root
    is simple, nu(F') = 0) the orbit value then carries p^r exactly.
    """
    if r < 1:
        raise ValueError("target power must be >= 1")
    if lift.precision < r + 1:
        raise ValueError(
            f"lift precision {lift.precision} is below the required {r + 1}"
        )
    if lift.nu_derivative != 0:
        raise ValueError(
            "exact-power adjustment requires nu(F') = 0 at the base "
            "(simple Gleason root); got nu(F') = %d" % lift.nu_derivative
        )
    p = lift.p
    c_r = lift.lifted_value.value % p ** (r + 1) + p**r
    primitive, valuation = is_primitive_divisor(lift.d, c_r, lift.n, p)
    if not primitive or valuation != r:
        raise InternalConsistencyError(
            f"adjusted parameter failed verification: primitive={primitive}, "
            f"nu={valuation}, wanted exact {r}"
        )
    return c_r


def scan_shifts(d: int, n: int, p: int, c0: int) -> list[int]:
    """Exhaustive check of the lift obstruction: values f^n(0) mod p^2 at the
    p candidate shifts c0 + t*p.  All nonzero means no shift lifts to p^2."""
    modulus = p * p
    out = []
    for t in range(p):
        value, _ = orbit_with_derivative(d, Residue.reduce(c0 + t * p, p, 2), n)
        out.append(value.value)
    return out
