"""Exception types shared across the package.

ValueError is used directly for malformed inputs (bad primes, out-of-range
arguments, unparsable spec files).  The classes below mark conditions that
callers are expected to catch and act on.
"""


class SizeGuardError(ValueError):
    """Exact computation refused because the result would be too large.

    Carries an estimate of the size (in decimal digits) that was refused.
    """

    def __init__(self, message: str, estimated_digits: int):
        super().__init__(message)
        self.estimated_digits = estimated_digits


class ZeroIterateError(ValueError):
    """An orbit value that must be nonzero is exactly zero (PCF collision)."""


class HenselHypothesisError(ValueError):
    """The Newton-lift hypothesis nu(F) > 2*nu(F') fails at the base point."""

    def __init__(self, nu_value: int, nu_derivative: int):
        super().__init__(
            "Hensel hypothesis fails: nu(F) = %d is not > 2*nu(F') = %d"
            % (nu_value, 2 * nu_derivative)
        )
        self.nu_value = nu_value
        self.nu_derivative = nu_derivative


class DiscObstructionError(ValueError):
    """A pinned prime divides the relevant Gleason discriminant (or the
    base root is not simple), so the exact-power adjustment is not licensed."""


class PrimeNotAdmissibleError(ValueError):
    """A pinned prime admits no base parameter with the required exact period."""


class SearchExhaustedError(RuntimeError):
    """A bounded search (prime scan, factorization budget) ran out of budget."""

    def __init__(self, message: str, bound: int):
        super().__init__(message)
        self.bound = bound


class InternalConsistencyError(RuntimeError):
    """A self-check that should be unconditionally true failed; indicates a bug
    or a violated precondition that earlier validation should have caught."""
