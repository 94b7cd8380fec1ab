"""critorbit: arithmetic of the critical orbit of x^d + c.

Orbit structure over residue rings Z/p^t, Gleason polynomials and their
discriminants, Newton lifting of parameters at primitive primes, construction
of integers whose orbit values carry prescribed primitive prime powers, PCF
censuses over F_p, prime-density estimates, and Galois-maximality witness
certificates.
"""

__version__ = "0.1.0"

from .arith import (
    Factorization,
    Residue,
    crt,
    factorize,
    is_prime,
    moebius,
    next_prime,
    primes_up_to,
    set_random_seed,
    val_p,
)
from .bounds import (
    CertificateEntry,
    MaximalityCertificate,
    count_primitive_primes,
    height,
    maximality_certificate,
    rho_upper_bound,
    rho_upper_bound_general,
    verify_certificate,
)
from .constructor import (
    ConstraintCheck,
    ConstructionReport,
    DivisibilitySpec,
    PrimePowerConstraint,
    build_parameter,
    find_base,
    find_prime_for_iterate,
    verify_spec,
)
from .density import (
    DensityReport,
    EmpiricalDensity,
    density_lower_bound,
    density_report,
    empirical_density,
    fpp_symmetric,
    limit_error_bound,
)
from .errors import (
    DiscObstructionError,
    HenselHypothesisError,
    InternalConsistencyError,
    PrimeNotAdmissibleError,
    SearchExhaustedError,
    SizeGuardError,
    ZeroIterateError,
)
from .gleason import (
    IntPoly,
    discriminant,
    discriminant_mod_p,
    gleason_degree,
    gleason_discriminant,
    gleason_poly,
    has_root_mod_p,
    is_simple_root,
    iterate_poly,
    resultant,
    roots_mod_p,
)
from .lifting import LiftResult, adjust_power, hensel_lift, scan_shifts
from .orbit import (
    OrbitClassification,
    PeriodType,
    RationalParam,
    Valuation,
    classify_integer_param,
    exact_iterate,
    is_primitive_divisor,
    iterate_valuation,
    multiplier_mod_p,
    orbit_with_derivative,
    period_type_mod,
    point_period_type_mod,
)
from .pcf import (
    PcfCensus,
    check_condition_star,
    check_condition_star_star,
    condition_star_star_failures,
    correspondence_report,
    enumerate_pcf,
)
