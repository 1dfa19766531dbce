"""Bateman-Horn constants of integer polynomials by truncated Euler
products, with the statistical experiments around them: means over
random polynomials, log-normality diagnostics, prime-rich search, and
exact verification harnesses for the root-counting lemmas.
"""

from .bhconstant import (
    BHResult,
    DEFAULT_TRUNCATION,
    bh_integral,
    bunyakovsky_failure,
    chebotarev_average,
    empirical_prime_count,
    hardy_littlewood_constant,
    mertens_partial_sum,
    pnk,
)
from .experiments import (
    SamplerConfig,
    distribution,
    richest,
    sample_polynomial,
    scan_max,
    scan_means,
    verify_burnside,
    verify_chebotarev,
    verify_field_mean,
)
from .finitefield import (
    LocalData,
    batch_local_data,
    count_roots,
    count_roots_enumeration,
    degree_pattern,
)
from .intpoly import IntPoly, ModPoly, content, evaluate, poly, reduce_mod
from .irreducibility import IrreducibilityVerdict, is_irreducible
from .permgroup import (
    PermGroup,
    average_fixed_points,
    closure,
    is_transitive,
    parse_cycles,
    parse_generators,
)
from .primes import PrimeTable, first_k_primes, is_prime, pi, primes_upto
from .stats import histogram, normal_quantile, qq_against_normal, summarize

__version__ = "0.1.0"
