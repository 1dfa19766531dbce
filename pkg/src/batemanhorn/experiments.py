"""Random-polynomial sampling and the Monte Carlo experiments.

Sampling is a pure function of (master_seed, index): a per-sample
SplitMix64 stream is seeded by an avalanche mix of the two, and
coefficients come out of the rejection-free Lemire multiply-shift map
onto the 2N+1 integers of [-N, N].  That makes every experiment
embarrassingly parallel with no RNG coordination, and results are
invariant under the worker count because aggregation always walks
samples in index order (per-sample C values are exact functions of the
index, and cross-sample reductions use exactly-rounded sums).

Reducible samples are discarded (and counted) without resampling, so
the index -> polynomial map never shifts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _kernels
from .bhconstant import DEFAULT_TRUNCATION, chebotarev_average, hardy_littlewood_constant
from .finitefield import ENUM_BOUND
from .intpoly import IntPoly, evaluate
from .irreducibility import _PRIME_POOL_I64, CERT_PRIMES, is_irreducible
from .permgroup import PermGroup, average_fixed_points, closure, common_degree, is_transitive
from .primes import _mix64, first_k_primes, primes_upto
from .stats import Histogram, QQData, SampleSummary, histogram, qq_against_normal, summarize

_U64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_STREAM = 0xA24BAED4963EE407  # odd multiplier separating per-index streams
_CHUNK = 2048


@dataclass(frozen=True)
class SamplerConfig:
    degree: int
    coeff_bound: int = 1000
    monic: bool = True
    master_seed: int = 0

    def __post_init__(self):
        if self.degree < 2:
            raise ValueError("degree must be >= 2")
        if self.coeff_bound < 1:
            raise ValueError("coeff_bound must be >= 1")


def _coeff_stream(master_seed: int, index: int):
    state = _mix64((master_seed ^ ((index * _STREAM) & _U64)) & _U64)
    while True:
        state = (state + _GOLDEN) & _U64
        yield _mix64(state)


def _bounded(u: int, span: int) -> int:
    return (u * span) >> 64


def sample_polynomial(cfg: SamplerConfig, index: int) -> IntPoly:
    """The polynomial at a given sample index, deterministically.

    Low coefficients are uniform on [-N, N]; the leading coefficient is
    1 when monic, otherwise uniform on the 2N nonzero values.
    """
    stream = _coeff_stream(cfg.master_seed, index)
    n = cfg.coeff_bound
    coeffs = [_bounded(next(stream), 2 * n + 1) - n for _ in range(cfg.degree)]
    if cfg.monic:
        coeffs.append(1)
    else:
        v = _bounded(next(stream), 2 * n) - n
        coeffs.append(v if v < 0 else v + 1)
    return IntPoly(coeffs)


def _coeff_rows(cfg: SamplerConfig, start: int, stop: int) -> np.ndarray:
    rows = np.empty((stop - start, cfg.degree + 1), dtype=np.int64)
    for i, index in enumerate(range(start, stop)):
        rows[i] = sample_polynomial(cfg, index).coeffs
    return rows


def _c_values(cfg: SamplerConfig, samples: int, K: int):
    """Per-index C at truncation K for the irreducible samples.

    Returns (C values in index order, kept indices, reducible count).
    Certificates come from the batched mod-p scan; the few unresolved
    rows go through the full exact pipeline.
    """
    table = first_k_primes(K)
    ps = np.ascontiguousarray(table.primes, dtype=np.int64)
    psf = ps.astype(np.float64)
    log_denom = np.log(psf - 1.0)
    n_small = int(np.searchsorted(ps, cfg.degree, side="right"))
    enum_bound = max(ENUM_BOUND, cfg.degree)

    cs: list[float] = []
    kept_indices: list[int] = []
    discarded = 0
    for start in range(0, samples, _CHUNK):
        stop = min(start + _CHUNK, samples)
        rows = _coeff_rows(cfg, start, stop)
        certs = _kernels.cert_scan_batch(rows, _PRIME_POOL_I64, CERT_PRIMES)
        keep = np.ones(stop - start, dtype=bool)
        for i in np.nonzero(certs == 0)[0]:
            if not is_irreducible(IntPoly(rows[i])):
                keep[i] = False
        discarded += int((~keep).sum())
        kept_rows = np.ascontiguousarray(rows[keep])
        if kept_rows.shape[0] == 0:
            continue
        kept_indices.extend(int(start + i) for i in np.nonzero(keep)[0])
        nmat = _kernels.nroots_samples(kept_rows, ps, enum_bound)
        # monic samples have content 1, so Bunyakovsky failures can only
        # happen at primes <= degree
        fails = (nmat[:, :n_small] == ps[:n_small]).any(axis=1)
        with np.errstate(divide="ignore"):  # failed rows hit log(0); they emit C = 0
            logs = np.log(psf - nmat) - log_denom
        for i in range(nmat.shape[0]):
            if fails[i]:
                cs.append(0.0)
            else:
                cs.append(math.exp(math.fsum(logs[i])))
    return cs, kept_indices, discarded


@dataclass(frozen=True)
class MeansRow:
    degree: int
    samples_kept: int
    reducible_discarded: int
    mean_all: float
    bunyakovsky_mean: float
    bunyakovsky_log_mean: float
    bunyakovsky_fail_rate: float
    truncation_K: int
    coeff_bound: int
    master_seed: int


def scan_means(cfg: SamplerConfig, samples: int, K: int = DEFAULT_TRUNCATION) -> MeansRow:
    """Mean of C over irreducible samples (zeros included), plus the mean
    and log-mean conditional on the Bunyakovsky condition holding."""
    if samples < 100:
        raise ValueError("need at least 100 samples")
    cs, _, discarded = _c_values(cfg, samples, K)
    kept = len(cs)
    positives = [c for c in cs if c > 0.0]
    n_pos = len(positives)
    mean_all = math.fsum(cs) / kept
    bun_mean = math.fsum(positives) / n_pos
    log_mean = math.fsum(math.log(c) for c in positives) / n_pos
    fail_rate = (kept - n_pos) / kept
    return MeansRow(
        cfg.degree, kept, discarded, mean_all, bun_mean, log_mean, fail_rate,
        K, cfg.coeff_bound, cfg.master_seed,
    )


@dataclass(frozen=True)
class DistributionResult:
    summary: SampleSummary
    histogram: Histogram
    qq: QQData
    quantity: str
    degree: int
    samples: int
    n_bunyakovsky: int
    reducible_discarded: int
    truncation_K: int
    coeff_bound: int
    master_seed: int


def distribution(
    cfg: SamplerConfig,
    samples: int,
    K: int = DEFAULT_TRUNCATION,
    bins: int = 50,
    of: str = "cd",
) -> DistributionResult:
    """Moments, histogram, and normal-QQ data for ln(C/D) (or ln C with
    of="c") over the Bunyakovsky samples; this is the log-normality
    diagnostic."""
    if samples < 1000:
        raise ValueError("need at least 1000 samples")
    if of not in ("c", "cd"):
        raise ValueError('of must be "c" (ln C) or "cd" (ln C/D)')
    cs, _, discarded = _c_values(cfg, samples, K)
    shift = 0.0 if of == "c" else math.log(cfg.degree)
    values = [math.log(c) - shift for c in cs if c > 0.0]
    return DistributionResult(
        summarize(values), histogram(values, bins), qq_against_normal(values),
        of, cfg.degree, samples, len(values), discarded, K, cfg.coeff_bound,
        cfg.master_seed,
    )


@dataclass(frozen=True)
class RichRecord:
    C: float
    C_over_D: float
    coeffs: tuple[int, ...]
    constant_term_least_prime_factor: int | str


def _least_prime_factor_marker(a0: int) -> int | str:
    a0 = abs(a0)
    if a0 <= 1:
        return "unit"
    d = 2
    while d * d <= a0:
        if a0 % d == 0:
            return d
        d += 1
    return "prime"


def richest(
    cfg: SamplerConfig,
    samples: int,
    K: int = DEFAULT_TRUNCATION,
    top: int = 3,
    include=(),
) -> list[RichRecord]:
    """Top records by C over the sampled irreducible polynomials.

    `include` appends extra candidate polynomials after the indexed
    samples (handy for checking a known prime-rich polynomial against a
    fresh sample).  Each record carries the least prime factor of the
    constant term, probing the observation that prime-rich polynomials
    have prime (or nearly prime) constant terms.
    """
    if top > samples + len(include):
        raise ValueError("top cannot exceed the candidate count")
    cs, kept_indices, _ = _c_values(cfg, samples, K)
    records = [(c, sample_polynomial(cfg, i)) for c, i in zip(cs, kept_indices)]
    for f in include:
        if is_irreducible(f):
            records.append((hardy_littlewood_constant(f, K).C, f))
    records.sort(key=lambda t: -t[0])
    out = []
    for c, f in records[:top]:
        out.append(
            RichRecord(c, c / f.degree, f.coeffs, _least_prime_factor_marker(f.coeffs[0]))
        )
    return out


def scan_max(
    degree: int,
    bounds,
    samples: int,
    K: int = DEFAULT_TRUNCATION,
    master_seed: int = 0,
) -> list[tuple[int, float]]:
    """Max C over fresh samples for each coefficient bound N.

    Purely observational output (for plotting against log log N); the
    per-bound stream is derived from (master_seed, N) only, so repeated
    bounds give identical maxima.
    """
    out = []
    for n_bound in bounds:
        sub_seed = _mix64((master_seed ^ _mix64(int(n_bound))) & _U64)
        cfg = SamplerConfig(degree, int(n_bound), True, sub_seed)
        cs, _, _ = _c_values(cfg, samples, K)
        out.append((int(n_bound), max(cs, default=0.0)))
    return out


@dataclass(frozen=True)
class FieldMeanResult:
    p: int
    degree: int
    total_roots: int
    expected: int
    passed: bool


def verify_field_mean(p: int, n: int) -> FieldMeanResult:
    """Exhaustive check that distinct-root counts over all p^n monic
    degree-n polynomials in F_p[x] sum to exactly p^n (mean 1)."""
    from .primes import is_prime

    if not is_prime(p) or p > 13:
        raise ValueError("p must be a prime <= 13")
    if not 1 <= n <= 4:
        raise ValueError("degree must be in [1, 4]")
    if p**n > 10**7:
        raise ValueError("p^n too large for exhaustive enumeration")
    total = 0
    # iterate all coefficient vectors (c_0, ..., c_{n-1}) with lc = 1
    for code in range(p**n):
        c = code
        coeffs = []
        for _ in range(n):
            coeffs.append(c % p)
            c //= p
        coeffs.append(1)
        for r in range(p):
            v = 0
            for cf in reversed(coeffs):
                v = (v * r + cf) % p
            if v == 0:
                total += 1
    return FieldMeanResult(p, n, total, p**n, total == p**n)


@dataclass(frozen=True)
class BurnsideResult:
    transitive: bool
    average: Fraction
    order: int
    passed: bool


def verify_burnside(generators) -> BurnsideResult:
    """Burnside check: a transitive group must average exactly 1 fixed
    point (non-transitive groups pass vacuously).  Generators of unequal
    degree are padded to act on the largest point set."""
    g = closure(common_degree(generators))
    transitive = is_transitive(g)
    avg = average_fixed_points(g)
    return BurnsideResult(transitive, avg, len(g), (not transitive) or avg == 1)


@dataclass(frozen=True)
class ChebotarevResult:
    average: float
    deviation: float


def verify_chebotarev(f: IntPoly, x: int) -> ChebotarevResult:
    """Average root count against pi(x); the lemma needs f irreducible."""
    if not is_irreducible(f):
        raise ValueError("the Chebotarev average requires an irreducible polynomial")
    avg = chebotarev_average(f, x)
    return ChebotarevResult(avg, abs(avg - 1.0))


def set_workers(workers: int) -> None:
    """Cap the kernel thread count; results never depend on it."""
    import numba

    numba.set_num_threads(max(1, min(workers, numba.config.NUMBA_NUM_THREADS)))
