"""Truncated Euler products for the Hardy-Littlewood / Bateman-Horn constant.

For polynomials f_1, ..., f_m with product F the constant is

    C = prod_p (1 - n_p(F)/p) / (1 - 1/p)^m,

truncated to the first K primes (K = 3000 by default, and reported with
every result because C is truncation-dependent).  The factors are
accumulated as exactly-rounded sums of logs (math.fsum) and
exponentiated once, so C(x) = 1 holds exactly and 3000-term products

do not drift.  C = 0 exactly when some prime divides every value of F
(a Bunyakovsky failure); the smallest such prime is reported.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .finitefield import count_roots, nroots_array
from .intpoly import IntPoly, content, evaluate, product
from .primes import first_k_primes, is_prime, primes_upto

DEFAULT_TRUNCATION = 3000


@dataclass(frozen=True)
class BHResult:
    C: float
    D: int
    C_over_D: float
    m: int
    truncation_K: int
    bunyakovsky_failure: int | None


def _as_poly_list(polys) -> list[IntPoly]:
    if isinstance(polys, IntPoly):
        polys = [polys]
    polys = list(polys)
    if not polys:
        raise ValueError("need at least one polynomial")
    for f in polys:
        if f.degree < 1:
            raise ValueError("polynomials must be nonconstant")
    return polys


def _smallest_prime_factor(n: int, table) -> int:
    for p in table:
        q = int(p)
        if n % q == 0:
            return q
        if q * q > n:
            return n
    import sympy

    return min(sympy.primefactors(n))


def _content_failure(F: IntPoly, table) -> int | None:
    """Smallest prime dividing every coefficient (hence every value) of F."""
    c = content(F)
    if c <= 1:
        return None
    return _smallest_prime_factor(c, table)


def bunyakovsky_failure(polys) -> int | None:
    """Smallest prime p with n_p = p for the product polynomial, or None.

    A content-1 polynomial of degree d can vanish at every residue only
    for p <= d (p distinct roots need degree >= p), so only those primes
    are checked; primes dividing the content fail at any size and are
    checked through the content directly.
    """
    polys = _as_poly_list(polys)
    F = product(polys)
    table = primes_upto(max(F.degree, 2))
    candidates = [p for p in table if p <= F.degree and count_roots(F, p).n_p == p]
    cf = _content_failure(F, table)
    if cf is not None:
        candidates.append(cf)
    return min(candidates) if candidates else None


def hardy_littlewood_constant(polys, K: int = DEFAULT_TRUNCATION) -> BHResult:
    """Truncated Bateman-Horn constant over the first K primes.

    n_p is computed on the literal product polynomial F = f_1 ... f_m,
    and the prime-by-prime factors (1 - n_p/p)/(1 - 1/p)^m are combined
    in ascending-p order as a compensated sum of logs.
    """
    polys = _as_poly_list(polys)
    if K < 1:
        raise ValueError("K must be positive")
    m = len(polys)
    D = 1
    for f in polys:
        D *= f.degree
    F = product(polys)
    table = first_k_primes(K)
    ps = np.ascontiguousarray(table.primes, dtype=np.int64)
    ns = nroots_array(F, ps)

    failure = None
    hit = np.nonzero(ns == ps)[0]
    if hit.size:
        failure = int(ps[hit[0]])
    cf = _content_failure(F, table)
    if cf is not None:
        failure = cf if failure is None else min(failure, cf)
    if failure is not None:
        return BHResult(0.0, D, 0.0, m, K, failure)

    pf = ps.astype(np.float64)
    nf = ns.astype(np.float64)
    logs = np.log(pf - nf) - m * np.log(pf - 1.0)
    if m > 1:
        logs += (m - 1) * np.log(pf)
    C = math.exp(math.fsum(logs))
    return BHResult(C, D, C / D, m, K, None)


@dataclass(frozen=True)
class MertensPartialSum:
    sum_np_over_p: float
    centered_sum: float


def mertens_partial_sum(f: IntPoly, x: int) -> MertensPartialSum:
    """sum_{p < x} n_p/p and the convergent centered sum sum (n_p - 1)/p.

    The centered sum tends to A_f - M for irreducible f; for f = x it is
    identically zero, which pins the normalization.
    """
    ps = primes_upto(x).primes.astype(np.int64)
    ps = ps[ps < x]
    ns = nroots_array(f, ps)
    pf = ps.astype(np.float64)
    return MertensPartialSum(
        math.fsum(ns / pf),
        math.fsum((ns - 1) / pf),
    )


def chebotarev_average(f: IntPoly, x: int) -> float:
    """(sum_{p <= x} n_p(f)) / pi(x); tends to 1 for irreducible f."""
    ps = primes_upto(x).primes.astype(np.int64)
    if ps.size == 0:
        raise ValueError("x must be at least 2")
    ns = nroots_array(f, ps)
    return int(ns.sum()) / ps.size


def pnk(n: int, k: int) -> IntPoly:
    """The polynomial 1 + (p_1 ... p_n) x^k: no roots mod the first n primes."""
    if not 1 <= n <= 100:
        raise ValueError("n must be in [1, 100]")
    if not 1 <= k <= 16:
        raise ValueError("k must be in [1, 16]")
    primorial = 1
    for p in first_k_primes(n):
        primorial *= p
    return IntPoly([1] + [0] * (k - 1) + [primorial])


def bh_integral(x: float, m: int = 1) -> float:
    """Integral of dt / (log t)^m from 2 to x, to ~1e-9 relative accuracy."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if x == 2:
        return 0.0
    if x < 2:
        raise ValueError("x must be >= 2")
    val, _err = quad(lambda t: math.log(t) ** (-m), 2.0, float(x), epsabs=0.0, epsrel=1e-12, limit=400)
    return val


@dataclass(frozen=True)
class EmpiricalCount:
    count: int
    predicted: float


def empirical_prime_count(polys, x: int, K: int = DEFAULT_TRUNCATION) -> EmpiricalCount:
    """Actual count of 1 <= k <= x making all |f_i(k)| prime, with the
    Bateman-Horn prediction (C/D) * integral(dt/log^m t)."""
    polys = _as_poly_list(polys)
    if x > 10**7:
        raise ValueError("x too large for direct enumeration")
    res = hardy_littlewood_constant(polys, K)
    count = 0
    for k in range(1, int(x) + 1):
        if all(is_prime(evaluate(f, k)) for f in polys):
            count += 1
    predicted = res.C_over_D * bh_integral(max(float(x), 2.0), res.m)
    return EmpiricalCount(count, predicted)
