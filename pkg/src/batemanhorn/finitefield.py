"""Root counting n_p(f) and factorization degree patterns of f mod p.

n_p(f) is the number of distinct residues r with f(r) = 0 mod p (no
multiplicity).  The counting strategy follows the degree/size split that
makes the Euler-product truncations cheap: tiny p by direct enumeration,
quadratics by the Legendre symbol of the discriminant, and everything
else through deg gcd(x^p - x, f mod p), which only sees the distinct
roots because x^p - x is the product of (x - r) over all residues.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _gf, _kernels
from .intpoly import IntPoly, reduce_mod
from .primes import PrimeTable

_INT64_MAX = 2**63 - 1
ENUM_BOUND = 64


@dataclass(frozen=True)
class LocalData:
    """Per-prime record: root count and the local Euler factor."""

    p: int
    n_p: int
    euler_factor: float


def _local(p: int, n: int) -> LocalData:
    return LocalData(p, n, (p - n) / (p - 1))


def _fits_int64(f: IntPoly) -> bool:
    return all(-_INT64_MAX <= c <= _INT64_MAX for c in f.coeffs)


def count_roots(f: IntPoly, p: int) -> LocalData:
    """Number of solutions of f(x) = 0 mod p, counted without multiplicity.

    The reduction being the zero polynomial (p divides the content)
    counts as n_p = p: every residue is a root.
    """
    fbar = reduce_mod(f, p)  # validates primality and the 2^31 bound
    d = fbar.degree
    if d < 0:
        return _local(p, p)
    if d == 0:
        return _local(p, 0)
    if p <= max(ENUM_BOUND, f.degree):
        c = list(fbar.coeffs)
        n = sum(1 for r in range(p) if _gf.eval_at(c, r, p) == 0)
        return _local(p, n)
    c = _gf.monic(list(fbar.coeffs), p)
    xp = _gf.powmod([0, 1], p, c, p)
    g = _gf.gcd(_gf.sub(xp, [0, 1], p), c, p)
    return _local(p, len(g) - 1)


def count_roots_enumeration(f: IntPoly, p: int) -> int:
    """Root count by direct evaluation at every residue (vectorized Horner).

    Deliberately shares no code with the gcd path; this is the
    cross-check route for the oracle suites.  Requires p < 2^26 so the
    Horner products stay inside int64.
    """
    if p >= 1 << 26:
        raise ValueError("enumeration cross-check limited to p < 2^26")
    if f.degree < 0:
        return p
    r = np.arange(p, dtype=np.int64)
    v = np.zeros(p, dtype=np.int64)
    for c in reversed(f.coeffs):
        v = (v * r + c % p) % p
    return int(np.count_nonzero(v == 0))


def degree_pattern(f: IntPoly, p: int) -> tuple[int, ...]:
    """Multiset (sorted tuple) of factor degrees of the squarefree part of f mod p.

    Ramified primes are not special-cased: the pattern always describes
    the squarefree part, so repeated factors appear once.
    """
    fbar = reduce_mod(f, p)
    if fbar.is_zero:
        raise ValueError(f"f reduces to zero mod {p}; no degree pattern")
    rad = _gf.radical(list(fbar.coeffs), p)
    return _gf.distinct_degree_pattern(rad, p)


def nroots_array(f: IntPoly, ps: np.ndarray, enum_bound: int | None = None) -> np.ndarray:
    """n_p(f) for every prime in ps (ascending int64 array), vectorized.

    Callers own the primality of ps; this is the batch back end behind
    batch_local_data and the Euler-product accumulators.
    """
    ps = np.ascontiguousarray(ps, dtype=np.int64)
    if ps.size == 0:
        return np.empty(0, dtype=np.int64)
    if f.degree < 0:
        return ps.copy()  # zero polynomial: every residue is a root
    bound = max(ENUM_BOUND, f.degree) if enum_bound is None else enum_bound
    coeffs = f.coeffs
    if _fits_int64(f):
        res = np.remainder(np.array(coeffs, dtype=np.int64)[None, :], ps[:, None])
    else:
        res = np.empty((ps.size, len(coeffs)), dtype=np.int64)
        for k, p in enumerate(ps):
            pk = int(p)
            for j, c in enumerate(coeffs):
                res[k, j] = c % pk
    res = np.ascontiguousarray(res)
    return _kernels.nroots_rows(res, ps, bound)


def batch_local_data(f: IntPoly, primes: PrimeTable) -> list[LocalData]:
    """count_roots over all primes in the table, order-preserving."""
    ps = np.ascontiguousarray(primes.primes, dtype=np.int64)
    ns = nroots_array(f, ps)
    return [_local(int(p), int(n)) for p, n in zip(ps, ns)]
