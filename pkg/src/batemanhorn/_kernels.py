"""Numba kernels for the hot loops: root counts mod p and mod-p
irreducibility certificates.

The experiment pipelines evaluate n_p(f) for ~10^8 (polynomial, prime)
pairs, which is far outside pure-Python territory.  Everything here
works on int64 coefficient rows (reduction of wider integers happens in
the callers) and is exact for p < 2^31: every product of two residues
stays below 2^62 and intermediate values are reduced before they can
reach 2^63.

Scratch layout: coefficient arrays ascending by exponent, effective
degree tracked separately, `mod` operands monic.
"""

from __future__ import annotations

import warnings

# harmless threading-layer probe noise on some TBB installs; numba falls
# back to its built-in layer
warnings.filterwarnings("ignore", message=".*TBB threading layer.*")

import numba as nb
import numpy as np


@nb.njit(cache=True, error_model="numpy", inline="always")
def _powmod_scalar(b, e, p):
    b %= p
    r = 1
    while e:
        if e & 1:
            r = (r * b) % p
        b = (b * b) % p
        e >>= 1
    return r


@nb.njit(cache=True, error_model="numpy", inline="always")
def _degree_of(a, top):
    d = top
    while d >= 0 and a[d] == 0:
        d -= 1
    return d


@nb.njit(cache=True, error_model="numpy")
def _pmulmod(a, da, b, db, m, dm, p, prod):
    """prod[0:dm] = a*b mod m (m monic, deg dm); returns the degree.

    For p < 2^26 (every sieve-range prime) reductions are delayed to one
    % per output slot: at most 64 accumulated terms of size < p^2 < 2^52
    each way keeps intermediates below 2^59, well inside int64.
    """
    if da < 0 or db < 0:
        for i in range(dm):
            prod[i] = 0
        return -1
    # clear through dm-1 as well: callers copy prod[0:dm] back wholesale
    for i in range(max(da + db + 1, dm)):
        prod[i] = 0
    if p < (1 << 26) and dm <= 64:
        for i in range(da + 1):
            ai = a[i]
            if ai:
                for j in range(db + 1):
                    prod[i + j] += ai * b[j]
        for i in range(da + db, dm - 1, -1):
            c = prod[i] % p
            prod[i] = 0
            if c:
                off = i - dm
                for j in range(dm):
                    prod[off + j] -= c * m[j]
        for j in range(dm):
            prod[j] %= p
    else:
        for i in range(da + 1):
            ai = a[i]
            if ai:
                for j in range(db + 1):
                    prod[i + j] = (prod[i + j] + ai * b[j]) % p
        for i in range(da + db, dm - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                off = i - dm
                for j in range(dm):
                    prod[off + j] = (prod[off + j] - c * m[j]) % p
    return _degree_of(prod, min(dm - 1, da + db))


@nb.njit(cache=True, error_model="numpy")
def _psqrmod(a, da, m, dm, p, prod):
    """prod[0:dm] = a*a mod m; symmetric-product variant of _pmulmod."""
    if da < 0:
        for i in range(dm):
            prod[i] = 0
        return -1
    for i in range(max(2 * da + 1, dm)):
        prod[i] = 0
    if p < (1 << 26) and dm <= 64:
        for i in range(da + 1):
            ai = a[i]
            if ai:
                prod[2 * i] += ai * ai
                ai2 = 2 * ai
                for j in range(i + 1, da + 1):
                    prod[i + j] += ai2 * a[j]
        for i in range(2 * da, dm - 1, -1):
            c = prod[i] % p
            prod[i] = 0
            if c:
                off = i - dm
                for j in range(dm):
                    prod[off + j] -= c * m[j]
        for j in range(dm):
            prod[j] %= p
        return _degree_of(prod, min(dm - 1, 2 * da))
    return _pmulmod(a, da, a, da, m, dm, p, prod)


@nb.njit(cache=True, error_model="numpy")
def _prem(a, da, b, db, p):
    """a %= b in place (b need not be monic); returns the new degree."""
    inv = _powmod_scalar(b[db], p - 2, p)
    for i in range(da, db - 1, -1):
        c = (a[i] * inv) % p
        a[i] = 0
        if c:
            off = i - db
            for j in range(db):
                a[off + j] = (a[off + j] - c * b[j]) % p
    return _degree_of(a, min(db - 1, da))


@nb.njit(cache=True, error_model="numpy")
def _pgcd_deg(a, da, b, db, p):
    """Degree of gcd(a, b); destroys both buffers.  gcd with 0 is the other."""
    if da < 0:
        return db
    while db >= 0:
        da = _prem(a, da, b, db, p)
        ta, tda = a, da
        a, da = b, db
        b, db = ta, tda
    return da


@nb.njit(cache=True, error_model="numpy")
def _ppowmod(base, db, e, m, dm, p, acc, prod):
    """acc[0:dm] = base^e mod m (m monic); destroys base; returns degree."""
    for i in range(dm):
        acc[i] = 0
    acc[0] = 1
    dacc = 0
    while e:
        if e & 1:
            dacc = _pmulmod(acc, dacc, base, db, m, dm, p, prod)
            for i in range(dm):
                acc[i] = prod[i]
        e >>= 1
        if e:
            db = _psqrmod(base, db, m, dm, p, prod)
            for i in range(dm):
                base[i] = prod[i]
    return dacc


@nb.njit(cache=True, error_model="numpy")
def _xpow_mod(fb, d, e, p, r, prod):
    """r[0:d] = x^e mod fb (fb monic, deg d >= 2); returns degree of r."""
    # left-to-right square-and-multiply starting from the top bit, base x
    bit = 62
    while bit >= 0 and not (e >> bit) & 1:
        bit -= 1
    for i in range(d):
        r[i] = 0
    r[1] = 1
    dr = 1
    bit -= 1
    while bit >= 0:
        dr = _psqrmod(r, dr, fb, d, p, prod)
        for i in range(d):
            r[i] = prod[i]
        if (e >> bit) & 1:
            # multiply by x: shift up one place, reduce once if the top spills
            c = r[d - 1] if dr == d - 1 else 0
            for i in range(min(dr, d - 2), -1, -1):
                r[i + 1] = r[i]
            r[0] = 0
            if c:
                for j in range(d):
                    r[j] = (r[j] - c * fb[j]) % p
            dr = _degree_of(r, d - 1)
        bit -= 1
    return dr


@nb.njit(cache=True, error_model="numpy")
def _nroots_one(fb, top, p, enum_bound, r, tmp, prod):
    """Distinct roots mod p of the polynomial in fb (exponents 0..top).

    Zero reduction -> p roots; nonzero constant -> 0; small p ->
    enumerate residues; degree 2 -> quadratic character of the
    discriminant; otherwise deg gcd(x^p - x, fb).
    """
    d = _degree_of(fb, top)
    if d < 0:
        return p
    if d == 0:
        return 0
    if p <= enum_bound:
        count = 0
        for root in range(p):
            v = 0
            for j in range(d, -1, -1):
                v = (v * root + fb[j]) % p
            if v == 0:
                count += 1
        return count
    if d == 1:
        return 1
    if d == 2:
        # p odd here (p > enum_bound >= 2): 1 + chi(b^2 - 4ac) roots
        disc = (fb[1] * fb[1] - (((4 * fb[0]) % p) * fb[2]) % p) % p
        if disc == 0:
            return 1
        return 2 if _powmod_scalar(disc, (p - 1) >> 1, p) == 1 else 0
    if fb[d] != 1:
        inv = _powmod_scalar(fb[d], p - 2, p)
        for i in range(d + 1):
            fb[i] = (fb[i] * inv) % p
    dr = _xpow_mod(fb, d, p, p, r, prod)
    r[1] = (r[1] - 1) % p  # r <- x^p - x
    dr = _degree_of(r, d - 1)
    for i in range(d + 1):
        tmp[i] = fb[i]
    return _pgcd_deg(tmp, d, r, dr, p)


@nb.njit(parallel=True, cache=True, error_model="numpy")
def nroots_samples(coeffs, ps, enum_bound):
    """n_p for every (sample row, prime) pair; coefficients must fit int64."""
    n_samples, width = coeffs.shape
    n_primes = ps.size
    out = np.empty((n_samples, n_primes), dtype=np.int64)
    for s in nb.prange(n_samples):
        fb = np.empty(width, dtype=np.int64)
        r = np.empty(width + 2, dtype=np.int64)
        tmp = np.empty(2 * width + 2, dtype=np.int64)
        prod = np.empty(2 * width + 2, dtype=np.int64)
        for k in range(n_primes):
            p = ps[k]
            for j in range(width):
                fb[j] = coeffs[s, j] % p
            out[s, k] = _nroots_one(fb, width - 1, p, enum_bound, r, tmp, prod)
    return out


@nb.njit(parallel=True, cache=True, error_model="numpy")
def nroots_rows(residues, ps, enum_bound):
    """n_p per prime for one polynomial whose residues are precomputed.

    Row k holds the coefficients of f mod ps[k]; this is the entry point
    for coefficients too wide for int64 (reduction happens in Python).
    """
    n_primes, width = residues.shape
    out = np.empty(n_primes, dtype=np.int64)
    for k in nb.prange(n_primes):
        fb = np.empty(width, dtype=np.int64)
        r = np.empty(width + 2, dtype=np.int64)
        tmp = np.empty(2 * width + 2, dtype=np.int64)
        prod = np.empty(2 * width + 2, dtype=np.int64)
        for j in range(width):
            fb[j] = residues[k, j]
        out[k] = _nroots_one(fb, width - 1, ps[k], enum_bound, r, tmp, prod)
    return out


@nb.njit(cache=True, error_model="numpy")
def _is_irreducible_mod(fb, d, p, h, base, t, tmp, prod):
    """Rabin test: is fb (monic, deg d >= 2) irreducible over F_p?

    gcd(x^(p^j) - x, f) collects exactly the irreducible factors of f
    whose degree divides j, so every proper j must give gcd 1 and the
    d-fold Frobenius must fix x.
    """
    for i in range(d):
        h[i] = 0
    h[1] = 1
    dh = 1
    for j in range(1, d + 1):
        for i in range(d):
            base[i] = h[i]
        dh = _ppowmod(base, dh, p, fb, d, p, h, prod)
        if j < d:
            for i in range(d):
                t[i] = h[i]
            t[1] = (t[1] - 1) % p
            dt = _degree_of(t, d - 1)
            for i in range(d + 1):
                tmp[i] = fb[i]
            if _pgcd_deg(tmp, d, t, dt, p) != 0:
                return False
    if dh != 1:
        return False
    return h[0] == 0 and h[1] == 1


@nb.njit(cache=True, error_model="numpy")
def _cert_scan_one(coeffs, degree, cert_primes, max_eligible, fb, h, base, t, tmp, prod):
    tried = 0
    for k in range(cert_primes.size):
        if tried >= max_eligible:
            break
        p = cert_primes[k]
        if coeffs[degree] % p == 0:  # p | lc: degree drops, prime ineligible
            continue
        tried += 1
        for j in range(degree + 1):
            fb[j] = coeffs[j] % p
        if fb[degree] != 1:
            inv = _powmod_scalar(fb[degree], p - 2, p)
            for j in range(degree + 1):
                fb[j] = (fb[j] * inv) % p
        if _is_irreducible_mod(fb, degree, p, h, base, t, tmp, prod):
            return p
    return 0


@nb.njit(cache=True, error_model="numpy")
def cert_scan(coeffs, cert_primes, max_eligible):
    """Witness prime certifying Q-irreducibility (full-degree reduction
    irreducible mod p), or 0 if none of the scanned primes certifies."""
    width = coeffs.size
    fb = np.empty(width, dtype=np.int64)
    h = np.empty(width + 2, dtype=np.int64)
    base = np.empty(width + 2, dtype=np.int64)
    t = np.empty(width + 2, dtype=np.int64)
    tmp = np.empty(2 * width + 2, dtype=np.int64)
    prod = np.empty(2 * width + 2, dtype=np.int64)
    return _cert_scan_one(coeffs, width - 1, cert_primes, max_eligible, fb, h, base, t, tmp, prod)


@nb.njit(parallel=True, cache=True, error_model="numpy")
def cert_scan_batch(coeffs, cert_primes, max_eligible):
    """cert_scan over sample rows; 0 entries need the exact Python pipeline."""
    n_samples, width = coeffs.shape
    out = np.empty(n_samples, dtype=np.int64)
    for s in nb.prange(n_samples):
        fb = np.empty(width, dtype=np.int64)
        h = np.empty(width + 2, dtype=np.int64)
        base = np.empty(width + 2, dtype=np.int64)
        t = np.empty(width + 2, dtype=np.int64)
        tmp = np.empty(2 * width + 2, dtype=np.int64)
        prod = np.empty(2 * width + 2, dtype=np.int64)
        out[s] = _cert_scan_one(coeffs[s], width - 1, cert_primes, max_eligible, fb, h, base, t, tmp, prod)
    return out
