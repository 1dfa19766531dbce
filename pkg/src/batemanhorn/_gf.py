"""Low-level F_p[x] arithmetic on plain coefficient lists.

Polynomials are lists of ints in [0, p), ascending by exponent, with
trailing zeros stripped; [] is the zero polynomial.  These helpers back
both the ModPoly wrapper type and the factorization-pattern machinery;
they stay list-based so the callers that only need a couple of gcds on
degree <= 8 inputs pay no object overhead.
"""

from __future__ import annotations


def strip(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def add(a: list[int], b: list[int], p: int) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, bi in enumerate(b):
        out[i] = (out[i] + bi) % p
    return strip(out)


def sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        ai = a[i] if i < len(a) else 0
        bi = b[i] if i < len(b) else 0
        out[i] = (ai - bi) % p
    return strip(out)


def mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return strip(out)


def scalar_mul(a: list[int], k: int, p: int) -> list[int]:
    k %= p
    if k == 0:
        return []
    return strip([(ai * k) % p for ai in a])


def monic(a: list[int], p: int) -> list[int]:
    """Normalize to leading coefficient 1 (zero polynomial stays zero)."""
    if not a:
        return []
    lc = a[-1]
    if lc == 1:
        return list(a)
    return scalar_mul(a, pow(lc, p - 2, p), p)


def divrem(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    """Quotient and remainder of a by b; b must be nonzero."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    inv = pow(b[-1], p - 2, p)
    q = [0] * max(len(a) - db, 0)
    for i in range(len(r) - 1, db - 1, -1):
        c = (r[i] * inv) % p
        if c:
            q[i - db] = c
            for j in range(db + 1):
                r[i - db + j] = (r[i - db + j] - c * b[j]) % p
    return strip(q), strip(r)


def gcd(a: list[int], b: list[int], p: int) -> list[int]:
    """Monic greatest common divisor; gcd(0, 0) = 0."""
    a, b = list(a), list(b)
    while b:
        a, b = b, divrem(a, b, p)[1]
    return monic(a, p)


def powmod(base: list[int], e: int, modulus: list[int], p: int) -> list[int]:
    """base**e reduced mod `modulus`, by square-and-multiply."""
    if not modulus:
        raise ZeroDivisionError("zero modulus")
    if e < 0:
        raise ValueError("negative exponent")
    result = divrem([1], modulus, p)[1] if len(modulus) == 1 else [1]
    b = divrem(base, modulus, p)[1]
    while e:
        if e & 1:
            result = divrem(mul(result, b, p), modulus, p)[1]
        b = divrem(mul(b, b, p), modulus, p)[1]
        e >>= 1
    return result


def deriv(a: list[int], p: int) -> list[int]:
    return strip([(i * a[i]) % p for i in range(1, len(a))])


def eval_at(a: list[int], x: int, p: int) -> int:
    v = 0
    for c in reversed(a):
        v = (v * x + c) % p
    return v


def pth_root(a: list[int], p: int) -> list[int]:
    """p-th root of a polynomial of the form g(x^p).

    In F_p[x], (sum c_i x^i)^p = sum c_i x^(p*i), so a p-th power has
    nonzero coefficients only at exponents divisible by p and the root
    just gathers them.
    """
    return strip([a[i] for i in range(0, len(a), p)])


def radical(a: list[int], p: int) -> list[int]:
    """Product of the distinct irreducible factors of a (the squarefree part), monic.

    a / gcd(a, a') alone misses factors whose multiplicity is divisible
    by p; those survive in the gcd as a perfect p-th power and are
    handled by recursing on the p-th root.
    """
    a = monic(a, p)
    if len(a) <= 1:
        return [1] if a else []
    d = deriv(a, p)
    if not d:
        return radical(pth_root(a, p), p)
    g = gcd(a, d, p)
    if len(g) == 1:
        return a
    w = divrem(a, g, p)[0]  # factors with multiplicity not divisible by p, each once
    # peel w's factors off a until only the p-th-power part remains
    y = list(a)
    while True:
        h = gcd(y, w, p)
        if len(h) == 1:
            break
        y = divrem(y, h, p)[0]
    if len(y) == 1:
        return monic(w, p)
    return monic(mul(w, radical(pth_root(y, p), p), p), p)


def distinct_degree_pattern(a: list[int], p: int) -> tuple[int, ...]:
    """Factor degrees (with repetition) of a monic squarefree polynomial.

    Classic distinct-degree factorization: x^(p^d) - x is the product of
    all monic irreducibles of degree dividing d, so successive gcds peel
    off the degree-1 part, then degree-2, and so on.
    """
    s = monic(a, p)
    degrees: list[int] = []
    h = divrem([0, 1], s, p)[1]  # x mod s
    d = 0
    while len(s) - 1 > 0:
        d += 1
        if 2 * d > len(s) - 1:
            # whatever is left is a single irreducible factor
            degrees.append(len(s) - 1)
            break
        h = powmod(h, p, s, p)
        g = gcd(sub(h, [0, 1], p), s, p)
        if len(g) > 1:
            degrees.extend([d] * ((len(g) - 1) // d))
            s = divrem(s, g, p)[0]
            h = divrem(h, s, p)[1]
    return tuple(sorted(degrees))
