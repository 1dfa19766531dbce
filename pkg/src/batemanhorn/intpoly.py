"""Exact integer-coefficient polynomials and their reductions mod a prime.

IntPoly stores arbitrary-precision coefficients in ascending order, so
index equals exponent everywhere; the zero polynomial is the empty
tuple.  ModPoly pins the prime alongside the residues and every binary
operation checks the primes match, because silently mixing moduli is the
bug that actually happens in this kind of code.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _gf

MAX_MODULUS = 1 << 31


def _strip(coeffs) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPoly:
    """Univariate polynomial over Z; coeffs[i] is the coefficient of x^i."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", _strip(int(c) for c in coeffs))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, bi in enumerate(b):
            out[i] += bi
        return IntPoly(out)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPoly(out)

    def __call__(self, k: int) -> int:
        return evaluate(self, k)

    def derivative(self) -> "IntPoly":
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def translate(self, a: int) -> "IntPoly":
        """The polynomial f(x + a), computed exactly (Taylor shift)."""
        out = [0] * len(self.coeffs)
        for c in reversed(self.coeffs):
            # multiply accumulated polynomial by (x + a), then add c
            for i in range(len(out) - 1, 0, -1):
                out[i] = out[i - 1] + a * out[i]
            out[0] = a * out[0] + c
        return IntPoly(out)

    def __str__(self) -> str:
        from .cli import render_poly

        return render_poly(self)


def poly(*coeffs: int) -> IntPoly:
    """Convenience constructor: poly(c0, c1, ..., cn)."""
    return IntPoly(coeffs)


def monomial(degree: int, coeff: int = 1) -> IntPoly:
    return IntPoly([0] * degree + [coeff])


X = monomial(1)


def evaluate(f: IntPoly, k: int) -> int:
    """f(k), exact, in Horner order."""
    v = 0
    for c in reversed(f.coeffs):
        v = v * k + c
    return v


def content(f: IntPoly) -> int:
    """gcd of the absolute coefficient values; 0 for the zero polynomial."""
    g = 0
    for c in f.coeffs:
        g = math.gcd(g, c)
        if g == 1:
            break
    return g


def primitive_part(f: IntPoly) -> IntPoly:
    c = content(f)
    if c <= 1:
        return f
    return IntPoly(x // c for x in f.coeffs)


def product(polys) -> IntPoly:
    out = IntPoly([1])
    for f in polys:
        out = out * f
    return out


def _check_modulus(p: int) -> None:
    from .primes import is_prime

    if p >= MAX_MODULUS:
        raise ValueError(f"modulus {p} is not below 2^31")
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")


@dataclass(frozen=True)
class ModPoly:
    """Polynomial over F_p; residues in [0, p), ascending, trailing zeros stripped."""

    p: int
    coeffs: tuple[int, ...]

    def __init__(self, p: int, coeffs=(), *, _checked: bool = False):
        if not _checked:
            _check_modulus(p)
            coeffs = _strip(int(c) % p for c in coeffs)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def _lift(self, coeffs: list[int]) -> "ModPoly":
        return ModPoly(self.p, tuple(coeffs), _checked=True)

    def __call__(self, k: int) -> int:
        return _gf.eval_at(list(self.coeffs), k % self.p, self.p)

    def __add__(self, other: "ModPoly") -> "ModPoly":
        return add(self, other)

    def __sub__(self, other: "ModPoly") -> "ModPoly":
        return sub(self, other)

    def __mul__(self, other: "ModPoly") -> "ModPoly":
        return mul(self, other)


def reduce_mod(f: IntPoly, p: int) -> ModPoly:
    """Coefficient-wise reduction of f into F_p[x].

    The result is the zero ModPoly exactly when p divides the content
    of f.  The degree drops whenever p divides the leading coefficient.
    """
    _check_modulus(p)
    return ModPoly(p, _strip(c % p for c in f.coeffs), _checked=True)


def _same_p(a: ModPoly, b: ModPoly) -> int:
    if a.p != b.p:
        raise ValueError(f"mixed moduli: {a.p} and {b.p}")
    return a.p


def add(a: ModPoly, b: ModPoly) -> ModPoly:
    p = _same_p(a, b)
    return a._lift(_gf.add(list(a.coeffs), list(b.coeffs), p))


def sub(a: ModPoly, b: ModPoly) -> ModPoly:
    p = _same_p(a, b)
    return a._lift(_gf.sub(list(a.coeffs), list(b.coeffs), p))


def mul(a: ModPoly, b: ModPoly) -> ModPoly:
    p = _same_p(a, b)
    return a._lift(_gf.mul(list(a.coeffs), list(b.coeffs), p))


def divrem(a: ModPoly, b: ModPoly) -> tuple[ModPoly, ModPoly]:
    p = _same_p(a, b)
    if b.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    q, r = _gf.divrem(list(a.coeffs), list(b.coeffs), p)
    return a._lift(q), a._lift(r)


def gcd(a: ModPoly, b: ModPoly) -> ModPoly:
    """Monic gcd in F_p[x]; gcd(0, 0) is the zero polynomial."""
    p = _same_p(a, b)
    return a._lift(_gf.gcd(list(a.coeffs), list(b.coeffs), p))


def powmod(base: ModPoly, e: int, modulus: ModPoly) -> ModPoly:
    """base^e reduced modulo `modulus`, by square-and-multiply."""
    p = _same_p(base, modulus)
    if modulus.is_zero:
        raise ZeroDivisionError("zero modulus")
    return base._lift(_gf.powmod(list(base.coeffs), e, list(modulus.coeffs), p))
