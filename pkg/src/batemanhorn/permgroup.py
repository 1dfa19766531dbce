"""Permutation groups on {0..n-1} and the Burnside fixed-point average.

Groups are materialized as full element sets by breadth-first closure of
the generators (degrees here are tiny, so brute force is the testable
choice), and the fixed-point average is kept as an exact Fraction:
the whole point of the transitivity lemma is that the average is
*exactly* 1, which floating point would blur.

Permutations are tuples: mapping[i] is the image of point i.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Permutation = tuple[int, ...]

CLOSURE_CAP = 10**6


def identity(n: int) -> Permutation:
    return tuple(range(n))


def compose(a: Permutation, b: Permutation) -> Permutation:
    """a after b: point i goes to a[b[i]]."""
    return tuple(a[b[i]] for i in range(len(a)))


def inverse(a: Permutation) -> Permutation:
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[j] = i
    return tuple(out)


def fixed_points(a: Permutation) -> int:
    return sum(1 for i, j in enumerate(a) if i == j)


def _validate(a: Permutation, n: int) -> None:
    if len(a) != n:
        raise ValueError(f"permutation degree {len(a)} does not match {n}")
    if sorted(a) != list(range(n)):
        raise ValueError(f"not a bijection of 0..{n - 1}: {a}")


@dataclass(frozen=True)
class PermGroup:
    n: int
    elements: frozenset[Permutation]

    def __len__(self) -> int:
        return len(self.elements)


def closure(generators, cap: int = CLOSURE_CAP) -> PermGroup:
    """The group generated by the given permutations (breadth-first)."""
    gens = [tuple(g) for g in generators]
    if not gens:
        raise ValueError("need at least one generator")
    n = len(gens[0])
    for g in gens:
        _validate(g, n)
    seen = {identity(n)}
    frontier = [identity(n)]
    while frontier:
        new = []
        for a in frontier:
            for g in gens:
                c = compose(g, a)
                if c not in seen:
                    seen.add(c)
                    new.append(c)
                    if len(seen) > cap:
                        raise ValueError(f"closure exceeds cap of {cap} elements")
        frontier = new
    return PermGroup(n, frozenset(seen))


def is_transitive(g: PermGroup) -> bool:
    """True iff the orbit of point 0 is all of {0..n-1}."""
    orbit = {a[0] for a in g.elements}
    return len(orbit) == g.n


def orbit_count(g: PermGroup) -> int:
    """Number of orbits, computed directly from the action."""
    seen: set[int] = set()
    count = 0
    for start in range(g.n):
        if start in seen:
            continue
        count += 1
        stack = [start]
        while stack:
            x = stack.pop()
            if x in seen:
                continue
            seen.add(x)
            stack.extend(a[x] for a in g.elements)
    return count


def average_fixed_points(g: PermGroup) -> Fraction:
    """Exact average of |X^g| over the group; equals the orbit count
    (Burnside), hence exactly 1 for transitive groups."""
    total = sum(fixed_points(a) for a in g.elements)
    return Fraction(total, len(g.elements))


def pad_to(a: Permutation, n: int) -> Permutation:
    """Extend a permutation to degree n by fixing the new points."""
    if len(a) > n:
        raise ValueError(f"cannot shrink a degree-{len(a)} permutation to {n}")
    return tuple(a) + tuple(range(len(a), n))


def common_degree(perms) -> list[Permutation]:
    """Pad a family of permutations to their maximum degree."""
    perms = [tuple(a) for a in perms]
    n = max((len(a) for a in perms), default=0)
    return [pad_to(a, n) for a in perms]


def parse_generators(text: str, n: int | None = None) -> list[Permutation]:
    """Parse comma- or semicolon-separated cycle words into permutations
    on a common point set, e.g. "(0 1 2), (1 2 3)"."""
    words = [w for w in text.replace(";", ",").split(",") if w.strip()]
    if not words:
        raise ValueError("no generators given")
    perms = [parse_cycles(w, n) for w in words]
    return common_degree(perms)


def parse_cycles(text: str, n: int | None = None) -> Permutation:
    """Parse disjoint-cycle notation like "(0 1)(2 3)" into a permutation.

    Points are whitespace-separated inside parentheses; the degree is
    max point + 1 unless given explicitly.  Cycles are applied as their
    product (left to right composition of disjoint cycles commutes).
    """
    s = text.strip()
    if not s:
        raise ValueError("empty permutation")
    cycles: list[list[int]] = []
    i = 0
    while i < len(s):
        ch = s[i]
        if ch.isspace():
            i += 1
            continue
        if ch != "(":
            raise ValueError(f"expected '(' at offset {i} in {text!r}")
        j = s.find(")", i)
        if j < 0:
            raise ValueError(f"unclosed '(' at offset {i} in {text!r}")
        body = s[i + 1 : j].split()
        try:
            pts = [int(t) for t in body]
        except ValueError as exc:
            raise ValueError(f"bad point in cycle {s[i : j + 1]!r}") from exc
        if any(p < 0 for p in pts):
            raise ValueError("points must be nonnegative")
        if len(set(pts)) != len(pts):
            raise ValueError(f"repeated point in cycle {s[i : j + 1]!r}")
        cycles.append(pts)
        i = j + 1
    degree = max((p for c in cycles for p in c), default=-1) + 1
    if n is not None:
        if n < degree:
            raise ValueError(f"degree {n} too small for points up to {degree - 1}")
        degree = n
    out = list(range(degree))
    moved: set[int] = set()
    for c in cycles:
        if moved & set(c):
            raise ValueError("cycles must be disjoint")
        moved |= set(c)
        for k, p in enumerate(c):
            out[p] = c[(k + 1) % len(c)]
    return tuple(out)
