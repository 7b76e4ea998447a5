"""Exact overlattice arithmetic.

Every lattice handled here is a finite-index overlattice of ``Z^d``: the
group generated by the standard basis and a few rational vectors.  All
values are :class:`fractions.Fraction`; nothing is ever rounded.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import gcd, lcm
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]


class LatticeError(ValueError):
    """Raised on malformed lattice input (dimension mismatch, non-membership, ...)."""


def vec(*xs) -> Vector:
    """Build a rational vector from ints, Fractions or ``"p/q"`` strings."""
    return tuple(Fraction(x) for x in xs)


def qvec(denom: int, nums: Iterable[int]) -> Vector:
    """``(1/denom)(nums)`` as a rational vector."""
    if denom == 0:
        raise LatticeError("zero denominator")
    return tuple(Fraction(x, denom) for x in nums)


def unit_vector(dim: int, i: int) -> Vector:
    return tuple(Fraction(int(j == i)) for j in range(dim))


def common_denominator(xs: Iterable[Fraction]) -> int:
    return lcm(1, *((x if isinstance(x, Fraction) else Fraction(x)).denominator for x in xs))


def int_det(m: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by fraction-free (Bareiss) elimination."""
    a = [list(r) for r in m]
    n = len(a)
    if any(len(r) != n for r in a):
        raise LatticeError("determinant of a non-square matrix")
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if piv is None:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


def _integral(rows: Sequence[Sequence]) -> tuple[list[list[int]], int]:
    """Clear denominators: ``(integer rows, den)`` with ``rows == int_rows / den``."""
    fr = [[x if isinstance(x, Fraction) else Fraction(x) for x in r] for r in rows]
    den = lcm(1, *(x.denominator for r in fr for x in r))
    return [[x.numerator * (den // x.denominator) for x in r] for r in fr], den


def det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant of a rational matrix."""
    m, den = _integral(rows)
    return Fraction(int_det(m), den ** len(m))


def solve_left(rows: Sequence[Vector], x: Sequence[Fraction]) -> Vector:
    """Coefficients ``c`` with ``sum(c[j] * rows[j]) == x`` for a square invertible ``rows`` (Cramer's rule)."""
    n = len(rows)
    if len(x) != n or any(len(r) != n for r in rows):
        raise LatticeError("dimension mismatch")
    m, den = _integral(list(rows) + [x])
    a, b = m[:n], m[n]
    d = int_det(a)
    if d == 0:
        raise LatticeError("generators are linearly dependent")
    out = []
    for j in range(n):
        aj = [b if i == j else r for i, r in enumerate(a)]
        out.append(Fraction(int_det(aj), d))
    return tuple(out)


def hermite_rows(rows: Iterable[Sequence[int]], dim: int) -> list[list[int]]:
    """Row-style Hermite normal form of a full-rank integer row set.

    Upper triangular, positive pivots, entries above each pivot reduced
    into ``[0, pivot)``.
    """
    pending = [list(r) for r in rows if any(r)]
    basis: list[list[int]] = []
    for col in range(dim):
        active = [r for r in pending if r[col] != 0]
        rest = [r for r in pending if r[col] == 0]
        while len(active) > 1:
            active.sort(key=lambda r: abs(r[col]))
            p = active[0]
            keep = [p]
            for r in active[1:]:
                q = r[col] // p[col]
                r = [a - q * b for a, b in zip(r, p)]
                (keep if r[col] != 0 else rest).append(r)
            active = keep
        if not active:
            raise LatticeError("generated group is not of full rank")
        p = active[0]
        if p[col] < 0:
            p = [-a for a in p]
        basis.append(p)
        pending = [r for r in rest if any(r)]
    for i in range(dim):
        piv = basis[i][i]
        for j in range(i):
            q = basis[j][i] // piv
            if q:
                basis[j] = [a - q * b for a, b in zip(basis[j], basis[i])]
    return basis


def _canonical_basis(dim: int, vectors: Sequence[Vector]) -> tuple[Vector, ...]:
    den = common_denominator(x for v in vectors for x in v)
    rows = [[int(x * den) for x in v] for v in vectors]
    h = hermite_rows(rows, dim)
    return tuple(tuple(Fraction(x, den) for x in r) for r in h)


@dataclass(frozen=True)
class Overlattice:
    """The group ``Z^d + sum Z g`` for rational vectors ``g``.

    Equality compares the canonical basis only, so two descriptions of the
    same group are equal.
    """

    dim: int
    adjoined: tuple[Vector, ...] = field(compare=False, default=())
    canonical_basis: tuple[Vector, ...] = field(default=())

    def __repr__(self) -> str:
        gens = ", ".join("(" + ",".join(str(x) for x in g) + ")" for g in self.adjoined)
        return f"Overlattice(Z^{self.dim} + <{gens}>)"


def canonicalize(dim: int, adjoined: Iterable[Sequence] = ()) -> Overlattice:
    if dim <= 0:
        raise LatticeError(f"dimension must be positive, got {dim}")
    gens = tuple(tuple(Fraction(x) for x in g) for g in adjoined)
    for g in gens:
        if len(g) != dim:
            raise LatticeError(f"adjoined vector of length {len(g)} in dimension {dim}")
    units = [unit_vector(dim, i) for i in range(dim)]
    return Overlattice(dim, gens, _canonical_basis(dim, units + list(gens)))


def standard(dim: int) -> Overlattice:
    return canonicalize(dim, ())


def _check_dim(L: Overlattice, x: Sequence) -> None:
    if len(x) != L.dim:
        raise LatticeError(f"vector of length {len(x)} in a lattice of dimension {L.dim}")


def coordinates(L: Overlattice, x: Sequence) -> tuple[Fraction, ...]:
    """Coordinates of ``x`` in the canonical basis (integral iff ``x`` is in ``L``)."""
    _check_dim(L, x)
    B = L.canonical_basis
    c: list[Fraction] = []
    for j in range(L.dim):
        s = Fraction(x[j]) - sum((c[i] * B[i][j] for i in range(j)), Fraction(0))
        c.append(s / B[j][j])
    return tuple(c)


def contains(L: Overlattice, x: Sequence) -> bool:
    return all(c.denominator == 1 for c in coordinates(L, x))


def index(L: Overlattice) -> int:
    """``[L : Z^d]``."""
    idx = 1 / det(L.canonical_basis)
    assert idx.denominator == 1
    return int(idx)


def is_primitive(L: Overlattice, x: Sequence) -> bool:
    c = coordinates(L, x)
    if any(t.denominator != 1 for t in c):
        raise LatticeError(f"{x} is not in {L}")
    if not any(c):
        raise LatticeError("the zero vector is not primitive")
    return gcd(*(int(t) for t in c)) == 1


def generates(L: Overlattice, vectors: Sequence[Sequence]) -> bool:
    """True iff the given vectors generate exactly the group ``L``."""
    vs = [tuple(Fraction(x) for x in v) for v in vectors]
    for v in vs:
        _check_dim(L, v)
    try:
        return _canonical_basis(L.dim, vs) == L.canonical_basis
    except LatticeError:
        return False


def invariant_factors(m: Sequence[Sequence[int]]) -> list[int]:
    """Invariant factors of a square nonsingular integer matrix (determinantal divisors)."""
    n = len(m)
    divisors = [1]
    for k in range(1, n + 1):
        g = 0
        for rs in combinations(range(n), k):
            for cs in combinations(range(n), k):
                g = gcd(g, int_det([[m[r][c] for c in cs] for r in rs]))
                if g == 1:
                    break
            if g == 1:
                break
        divisors.append(g)
    if divisors[-1] == 0:
        raise LatticeError("singular relation matrix")
    return [divisors[k] // divisors[k - 1] for k in range(1, n + 1)]


@dataclass(frozen=True)
class QuotientType:
    """Type ``(1/order)(weights)`` of the finite group ``L / <generators>``."""

    order: int
    weights: tuple[int, ...]
    kind: str  # "smooth" | "cyclic" | "non-cyclic"
    invariants: tuple[int, ...] = ()

    def __str__(self) -> str:
        if self.kind == "smooth":
            return "smooth"
        if self.kind == "non-cyclic":
            return f"non-cyclic{self.invariants}"
        return f"1/{self.order}(" + ", ".join(map(str, self.weights)) + ")"


def _class_of(gens: Sequence[Vector], x: Sequence, p: int) -> tuple[int, ...]:
    lam = solve_left(gens, x)
    return tuple(int(t * p) % p for t in lam)


def _element_order(e: Sequence[int], p: int) -> int:
    return p // gcd(p, *e)


def _cyclic_generator(seeds: Sequence[tuple[int, ...]], p: int) -> tuple[int, ...]:
    """A generator of the cyclic subgroup of ``(Z/p)^d`` spanned by ``seeds``."""
    d = len(seeds[0])
    g = (0,) * d
    for s in seeds:
        if _element_order(g, p) == p:
            break
        target = p // gcd(p, *g, *s)
        for t in range(p):
            c = tuple((a + t * b) % p for a, b in zip(g, s))
            if _element_order(c, p) == target:
                g = c
                break
    if _element_order(g, p) != p:
        raise LatticeError("quotient group is not cyclic")
    return g


def _smallest_unit_multiple(g: Sequence[int], p: int) -> tuple[int, ...]:
    """Lexicographically smallest ``u*g mod p`` over units ``u``.

    These are exactly the elements of the cyclic group with entries
    coprime to ``p`` as a whole, i.e. the generators.
    """
    units = [u for u in range(1, p) if gcd(u, p) == 1] or [1]
    for x in g:
        vals = [(u * x) % p for u in units]
        m = min(vals)
        units = [u for u, v in zip(units, vals) if v == m]
        if len(units) == 1:
            break
    u = units[0]
    return tuple((u * x) % p for x in g)


def quotient_type(L: Overlattice, generators: Sequence[Sequence]) -> QuotientType:
    return _quotient_type(L, tuple(tuple(Fraction(x) for x in g) for g in generators))


@lru_cache(maxsize=4096)
def _quotient_type(L: Overlattice, gens: tuple[Vector, ...]) -> QuotientType:
    if len(gens) != L.dim:
        raise LatticeError(f"need {L.dim} generators, got {len(gens)}")
    if det(gens) == 0:
        raise LatticeError("generators are linearly dependent")
    rel = []
    for g in gens:
        c = coordinates(L, g)
        if any(t.denominator != 1 for t in c):
            raise LatticeError(f"generator {g} is not in {L}")
        rel.append([int(t) for t in c])
    inv = tuple(f for f in invariant_factors(rel) if f != 1)
    order = 1
    for f in inv:
        order *= f
    d = L.dim
    if order == 1:
        return QuotientType(1, (0,) * d, "smooth", ())
    if len(inv) > 1:
        return QuotientType(order, (), "non-cyclic", inv)
    p = order
    seeds = sorted({_class_of(gens, b, p) for b in L.canonical_basis})
    g = _cyclic_generator(seeds, p)
    best = _smallest_unit_multiple(g, p)
    return QuotientType(p, best, "cyclic", inv)


def same_type(t: QuotientType, order: int, weights: Sequence[int]) -> bool:
    """Equality with ``(1/order)(weights)`` up to a unit multiple modulo ``order``."""
    if t.kind == "non-cyclic" or t.order != order or len(weights) != len(t.weights):
        return False
    target = tuple(w % order for w in weights)
    if order == 1:
        return True
    return any(
        tuple(k * w % order for w in t.weights) == target
        for k in range(1, order)
        if gcd(k, order) == 1
    )
