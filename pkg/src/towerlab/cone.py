"""Simplicial cones, star subdivision and two-step towers of weighted blowups."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Sequence

from .lattice import (
    LatticeError,
    Overlattice,
    QuotientType,
    Vector,
    common_denominator,
    contains,
    det,
    generates,
    is_primitive,
    quotient_type,
    solve_left,
    unit_vector,
)


class ConeError(ValueError):
    pass


@dataclass(frozen=True)
class SimplicialCone:
    lattice: Overlattice
    generators: tuple[Vector, ...]

    def __post_init__(self):
        if len(self.generators) != self.lattice.dim:
            raise ConeError("a simplicial cone needs exactly d generators")
        if det(self.generators) == 0:
            raise ConeError("cone generators are linearly dependent")
        for g in self.generators:
            if not contains(self.lattice, g) or not is_primitive(self.lattice, g):
                raise ConeError(f"generator {g} is not primitive in the lattice")


def _trusted(L: Overlattice, generators: tuple[Vector, ...]) -> SimplicialCone:
    """A cone whose generators are already known to be independent and primitive."""
    c = object.__new__(SimplicialCone)
    object.__setattr__(c, "lattice", L)
    object.__setattr__(c, "generators", generators)
    return c


@lru_cache(maxsize=256)
def first_quadrant(L: Overlattice) -> SimplicialCone:
    return SimplicialCone(L, tuple(unit_vector(L.dim, i) for i in range(L.dim)))


def barycentric(c: SimplicialCone, x: Sequence) -> Vector:
    if len(x) != c.lattice.dim:
        raise ConeError("dimension mismatch")
    return solve_left(c.generators, [Fraction(t) for t in x])


def interior_contains(c: SimplicialCone, x: Sequence) -> bool:
    return all(t > 0 for t in barycentric(c, x))


def replace_generator(c: SimplicialCone, i: int, v: Vector) -> SimplicialCone:
    gens = list(c.generators)
    gens[i] = v
    return SimplicialCone(c.lattice, tuple(gens))


def star_subdivide(c: SimplicialCone, v: Sequence) -> list[SimplicialCone]:
    """Charts of the subdivision of ``c`` along ``v``; chart ``i`` has generator ``i`` replaced by ``v``."""
    v = tuple(Fraction(t) for t in v)
    if not interior_contains(c, v):
        raise ConeError(f"{v} is not in the interior of the cone")
    if not contains(c.lattice, v) or not is_primitive(c.lattice, v):
        raise ConeError(f"{v} is not primitive in the lattice")
    # v is interior, so replacing any generator keeps the cone simplicial
    return [_trusted(c.lattice, c.generators[:i] + (v,) + c.generators[i + 1 :]) for i in range(len(c.generators))]


@lru_cache(maxsize=4096)
def _quadrant_subdivision(L: Overlattice, v1: Vector) -> tuple[SimplicialCone, ...]:
    return tuple(star_subdivide(first_quadrant(L), v1))


@dataclass(frozen=True)
class ConeWeight:
    """``x = (1/order) * sum(numerators[j] * generator_j)``.

    ``position`` is the slot holding the blowup vector of the cone, and
    ``hat`` is the vector with that term removed, so that
    ``x = numerators[position]/order * v + hat``.
    """

    order: int
    numerators: tuple[int, ...]
    position: int
    hat: Vector

    @property
    def fractions(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(q, self.order) for q in self.numerators)

    def __str__(self) -> str:
        return f"1/{self.order}(" + ", ".join(map(str, self.numerators)) + ")"


def weight_in_cone(c: SimplicialCone, x: Sequence, position: int | None = None) -> ConeWeight:
    lam = barycentric(c, x)
    if not all(t > 0 for t in lam):
        raise ConeError(f"{tuple(map(str, x))} is not in the interior of the cone")
    p = common_denominator(lam)
    nums = tuple(int(t * p) for t in lam)
    assert gcd(p, *nums) == 1
    if position is None:
        hat = tuple(Fraction(0) for _ in lam)
        pos = -1
    else:
        pos = position
        hat = tuple(
            sum((lam[j] * c.generators[j][k] for j in range(len(lam)) if j != pos), Fraction(0))
            for k in range(len(lam))
        )
    return ConeWeight(p, nums, pos, hat)


def reconstruct(c: SimplicialCone, w: ConeWeight) -> Vector:
    d = len(c.generators)
    return tuple(
        sum((Fraction(w.numerators[j], w.order) * c.generators[j][k] for j in range(d)), Fraction(0))
        for k in range(d)
    )


def _positive(v: Sequence[Fraction]) -> None:
    if any(t <= 0 for t in v):
        raise ConeError("blowup vectors must have all coordinates positive")


@lru_cache(maxsize=4096)
def _chart_of(L: Overlattice, v1: Vector, v2: Vector) -> int | None:
    hits = [i for i, ch in enumerate(_quadrant_subdivision(L, v1)) if interior_contains(ch, v2)]
    if len(hits) > 1:  # cannot happen for a genuine subdivision
        raise ConeError("charts overlap")
    return hits[0] if hits else None


def chart_of(L: Overlattice, v1: Sequence, v2: Sequence) -> int | None:
    """Index of the chart of the ``v1``-subdivision of the first quadrant whose interior holds ``v2``."""
    return _chart_of(L, tuple(Fraction(t) for t in v1), tuple(Fraction(t) for t in v2))


def determinant_test(v1: Sequence, v2: Sequence) -> bool:
    """Sufficient condition for interchangeability: all 2x2 minors of ``(v1, v2)`` are nonzero."""
    d = len(v1)
    return all(v1[j] * v2[k] != v1[k] * v2[j] for j in range(d) for k in range(j + 1, d))


def interchangeable(L: Overlattice, v1: Sequence, v2: Sequence) -> bool:
    v1 = tuple(Fraction(t) for t in v1)
    v2 = tuple(Fraction(t) for t in v2)
    _positive(v1)
    _positive(v2)
    for v in (v1, v2):
        if not contains(L, v) or not is_primitive(L, v):
            raise ConeError(f"{v} is not primitive in the lattice")
    geometric = chart_of(L, v1, v2) is not None and chart_of(L, v2, v1) is not None
    if determinant_test(v1, v2) and not geometric:
        raise AssertionError("determinant fast path disagrees with the geometric test")
    return geometric


@dataclass(frozen=True)
class Tower:
    """Blow up along ``v1``, then along ``v2`` inside chart ``chart`` of the first subdivision."""

    lattice: Overlattice
    v1: Vector
    chart: int
    v2: Vector

    def __post_init__(self):
        _positive(self.v1)
        if chart_of(self.lattice, self.v1, self.v2) != self.chart:
            raise ConeError(f"v2 is not interior to chart {self.chart + 1} of the v1-subdivision")

    def chart_cone(self) -> SimplicialCone:
        return _quadrant_subdivision(self.lattice, self.v1)[self.chart]

    def weight(self) -> ConeWeight:
        return weight_in_cone(self.chart_cone(), self.v2, self.chart)

    def chart_type(self) -> QuotientType:
        return quotient_type(self.lattice, self.chart_cone().generators)

    def dagger(self) -> bool:
        """Whether ``v1``, ``v2`` and the untouched basis vectors generate the lattice."""
        gens = list(self.chart_cone().generators) + [self.v2]
        return generates(self.lattice, gens)


def tower(L: Overlattice, v1: Sequence, v2: Sequence) -> Tower:
    """Build a tower, locating the chart of ``v2``."""
    v1 = tuple(Fraction(t) for t in v1)
    v2 = tuple(Fraction(t) for t in v2)
    _positive(v1)
    i = chart_of(L, v1, v2)
    if i is None:
        raise ConeError("v2 is not interior to any chart of the v1-subdivision")
    return Tower(L, v1, i, v2)


def reverse_tower(t: Tower) -> Tower:
    if not interchangeable(t.lattice, t.v1, t.v2):
        raise ConeError("v1 and v2 are not interchangeable")
    k = chart_of(t.lattice, t.v2, t.v1)
    return Tower(t.lattice, t.v2, k, t.v1)


def decomposition_residual(t: Tower) -> Vector:
    """``v2 - (q_i/p) v1 - hat``, which must vanish identically."""
    w = t.weight()
    coeff = Fraction(w.numerators[w.position], w.order)
    return tuple(a - coeff * b - h for a, b, h in zip(t.v2, t.v1, w.hat))


__all__ = [
    "ConeError",
    "ConeWeight",
    "LatticeError",
    "SimplicialCone",
    "Tower",
    "barycentric",
    "chart_of",
    "decomposition_residual",
    "determinant_test",
    "first_quadrant",
    "interchangeable",
    "interior_contains",
    "reconstruct",
    "reverse_tower",
    "star_subdivide",
    "tower",
    "weight_in_cone",
]
