"""Independent reference implementations used only by the tests.

None of these share code with the package: they enumerate instead of
computing normal forms.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd, lcm


def frac_part(x):
    return tuple(Fraction(t) - (Fraction(t).numerator // Fraction(t).denominator) for t in x)


def coset_group(dim, gens):
    """All classes of ``(Z^d + sum Z g) / Z^d`` by breadth-first closure."""
    start = (Fraction(0),) * dim
    seen = {start}
    frontier = [start]
    steps = [frac_part(g) for g in gens]
    while frontier:
        nxt = []
        for e in frontier:
            for s in steps:
                t = frac_part(tuple(a + b for a, b in zip(e, s)))
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    return seen


def random_lattice_gens(rng: random.Random, dim: int):
    """One or two rational generators with index at most 60."""
    if rng.random() < 0.5:
        dens = [rng.randint(2, 60)]
    else:
        dens = [rng.randint(2, 7), rng.randint(2, 7)]
    return [tuple(Fraction(rng.randint(-den, 2 * den), den) for _ in range(dim)) for den in dens]


def random_vector(rng: random.Random, dim: int, den: int):
    return tuple(Fraction(rng.randint(-3 * den, 3 * den), den) for _ in range(dim))


def quotient_classes(gens, basis, p):
    """Every class of ``L / <gens>`` as barycentric numerators mod ``p`` (full BFS)."""
    from towerlab.lattice import solve_left

    seeds = set()
    for b in basis:
        lam = solve_left(gens, b)
        seeds.add(tuple(int(t * p) % p for t in lam))
    d = len(gens)
    seen = {(0,) * d}
    frontier = [(0,) * d]
    while frontier:
        nxt = []
        for e in frontier:
            for s in seeds:
                t = tuple((a + b) % p for a, b in zip(e, s))
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    return seen


def brute_delta(n, b, a, d, r1):
    """Solve the cA/n congruences by searching ``0 <= s* < r``."""
    r2 = a * d * n - r1
    s1 = Fraction(a - b * r1, n)
    s2 = Fraction(a + b * r2, n)
    if s1.denominator != 1 or s2.denominator != 1:
        return None
    s1, s2 = int(s1), int(s2)
    if gcd(s1, r1) != 1 or gcd(s2, r2) != 1:
        return None

    def star(s, r):
        hits = [t for t in range(r) if (1 - t * s) % r == 0]
        assert len(hits) == 1
        return hits[0]

    s1s, s2s = star(s1, r1), star(s2, r2)
    u1, u2 = (1 - s1s * s1) // r1, (1 - s2s * s2) // r2
    return dict(r2=r2, s1=s1, s2=s2, s1s=s1s, s2s=s2s, u1=u1, u2=u2,
                delta1=-n * u1 + b * s1s, delta2=-n * u2 - b * s2s)


def brute_pq(a, b):
    """``(p, q)`` with ``a p = b q + 1`` and ``0 < p < b`` by search."""
    for p in range(1, b):
        if (a * p - 1) % b == 0:
            return p, (a * p - 1) // b
    return None


def common_den(*vs):
    return lcm(1, *(Fraction(x).denominator for v in vs for x in v))
