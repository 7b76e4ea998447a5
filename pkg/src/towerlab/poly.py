"""Monomial supports of semi-invariants and their weights.

Coefficients are never modelled; a :class:`SemiInvariant` is only the set of
monomials known to occur.  Generic terms are represented by the monomials
that are forced to occur, so every ``wt`` here is the minimum over the
encoded support.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .lattice import Overlattice, Vector


class PolyError(ValueError):
    pass


Monomial = tuple[int, ...]

_TERM = re.compile(r"x(\d+)(?:\^(\d+))?")


def monomial(dim: int, text: str) -> Monomial:
    """Parse ``"x1^2*x4"`` (1-based variable indices); ``"1"`` is the constant."""
    exps = [0] * dim
    text = text.strip()
    if text == "1":
        return tuple(exps)
    for factor in text.split("*"):
        m = _TERM.fullmatch(factor.strip())
        if not m:
            raise PolyError(f"cannot parse monomial factor {factor!r}")
        j = int(m.group(1)) - 1
        if not 0 <= j < dim:
            raise PolyError(f"variable x{j + 1} out of range for dimension {dim}")
        exps[j] += int(m.group(2) or 1)
    return tuple(exps)


def format_monomial(m: Monomial) -> str:
    parts = [f"x{j + 1}" + (f"^{e}" if e > 1 else "") for j, e in enumerate(m) if e]
    return "*".join(parts) or "1"


@dataclass(frozen=True)
class SemiInvariant:
    monomials: frozenset[Monomial]
    name: str = field(default="phi", compare=False)

    def __post_init__(self):
        if not self.monomials:
            raise PolyError(f"{self.name}: empty monomial set")
        if len({len(m) for m in self.monomials}) != 1:
            raise PolyError(f"{self.name}: monomials of mixed length")

    @property
    def dim(self) -> int:
        return len(next(iter(self.monomials)))

    def __str__(self) -> str:
        return " + ".join(sorted(format_monomial(m) for m in self.monomials))


def support(dim: int, text: str, name: str = "phi") -> SemiInvariant:
    """``support(4, "x4^2 + x1^3 + x2^4 + x3^8")``."""
    return SemiInvariant(frozenset(monomial(dim, t) for t in text.split("+")), name)


def monomial_weight(v: Sequence[Fraction], m: Monomial) -> Fraction:
    if len(v) != len(m):
        raise PolyError("dimension mismatch")
    return sum((Fraction(a) * e for a, e in zip(v, m)), Fraction(0))


def wt(v: Sequence, phi: SemiInvariant) -> Fraction:
    return min(monomial_weight(v, m) for m in phi.monomials)


def is_semi_invariant(L: Overlattice, phi: SemiInvariant) -> bool:
    gens = L.adjoined or L.canonical_basis
    for g in gens:
        residues = {monomial_weight(g, m) % 1 for m in phi.monomials}
        if len(residues) > 1:
            return False
    return True


def chart_weight(v2: Sequence, coeff: Fraction, m: Monomial, phi_weight: Fraction) -> Fraction:
    """Weight of the chart transform of ``m`` under the second blowup.

    In the chart where the first blowup vector occupies a slot with
    coefficient ``coeff`` in the weight of ``v2``, the monomial ``m`` of an
    equation of first-blowup weight ``phi_weight`` becomes a monomial of
    weight ``<v2, m> - coeff * phi_weight``.
    """
    return monomial_weight(v2, m) - Fraction(coeff) * Fraction(phi_weight)


@dataclass(frozen=True)
class ReembedSpec:
    """Rewrite ``phi_k = f0 + f1*f2`` using a new coordinate ``x_{d+1} = f1``."""

    equation: int
    f0: SemiInvariant
    f1: SemiInvariant
    f2: SemiInvariant
    new_coordinate_weight: Fraction


def reembed_extend(v: Sequence, v1: Sequence, spec: ReembedSpec) -> tuple[Vector, Vector]:
    """Extend ``v`` and ``v1`` by the weights of the substituted factor ``f1``."""
    got = wt(v1, spec.f1)
    if got != spec.new_coordinate_weight:
        raise PolyError(f"declared weight {spec.new_coordinate_weight} but wt(v1, f1) = {got}")
    v_ext = tuple(Fraction(x) for x in v) + (wt(v, spec.f1),)
    v1_ext = tuple(Fraction(x) for x in v1) + (got,)
    return v_ext, v1_ext


def reembed_equations(
    equations: Sequence[SemiInvariant], spec: ReembedSpec
) -> list[SemiInvariant]:
    """Supports of the re-embedded system in one more variable."""
    pad = lambda m: m + (0,)  # noqa: E731
    out = [
        SemiInvariant(frozenset(pad(m) for m in phi.monomials), phi.name)
        for j, phi in enumerate(equations)
        if j != spec.equation
    ]
    d = spec.f0.dim
    xnew = tuple([0] * d + [1])
    rewritten = {pad(m) for m in spec.f0.monomials} | {
        tuple(a + b for a, b in zip(pad(m), xnew)) for m in spec.f2.monomials
    }
    out.insert(spec.equation, SemiInvariant(frozenset(rewritten), equations[spec.equation].name + "'"))
    out.append(SemiInvariant(frozenset({xnew} | {pad(m) for m in spec.f1.monomials}), "x_new - f1"))
    return out


def compatibility_check(pairs: Iterable[tuple[Fraction, SemiInvariant, Sequence]]) -> bool:
    """Each ``(assigned weight, substitute, vector)`` must satisfy ``assigned == wt(vector, substitute)``."""
    pairs = list(pairs)
    if not pairs:
        raise PolyError("no coordinate/substitute pairs given")
    for item in pairs:
        if len(item) != 3:
            raise PolyError(f"malformed pairing {item!r}")
    return all(Fraction(w) == wt(v, phi) for w, phi, v in pairs)
