"""Numerics of the 2-ray game on a two-step tower.

Coefficient conventions: ``g^*E = E_Z + (q/p) F`` and
``g^*D_0 = D_{0,Z} + (q0/p) F`` with ``p`` the index of the centre of the
second blowup; ``f^*D_{0,X} = D_0 + (c0/n) E``.  ``q``, ``q0`` and ``c0`` are
numerators and may be rational.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .cone import ConeWeight, Tower
from .poly import SemiInvariant, wt


class TwoRayError(ValueError):
    pass


@dataclass(frozen=True)
class TwoRayData:
    a: int
    n: int
    p: int
    q: Fraction
    c0: Fraction
    q0: Fraction
    Ecube: Fraction
    Fcube: Fraction

    def __post_init__(self):
        if self.n < 1 or self.p < 1 or self.a < 1:
            raise TwoRayError("a, n and p must be positive")
        for name in ("q", "c0", "q0", "Ecube", "Fcube"):
            if Fraction(getattr(self, name)) <= 0:
                raise TwoRayError(f"{name} must be positive")


@dataclass(frozen=True)
class DivisorDatum:
    name: str
    local_equation: int | SemiInvariant
    pullback_coefficients: Mapping[str, Fraction] = field(default_factory=dict)


def pullback_coeff(w: ConeWeight, psi: int | SemiInvariant) -> Fraction:
    """Coefficient of the new exceptional divisor in the pullback of ``(psi = 0)``.

    ``psi`` is a 0-based coordinate index of the chart or a support in chart
    coordinates.
    """
    if isinstance(psi, int):
        if not 0 <= psi < len(w.numerators):
            raise TwoRayError(f"coordinate index {psi} out of range")
        return Fraction(w.numerators[psi], w.order)
    return wt(w.fractions, psi)


def criterion_T(d: TwoRayData) -> Fraction:
    return -Fraction(d.a * d.c0, d.n**2) * d.Ecube + Fraction(d.q * d.q0) / d.p**3 * d.Fcube


def nef_check(d: TwoRayData) -> bool:
    return criterion_T(d) <= 0 and d.c0 - d.a * d.q0 <= 0


def elephant_T(a: int, n: int, q: Fraction, p: int, Ecube: Fraction, Fcube: Fraction) -> Fraction:
    """Criterion with ``D_0`` a general elephant (``c0 = a``, ``q0 = 1``)."""
    return -Fraction(a * a, n * n) * Fraction(Ecube) + Fraction(q) / p**3 * Fraction(Fcube)


def kawamata_Fcube(p: int, alpha: int, beta: int, gamma: int) -> Fraction:
    """Exceptional cube of the Kawamata blowup of ``1/p(alpha, beta, gamma)``."""
    return Fraction(p * p, alpha * beta * gamma)


def exceptional_cube(weights: Sequence[Fraction], lattice_index: int, equation_weights: Sequence[Fraction]) -> Fraction:
    """Top self-intersection ``(-1)^{k+1} E^k`` of a weighted blowup of a complete intersection.

    ``weights`` is the blowup vector in ambient coordinates, ``lattice_index``
    the index of the ambient overlattice, ``equation_weights`` the weights of
    the defining equations.
    """
    num = Fraction(1)
    for e in equation_weights:
        num *= Fraction(e)
    den = Fraction(lattice_index)
    for w in weights:
        den *= Fraction(w)
    return num / den


@dataclass(frozen=True)
class DiscrepancyLedger:
    entries: Mapping[str, Fraction]

    def __post_init__(self):
        for k, v in self.entries.items():
            if v <= 0:
                raise TwoRayError(f"non-positive discrepancy {v} for {k}")


def discrepancy_over_X(
    t: Tower,
    first_discrepancy: Fraction,
    second_step: tuple[Fraction, Fraction],
    labels: tuple[str, str] = ("E", "F"),
) -> DiscrepancyLedger:
    """``a(F, X) = a(F, Y) + a(E, X) * (q/p)`` along the tower ``t``.

    ``second_step`` is ``(a(F, Y), q/p)``; the caller supplies the pullback
    coefficient, normally the weight of ``v2`` at the slot of ``v1``.
    """
    disc, pullback = (Fraction(x) for x in second_step)
    first = Fraction(first_discrepancy)
    return DiscrepancyLedger({labels[0]: first, labels[1]: disc + first * pullback})


def theorem12_verify(
    original: DiscrepancyLedger,
    reversed_: DiscrepancyLedger,
    case_kind: str,
    n: int,
    p_prime: int,
    reversed_second: Fraction,
    first: str = "E",
    second: str = "F",
) -> bool:
    """Valuation invariance plus the case split for the reversed second step.

    ``first``/``second`` label the rays blown up first/second in the
    original tower; ``reversed_second`` is the discrepancy of the last step
    of the reversed tower over its centre and ``p_prime`` that centre's index.
    """
    if set(original.entries) != set(reversed_.entries):
        raise TwoRayError("ledgers cover different rays")
    if any(original.entries[k] != reversed_.entries[k] for k in original.entries):
        return False
    if case_kind == "cE2":
        return p_prime == 3 and Fraction(reversed_second) == Fraction(1, 3)
    if case_kind != "other":
        raise TwoRayError(f"unknown case kind {case_kind!r}")
    a = original.entries[first] * n
    a1 = original.entries[second] * n
    a2 = Fraction(reversed_second) * n
    integral = all(x.denominator == 1 for x in (a, a1, a2))
    return p_prime == n and integral and a1 + a2 == a
