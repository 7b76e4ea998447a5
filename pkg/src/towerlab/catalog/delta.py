"""Integer arithmetic attached to a cA/n weighted blowup and to the (1, a, b) blowup."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from math import gcd


class DeltaError(ValueError):
    pass


@dataclass(frozen=True)
class DeltaData:
    """Solution of

        a = b*r1 + n*s1,   1 = u1*r1 + s1s*s1,
        a = -b*r2 + n*s2,  1 = u2*r2 + s2s*s2,

    with ``0 <= s_is < r_i``, and ``delta1 = -n*u1 + b*s1s``,
    ``delta2 = -n*u2 - b*s2s``.
    """

    r2: int
    s1: int
    s2: int
    s1s: int
    s2s: int
    u1: int
    u2: int
    delta1: int
    delta2: int

    def as_params(self) -> dict[str, int]:
        return asdict(self)


def _inverse(s: int, r: int) -> int:
    if r == 1:
        return 0
    if gcd(s, r) != 1:
        raise DeltaError(f"{s} is not invertible modulo {r}")
    return pow(s % r, -1, r)


def cyclic_delta(n: int, b: int, a: int, d: int, r1: int) -> DeltaData:
    r2 = a * d * n - r1
    if n < 1 or r1 < 1 or r2 < 1:
        raise DeltaError("need n, r1, r2 positive")
    if (a - b * r1) % n or (a + b * r2) % n:
        raise DeltaError("a - b*r1 is not divisible by n")
    s1 = (a - b * r1) // n
    s2 = (a + b * r2) // n
    s1s = _inverse(s1, r1)
    s2s = _inverse(s2, r2)
    u1 = (1 - s1s * s1) // r1
    u2 = (1 - s2s * s2) // r2
    return DeltaData(
        r2=r2,
        s1=s1,
        s2=s2,
        s1s=s1s,
        s2s=s2s,
        u1=u1,
        u2=u2,
        delta1=-n * u1 + b * s1s,
        delta2=-n * u2 - b * s2s,
    )


def delta_identities(n: int, b: int, a: int, r1: int, dd: DeltaData) -> dict[str, tuple[int, int]]:
    """Each defining relation as a ``(lhs, rhs)`` pair."""
    r2 = dd.r2
    return {
        "a = b*r1 + n*s1": (a, b * r1 + n * dd.s1),
        "1 = u1*r1 + s1*.s1": (1, dd.u1 * r1 + dd.s1s * dd.s1),
        "a = -b*r2 + n*s2": (a, -b * r2 + n * dd.s2),
        "1 = u2*r2 + s2*.s2": (1, dd.u2 * r2 + dd.s2s * dd.s2),
        "delta1*r1 + n = a*s1*": (dd.delta1 * r1 + n, a * dd.s1s),
        "delta2*r2 + n = a*s2*": (dd.delta2 * r2 + n, a * dd.s2s),
    }


def claim1(a: int, dd: DeltaData) -> bool:
    return all(a > x != 0 for x in (dd.delta1, dd.delta2))


def claim2(r1: int, dd: DeltaData) -> bool:
    """Some delta is positive, and ``r1 >= r2`` forces ``delta1 > 0`` (mirror for ``r2``)."""
    if not (dd.delta1 > 0 or dd.delta2 > 0):
        return False
    if r1 >= dd.r2 and dd.delta1 <= 0:
        return False
    if dd.r2 >= r1 and dd.delta2 <= 0:
        return False
    return True


def remark_sum_applies(a: int, r1: int, dd: DeltaData) -> bool:
    return dd.delta1 > 0 and dd.delta2 > 0 and gcd(a, r1) == 1


def gorenstein_pq(a: int, b: int) -> tuple[int, int]:
    """``(p, q)`` with ``a*p = b*q + 1`` and ``0 < p < b``."""
    if b < 2 or gcd(a, b) != 1:
        raise DeltaError("need coprime a, b with b >= 2")
    p = pow(a % b, -1, b)
    return p, (a * p - 1) // b
