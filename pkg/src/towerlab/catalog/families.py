"""Parameterised case families.

Every numeric template is a Python expression string over the family
parameters (``F`` is :class:`fractions.Fraction`, ``qv(den, *nums)`` a weight
``(1/den)(nums)``).  Keeping them as text lets the catalog be exported and
audited as plain data.  Chart and coordinate indices are 1-based, as in the
usual ``Q_i`` / ``x_i`` notation.

``paper_text`` records the literal printed value wherever the stored
template differs from it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping

from .delta import cyclic_delta, gorenstein_pq


@dataclass(frozen=True)
class CaseEntry:
    id: str
    family: str
    title: str
    params: tuple[str, ...]
    constraints: tuple[tuple[str, str], ...]
    dim: int
    lattice: tuple[str, ...]
    equations: tuple[tuple[str, str], ...]
    v1: str
    chart: str
    w2: str
    v2: str
    rev_chart: str
    w2p: str
    n: str
    disc_f: str
    disc_g: str
    disc_fp: str
    disc_gp: str
    Ecube: str
    Fcube: str
    T: str
    d0: str | None  # "elephant", "x<k>" or None
    c0: str
    q0: str
    kind: str = "other"
    derived: Callable[[Mapping[str, int]], dict] | None = None
    derived_doc: str = ""
    chart_types: tuple[tuple[str, str], ...] = ()
    kawamata: tuple[int, ...] | None = None
    compat: tuple[tuple[int, int, str], ...] = ()
    excluded: tuple[tuple[int, str], ...] = ()
    branches: tuple[tuple[str, tuple[tuple[int, str], ...]], ...] = ()
    reembed: tuple[str, str, str, str, str, str] | None = None
    paper_text: Mapping[str, str] = field(default_factory=dict)
    notes: tuple[str, ...] = ()

    def templates(self) -> dict[str, str]:
        """All numeric templates by name."""
        names = (
            "v1", "chart", "w2", "v2", "rev_chart", "w2p", "n",
            "disc_f", "disc_g", "disc_fp", "disc_gp", "Ecube", "Fcube", "T", "c0", "q0",
        )
        out = {k: getattr(self, k) for k in names}
        for j, (c, w) in enumerate(self.chart_types):
            out[f"chart_type[{j}].chart"] = c
            out[f"chart_type[{j}].weight"] = w
        return out


_HALF5 = ("qv(2, 1, 1, 1, 0, 0)",)
_HALF4 = ("qv(2, 1, 1, 1, 0)",)


def _cd2_a(p):
    r, a = p["r"], p["a"]
    return {"d": (r + 1) // (2 * a)}


def _cd2_a_b(p):
    r, a = p["r"], p["a"]
    return {"d": ((r + 2) // a - 1) // 2}


def _can(p):
    return cyclic_delta(p["n"], p["b"], p["a"], p["d"], p["r1"]).as_params()


def _gor(p):
    pp, q = gorenstein_pq(p["a"], p["b"])
    return {"p": pp, "q": q}


_CAN_CONSTRAINTS = (
    ("n >= 2", "n must be at least 2 (index > 1)"),
    ("a >= 2", "a must be at least 2 (non-minimal discrepancy)"),
    ("b >= 1 and d >= 1 and r1 >= 1", "b, d, r1 must be positive"),
    ("r1 < a*d*n", "r2 = a*d*n - r1 must be positive"),
    ("gcd(b, n) == 1", "b must be prime to n"),
    ("(a - b*r1) % n == 0", "s1 = (a - b*r1)/n must be an integer"),
    ("gcd((a - b*r1)//n, r1) == 1", "s1 must be prime to r1"),
    ("gcd((a + b*(a*d*n - r1))//n, a*d*n - r1) == 1", "s2 must be prime to r2"),
)

_D4_CONSTRAINTS_A = (
    ("r >= 1 and a >= 1", "r and a must be positive"),
    ("a % 2 == 1", "a must be odd"),
    ("r % 2 == 1", "r must be odd"),
    ("a >= 3", "a must be at least 3 (discrepancy a/2 > 1)"),
    ("(r + 1) % (2*a) == 0", "r + 1 must equal 2*a*d"),
)

_D4_CONSTRAINTS_B = (
    ("r >= 1 and a >= 1", "r and a must be positive"),
    ("a >= 2", "a must be at least 2 (discrepancy a/2 > 1/2)"),
    ("(r + 2) % a == 0 and ((r + 2)//a) % 2 == 1", "r + 2 must equal (2d+1)*a"),
    ("(r + 2)//a >= 3", "d must be at least 1"),
)


ENTRIES: tuple[CaseEntry, ...] = (
    CaseEntry(
        id="cD2-a4-case1",
        family="cD2-a4-case1",
        title="discrepancy 4/2 over cD/2, v1 = (4l+1, 4l, 2, 1, 8l+1)",
        params=("l",),
        constraints=(("l >= 1", "l must be at least 1"),),
        dim=5,
        lattice=_HALF5,
        equations=(
            ("phi1", "x1^2 + x4*x5"),
            ("phi2", "x2^2 + x5 + x3^(4*l)"),
        ),
        excluded=((1, "x3^(4*l+1)"),),
        v1="qv(1, 4*l+1, 4*l, 2, 1, 8*l+1)",
        chart="5",
        w2="qv(2*(8*l+1), 6*l+1, 10*l+1, 1, 12*l+2, 4*l)",
        v2="qv(2, 2*l+1, 2*l+1, 1, 2, 4*l)",
        rev_chart="4",
        w2p="qv(2, 6*l+1, 6*l-1, 3, 2, 12*l+2)",
        chart_types=(("3", "qv(4, 1, 2, 1, 3, 3)"), ("5", "qv(2*(8*l+1), 6*l+1, 10*l+1, 1, 12*l+2, 4*l)")),
        n="2",
        disc_f="F(4, 2)",
        disc_g="F(1, 2*(8*l+1))",
        disc_fp="F(1, 2)",
        disc_gp="F(3, 2)",
        Ecube="F(2, 2*(8*l+1))",
        Fcube="F((2*(8*l+1))**2, (6*l+1)*(10*l+1))",
        T="F(1, 2*(8*l+1)) * (-8 + F(4*l, (6*l+1)*(10*l+1)))",
        d0="elephant:x3",
        c0="4",
        q0="1",
        kawamata=(1, 2, 3),
        compat=((1, 4, "x4*x5"), (2, 5, "x5")),
        reembed=(
            "qv(2, 1, 1, 1, 0)",
            "qv(2, 2*l+1, 2*l+1, 1, 2)",
            "x1^2",
            "x2^2 + x3^(4*l)",
            "x4",
            "2*l",
        ),
        paper_text={
            "w2p": "printed as v1 = (6l+1)/2 e1 + (6l-1)/2 e2 + 3/2 e3 + v2 + (12l+2)/2 e5",
        },
    ),
    CaseEntry(
        id="cD2-a4-case2",
        family="cD2-a4-case2",
        title="discrepancy 4/2 over cD/2, v1 = (4l, 4l-1, 2, 1, 8l-1)",
        params=("l",),
        constraints=(("l >= 1", "l must be at least 1"),),
        dim=5,
        lattice=_HALF5,
        equations=(
            ("phi1", "x1^2 + x4*x5 + x3^(4*l)"),
            ("phi2", "x2^2 + x5"),
        ),
        excluded=((2, "x3^(4*l-1)"),),
        v1="qv(1, 4*l, 4*l-1, 2, 1, 8*l-1)",
        chart="5",
        w2="qv(2*(8*l-1), 10*l-1, 6*l-1, 1, 4*l, 12*l-2)",
        v2="qv(2, 6*l+1, 6*l-1, 3, 2, 12*l-2)",
        rev_chart="4",
        w2p="qv(2, 2*l-1, 2*l-1, 1, 2, 4*l)",
        chart_types=(("3", "qv(4, 2, 3, 1, 3, 1)"), ("5", "qv(2*(8*l-1), 10*l-1, 6*l-1, 1, 4*l, 12*l-2)")),
        n="2",
        disc_f="F(4, 2)",
        disc_g="F(1, 2*(8*l-1))",
        disc_fp="F(3, 2)",
        disc_gp="F(1, 2)",
        Ecube="F(2, 2*(8*l-1))",
        Fcube="F((2*(8*l-1))**2, (6*l-1)*(10*l-1))",
        T="F(1, 2*(8*l-1)) * (-8 + F(2, 10*l-1))",
        d0="elephant:x3",
        c0="4",
        q0="1",
        kawamata=(1, 2, 3),
        compat=((1, 4, "x4*x5"), (2, 5, "x5")),
    ),
    CaseEntry(
        id="cD2-a-case1-sub1",
        family="cD2-a-case1",
        title="discrepancy a/2 over cD/2, case (a), Kawamata blowup at Q1",
        params=("r", "a"),
        constraints=_D4_CONSTRAINTS_A,
        derived=_cd2_a,
        derived_doc="d = (r+1)/(2a)",
        dim=4,
        lattice=_HALF4,
        equations=(("phi", "x1^2 + x2^2*x4 + x3^(4*d)"),),
        v1="qv(2, r+2, r, a, 2)",
        chart="1",
        w2="qv(r+2, 4*d, 4*d, 1, r+2-4*d)",
        v2="qv(1, 2*d, 2*d, 1, 1)",
        rev_chart="4",
        w2p="qv(2, r+2-4*d, r-4*d, a-2, 2)",
        n="2",
        disc_f="F(a, 2)",
        disc_g="F(1, r+2)",
        disc_fp="F(2, 2)",
        disc_gp="F(a-2, 2)",
        Ecube="F(4*(r+1), a*r*(r+2))",
        Fcube="F((r+2)**2, 4*d*(r+2-4*d))",
        T="F(1, r+2) * (-F(2*(r+1), r) + 1)",
        d0="x4",
        c0="2",
        q0="r+2-4*d",
        kawamata=(2, 3, 4),
        compat=((1, 1, "x1^2"),),
        paper_text={"c0-aq0": "printed as c0 - 4q0 < 0"},
    ),
    CaseEntry(
        id="cD2-a-case1-sub2",
        family="cD2-a-case1",
        title="discrepancy a/2 over cD/2, case (a), Kawamata blowup at Q2",
        params=("r", "a"),
        constraints=_D4_CONSTRAINTS_A,
        derived=_cd2_a,
        derived_doc="d = (r+1)/(2a)",
        dim=4,
        lattice=_HALF4,
        equations=(("phi", "x1^2 + x2^2*x4 + x3^(4*d)"),),
        v1="qv(2, r+2, r, a, 2)",
        chart="2",
        w2="qv(r, 4*d, r-4*d, 1, 4*d)",
        v2="qv(2, r+2-4*d, r-4*d, a-2, 2)",
        rev_chart="4",
        w2p="qv(1, 2*d, 2*d, 1, 1)",
        n="2",
        disc_f="F(a, 2)",
        disc_g="F(1, r)",
        disc_fp="F(a-2, 2)",
        disc_gp="F(2, 2)",
        Ecube="F(4*(r+1), a*r*(r+2))",
        Fcube="F(r**2, 4*d*(r-4*d))",
        T="F(1, r) * (-F(2*(r+1), r+2) + 1)",
        d0="x4",
        c0="2",
        q0="4*d",
        kawamata=(1, 2, 3),
        compat=((1, 4, "x2^2*x4"),),
    ),
    CaseEntry(
        id="cD2-a-case2-sub1",
        family="cD2-a-case2",
        title="discrepancy a/2 over cD/2, case (b), Kawamata blowup at Q5",
        params=("r", "a"),
        constraints=_D4_CONSTRAINTS_B,
        derived=_cd2_a_b,
        derived_doc="d = ((r+2)/a - 1)/2",
        dim=5,
        lattice=("qv(2, 1, 1, 0, 1, 1)",),
        equations=(
            ("phi1", "x4^2 + x2*x5"),
            ("phi2", "x2*x3 + x1^(2*d+1) + x5"),
        ),
        v1="qv(2, a, r, 2, r+2, r+4)",
        chart="5",
        w2="qv(r+4, 1, 4*d+2, r-2*d+3, 2*d+1, 2*d+1)",
        v2="qv(2, 1, 2*d+1, 2, 2*d+1, 2*d+1)",
        rev_chart="3",
        w2p="qv(2, a-1, r-2*d-1, 2, r-2*d+1, r-2*d+3)",
        n="2",
        disc_f="F(a, 2)",
        disc_g="F(1, r+4)",
        disc_fp="F(1, 2)",
        disc_gp="F(a-1, 2)",
        Ecube="F(4*(r+2), a*r*(r+4))",
        Fcube="F((r+4)**2, (2*d+1)*(r-2*d+3))",
        T="F(1, r+4) * (-F(2*(r+2), r) + 1)",
        d0="x3",
        c0="2",
        q0="r-2*d+3",
        kawamata=(1, 3, 4),
        compat=((1, 2, "x2*x5"), (2, 5, "x5")),
    ),
    CaseEntry(
        id="cD2-a-case2-sub2",
        family="cD2-a-case2",
        title="discrepancy a/2 over cD/2, case (b), Kawamata blowup at Q2",
        params=("r", "a"),
        constraints=_D4_CONSTRAINTS_B,
        derived=_cd2_a_b,
        derived_doc="d = ((r+2)/a - 1)/2",
        dim=5,
        lattice=("qv(2, 1, 1, 0, 1, 1)",),
        equations=(
            ("phi1", "x4^2 + x2*x5"),
            ("phi2", "x2*x3 + x1^(2*d+1) + x5"),
        ),
        v1="qv(2, a, r, 2, r+2, r+4)",
        chart="2",
        w2="qv(r, 1, r-2*d-1, 2*d+1, 2*d+1, 4*d+2)",
        v2="qv(2, a-1, r-2*d-1, 2, r-2*d+1, r-2*d+3)",
        rev_chart="3",
        w2p="qv(2, 1, 2*d+1, 2, 2*d+1, 2*d+1)",
        n="2",
        disc_f="F(a, 2)",
        disc_g="F(1, r)",
        disc_fp="F(a-1, 2)",
        disc_gp="F(1, 2)",
        Ecube="F(4*(r+2), a*r*(r+4))",
        Fcube="F(r**2, (2*d+1)*(r-2*d-1))",
        T="F(1, r) * (-F(2*(r+2), r+4) + 1)",
        d0="x3",
        c0="2",
        q0="2*d+1",
        kawamata=(1, 2, 4),
        compat=((1, 5, "x2*x5"), (2, 3, "x2*x3")),
        notes=("criterion printed as T(f, g) although it uses D0 = (x3 = 0); stored in the D0 form",),
    ),
    CaseEntry(
        id="cE2",
        family="cE2",
        title="discrepancy 2/2 over cE/2",
        params=(),
        constraints=(),
        dim=4,
        lattice=("qv(2, 0, 1, 1, 1)",),
        equations=(("phi", "x4^2 + x1^3 + x2^4 + x3^8"),),
        v1="qv(1, 3, 2, 1, 4)",
        chart="1",
        w2="qv(6, 2, 5, 1, 1)",
        v2="qv(2, 2, 3, 1, 3)",
        rev_chart="2",
        w2p="qv(3, 5, 4, 1, 6)",
        n="2",
        disc_f="F(2, 2)",
        disc_g="F(1, 6)",
        disc_fp="F(1, 2)",
        disc_gp="F(1, 3)",
        Ecube="F(1, 6)",
        Fcube="F(36, 5)",
        T="F(-1, 10)",
        d0="elephant:x3",
        c0="2",
        q0="1",
        kind="cE2",
        kawamata=(2, 3, 4),
        compat=((1, 1, "x1^3"),),
    ),
    CaseEntry(
        id="cD2-d1-case1",
        family="cD2-d1-case1",
        title="discrepancy 2/2 over cD/2, Hayakawa case (i)",
        params=("l",),
        constraints=(("l >= 1", "l must be at least 1"),),
        dim=4,
        lattice=_HALF4,
        equations=(("phi", "x1^2 + x2^2*x4 + x3^(4*l)"),),
        v1="qv(1, 2*l, 2*l, 1, 1)",
        chart="2",
        w2="qv(4*l, 4*l, 2*l-1, 1, 2*l+1)",
        v2="qv(2, 2*l+1, 2*l-1, 1, 2)",
        rev_chart="4",
        w2p="qv(2, 2*l-1, 2*l+1, 1, 2)",
        n="2",
        disc_f="F(2, 2)",
        disc_g="F(1, 4*l)",
        disc_fp="F(1, 2)",
        disc_gp="F(1, 2)",
        Ecube="F(2, 4*l)",
        Fcube="F((4*l)**2, (2*l+1)*(2*l-1))",
        T="F(1, 4*l) * (-2 + F(1, 2*l+1))",
        d0="elephant:x3",
        c0="2",
        q0="1",
        paper_text={"wt_v1(phi)": "printed as 2l; the v1-weight of x1^2 is 4l"},
    ),
    CaseEntry(
        id="cD2-d1-case2",
        family="cD2-d1-case2",
        title="discrepancy 2/2 over cD/2, Hayakawa case (i')",
        params=("b", "c"),
        constraints=(("b >= 2", "b must be at least 2"), ("c >= 4", "c must be at least 4")),
        dim=4,
        lattice=_HALF4,
        equations=(("phi", "x1^2 + x2*x3*x4 + x2^4 + x3^(2*b) + x4^(c)"),),
        v1="qv(1, 2, 2, 1, 1)",
        chart="2",
        w2="qv(4, 4, 1, 1, 3)",
        v2="qv(2, 3, 1, 1, 2)",
        rev_chart="4",
        w2p="qv(2, 1, 3, 1, 2)",
        chart_types=(("2", "qv(4, 0, 1, 1, 3)"),),
        n="2",
        disc_f="F(2, 2)",
        disc_g="F(1, 4)",
        disc_fp="F(1, 2)",
        disc_gp="F(1, 2)",
        Ecube="F(2, 4)",
        Fcube="F(16, 3)",
        T="F(1, 4) * (-2 + F(1, 3))",
        d0="elephant:x3",
        c0="2",
        q0="1",
        paper_text={"Fcube": "printed as 4^2/3l"},
    ),
    CaseEntry(
        id="cD2-d1-case3",
        family="cD2-d1-case3",
        title="discrepancy 2/2 over cD/2, Hayakawa case (ii); subcase by parity of l",
        params=("l",),
        constraints=(("l >= 1", "l must be at least 1"),),
        dim=5,
        lattice=_HALF5,
        equations=(
            ("phi1", "x1^2 + x4*x5"),
            ("phi2", "x2^2 + x5"),
        ),
        branches=(
            ("odd:x3^(2l+2) in phi1", ((1, "x3^(2*l+2)"),)),
            ("odd:x2*x3^(l+2) in phi1", ((1, "x2*x3^(l+2)"),)),
            ("even:x3^(2l) in phi2", ((2, "x3^(2*l)"),)),
            ("even:x1*x3^(l-1) in phi2", ((2, "x1*x3^(l-1)"),)),
        ),
        v1="qv(1, l+1, l, 1, 1, 2*l+1)",
        chart="5",
        w2="qv(4*l+2, 3*l+2, l, 1, 2*l+2, 2*l) if l % 2 else qv(4*l+2, l+1, 3*l+1, 1, 2*l+2, 2*l)",
        v2="qv(2, l+2, l, 1, 2, 2*l) if l % 2 else qv(2, l+1, l+1, 1, 2, 2*l)",
        rev_chart="4",
        w2p="qv(2, l, l, 1, 2, 2*l+2) if l % 2 else qv(2, l+1, l-1, 1, 2, 2*l+2)",
        n="2",
        disc_f="F(2, 2)",
        disc_g="F(1, 4*l+2)",
        disc_fp="F(1, 2)",
        disc_gp="F(1, 2)",
        Ecube="F(4, 4*l+2)",
        Fcube="F((4*l+2)**2, l*(3*l+2)) if l % 2 else F((4*l+2)**2, (l+1)*(3*l+1))",
        T="F(1, 4*l+2) * (-4 + F(2*l, l*(3*l+2))) if l % 2 else F(1, 4*l+2) * (-4 + F(2*l, (l+1)*(3*l+1)))",
        d0="elephant:x3",
        c0="2",
        q0="1",
        kawamata=(1, 2, 3),
        compat=((1, 4, "x4*x5"), (2, 5, "x5")),
        paper_text={
            "w2": "odd l: prefactor printed as 2l/(4l+2)",
            "w2p": "odd l: printed as 1/2(l, l, 1, 2, 2l-1)",
            "disc_g": "odd l: diagram label printed as 1/4",
        },
    ),
    CaseEntry(
        id="cAn-sub1",
        family="cAn",
        title="discrepancy a/n over cA/n, extraction over Q1 (delta1 > 0)",
        params=("n", "b", "a", "d", "r1"),
        constraints=_CAN_CONSTRAINTS + (("delta1 > 0", "subcase 1 needs delta1 > 0"),),
        derived=_can,
        derived_doc="r2 = adn - r1; s_i, s_i*, u_i, delta_i from the congruence system",
        dim=4,
        lattice=("qv(n, 1, -1, b, 0)",),
        equations=(("phi", "x1*x2 + x3^(d*n)"),),
        v1="qv(n, r1, r2, a, n)",
        chart="1",
        w2="qv(r1, r1-s1s, d*n, 1, s1s)",
        v2="qv(n, r1-s1s, r2-delta1*d*n+s1s, a-delta1, n)",
        rev_chart="4",
        w2p="qv(n, s1s, delta1*d*n-s1s, delta1, n)",
        n="n",
        disc_f="F(a, n)",
        disc_g="F(1, r1)",
        disc_fp="F(a-delta1, n)",
        disc_gp="F(delta1, n)",
        Ecube="F(d*n**2, r1*r2)",
        Fcube="F(r1**2, s1s*(r1-s1s))",
        T="F(1, r1) * (-F(a*d*n, r2) + 1)",
        d0="x4",
        c0="n",
        q0="s1s",
        kawamata=(1, 3, 4),
        compat=((1, 2, "x1*x2"),),
        paper_text={"Ecube": "printed as dr^2/(r1 r2)", "w2": "second entry printed as dr"},
        notes=("the text writes r for the index n in places; n is used throughout",),
    ),
    CaseEntry(
        id="cAn-sub2",
        family="cAn",
        title="discrepancy a/n over cA/n, extraction over Q2 (delta2 > 0)",
        params=("n", "b", "a", "d", "r1"),
        constraints=_CAN_CONSTRAINTS + (("delta2 > 0", "subcase 2 needs delta2 > 0"),),
        derived=_can,
        derived_doc="r2 = adn - r1; s_i, s_i*, u_i, delta_i from the congruence system",
        dim=4,
        lattice=("qv(n, 1, -1, b, 0)",),
        equations=(("phi", "x1*x2 + x3^(d*n)"),),
        v1="qv(n, r1, r2, a, n)",
        chart="2",
        w2="qv(r2, d*n, r2-s2s, 1, s2s)",
        v2="qv(n, r1+s2s-delta2*d*n, r2-s2s, a-delta2, n)",
        rev_chart="4",
        w2p="qv(n, delta2*d*n-s2s, s2s, delta2, n)",
        n="n",
        disc_f="F(a, n)",
        disc_g="F(1, r2)",
        disc_fp="F(a-delta2, n)",
        disc_gp="F(delta2, n)",
        Ecube="F(d*n**2, r1*r2)",
        Fcube="F(r2**2, s2s*(r2-s2s))",
        T="F(1, r2) * (-F(a*d*n, r1) + 1)",
        d0="x4",
        c0="n",
        q0="s2s",
        kawamata=(2, 3, 4),
        compat=((1, 1, "x1*x2"),),
        paper_text={
            "Ecube": "printed as dr^2/(r1 r2)",
            "w2": "first entry printed as dr",
            "disc_g": "diagram label printed as 1/r1",
        },
    ),
    CaseEntry(
        id="gorenstein-1ab",
        family="gorenstein-1ab",
        title="weighted blowup (1, a, b) of a smooth point",
        params=("a", "b"),
        constraints=(
            ("a >= 2", "a must be at least 2"),
            ("a < b", "a must be smaller than b"),
            ("gcd(a, b) == 1", "a and b must be coprime"),
        ),
        derived=_gor,
        derived_doc="a*p = b*q + 1 with 0 < p < b",
        dim=3,
        lattice=(),
        equations=(),
        v1="qv(1, 1, a, b)",
        chart="3",
        w2="qv(b, p, 1, b-p)",
        v2="qv(1, 1, a-q, b-p)",
        rev_chart="1",
        w2p="qv(1, 1, q, p)",
        n="1",
        disc_f="F(a+b)",
        disc_g="F(1, b)",
        disc_fp="F(a+b-p-q)",
        disc_gp="F(p+q)",
        Ecube="F(1, a*b)",
        Fcube="F(b**2, p*(b-p))",
        T="-F((a+b)**2, a*b) + F(1, b*p)",
        d0="elephant",
        c0="a+b",
        q0="1",
        kawamata=(1, 2, 3),
        notes=("E^3, F^3 and T are not printed for this example; they are the toric values",),
    ),
)

BY_ID: dict[str, CaseEntry] = {e.id: e for e in ENTRIES}


def families() -> dict[str, list[CaseEntry]]:
    out: dict[str, list[CaseEntry]] = {}
    for e in ENTRIES:
        out.setdefault(e.family, []).append(e)
    return out
