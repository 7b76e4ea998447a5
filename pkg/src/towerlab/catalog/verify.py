"""Master verification of a case instance.

Every check is recorded as ``(name, passed, lhs, rhs)``; nothing raises.
Check names carry a two-digit group prefix, so ``"06.reverse.w2p"`` belongs
to group 6 (tower reversal).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from ..cone import (
    chart_of,
    decomposition_residual,
    first_quadrant,
    interchangeable,
    reconstruct,
    reverse_tower,
    star_subdivide,
    tower,
)
from ..lattice import QuotientType, canonicalize, index, is_primitive, quotient_type, same_type
from ..poly import (
    ReembedSpec,
    SemiInvariant,
    chart_weight,
    compatibility_check,
    format_monomial,
    is_semi_invariant,
    reembed_extend,
    wt,
)
from ..tworay import (
    DiscrepancyLedger,
    TwoRayData,
    criterion_T,
    discrepancy_over_X,
    elephant_T,
    exceptional_cube,
    kawamata_Fcube,
    nef_check,
    theorem12_verify,
)
from .delta import claim1, claim2, cyclic_delta, delta_identities, remark_sum_applies
from .instance import CaseInstance, Weight


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    lhs: Any = None
    rhs: Any = None

    @property
    def group(self) -> int:
        return int(self.name.split(".", 1)[0])

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"


@dataclass
class VerificationReport:
    instance_id: str
    params: dict[str, int]
    checks: list[Check] = field(default_factory=list)
    values: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def summary(self) -> str:
        return "pass" if self.passed else "fail"

    def failed(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def failed_groups(self) -> set[int]:
        return {c.group for c in self.failed()}


class _Recorder:
    def __init__(self, report: VerificationReport):
        self.report = report

    def eq(self, name: str, lhs, rhs) -> None:
        self.report.checks.append(Check(name, lhs == rhs, lhs, rhs))

    def true(self, name: str, ok: bool, lhs=None, rhs=None) -> None:
        self.report.checks.append(Check(name, bool(ok), lhs, rhs))

    def guard(self, name: str, fn: Callable[[], None]) -> None:
        """Run ``fn``; an exception becomes a failed check carrying the message."""
        try:
            fn()
        except Exception as exc:  # noqa: BLE001 - failures are data here
            self.report.checks.append(Check(name, False, type(exc).__name__, str(exc)))


def _slot(w: Weight, chart: int) -> Fraction:
    return Fraction(w.numerators[chart - 1], w.order)


def _chart_equation_weight(v2, coeff: Fraction, phi: SemiInvariant, v1) -> Fraction:
    """Weight under the second blowup of the strict transform of ``phi`` in the chart."""
    w1 = wt(v1, phi)
    return min(chart_weight(v2, coeff, m, w1) for m in phi.monomials)


def _without(phi: SemiInvariant, m) -> SemiInvariant:
    return SemiInvariant(phi.monomials - {m}, phi.name)


def _adjunction(v, equations) -> Fraction:
    return sum(v, Fraction(0)) - 1 - sum((wt(v, phi) for phi in equations), Fraction(0))


def _chart_adjunction(w: Weight, equations, first, second, chart) -> Fraction:
    coeff = _slot(w, chart)
    return sum(w.fractions, Fraction(0)) - 1 - sum(
        (_chart_equation_weight(second, coeff, phi, first) for phi in equations), Fraction(0)
    )


def verify(inst: CaseInstance) -> VerificationReport:
    report = VerificationReport(inst.label(), dict(inst.params))
    rec = _Recorder(report)
    e = inst.entry
    L = inst.lattice
    eqs = inst.equations
    systems = [("base", eqs)] + list(inst.branches)

    # (1) primitivity
    for name in ("v1", "v2"):
        v = getattr(inst, name)
        rec.guard(f"01.primitive.{name}", lambda v=v, name=name: rec.true(
            f"01.primitive.{name}", all(x > 0 for x in v) and is_primitive(L, v), v, "primitive"))

    # (2) semi-invariance and declared non-membership
    for label, system in systems:
        for phi in system:
            tag = phi.name if label == "base" else f"{phi.name}|{label}"
            rec.true(f"02.semi_invariant[{tag}]", is_semi_invariant(L, phi), str(phi), "semi-invariant")
    for j, m in inst.excluded:
        phi = eqs[j - 1]
        extended = SemiInvariant(phi.monomials | {m}, phi.name)
        rec.true(
            f"02.excluded[{format_monomial(m)} in {phi.name}]",
            not is_semi_invariant(L, extended),
            format_monomial(m),
            "not semi-invariant",
        )

    # (3) quotient types of the charts
    t = None

    def _types():
        nonlocal t
        t = tower(L, inst.v1, inst.v2)
        stated = [(inst.chart, Weight(inst.w2.order, inst.w2.numerators))] + list(inst.chart_types)
        for chart, w in stated:
            ct = tower_chart_type(L, inst.v1, chart)
            rec.true(f"03.chart_type[Q{chart}]", same_type(ct, w.order, w.numerators), str(ct), str(w))
        rec.true("03.dagger", t.dagger(), t.dagger(), True)

    rec.guard("03.chart_type", _types)

    # (4) weight of v2 in the chart cone
    def _weight():
        rec.eq("04.chart", chart_of(L, inst.v1, inst.v2) + 1 if t else None, inst.chart)
        w = t.weight()
        rec.eq("04.w2", w.fractions, inst.w2.fractions)
        rec.eq("04.reconstruct_v2", reconstruct(t.chart_cone(), w), inst.v2)
        res = decomposition_residual(t)
        rec.true("04.residual", not any(res), res, "zero")
        rec.eq("04.pullback", _slot(inst.w2, inst.chart), Fraction(w.numerators[w.position], w.order))

    rec.guard("04.w2", _weight)

    # (5) interchangeability
    rec.guard("05.interchangeable", lambda: rec.true(
        "05.interchangeable", interchangeable(L, inst.v1, inst.v2), "interchangeable", True))

    # (6) reversal
    rt = None

    def _reverse():
        nonlocal rt
        rt = reverse_tower(t)
        rec.eq("06.reverse.chart", rt.chart + 1, inst.rev_chart)
        rec.eq("06.reverse.w1p", rt.v1, inst.v2)
        w = rt.weight()
        rec.eq("06.reverse.w2p", w.fractions, inst.w2p.fractions)
        rec.eq("06.reverse.reconstruct_v1", reconstruct(rt.chart_cone(), w), inst.v1)
        res = decomposition_residual(rt)
        rec.true("06.reverse.residual", not any(res), res, "zero")
        rec.true("06.reverse.involution", reverse_tower(rt) == t, "reverse(reverse(t))", "t")

    rec.guard("06.reverse", _reverse)

    # (7) compatibility of the chart equations
    def _compat():
        i = inst.chart
        coeff = _slot(inst.w2, i)
        for label, system in inst.branches or systems:
            if not inst.compat:
                break
            suffix = "" if label == "base" else f"|{label}"
            pairs = []
            for j, k, own in inst.compat:
                phi = system[j - 1]
                w1 = wt(inst.v1, phi)
                target = _slot(inst.w2, k)
                tag = f"x{k}bar via {phi.name}{suffix}"
                rec.eq(f"07.own_monomial[{tag}]", chart_weight(inst.v2, coeff, own, w1), target)
                rec.eq(f"07.min_attained[{tag}]", _chart_equation_weight(inst.v2, coeff, phi, inst.v1), target)
                pairs.append((target + coeff * w1, _without(phi, own), inst.v2))
            rec.true(f"07.compatibility{suffix}", compatibility_check(pairs),
                     [str(p[0]) for p in pairs], [str(wt(p[2], p[1])) for p in pairs])
        if inst.reembed is not None:
            v, vbar2, f0, f1, f2, new_w = inst.reembed
            spec = ReembedSpec(0, f0, f1, f2, new_w)
            v_ext, v2_ext = reembed_extend(v, vbar2, spec)
            rec.eq("07.reembed.v2", v2_ext, inst.v2)
            rec.true("07.reembed.lattice", canonicalize(len(v_ext), [v_ext]) == L, v_ext, "same lattice")

    if inst.compat or inst.reembed is not None:
        rec.guard("07.compatibility", _compat)

    # (8) nefness criterion
    def _criterion():
        p = inst.w2.order
        q = _slot(inst.w2, inst.chart) * p
        a = inst.disc_f * inst.n
        d0 = e.d0 or ""
        coord = d0.split(":")[-1] if d0.split(":")[-1].startswith("x") else None
        if coord is not None:
            k = int(coord[1:])
            rec.eq(f"08.c0[{coord}]", inst.n * inst.v1[k - 1], inst.c0)
            rec.eq(f"08.q0[{coord}]", p * _slot(inst.w2, k), inst.q0)
        if d0.startswith("elephant"):
            rec.eq("08.elephant.c0=a", inst.c0, a)
            rec.eq("08.elephant.q0=1", inst.q0, 1)
        rec.true("08.a_integral", a.denominator == 1 and a > 0, a, "positive integer")
        data = TwoRayData(int(a), inst.n, p, q, inst.c0, inst.q0, inst.Ecube, inst.Fcube)
        T = criterion_T(data)
        report.values["T"] = T
        rec.eq("08.T", T, inst.T)
        rec.true("08.T<0", T < 0, T, 0)
        rec.true("08.c0-a*q0<=0", inst.c0 - a * inst.q0 <= 0, inst.c0 - a * inst.q0, 0)
        rec.true("08.nef", nef_check(data), "nef", True)
        if d0.startswith("elephant"):
            rec.eq("08.elephant_T", elephant_T(int(a), inst.n, q, p, inst.Ecube, inst.Fcube), T)

    rec.guard("08.criterion", _criterion)

    # (9) exceptional cubes
    def _cubes():
        report.values["E^3"] = inst.Ecube
        report.values["F^3"] = inst.Fcube
        E3 = exceptional_cube(inst.v1, index(L), [wt(inst.v1, phi) for phi in eqs])
        rec.eq("09.Ecube.toric", E3, inst.Ecube)
        coeff = _slot(inst.w2, inst.chart)
        bars = [_chart_equation_weight(inst.v2, coeff, phi, inst.v1) for phi in eqs]
        F3 = exceptional_cube(inst.w2.fractions, inst.w2.order, bars)
        rec.eq("09.Fcube.toric", F3, inst.Fcube)
        if e.kawamata is not None:
            alpha, beta, gamma = (inst.w2.numerators[k - 1] for k in e.kawamata)
            rec.eq("09.Fcube.kawamata", kawamata_Fcube(inst.w2.order, alpha, beta, gamma), inst.Fcube)

    rec.guard("09.cubes", _cubes)

    # (10) discrepancies in both orders
    def _discrepancies():
        labels = {"f": inst.disc_f, "g": inst.disc_g, "f'": inst.disc_fp, "g'": inst.disc_gp}
        rec.true("10.labels_positive", all(x > 0 for x in labels.values()),
                 [str(x) for x in labels.values()], "positive")
        orig = discrepancy_over_X(t, inst.disc_f, (inst.disc_g, _slot(inst.w2, inst.chart)), ("E", "F"))
        rev = discrepancy_over_X(rt, inst.disc_fp, (inst.disc_gp, _slot(inst.w2p, inst.rev_chart)), ("F", "E"))
        p_rev = tower_chart_type(L, inst.v2, inst.rev_chart).order
        rec.eq("10.a(F,X)=f'", orig.entries["F"], inst.disc_fp)
        rec.eq("10.a(E,X)=f", rev.entries["E"], inst.disc_f)
        rec.eq("10.valuation_invariance", dict(orig.entries), dict(rev.entries))
        rec.true(
            "10.theorem12",
            theorem12_verify(orig, rev, e.kind, inst.n, p_rev, inst.disc_gp),
            f"p'={p_rev}, a'={inst.disc_fp * inst.n}, a''={inst.disc_gp * inst.n}",
            f"n={inst.n}, a={inst.disc_f * inst.n}",
        )
        rec.eq("10.adjunction.f", _adjunction(inst.v1, eqs), inst.disc_f)
        rec.eq("10.adjunction.f'", _adjunction(inst.v2, eqs), inst.disc_fp)
        rec.eq("10.adjunction.g", _chart_adjunction(inst.w2, eqs, inst.v1, inst.v2, inst.chart), inst.disc_g)
        rec.eq("10.adjunction.g'", _chart_adjunction(inst.w2p, eqs, inst.v2, inst.v1, inst.rev_chart), inst.disc_gp)
        DiscrepancyLedger(dict(orig.entries))

    rec.guard("10.discrepancy", _discrepancies)

    # (11) cA/n integer arithmetic
    if e.family == "cAn":
        def _delta():
            P = inst.params
            dd = cyclic_delta(P["n"], P["b"], P["a"], P["d"], P["r1"])
            report.values["delta1"] = dd.delta1
            report.values["delta2"] = dd.delta2
            for name, (lhs, rhs) in delta_identities(P["n"], P["b"], P["a"], P["r1"], dd).items():
                rec.eq(f"11.identity[{name}]", lhs, rhs)
            rec.eq("11.catalog_delta", (dd.delta1, dd.delta2), (inst.derived["delta1"], inst.derived["delta2"]))
            rec.true("11.claim1", claim1(P["a"], dd), (dd.delta1, dd.delta2), f"nonzero, < {P['a']}")
            rec.true("11.claim2", claim2(P["r1"], dd), (dd.delta1, dd.delta2), "some positive")
            if remark_sum_applies(P["a"], P["r1"], dd):
                rec.eq("11.remark_sum", dd.delta1 + dd.delta2, P["a"])

        rec.guard("11.delta", _delta)

    # (12) smooth-point example
    if e.family == "gorenstein-1ab":
        def _gorenstein():
            a, b = inst.params["a"], inst.params["b"]
            p, q = inst.derived["p"], inst.derived["q"]
            rec.eq("12.ap=bq+1", a * p, b * q + 1)
            rec.true("12.0<p<b", 0 < p < b, p, f"(0, {b})")
            rec.eq("12.w2p=(1,q,p)", rt.weight().fractions, (1, q, p))
            rec.eq("12.v2=(1,a-q,b-p)", t.v2, (1, a - q, b - p))
            rec.eq("12.identity", 1 + (a + b) * (b - p), b * (a + b - p - q))
            rec.eq("12.a(F,X)", sum(t.v2) - 1, a + b - p - q)

        rec.guard("12.gorenstein", _gorenstein)

    return report


def tower_chart_type(L, v1, chart: int) -> QuotientType:
    """Quotient type of chart ``chart`` (1-based) of the ``v1``-subdivision."""
    cone = star_subdivide(first_quadrant(L), v1)[chart - 1]
    return quotient_type(L, cone.generators)
