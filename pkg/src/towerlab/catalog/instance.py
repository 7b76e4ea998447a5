"""Evaluating catalog templates at concrete parameters."""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterator, Mapping, NamedTuple

from ..lattice import Overlattice, Vector, canonicalize, contains, is_primitive, LatticeError
from ..poly import Monomial, SemiInvariant, monomial, support
from .families import BY_ID, CaseEntry


class InstanceError(ValueError):
    """Unknown family id or parameters violating the family constraints."""


class Weight(NamedTuple):
    """``(1/order)(numerators)``."""

    order: int
    numerators: tuple[int, ...]

    @property
    def fractions(self) -> Vector:
        return tuple(Fraction(x, self.order) for x in self.numerators)

    def __str__(self) -> str:
        return f"1/{self.order}(" + ", ".join(map(str, self.numerators)) + ")"


def _qv(den: int, *nums: int) -> Weight:
    return Weight(int(den), tuple(int(x) for x in nums))


_NAMESPACE = {"F": Fraction, "qv": _qv, "gcd": gcd, "__builtins__": {}}


@lru_cache(maxsize=None)
def _compile(expr: str):
    return compile(expr, "<template>", "eval")


def evaluate(expr: str, params: Mapping[str, int]):
    return eval(_compile(expr), dict(_NAMESPACE), dict(params))


_EXPONENT = re.compile(r"\^\(([^)]*)\)")


def expand_support(text: str, params: Mapping[str, int]) -> str:
    """Substitute parenthesised exponent expressions: ``x3^(4*l)`` becomes ``x3^8``."""
    return _EXPONENT.sub(lambda m: "^" + str(int(evaluate(m.group(1), params))), text)


@dataclass(frozen=True)
class CaseInstance:
    entry: CaseEntry
    params: Mapping[str, int]
    derived: Mapping[str, int]
    lattice: Overlattice
    equations: tuple[SemiInvariant, ...]
    v1: Vector
    chart: int
    w2: Weight
    v2: Vector
    rev_chart: int
    w2p: Weight
    chart_types: tuple[tuple[int, Weight], ...]
    n: int
    disc_f: Fraction
    disc_g: Fraction
    disc_fp: Fraction
    disc_gp: Fraction
    Ecube: Fraction
    Fcube: Fraction
    T: Fraction
    c0: Fraction
    q0: Fraction
    excluded: tuple[tuple[int, Monomial], ...] = ()
    branches: tuple[tuple[str, tuple[SemiInvariant, ...]], ...] = ()
    compat: tuple[tuple[int, int, Monomial], ...] = ()
    reembed: tuple | None = None
    perturbed: str | None = field(default=None, compare=False)

    @property
    def id(self) -> str:
        return self.entry.id

    @property
    def all_params(self) -> dict[str, int]:
        return {**self.params, **self.derived}

    def label(self) -> str:
        if not self.params:
            return self.id
        return self.id + "[" + ", ".join(f"{k}={v}" for k, v in self.params.items()) + "]"


def _vector(w: Weight) -> Vector:
    return w.fractions


def check_params(entry: CaseEntry, params: Mapping[str, int]) -> dict[str, int]:
    """Validate ``params`` against the entry; return the derived parameters."""
    missing = [p for p in entry.params if p not in params]
    extra = [p for p in params if p not in entry.params]
    if missing:
        raise InstanceError(f"{entry.id}: missing parameter(s) {', '.join(missing)}")
    if extra:
        raise InstanceError(f"{entry.id}: unknown parameter(s) {', '.join(extra)}")
    env = dict(params)
    derived: dict[str, int] = {}
    have_derived = entry.derived is None
    for expr, message in entry.constraints:
        try:
            ok = evaluate(expr, env)
        except NameError:
            if have_derived:
                raise
            try:
                derived = entry.derived(params)
            except ValueError as exc:
                raise InstanceError(f"{entry.id}: {exc}") from None
            env.update(derived)
            have_derived = True
            ok = evaluate(expr, env)
        if not ok:
            raise InstanceError(f"{entry.id}: constraint violated: {message} ({expr})")
    if not have_derived:
        derived = entry.derived(params)
    return derived


def _equations(entry: CaseEntry, env: Mapping[str, int]) -> tuple[SemiInvariant, ...]:
    return tuple(support(entry.dim, expand_support(text, env), name) for name, text in entry.equations)


def _branches(entry: CaseEntry, env, base: tuple[SemiInvariant, ...]):
    out = []
    for name, additions in entry.branches:
        parity, _, _ = name.partition(":")
        if parity in ("odd", "even") and (env["l"] % 2 == 1) != (parity == "odd"):
            continue
        eqs = list(base)
        for j, mono in additions:
            m = monomial(entry.dim, expand_support(mono, env))
            eqs[j - 1] = SemiInvariant(eqs[j - 1].monomials | {m}, eqs[j - 1].name)
        out.append((name, tuple(eqs)))
    return tuple(out)


def instantiate(family_id: str, params: Mapping[str, int] | None = None, validate: bool = True) -> CaseInstance:
    try:
        entry = BY_ID[family_id]
    except KeyError:
        raise InstanceError(f"unknown family {family_id!r}") from None
    params = {k: int(v) for k, v in (params or {}).items()}
    params = {k: params[k] for k in entry.params if k in params} | {
        k: v for k, v in params.items() if k not in entry.params
    }
    derived = check_params(entry, params)
    env = {**params, **derived}
    ev = lambda s: evaluate(s, env)  # noqa: E731
    L = canonicalize(entry.dim, [_vector(ev(g)) for g in entry.lattice])
    base = _equations(entry, env)
    w2 = ev(entry.w2)
    inst = CaseInstance(
        entry=entry,
        params=params,
        derived=derived,
        lattice=L,
        equations=base,
        v1=_vector(ev(entry.v1)),
        chart=int(ev(entry.chart)),
        w2=w2,
        v2=_vector(ev(entry.v2)),
        rev_chart=int(ev(entry.rev_chart)),
        w2p=ev(entry.w2p),
        chart_types=tuple((int(ev(c)), ev(w)) for c, w in entry.chart_types),
        n=int(ev(entry.n)),
        disc_f=Fraction(ev(entry.disc_f)),
        disc_g=Fraction(ev(entry.disc_g)),
        disc_fp=Fraction(ev(entry.disc_fp)),
        disc_gp=Fraction(ev(entry.disc_gp)),
        Ecube=Fraction(ev(entry.Ecube)),
        Fcube=Fraction(ev(entry.Fcube)),
        T=Fraction(ev(entry.T)),
        c0=Fraction(ev(entry.c0)),
        q0=Fraction(ev(entry.q0)),
        excluded=tuple((j, monomial(entry.dim, expand_support(m, env))) for j, m in entry.excluded),
        branches=_branches(entry, env, base),
        compat=tuple((j, k, monomial(entry.dim, m)) for j, k, m in entry.compat),
        reembed=None
        if entry.reembed is None
        else (
            _vector(ev(entry.reembed[0])),
            _vector(ev(entry.reembed[1])),
            support(entry.dim - 1, expand_support(entry.reembed[2], env), "f0"),
            support(entry.dim - 1, expand_support(entry.reembed[3], env), "f1"),
            support(entry.dim - 1, expand_support(entry.reembed[4], env), "f2"),
            Fraction(ev(entry.reembed[5])),
        ),
    )
    if validate:
        for name in ("v1", "v2"):
            v = getattr(inst, name)
            if any(x <= 0 for x in v):
                raise InstanceError(f"{inst.label()}: {name} has a non-positive entry")
            if not contains(L, v):
                raise InstanceError(f"{inst.label()}: {name} is not in the lattice")
            try:
                if not is_primitive(L, v):
                    raise InstanceError(f"{inst.label()}: {name} is not primitive")
            except LatticeError as exc:
                raise InstanceError(f"{inst.label()}: {exc}") from None
    return inst


# -- fault injection ------------------------------------------------------

_SCALARS = ("chart", "rev_chart", "n", "disc_f", "disc_g", "disc_fp", "disc_gp", "Ecube", "Fcube", "T", "c0", "q0")


def _bump_vector(v: Vector, j: int) -> Vector:
    return v[:j] + (v[j] + 1,) + v[j + 1 :]


def _bump_weight(w: Weight, j: int) -> Weight:
    nums = list(w.numerators)
    nums[j] += 1
    return Weight(w.order, tuple(nums))


def perturbations(inst: CaseInstance) -> Iterator[CaseInstance]:
    """Every single-value perturbation of the evaluated templates (each value increased by one)."""
    for name in ("v1", "v2"):
        v = getattr(inst, name)
        for j in range(len(v)):
            yield replace(inst, **{name: _bump_vector(v, j)}, perturbed=f"{name}[{j + 1}]")
    for name in ("w2", "w2p"):
        w = getattr(inst, name)
        for j in range(len(w.numerators)):
            yield replace(inst, **{name: _bump_weight(w, j)}, perturbed=f"{name}[{j + 1}]")
        yield replace(inst, **{name: Weight(w.order + 1, w.numerators)}, perturbed=f"{name}.order")
    for name in _SCALARS:
        yield replace(inst, **{name: getattr(inst, name) + 1}, perturbed=name)
    for i, (c, w) in enumerate(inst.chart_types):
        for j in range(len(w.numerators)):
            types = list(inst.chart_types)
            types[i] = (c, _bump_weight(w, j))
            yield replace(inst, chart_types=tuple(types), perturbed=f"chart_type[{i}][{j + 1}]")
