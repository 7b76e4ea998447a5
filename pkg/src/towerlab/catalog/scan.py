"""Parameter sweeps over a catalog entry."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Mapping, Sequence

from .families import BY_ID
from .instance import InstanceError, check_params, instantiate
from .verify import Check, VerificationReport, verify


@dataclass
class ScanResult:
    family: str
    considered: int = 0
    skipped: int = 0
    reports: list[VerificationReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    @property
    def n_pass(self) -> int:
        return sum(r.passed for r in self.reports)

    @property
    def empty(self) -> bool:
        return not self.reports


def default_ranges(family_id: str, bound: int) -> dict[str, range]:
    return {p: range(1, bound + 1) for p in BY_ID[family_id].params}


def admissible(family_id: str, ranges: Mapping[str, Sequence[int]]) -> Iterator[tuple[dict[str, int], bool]]:
    """Yield ``(params, ok)`` for every tuple in lexicographic order of the entry's parameters."""
    entry = BY_ID[family_id]
    names = entry.params
    missing = [p for p in names if p not in ranges]
    if missing:
        raise InstanceError(f"{family_id}: no range for parameter(s) {', '.join(missing)}")
    extra = [p for p in ranges if p not in names]
    if extra:
        raise InstanceError(f"{family_id}: unknown parameter(s) {', '.join(extra)}")
    for values in product(*(sorted(ranges[p]) for p in names)):
        params = dict(zip(names, values))
        try:
            check_params(entry, params)
        except InstanceError:
            yield params, False
        else:
            yield params, True


def _verify_one(job: tuple[str, dict[str, int]]) -> VerificationReport:
    family_id, params = job
    try:
        inst = instantiate(family_id, params)
    except InstanceError as exc:
        return VerificationReport(
            family_id, dict(params), [Check("00.instantiate", False, "InstanceError", str(exc))]
        )
    return verify(inst)


def scan(family_id: str, ranges: Mapping[str, Sequence[int]], jobs: int = 1) -> ScanResult:
    if family_id not in BY_ID:
        raise InstanceError(f"unknown family {family_id!r}")
    result = ScanResult(family_id)
    todo = []
    for params, ok in admissible(family_id, ranges):
        result.considered += 1
        if ok:
            todo.append((family_id, params))
        else:
            result.skipped += 1
    if jobs > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            result.reports = list(pool.map(_verify_one, todo, chunksize=max(1, len(todo) // (4 * jobs))))
    else:
        result.reports = [_verify_one(j) for j in todo]
    return result
