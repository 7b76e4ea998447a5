"""Command-line front end.

    towerlab list [ID] [--format text|json]
    towerlab verify ID [-p name=value ...]
    towerlab scan ID [-p name=lo..hi ...] [--bound N] [--jobs N]
    towerlab reverse --dim D [--adjoin VEC ...] --v1 VEC (--v2 VEC | --w2 VEC --chart K)

Exit status: 0 when every check passes, 1 when a check fails (or a pair is
not interchangeable), 2 on invalid input.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Any, Sequence

from .catalog import BY_ID, ENTRIES, InstanceError, instantiate, scan, verify
from .catalog.scan import ScanResult
from .catalog.verify import VerificationReport
from .cone import ConeError, SimplicialCone, decomposition_residual, reconstruct, reverse_tower, star_subdivide, tower
from .cone import first_quadrant
from .lattice import LatticeError, canonicalize, index

SCHEMA_VERSION = "1"

EXIT_OK, EXIT_FAIL, EXIT_INVALID = 0, 1, 2


class UsageError(ValueError):
    pass


# -- rendering -------------------------------------------------------------

def render(x: Any) -> str:
    """Exact, deterministic text for report values; rationals as ``p/q``."""
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (int, Fraction)):
        return str(Fraction(x))
    if isinstance(x, tuple):
        return "(" + ", ".join(render(v) for v in x) + ")"
    if isinstance(x, list):
        return "[" + ", ".join(render(v) for v in x) + "]"
    if isinstance(x, dict):
        return "{" + ", ".join(f"{k}: {render(v)}" for k, v in sorted(x.items())) + "}"
    return str(x)


def report_document(r: VerificationReport, family: str) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "family": family,
        "instance": r.instance_id,
        "params": {k: int(v) for k, v in r.params.items()},
        "checks": [
            {"name": c.name, "status": c.status, "lhs": render(c.lhs), "rhs": render(c.rhs)} for c in r.checks
        ],
        "values": {k: render(v) for k, v in r.values.items()},
        "summary": r.summary,
    }


def scan_document(res: ScanResult) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "family": res.family,
        "considered": res.considered,
        "skipped": res.skipped,
        "admissible": len(res.reports),
        "passed": res.n_pass,
        "summary": "empty" if res.empty else ("pass" if res.passed else "fail"),
        "reports": [report_document(r, res.family) for r in res.reports],
    }


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False)


def report_text(doc: dict) -> str:
    checks = doc["checks"]
    w = max((len(c["name"]) for c in checks), default=4)
    lines = [f"instance: {doc['instance']}", f"{'check':<{w}}  status  lhs | rhs"]
    for c in checks:
        lines.append(f"{c['name']:<{w}}  {c['status']:<6}  {c['lhs']} | {c['rhs']}")
    for k, v in sorted(doc["values"].items()):
        lines.append(f"value {k} = {v}")
    n_fail = sum(c["status"] == "fail" for c in checks)
    lines.append(f"summary: {doc['summary']} ({len(checks) - n_fail}/{len(checks)} checks pass)")
    return "\n".join(lines)


# -- argument parsing ------------------------------------------------------

_RANGE = re.compile(r"^([A-Za-z_]\w*)=(-?\d+)(?:\.\.(-?\d+))?$")


def parse_params(items: Sequence[str], allow_ranges: bool) -> dict[str, range]:
    out: dict[str, range] = {}
    for item in items:
        m = _RANGE.match(item.strip())
        if not m:
            raise UsageError(f"cannot parse parameter {item!r}; use name=value or name=lo..hi")
        name, lo, hi = m.group(1), int(m.group(2)), m.group(3)
        if hi is not None and not allow_ranges:
            raise UsageError(f"ranges are only accepted by scan ({item!r})")
        hi = lo if hi is None else int(hi)
        if hi < lo:
            raise UsageError(f"empty range {item!r}")
        if name in out:
            raise UsageError(f"parameter {name} given twice")
        out[name] = range(lo, hi + 1)
    return out


_SCALED = re.compile(r"^\(?\s*(-?\d+(?:/\d+)?)\s*\)?\s*\((.*)\)$")


def parse_vector(text: str):
    """``"5,4,2,1,9"``, ``"3/2,1,2"`` or ``"1/2(3,3,1,2,4)"``."""
    s = text.strip()
    scale = Fraction(1)
    m = _SCALED.match(s)
    if m:
        scale = Fraction(m.group(1))
        s = m.group(2)
    elif s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    try:
        return tuple(scale * Fraction(x.strip()) for x in s.split(",") if x.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse vector {text!r}") from None


# -- commands --------------------------------------------------------------

def _entry_listing(e) -> dict:
    return {
        "id": e.id,
        "family": e.family,
        "title": e.title,
        "params": list(e.params),
        "constraints": [{"expr": x, "message": m} for x, m in e.constraints],
        "derived": e.derived_doc,
        "ambient_dim": e.dim,
        "lattice_generators": list(e.lattice),
        "equations": [{"name": n, "support": s} for n, s in e.equations],
        "branches": [{"name": n, "adds": [{"equation": j, "monomial": m} for j, m in a]} for n, a in e.branches],
        "templates": e.templates(),
        "d0": e.d0,
        "kind": e.kind,
        "kawamata_coordinates": list(e.kawamata) if e.kawamata else None,
        "compatibility": [{"equation": j, "coordinate": k, "monomial": m} for j, k, m in e.compat],
        "paper_text": dict(e.paper_text),
        "notes": list(e.notes),
    }


def cmd_list(args) -> int:
    if args.id:
        chosen = [e for e in ENTRIES if args.id in (e.id, e.family)]
        if not chosen:
            raise UsageError(f"unknown family {args.id!r}")
    else:
        chosen = list(ENTRIES)
    if args.format == "json":
        print(dumps({"schema_version": SCHEMA_VERSION, "entries": [_entry_listing(e) for e in chosen]}))
        return EXIT_OK
    families: dict[str, list] = {}
    for e in chosen:
        families.setdefault(e.family, []).append(e)
    for fam, entries in families.items():
        print(fam)
        for e in entries:
            params = ", ".join(e.params) or "-"
            print(f"  {e.id:<20} params: {params}")
            for expr, msg in e.constraints:
                print(f"      {expr:<48} {msg}")
            if args.id:
                for k, v in e.templates().items():
                    print(f"      {k:<20} {v}")
                for k, v in e.paper_text.items():
                    print(f"      printed {k}: {v}")
    if not args.id:
        print(f"{len(families)} families, {len(chosen)} entries")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.id not in BY_ID:
        raise UsageError(f"unknown family {args.id!r}")
    params = {k: r[0] for k, r in parse_params(args.param, allow_ranges=False).items()}
    inst = instantiate(args.id, params)
    rep = verify(inst)
    doc = report_document(rep, inst.entry.family)
    print(dumps(doc) if args.format == "json" else report_text(doc))
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_scan(args) -> int:
    if args.id not in BY_ID:
        raise UsageError(f"unknown family {args.id!r}")
    ranges = parse_params(args.param, allow_ranges=True)
    for p in BY_ID[args.id].params:
        if p not in ranges:
            if args.bound is None:
                raise UsageError(f"no range for parameter {p}; give -p {p}=lo..hi or --bound")
            ranges[p] = range(1, args.bound + 1)
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    res = scan(args.id, ranges, jobs=args.jobs)
    doc = scan_document(res)
    if args.format == "json":
        print(dumps(doc))
    else:
        for r in doc["reports"]:
            failed = [c["name"] for c in r["checks"] if c["status"] == "fail"]
            line = f"{r['instance']:<48} {r['summary']}"
            if failed:
                line += "  failed: " + ", ".join(failed)
            print(line)
        print(
            f"{res.family}: {res.considered} tuples, {res.skipped} inadmissible, "
            f"{len(res.reports)} admissible, {res.n_pass}/{len(res.reports)} pass"
        )
        if res.empty:
            print("no admissible parameter tuples in the given ranges")
    return EXIT_OK if res.passed else EXIT_FAIL


def _tower_doc(t, name: str) -> dict:
    w = t.weight()
    coeff = Fraction(w.numerators[w.position], w.order)
    return {
        "name": name,
        "first": render(t.v1),
        "chart": t.chart + 1,
        "chart_type": str(t.chart_type()),
        "second": render(t.v2),
        "weight": str(w),
        "decomposition": f"{render(t.v2)} = {coeff} * {render(t.v1)} + {render(w.hat)}",
        "residual": render(decomposition_residual(t)),
        "dagger": t.dagger(),
    }


def cmd_reverse(args) -> int:
    adjoined = [parse_vector(a) for a in args.adjoin]
    v1 = parse_vector(args.v1)
    if (args.v2 is None) == (args.w2 is None):
        raise UsageError("give exactly one of --v2 or --w2")
    if len({len(v) for v in [v1, *adjoined]} | {args.dim}) != 1:
        raise UsageError("vector lengths must equal --dim")
    try:
        L = canonicalize(args.dim, adjoined)
    except LatticeError as exc:
        raise UsageError(str(exc)) from None
    try:
        if args.w2 is not None:
            if args.chart is None:
                raise UsageError("--w2 needs --chart")
            w2 = parse_vector(args.w2)
            if len(w2) != args.dim or not 1 <= args.chart <= args.dim:
                raise UsageError("--w2 length or --chart out of range")
            cone = star_subdivide(first_quadrant(L), v1)[args.chart - 1]
            v2 = tuple(sum((w2[j] * cone.generators[j][k] for j in range(args.dim)), Fraction(0)) for k in range(args.dim))
        else:
            v2 = parse_vector(args.v2)
            if len(v2) != args.dim:
                raise UsageError("vector lengths must equal --dim")
        t = tower(L, v1, v2)
        if args.chart is not None and t.chart + 1 != args.chart:
            raise ConeError(f"v2 lies in chart {t.chart + 1}, not {args.chart}")
        rt = reverse_tower(t)
    except (ConeError, LatticeError) as exc:
        print(f"not interchangeable: {exc}", file=sys.stderr)
        return EXIT_FAIL
    doc = {
        "schema_version": SCHEMA_VERSION,
        "lattice": repr(L),
        "lattice_index": index(L),
        "towers": [_tower_doc(t, "original"), _tower_doc(rt, "reversed")],
    }
    if args.format == "json":
        print(dumps(doc))
    else:
        print(f"lattice {doc['lattice']}  index {doc['lattice_index']}")
        for td in doc["towers"]:
            print(f"[{td['name']}]")
            for k in ("first", "chart", "chart_type", "second", "weight", "decomposition", "residual", "dagger"):
                print(f"  {k:<13} {render(td[k])}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="towerlab", description=__doc__.split("\n\n")[0])
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list", parents=[fmt], help="list the case catalog")
    p.add_argument("id", nargs="?", help="entry or family id; shows its templates")
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("verify", parents=[fmt], help="run every check on one instance")
    p.add_argument("id")
    p.add_argument("-p", "--param", action="append", default=[], metavar="NAME=VALUE")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", parents=[fmt], help="verify every admissible tuple in a box")
    p.add_argument("id")
    p.add_argument("-p", "--param", action="append", default=[], metavar="NAME=LO..HI")
    p.add_argument("--bound", type=int, default=None, help="range 1..N for parameters not given with -p")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("reverse", parents=[fmt], help="build a two-step tower and its reversal")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--adjoin", action="append", default=[], metavar="VEC", help="generator of the overlattice")
    p.add_argument("--v1", required=True)
    p.add_argument("--v2")
    p.add_argument("--w2", help="weight of the second vector in the chart cone (needs --chart)")
    p.add_argument("--chart", type=int, help="1-based chart index")
    p.set_defaults(func=cmd_reverse)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, InstanceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
