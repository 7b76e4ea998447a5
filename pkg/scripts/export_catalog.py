"""Write the catalog, evaluated at sample parameters, as JSON.

    python3 scripts/export_catalog.py -o catalog.json
"""

import argparse
import json
import sys

from towerlab.catalog import ENTRIES, admissible, instantiate, verify
from towerlab.catalog.scan import default_ranges
from towerlab.cli import SCHEMA_VERSION, render


def first_admissible(fid: str, bound: int = 8):
    for params, ok in admissible(fid, default_ranges(fid, bound)):
        if ok:
            inst = instantiate(fid, params)
            if verify(inst).passed:
                return inst
    return None


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("-o", "--output", default="-")
    args = ap.parse_args()

    doc = {"schema_version": SCHEMA_VERSION, "entries": []}
    for e in ENTRIES:
        item = {"id": e.id, "family": e.family, "templates": e.templates()}
        inst = first_admissible(e.id)
        if inst is not None:
            item["sample"] = {
                "params": inst.params,
                "v1": render(inst.v1),
                "v2": render(inst.v2),
                "w2": str(inst.w2),
                "w2p": str(inst.w2p),
                "Ecube": render(inst.Ecube),
                "Fcube": render(inst.Fcube),
                "T": render(inst.T),
            }
        doc["entries"].append(item)
    text = json.dumps(doc, indent=2, sort_keys=True)
    if args.output == "-":
        sys.stdout.write(text + "\n")
    else:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")


if __name__ == "__main__":
    main()
