"""Regenerate the bundled TCD certificates in src/tricross/data.

Every file is the first certificate found by the search engine at its
graph's known tcr, and records the search parameters in its meta lines.

    python3 scripts/generate_certificates.py            # all files
    python3 scripts/generate_certificates.py k33 k64    # a subset
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from tricross import tcd
from tricross.drawing import validate
from tricross.graph import PartitionSpec, build_complete_multipartite, named_graph
from tricross.search import search

DATA = Path(__file__).resolve().parent.parent / "src" / "tricross" / "data"

# name -> (graph, k, k_min); k_min < k also proves minimality within the run
CERTIFICATES = {
    "k22": ((2, 2), 0, 0),
    "petersen": ("petersen", 1, 0),
    "k33": ((3, 3), 1, 0),
    "k43": ((4, 3), 1, 0),
    "k3111": ((3, 1, 1, 1), 1, 0),
    "k4111": ((4, 1, 1, 1), 1, 0),
    "k331": ((3, 3, 1), 1, 0),
    "k321": ((3, 2, 1), 1, 0),
    "k421": ((4, 2, 1), 1, 0),
    "k63": ((6, 3), 2, 0),
    "k6111": ((6, 1, 1, 1), 2, 0),
    "k621": ((6, 2, 1), 2, 0),
    "k64": ((6, 4), 4, 0),
}


def graph_for(spec):
    if isinstance(spec, str):
        return named_graph(spec)
    return build_complete_multipartite(PartitionSpec(spec))


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("names", nargs="*", help=f"subset of {', '.join(CERTIFICATES)}")
    ap.add_argument("--out", type=Path, default=DATA)
    ap.add_argument("--budget-seconds", type=float, default=None)
    args = ap.parse_args(argv)
    names = args.names or list(CERTIFICATES)
    unknown = [n for n in names if n not in CERTIFICATES]
    if unknown:
        ap.error(f"unknown certificate(s): {unknown}")
    args.out.mkdir(parents=True, exist_ok=True)
    failed = 0
    for name in names:
        spec, k, k_min = CERTIFICATES[name]
        g = graph_for(spec)
        t0 = time.monotonic()
        out = search(g, k_min, k, budget_seconds=args.budget_seconds)
        dt = time.monotonic() - t0
        if not out.found or out.k != k:
            print(f"{name}: expected k={k}, got {out.status.value} k={out.k} ({dt:.1f}s)")
            failed += 1
            continue
        cert = out.certificate
        assert validate(cert).accepted
        tcd.dump(cert, args.out / f"{name}.tcd")
        print(f"{name}: k={k} nodes={out.stats.nodes} tests={out.stats.planarity_tests} {dt:.1f}s")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
