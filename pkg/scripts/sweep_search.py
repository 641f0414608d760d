"""Bounded search over small complete multipartite graphs, next to the
oracle's value, as a table.

    python3 scripts/sweep_search.py --max-parts-sum 9 --k-max 2
"""

from __future__ import annotations

import argparse
import time

from tricross.graph import build_complete_multipartite
from tricross.oracle import tcr
from tricross.search import Status, search


def specs(total: int, t_max: int):
    def rec(prefix, left, cap):
        if len(prefix) >= 2:
            yield tuple(prefix)
        if len(prefix) == t_max:
            return
        for n in range(min(left, cap), 0, -1):
            yield from rec(prefix + [n], left - n, n)
    yield from rec([], total, total)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-parts-sum", type=int, default=8)
    ap.add_argument("--max-parts", type=int, default=4)
    ap.add_argument("--k-max", type=int, default=1)
    ap.add_argument("--budget-seconds", type=float, default=60.0)
    args = ap.parse_args()
    print(f"{'graph':<16}{'oracle':>9}{'search':>22}{'seconds':>9}  agree")
    for parts in sorted(specs(args.max_parts_sum, args.max_parts)):
        g = build_complete_multipartite(parts)
        truth = tcr(parts).value
        t0 = time.monotonic()
        out = search(g, 0, args.k_max, budget_seconds=args.budget_seconds)
        dt = time.monotonic() - t0
        if out.status is Status.FOUND:
            got, agree = f"Found({out.k})", truth.n == out.k
        elif out.status is Status.NONE_WITHIN:
            got = f"NoneWithin({args.k_max})"
            agree = truth.n is None or truth.n > args.k_max
        else:
            got, agree = "BudgetExceeded", None
        mark = {True: "yes", False: "NO", None: "?"}[agree]
        print(f"{g.label():<16}{str(truth):>9}{got:>22}{dt:>9.2f}  {mark}")


if __name__ == "__main__":
    main()
