"""Command line front end.

Exit codes: 0 success/accept/found, 1 reject, 2 usage/structural/unsupported,
3 search exhausted without a drawing, 4 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import tcd
from .counting import face_profiles
from .drawing import StructuralError, perturb, validate
from .graph import PartitionSpec, build_complete_multipartite, named_graph
from .oracle import known_cr, tcr, tcr_named
from .render import render_svg
from .search import Status, search

EXIT_OK, EXIT_REJECT, EXIT_USAGE, EXIT_NONE, EXIT_BUDGET = 0, 1, 2, 3, 4


def _emit(args, record: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(record, sort_keys=True))
    else:
        print("\n".join(lines))


def _graph_from_args(tokens: list[str]):
    if len(tokens) == 1 and not tokens[0].isdigit():
        try:
            return named_graph(tokens[0])
        except KeyError as exc:
            raise _Fail(EXIT_USAGE, exc.args[0])
    try:
        return build_complete_multipartite(PartitionSpec(tuple(int(t) for t in tokens)))
    except ValueError as exc:
        raise _Fail(EXIT_USAGE, f"bad partition {tokens}: {exc}")


def _usage(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return EXIT_USAGE


def _load(path: str):
    try:
        dr = tcd.load(path)
        dr.structure
        return dr
    except OSError as exc:
        raise _Fail(EXIT_USAGE, f"cannot read {path}: {exc}")
    except (tcd.TcdError, StructuralError) as exc:
        raise _Fail(EXIT_USAGE, f"structural error in {path}: {exc}")


class _Fail(Exception):
    def __init__(self, code: int, msg: str):
        super().__init__(msg)
        self.code = code


def _arity(dr) -> int:
    return 2 if dr.crossings and all(len(c) == 2 for c in dr.crossings) else 3


def cmd_oracle(args) -> int:
    if len(args.parts) == 1 and not args.parts[0].isdigit():
        try:
            ans = tcr_named(args.parts[0])
        except KeyError as exc:
            return _usage(str(exc.args[0]))
        label, cr = args.parts[0], known_cr(args.parts[0])
    else:
        try:
            spec = PartitionSpec(tuple(int(t) for t in args.parts))
        except ValueError as exc:
            return _usage(str(exc))
        ans = tcr(spec)
        label, cr = spec.label(), known_cr(spec)
    record = {"graph": label, "tcr": str(ans.value), "justification": ans.justification.value,
              "citations": list(ans.citations), "known_cr": cr}
    lines = [f"graph: {label}", f"tcr = {ans.value}", f"justification: {ans.justification.value}",
             "citations: " + " ".join(ans.citations)]
    if cr is not None:
        lines.append(f"known cr = {cr}")
    _emit(args, record, lines)
    return EXIT_OK


def cmd_validate(args) -> int:
    dr = _load(args.file)
    try:
        report = validate(dr, arity=_arity(dr))
    except StructuralError as exc:
        raise _Fail(EXIT_USAGE, f"structural error in {args.file}: {exc}")
    by_rule = {r: [v.detail for v in report.violations if v.rule == r] for r in ("R1", "R2", "R3", "R4", "R5", "R6", "R7")}
    lines = [f"{r} {'pass' if not d else 'FAIL'}" + ("".join(f"\n  {x}" for x in d)) for r, d in by_rule.items()]
    diag = [v.detail for v in report.diagnostics]
    lines.append("R8 " + ("pass" if not diag else "diagnostic: " + "; ".join(diag)))
    lines += [f"graph: {dr.base.label()}", f"k: {report.k}", f"d: {report.d}", f"faces: {report.faces}",
              f"verdict: {report.verdict}"]
    record = {"verdict": report.verdict, "graph": dr.base.label(), "k": report.k, "d": report.d,
              "faces": dict(report.faces.counts), "violations": [[v.rule, v.detail] for v in report.violations],
              "diagnostics": [[v.rule, v.detail] for v in report.diagnostics]}
    _emit(args, record, lines)
    return EXIT_OK if report.accepted else EXIT_REJECT


def cmd_search(args) -> int:
    g = _graph_from_args(args.parts)
    k_max = args.max_k if args.max_k is not None else max(args.min_k, 1)
    if not 0 <= args.min_k <= k_max:
        return _usage("need 0 <= --min-k <= --max-k")
    out = search(g, args.min_k, k_max, workers=args.workers, budget_nodes=args.budget_nodes,
                 budget_seconds=args.budget_seconds, symmetry=not args.no_symmetry)
    st = out.stats
    record = {"graph": g.label(), "status": out.status.value, "k": out.k, "k_max": k_max,
              "nodes": st.nodes, "systems": st.systems, "planarity_tests": st.planarity_tests,
              "seconds": round(st.seconds, 3), "screened": st.screened, "k_ceiling": st.k_ceiling}
    label = {Status.FOUND: f"Found(k={out.k})", Status.NONE_WITHIN: f"NoneWithin({k_max})",
             Status.BUDGET_EXCEEDED: "BudgetExceeded"}[out.status]
    lines = [f"graph: {g.label()}", f"status: {out.status.value}", f"outcome: {label}",
             f"nodes: {st.nodes}", f"systems: {st.systems}", f"planarity tests: {st.planarity_tests}",
             f"seconds: {st.seconds:.3f}"]
    if st.screened:
        lines.append(f"screened: {st.screened}")
    if out.found and args.emit:
        tcd.dump(out.certificate, args.emit)
        lines.append(f"certificate: {args.emit}")
        record["certificate"] = args.emit
    _emit(args, record, lines)
    return {Status.FOUND: EXIT_OK, Status.NONE_WITHIN: EXIT_NONE, Status.BUDGET_EXCEEDED: EXIT_BUDGET}[out.status]


def cmd_faces(args) -> int:
    try:
        profiles = sorted(face_profiles(args.d), reverse=True)
    except ValueError as exc:
        return _usage(str(exc))
    rendered = [" ".join(map(str, pr)) if pr else "all-triangles" for pr in profiles]
    _emit(args, {"d": args.d, "profiles": [list(pr) for pr in profiles]}, [f"d = {args.d}"] + rendered)
    return EXIT_OK


def cmd_perturb(args) -> int:
    dr = _load(args.file)
    report = validate(dr)
    if not report.accepted:
        print(f"error: {args.file} is not a valid semi-regular drawing", file=sys.stderr)
        return EXIT_REJECT
    out = perturb(dr)
    tcd.dump(out, args.output)
    _emit(args, {"double_crossings": out.k, "output": args.output},
          [f"triple crossings: {dr.k}", f"double crossings: {out.k}", f"written: {args.output}"])
    return EXIT_OK


def cmd_render(args) -> int:
    dr = _load(args.file)
    report = validate(dr, arity=_arity(dr))
    if not report.accepted:
        print(f"error: {args.file} does not validate", file=sys.stderr)
        return EXIT_REJECT
    Path(args.output).write_text(render_svg(dr), encoding="utf-8")
    _emit(args, {"output": args.output, "vertices": dr.base.p, "crossings": dr.k},
          [f"vertices: {dr.base.p}", f"crossing points: {dr.k}", f"written: {args.output}"])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    common.add_argument("--workers", type=int, default=argparse.SUPPRESS)
    common.add_argument("--budget-nodes", type=int, default=argparse.SUPPRESS)
    common.add_argument("--budget-seconds", type=float, default=argparse.SUPPRESS)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS)

    ap = argparse.ArgumentParser(prog="tricross", parents=[common], allow_abbrev=False,
                                 description="Semi-regular drawings of graphs and their certificates.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("oracle", parents=[common], help="known tcr of a complete multipartite graph")
    p.add_argument("parts", nargs="+", help="part sizes, or 'petersen'")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("validate", parents=[common], help="check a TCD certificate")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("search", parents=[common], help="bounded search for a semi-regular drawing")
    p.add_argument("parts", nargs="+", help="part sizes, or 'petersen'")
    p.add_argument("--min-k", type=int, default=0)
    p.add_argument("--max-k", type=int, default=None)
    p.add_argument("--emit", metavar="FILE")
    p.add_argument("--budget", type=float, dest="budget_seconds", default=argparse.SUPPRESS,
                   help="alias for --budget-seconds")
    p.add_argument("--no-symmetry", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("faces", parents=[common], help="allowed face profiles for deficiency d")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_faces)

    p = sub.add_parser("perturb", parents=[common], help="split triple points into double crossings")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_perturb)

    p = sub.add_parser("render", parents=[common], help="draw a certificate as SVG")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_render)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    for name, default in (("workers", 1), ("budget_nodes", None), ("budget_seconds", None), ("json", False),
                          ("verbose", False)):
        if not hasattr(args, name):
            setattr(args, name, default)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except _Fail as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
