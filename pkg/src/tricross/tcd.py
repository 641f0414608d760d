"""TCD: a line-oriented text format for planarized drawings.

::

    tcd 1
    meta found_k 1
    graph parts 3 3
    cross 0 0 4 8
    path 0 0
    path 4 0
    path 8 0
    rot v0 0.x0 1.4 2.5
    rot v1 3.3 4.x0 5.5
    rot v2 6.3 7.4 8.x0
    rot v3 0.x0 3.1 6.2
    rot v4 1.0 4.x0 7.2
    rot v5 2.0 5.1 8.x0
    rot x0 0.0 8.5 4.1 0.3 8.2 4.4
    end

``graph`` is either ``parts n1 n2 ...`` or ``edges <name> <vertex count>``
followed by ``edge <id> <u> <v>`` lines.  ``cross <c> <e>...`` names the edges
through crossing ``c``; ``path <e> <c>...`` lists the crossings along edge
``e`` from its lower endpoint (edges without a ``path`` line are uncrossed).
``rot`` gives the counterclockwise rotation at an original vertex ``v<i>`` or
a crossing ``x<c>``; its tokens ``<e>.<v>`` and ``<e>.x<c>`` name the segment
of edge ``e`` towards vertex ``v`` or crossing ``c``.  Lines starting with
``#`` are comments.  The closing ``end`` line guards against truncation.

Part sizes are normalized to non-increasing order and vertex ids refer to
that order.  :func:`serialize` is canonical: parsing and re-serializing a
serialized document reproduces it byte for byte.
"""

from __future__ import annotations

from pathlib import Path

from .drawing import PlanarizedDrawing
from .graph import Graph, PartitionSpec, build_complete_multipartite

VERSION = "1"


class TcdError(ValueError):
    pass


def _vertex_ref(tok: str, p: int) -> int:
    if tok.startswith("x"):
        return p + int(tok[1:])
    if tok.startswith("v"):
        return int(tok[1:])
    raise TcdError(f"bad vertex reference {tok!r}")


def _token(tok: str, p: int) -> tuple[int, int]:
    e, sep, target = tok.partition(".")
    if not sep:
        raise TcdError(f"bad dart token {tok!r}")
    try:
        edge = int(e)
        return edge, (p + int(target[1:]) if target.startswith("x") else int(target))
    except ValueError:
        raise TcdError(f"bad dart token {tok!r}") from None


def _fmt_token(tok: tuple[int, int], p: int) -> str:
    e, y = tok
    return f"{e}.x{y - p}" if y >= p else f"{e}.{y}"


def parse(text: str) -> PlanarizedDrawing:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [(i + 1, ln) for i, ln in enumerate(lines) if ln and not ln.startswith("#")]
    if not lines or lines[0][1].split() != ["tcd", VERSION]:
        raise TcdError(f"missing 'tcd {VERSION}' header")
    if lines[-1][1] != "end":
        raise TcdError("document is truncated (no closing 'end')")
    graph: Graph | None = None
    meta: dict[str, str] = {}
    crossings: dict[int, list[int]] = {}
    paths: dict[int, list[int]] = {}
    rot_lines: dict[str, list[str]] = {}
    explicit_edges: dict[int, tuple[int, int]] = {}
    pending_named: tuple[str, int] | None = None
    for lineno, ln in lines[1:-1]:
        head, *rest = ln.split()
        try:
            if head == "meta":
                key, _, value = ln[len("meta"):].strip().partition(" ")
                meta[key] = value.strip()
            elif head == "graph":
                if graph is not None or pending_named is not None:
                    raise TcdError("graph declared twice")
                if rest[0] == "parts":
                    graph = build_complete_multipartite(PartitionSpec(tuple(int(x) for x in rest[1:])))
                elif rest[0] == "edges":
                    pending_named = (rest[1], int(rest[2]))
                else:
                    raise TcdError(f"unknown graph kind {rest[0]!r}")
            elif head == "edge":
                e, u, v = (int(x) for x in rest)
                explicit_edges[e] = (u, v)
            elif head == "cross":
                c = int(rest[0])
                if c in crossings:
                    raise TcdError(f"crossing {c} declared twice")
                crossings[c] = [int(x) for x in rest[1:]]
            elif head == "path":
                e = int(rest[0])
                if e in paths:
                    raise TcdError(f"path of edge {e} declared twice")
                paths[e] = [int(x) for x in rest[1:]]
            elif head == "rot":
                if rest[0] in rot_lines:
                    raise TcdError(f"rotation of {rest[0]} declared twice")
                rot_lines[rest[0]] = rest[1:]
            else:
                raise TcdError(f"unknown declaration {head!r}")
        except (ValueError, IndexError) as exc:
            if isinstance(exc, TcdError):
                raise TcdError(f"line {lineno}: {exc}") from None
            raise TcdError(f"line {lineno}: malformed {head!r} declaration") from None
    if pending_named is not None:
        name, n = pending_named
        if sorted(explicit_edges) != list(range(len(explicit_edges))):
            raise TcdError("edge ids must be 0..m-1")
        try:
            graph = Graph.from_edges(n, [explicit_edges[i] for i in range(len(explicit_edges))], name=name)
        except ValueError as exc:
            raise TcdError(str(exc)) from None
        if list(graph.edges) != [explicit_edges[i] for i in range(len(explicit_edges))]:
            raise TcdError("edges must be listed with u < v in lexicographic order")
    elif explicit_edges:
        raise TcdError("edge lines are only allowed with 'graph edges'")
    if graph is None:
        raise TcdError("no graph declaration")
    k = len(crossings)
    if sorted(crossings) != list(range(k)):
        raise TcdError("crossing ids must be 0..k-1")
    p = graph.p
    rotations: dict[int, list[tuple[int, int]]] = {}
    for ref, toks in rot_lines.items():
        v = _vertex_ref(ref, p)
        if not 0 <= v < p + k or (ref.startswith("v") and v >= p):
            raise TcdError(f"rotation for unknown vertex {ref}")
        rotations[v] = [_token(t, p) for t in toks]
    for e in paths:
        if not 0 <= e < graph.q:
            raise TcdError(f"path for unknown edge {e}")
    return PlanarizedDrawing.create(graph, [crossings[c] for c in range(k)],
                                    [paths.get(e, []) for e in range(graph.q)], rotations, meta)


def serialize(dr: PlanarizedDrawing) -> str:
    g = dr.base
    p = g.p
    out = [f"tcd {VERSION}"]
    out += [f"meta {k} {v}".rstrip() for k, v in dr.meta]
    if g.spec is not None:
        out.append("graph parts " + " ".join(map(str, g.spec.parts)))
    else:
        out.append(f"graph edges {g.name or 'graph'} {g.p}")
        out += [f"edge {i} {u} {v}" for i, (u, v) in enumerate(g.edges)]
    out += [f"cross {c} " + " ".join(map(str, edges)) for c, edges in enumerate(dr.crossings)]
    out += [f"path {e} " + " ".join(map(str, path)) for e, path in enumerate(dr.paths) if path]
    for x, rot in enumerate(dr.rotations):
        ref = f"x{x - p}" if x >= p else f"v{x}"
        out.append(f"rot {ref} " + " ".join(_fmt_token(t, p) for t in rot) if rot else f"rot {ref}")
    out.append("end")
    return "\n".join(out) + "\n"


def load(path: str | Path) -> PlanarizedDrawing:
    return parse(Path(path).read_text(encoding="utf-8"))


def dump(dr: PlanarizedDrawing, path: str | Path) -> None:
    Path(path).write_text(serialize(dr), encoding="utf-8")
