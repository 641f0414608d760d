"""Planarized drawings: the plane graph obtained by turning every crossing
point of a drawing into a vertex, plus the bookkeeping that ties its segments
back to the original edges.

Planarized vertex ids are ``0 .. p-1`` for the original vertices and ``p + c``
for crossing ``c``.  A dart is named by a *token* ``(edge, target)``: the
segment of ``edge`` leaving the vertex towards planarized vertex ``target``.
Rotations list tokens counterclockwise.

Validation rules, checked in order:

R1  original vertex degrees and incident edges
R2  crossing degree ``2 * arity`` and transversal alternation
R3  the edges meeting at a crossing are distinct and pairwise non-adjacent
R4  two edges share at most one crossing
R5  every edge is a simple arc: no repeated crossing, segments form its path
R6  the planarized graph is simple
R7  the map is spherical (genus zero on each component, no split components)
R8  face sizes fit the deficiency profile (diagnostic only; implied by R6+R7)
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, replace
from functools import cached_property
from itertools import combinations
from typing import Mapping, Sequence

from .counting import deficiency, face_profiles, profile_of
from .graph import Graph
from .planar import CombinatorialMap, trace_faces

Token = tuple[int, int]
RULES = ("R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8")


class StructuralError(ValueError):
    """The drawing data does not describe a map at all (dangling references)."""


def _canonical_cycle(tokens: Sequence[Token]) -> tuple[Token, ...]:
    if not tokens:
        return ()
    i = min(range(len(tokens)), key=lambda j: tokens[j])
    return tuple(tokens[i:]) + tuple(tokens[:i])


@dataclass(frozen=True)
class PlanarizedDrawing:
    base: Graph
    crossings: tuple[tuple[int, ...], ...]
    paths: tuple[tuple[int, ...], ...]
    rotations: tuple[tuple[Token, ...], ...]
    meta: tuple[tuple[str, str], ...] = ()

    @classmethod
    def create(cls, base: Graph, crossings: Sequence[Sequence[int]], paths: Mapping[int, Sequence[int]] | Sequence[Sequence[int]],
               rotations: Mapping[int, Sequence[Token]] | Sequence[Sequence[Token]],
               meta: Mapping[str, str] | None = None) -> "PlanarizedDrawing":
        """Canonicalizing constructor: rotations start at their least token,
        crossing edge lists are sorted, meta is sorted by key."""
        if isinstance(paths, Mapping):
            paths = [paths.get(e, ()) for e in range(base.q)]
        n = base.p + len(crossings)
        if isinstance(rotations, Mapping):
            extra = [v for v in rotations if not 0 <= v < n]
            if extra:
                raise StructuralError(f"rotation given for unknown vertex {extra[0]}")
            rotations = [rotations.get(v, ()) for v in range(n)]
        rots = tuple(_canonical_cycle([tuple(t) for t in r]) for r in rotations)
        return cls(base, tuple(tuple(sorted(c)) for c in crossings), tuple(tuple(p) for p in paths), rots,
                   tuple(sorted((meta or {}).items())))

    @property
    def k(self) -> int:
        return len(self.crossings)

    @property
    def n_planarized(self) -> int:
        return self.base.p + self.k

    def crossing_vertex(self, c: int) -> int:
        return self.base.p + c

    def is_crossing_vertex(self, x: int) -> bool:
        return x >= self.base.p

    def with_meta(self, **meta: str) -> "PlanarizedDrawing":
        merged = dict(self.meta)
        merged.update(meta)
        return replace(self, meta=tuple(sorted(merged.items())))

    @cached_property
    def structure(self) -> "_Structure":
        return _build_structure(self)

    @property
    def map(self) -> CombinatorialMap:
        return self.structure.map


@dataclass(frozen=True)
class _Structure:
    map: CombinatorialMap
    seg_owner: tuple[int, ...]


def _build_structure(dr: PlanarizedDrawing) -> _Structure:
    g = dr.base
    n = dr.n_planarized
    if len(dr.paths) != g.q:
        raise StructuralError(f"expected {g.q} edge paths, got {len(dr.paths)}")
    for c, edges in enumerate(dr.crossings):
        for e in edges:
            if not 0 <= e < g.q:
                raise StructuralError(f"crossing {c} names unknown edge {e}")
    for e, path in enumerate(dr.paths):
        for c in path:
            if not 0 <= c < dr.k:
                raise StructuralError(f"path of edge {e} names unknown crossing {c}")
    if len(dr.rotations) > n:
        raise StructuralError("rotations given for vertices beyond the crossing count")
    rotations = list(dr.rotations) + [()] * (n - len(dr.rotations))
    for x, rot in enumerate(rotations):
        for e, y in rot:
            if not 0 <= e < g.q:
                raise StructuralError(f"vertex {x}: token names unknown edge {e}")
            if not 0 <= y < n:
                raise StructuralError(f"vertex {x}: token names unknown vertex {y}")

    segments: list[tuple[int, int]] = []
    owner: list[int] = []
    dart_of: dict[tuple[int, int, int, int], int] = {}
    rot_darts: dict[int, list[int]] = {}
    for x, rot in enumerate(rotations):
        counts = Counter(rot)
        darts = []
        seen_loop: Counter = Counter()
        for e, y in rot:
            if y == x:
                if counts[(e, y)] != 2:
                    raise StructuralError(f"vertex {x}: loop token {e}.{y} must appear exactly twice")
                key = (e, x, x, seen_loop[(e, y)])
                seen_loop[(e, y)] += 1
                if key[3] == 0:
                    dart_of[key] = 2 * len(segments)
                    segments.append((x, x))
                    owner.append(e)
                    darts.append(dart_of[key])
                else:
                    darts.append(dart_of[(e, x, x, 0)] + 1)
                continue
            if counts[(e, y)] > 1:
                raise StructuralError(f"vertex {x}: token {e}->{y} repeated")
            back = sum(1 for t in rotations[y] if t == (e, x))
            if back != 1:
                raise StructuralError(f"dangling dart: vertex {x} has {e}->{y} but vertex {y} has no {e}->{x}")
            a, b = min(x, y), max(x, y)
            key = (e, a, b, 0)
            if key not in dart_of:
                dart_of[key] = 2 * len(segments)
                segments.append((a, b))
                owner.append(e)
            darts.append(dart_of[key] + (0 if x == a else 1))
        rot_darts[x] = darts
    m = CombinatorialMap.from_rotations(n, segments, rot_darts)
    return _Structure(m, tuple(owner))


@dataclass(frozen=True)
class FaceMultiset:
    counts: tuple[tuple[int, int], ...]

    @classmethod
    def from_sizes(cls, sizes: Sequence[int]) -> "FaceMultiset":
        return cls(tuple(sorted(Counter(sizes).items())))

    @property
    def total(self) -> int:
        return sum(c for _, c in self.counts)

    def r(self, i: int) -> int:
        return dict(self.counts).get(i, 0)

    @property
    def sizes(self) -> list[int]:
        return [s for s, c in self.counts for _ in range(c)]

    @property
    def profile(self) -> tuple[int, ...]:
        return profile_of(self.sizes)

    def __str__(self) -> str:
        return " ".join(f"r{s}={c}" for s, c in self.counts) or "none"


@dataclass(frozen=True)
class Violation:
    rule: str
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]
    diagnostics: tuple[Violation, ...]
    d: int
    faces: FaceMultiset
    k: int
    n_vertices: int
    n_segments: int

    @property
    def accepted(self) -> bool:
        return not self.violations

    @property
    def verdict(self) -> str:
        return "accept" if self.accepted else "reject"

    def rules_violated(self) -> set[str]:
        return {v.rule for v in self.violations}


@dataclass(frozen=True)
class FaceReport:
    d: int
    faces: FaceMultiset
    profile_match: bool | None


def _faces(m: CombinatorialMap) -> FaceMultiset:
    return FaceMultiset.from_sizes([len(f) for f in trace_faces(m)])


def face_report(dr: PlanarizedDrawing) -> FaceReport:
    """Deficiency of the original graph, face sizes of the planarized map, and
    whether they fit the allowed profile (None when ``d`` is outside 0..3)."""
    d = deficiency(dr.base.p, dr.base.q)
    faces = _faces(dr.map)
    match = faces.profile in face_profiles(d) if 0 <= d <= 3 else None
    return FaceReport(d, faces, match)


def validate(dr: PlanarizedDrawing, arity: int = 3) -> ValidationReport:
    """Check a planarized drawing.  ``arity`` is 3 for semi-regular drawings
    and 2 for regular ones.  Raises :class:`StructuralError` when the data
    cannot be read as a map."""
    st = dr.structure
    m, owner = st.map, st.seg_owner
    g = dr.base
    p = g.p
    n = dr.n_planarized
    bad: list[Violation] = []
    rots = list(dr.rotations) + [()] * (n - len(dr.rotations))

    def flag(rule, detail):
        bad.append(Violation(rule, detail))

    # R1
    for v in range(p):
        got = sorted(e for e, _ in rots[v])
        want = sorted(g.incident[v])
        if got != want:
            flag("R1", f"vertex {v}: darts of edges {got}, expected {want}")

    # R2
    for c, edges in enumerate(dr.crossings):
        x = p + c
        rot = rots[x]
        if len(edges) != arity:
            flag("R2", f"crossing {c} joins {len(edges)} edges, expected {arity}")
        if len(rot) != 2 * arity:
            flag("R2", f"crossing {c} has degree {len(rot)}, expected {2 * arity}")
            continue
        if Counter(e for e, _ in rot) != Counter({e: 2 for e in edges}):
            flag("R2", f"crossing {c}: darts do not match its edges {list(edges)}")
            continue
        lead = [rot[i][0] for i in range(arity)]
        if len(set(lead)) != arity or any(rot[i][0] != rot[i + arity][0] for i in range(arity)):
            flag("R2", f"crossing {c}: edges do not cross transversally ({[e for e, _ in rot]})")

    # R3
    for c, edges in enumerate(dr.crossings):
        if len(set(edges)) != len(edges):
            flag("R3", f"crossing {c} repeats an edge")
        for e, f in combinations(sorted(set(edges)), 2):
            if set(g.edges[e]) & set(g.edges[f]):
                flag("R3", f"crossing {c}: edges {e} and {f} share an endpoint")

    # R4
    pairs = Counter(pr for edges in dr.crossings for pr in combinations(sorted(set(edges)), 2))
    for (e, f), cnt in sorted(pairs.items()):
        if cnt > 1:
            flag("R4", f"edges {e} and {f} cross {cnt} times")

    # R5
    member = {(e, c) for c, edges in enumerate(dr.crossings) for e in edges}
    segs_of: dict[int, Counter] = {e: Counter() for e in range(g.q)}
    for s, e in enumerate(owner):
        segs_of[e][tuple(sorted(m.segments[s]))] += 1
    for e, path in enumerate(dr.paths):
        if len(set(path)) != len(path):
            flag("R5", f"edge {e} passes a crossing twice: {list(path)}")
        on_path = {(e, c) for c in path}
        listed = {(e, c) for (f, c) in member if f == e}
        if on_path != listed:
            flag("R5", f"edge {e}: path {list(path)} disagrees with the crossings naming it")
        u, v = g.edges[e]
        walk = [u] + [p + c for c in path] + [v]
        want = Counter(tuple(sorted(w)) for w in zip(walk, walk[1:]))
        if segs_of[e] != want:
            flag("R5", f"edge {e}: segments do not form the path {walk}")

    # R6
    for x in range(n):
        targets = Counter(y for _, y in rots[x])
        if x in targets:
            flag("R6", f"vertex {x} carries a loop")
        multi = sorted(y for y, c in targets.items() if c > 1 and y != x)
        if multi:
            flag("R6", f"vertex {x} has parallel segments to {multi}")

    # R7
    faces = _faces(m)
    comps = m.components()
    # crossings may join components of the base graph, never split them
    if comps > g.components():
        flag("R7", f"planarized map has {comps} components, graph has {g.components()}")
    isolated = n - len(m.vertices())
    if n - len(m.segments) + faces.total + isolated != 2 * comps:
        flag("R7", f"not spherical: V={n} E={len(m.segments)} F={faces.total}")

    # R8
    diag: list[Violation] = []
    d = deficiency(g.p, g.q)
    simple = not any(v.rule == "R6" for v in bad)
    if 0 <= d <= 3 and simple and comps == 1 and n >= 3 and faces.profile not in face_profiles(d):
        diag.append(Violation("R8", f"face profile {faces.profile} not allowed for d={d}"))
    return ValidationReport(tuple(bad), tuple(diag), d, faces, dr.k, n, len(m.segments))


def validate_regular(dr: PlanarizedDrawing) -> ValidationReport:
    return validate(dr, arity=2)


def drawing_from_neighbor_rotations(base: Graph, crossings: Sequence[Sequence[int]], paths: Sequence[Sequence[int]],
                                    rotation: Mapping[int, Sequence[int]], meta=None) -> PlanarizedDrawing:
    """Turn a rotation system of the (simple) planarized graph, given as
    neighbor lists, into a drawing."""
    p = base.p
    owner: dict[tuple[int, int], int] = {}
    for e, path in enumerate(paths):
        u, v = base.edges[e]
        walk = [u] + [p + c for c in path] + [v]
        for a, b in zip(walk, walk[1:]):
            owner[(a, b)] = owner[(b, a)] = e
    rots = {x: [(owner[(x, y)], y) for y in nbrs] for x, nbrs in rotation.items()}
    return PlanarizedDrawing.create(base, crossings, paths, rots, meta)


def planarized_edges(base: Graph, paths: Sequence[Sequence[int]]) -> list[tuple[int, int]]:
    p = base.p
    out = []
    for e, path in enumerate(paths):
        u, v = base.edges[e]
        walk = [u] + [p + c for c in path] + [v]
        out.extend(zip(walk, walk[1:]))
    return out


def perturb(dr: PlanarizedDrawing) -> PlanarizedDrawing:
    """Split every triple point into three double crossings around a small
    triangular face.

    With the rotation at a crossing read as ``a1 a2 a3 b1 b2 b3`` (edges
    ``e1 e2 e3`` each appearing twice, opposite), edge ``e3`` is pushed into
    the wedge between ``a1`` and ``a2``: ``e1`` and ``e2`` still meet at P,
    ``e3`` crosses ``e1`` at Q and ``e2`` at R.  Crossing ``c`` becomes
    ``3c`` (P), ``3c+1`` (Q), ``3c+2`` (R).
    """
    report = validate(dr)
    if not report.accepted:
        raise ValueError(f"cannot perturb an invalid drawing: {report.violations[0]}")
    if dr.k == 0:
        return dr.with_meta(perturbed="yes")
    g = dr.base
    p = g.p
    port: dict[tuple[int, int, int], int] = {}  # (old crossing vertex, edge, old neighbor) -> new crossing id
    local: dict[int, list[tuple[int, tuple[str, int]]]] = {}
    crossings = []
    for c in range(dr.k):
        x = p + c
        (e1, A1), (e2, A2), (e3, A3), (_, B1), (_, B2), (_, B3) = dr.rotations[x]
        P, Q, R = 3 * c, 3 * c + 1, 3 * c + 2
        port.update({(x, e1, A1): Q, (x, e1, B1): P, (x, e2, A2): R,
                     (x, e2, B2): P, (x, e3, A3): R, (x, e3, B3): Q})
        new, old = (lambda j: ("new", j)), (lambda y: ("old", y))
        local[P] = [(e1, new(Q)), (e2, new(R)), (e1, old(B1)), (e2, old(B2))]
        local[Q] = [(e1, old(A1)), (e3, new(R)), (e1, new(P)), (e3, old(B3))]
        local[R] = [(e2, old(A2)), (e3, old(A3)), (e2, new(P)), (e3, new(Q))]
        crossings += [(e1, e2), (e1, e3), (e2, e3)]

    def resolve(source: int, e: int, target: int) -> int:
        return p + port[(target, e, source)] if target >= p else target

    rotations: dict[int, list[Token]] = {v: [(e, resolve(v, e, y)) for e, y in dr.rotations[v]] for v in range(p)}
    for nc, tmpl in local.items():
        x = p + nc // 3
        rotations[p + nc] = [(e, p + ref if kind == "new" else resolve(x, e, ref)) for e, (kind, ref) in tmpl]
    paths = []
    for e, path in enumerate(dr.paths):
        u, v = g.edges[e]
        walk = [u] + [p + c for c in path] + [v]
        paths.append([port[(walk[i], e, walk[i + off])] for i in range(1, len(walk) - 1) for off in (-1, 1)])
    out = PlanarizedDrawing.create(g, crossings, paths, rotations, dict(dr.meta) | {"perturbed": "yes"})
    check = validate(out, arity=2)
    assert check.accepted, check.violations
    return out
