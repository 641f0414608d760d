"""Combinatorial maps on the sphere.

A map over ``m`` segments has darts ``0 .. 2m-1``; segment ``s`` owns darts
``2s`` (at its first endpoint) and ``2s+1`` (at its second endpoint), so the
edge involution is ``d ^ 1``.  ``sigma[d]`` is the next dart counterclockwise
around the vertex of ``d``.  Faces are the orbits of ``d -> sigma[d ^ 1]``,
which walks every face clockwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterator, Mapping, Protocol, Sequence

import networkx as nx


class MapError(ValueError):
    pass


class AbstractGraph(Protocol):
    n_vertices: int
    edges: Sequence[tuple[int, int]]


@dataclass(frozen=True)
class SimpleGraph:
    n_vertices: int
    edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class CombinatorialMap:
    n_vertices: int
    segments: tuple[tuple[int, int], ...]
    sigma: tuple[int, ...]

    def __post_init__(self):
        nd = 2 * len(self.segments)
        if len(self.sigma) != nd or sorted(self.sigma) != list(range(nd)):
            raise MapError("sigma is not a permutation of the darts")
        for d in range(nd):
            if self.vertex_of(self.sigma[d]) != self.vertex_of(d):
                raise MapError(f"sigma moves dart {d} off its vertex")

    @property
    def n_darts(self) -> int:
        return 2 * len(self.segments)

    def vertex_of(self, d: int) -> int:
        return self.segments[d >> 1][d & 1]

    def head_of(self, d: int) -> int:
        return self.segments[d >> 1][1 - (d & 1)]

    @classmethod
    def from_rotations(cls, n_vertices: int, segments: Sequence[tuple[int, int]],
                       rotation: Mapping[int, Sequence[int]]) -> "CombinatorialMap":
        """Build a map from per-vertex cyclic dart lists (counterclockwise)."""
        segments = tuple(tuple(s) for s in segments)
        sigma = [-1] * (2 * len(segments))
        for v, darts in rotation.items():
            for i, d in enumerate(darts):
                if not 0 <= d < len(sigma):
                    raise MapError(f"dart {d} out of range")
                if segments[d >> 1][d & 1] != v:
                    raise MapError(f"dart {d} does not belong to vertex {v}")
                if sigma[d] != -1:
                    raise MapError(f"dart {d} listed twice")
                sigma[d] = darts[(i + 1) % len(darts)]
        if -1 in sigma:
            raise MapError(f"dart {sigma.index(-1)} missing from every rotation")
        return cls(n_vertices, segments, tuple(sigma))

    @classmethod
    def from_neighbor_rotations(cls, n_vertices: int, edges: Sequence[tuple[int, int]],
                                rotation: Mapping[int, Sequence[int]]) -> "CombinatorialMap":
        """Same as :meth:`from_rotations` for simple graphs, with darts named by
        their far endpoint."""
        dart_at: dict[tuple[int, int], int] = {}
        for s, (u, v) in enumerate(edges):
            dart_at[(u, v)] = 2 * s
            dart_at[(v, u)] = 2 * s + 1
        try:
            rot = {v: [dart_at[(v, w)] for w in nbrs] for v, nbrs in rotation.items()}
        except KeyError as exc:
            raise MapError(f"no segment {exc.args[0]}") from None
        return cls.from_rotations(n_vertices, edges, rot)

    def rotation(self, v: int) -> list[int]:
        """Darts at ``v`` in counterclockwise order, starting from the smallest."""
        darts = [d for d in range(self.n_darts) if self.vertex_of(d) == v]
        if not darts:
            return []
        out = [min(darts)]
        while len(out) < len(darts):
            out.append(self.sigma[out[-1]])
        return out

    def neighbor_rotation(self, v: int) -> list[int]:
        return [self.head_of(d) for d in self.rotation(v)]

    def reflected(self) -> "CombinatorialMap":
        inv = [0] * self.n_darts
        for d, s in enumerate(self.sigma):
            inv[s] = d
        return CombinatorialMap(self.n_vertices, self.segments, tuple(inv))

    def vertices(self) -> set[int]:
        return {v for s in self.segments for v in s}

    def components(self) -> int:
        """Connected components, counting vertices without darts."""
        parent = list(range(self.n_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.segments:
            parent[find(u)] = find(v)
        return len({find(v) for v in range(self.n_vertices)})


def trace_faces(m: CombinatorialMap) -> list[list[int]]:
    seen = [False] * m.n_darts
    faces = []
    for start in range(m.n_darts):
        if seen[start]:
            continue
        face, d = [], start
        while not seen[d]:
            seen[d] = True
            face.append(d)
            d = m.sigma[d ^ 1]
        if d != start:
            raise MapError("face permutation is not a permutation")
        faces.append(face)
    return faces


def face_count(m: CombinatorialMap) -> int:
    return len(trace_faces(m)) if m.n_darts else (1 if m.n_vertices else 0)


def euler_genus_zero(m: CombinatorialMap) -> bool:
    if m.components() != 1:
        return False
    return m.n_vertices - len(m.segments) + face_count(m) == 2


def is_planar(g: AbstractGraph) -> bool:
    G = nx.Graph()
    G.add_nodes_from(range(g.n_vertices))
    G.add_edges_from(g.edges)
    return nx.check_planarity(G)[0]


def enumerate_rotation_systems(n_vertices: int, edges: Sequence[tuple[int, int]],
                               fixed: Mapping[int, Sequence[int]] | None = None) -> Iterator[CombinatorialMap]:
    """Every rotation system of the graph, as maps; ``fixed`` pins vertex rotations
    (given as neighbor lists).  Exponential: small graphs only."""
    fixed = fixed or {}
    nbrs: list[list[int]] = [[] for _ in range(n_vertices)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    choices = []
    for v in range(n_vertices):
        if v in fixed:
            choices.append([list(fixed[v])])
        elif len(nbrs[v]) <= 2:
            choices.append([nbrs[v]])
        else:
            first, rest = nbrs[v][0], nbrs[v][1:]
            choices.append([[first, *p] for p in permutations(rest)])
    for combo in product(*choices):
        yield CombinatorialMap.from_neighbor_rotations(n_vertices, edges, dict(enumerate(combo)))


def planar_by_enumeration(g: AbstractGraph) -> bool:
    """Brute-force planarity: some rotation system satisfies Euler's formula on
    every component."""
    edges = list(g.edges)
    for m in enumerate_rotation_systems(g.n_vertices, edges):
        if _genus_zero_per_component(m):
            return True
    return False


def _genus_zero_per_component(m: CombinatorialMap) -> bool:
    comps = m.components()
    faces = len(trace_faces(m))
    isolated = m.n_vertices - len(m.vertices())
    # each nonempty component contributes V - E + F = 2 when spherical
    return m.n_vertices - len(m.segments) + faces + isolated == 2 * comps


def cyclic_equal(a: Sequence[int], b: Sequence[int]) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    try:
        i = list(b).index(a[0])
    except ValueError:
        return False
    return list(a) == list(b[i:]) + list(b[:i])


def gadget_embedding(n_vertices: int, edges: Sequence[tuple[int, int]],
                     fixed: Mapping[int, Sequence[int]]) -> dict[int, list[int]] | None:
    """Planar embedding in which each vertex of ``fixed`` has its given cyclic
    neighbor order up to reflection *of that vertex alone*.

    Each fixed vertex of degree >= 3 is replaced by a wheel whose rim carries
    its neighbors in the required order; wheels are 3-connected, so the rim
    order survives in every embedding.  Returns neighbor rotations of the
    original graph (a consistent orientation), or None if no such embedding.
    """
    G = nx.Graph()
    G.add_nodes_from(v for v in range(n_vertices) if v not in fixed or len(fixed[v]) < 3)

    def port(v, w):
        if v in fixed and len(fixed[v]) >= 3:
            return ("r", v, w)
        return v

    for v, order in fixed.items():
        if len(order) < 3:
            continue
        hub = ("h", v)
        for i, w in enumerate(order):
            G.add_edge(hub, ("r", v, w))
            G.add_edge(("r", v, w), ("r", v, order[(i + 1) % len(order)]))
    for u, v in edges:
        G.add_edge(port(u, v), port(v, u))
    ok, emb = nx.check_planarity(G)
    if not ok:
        return None
    rot: dict[int, list[int]] = {}
    for v in range(n_vertices):
        if v in fixed and len(fixed[v]) >= 3:
            rot[v] = [node[2] for node in emb.neighbors_cw_order(("h", v))]
        else:
            rot[v] = [node if isinstance(node, int) else node[1] for node in emb.neighbors_cw_order(v)]
    return rot


def embed_with_constraints(g: AbstractGraph, fixed_rotations: Mapping[int, Sequence[int]] | None = None,
                           independent_reflection: bool = False) -> CombinatorialMap | None:
    """Genus-zero map of ``g`` honouring ``fixed_rotations`` (neighbor lists).

    By default all fixed rotations hold simultaneously up to one global
    reflection.  With ``independent_reflection`` each fixed vertex may be
    mirrored on its own.  Exact in both modes.
    """
    fixed = {v: list(r) for v, r in (fixed_rotations or {}).items()}
    edges = list(g.edges)
    n = g.n_vertices
    for v, order in fixed.items():
        nb = sorted(w for e in edges for w in e if v in e and w != v)
        if sorted(order) != nb:
            raise ValueError(f"fixed rotation at {v} is not a permutation of its neighbors")
    rot = gadget_embedding(n, edges, fixed)
    if rot is None:
        return None
    if not independent_reflection:
        flips = {not cyclic_equal(rot[v], order) for v, order in fixed.items() if len(order) >= 3}
        if flips == {True}:
            rot = {v: list(reversed(r)) for v, r in rot.items()}
        elif len(flips) > 1:
            rot = _backtrack_embedding(n, edges, fixed)
            if rot is None:
                return None
    m = CombinatorialMap.from_neighbor_rotations(n, edges, rot)
    assert _genus_zero_per_component(m), "gadget embedding lost planarity"
    return m


def _backtrack_embedding(n_vertices, edges, fixed) -> dict[int, list[int]] | None:
    """Exact search over free rotations for an embedding where every fixed
    rotation holds with one common orientation."""
    for orient in (1, -1):
        pinned = {v: (list(o) if orient == 1 else list(reversed(o))) for v, o in fixed.items()}
        for m in enumerate_rotation_systems(n_vertices, edges, pinned):
            if _genus_zero_per_component(m):
                return {v: m.neighbor_rotation(v) for v in range(n_vertices)}
    return None
