"""Complete multipartite graphs and the edge-independence predicates used by
crossing triples.

Vertices are numbered part by part in (sorted) part order; edges are numbered
in lexicographic order of their endpoint pairs ``(u, v)`` with ``u < v``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterator, Sequence

EdgeTriple = tuple[int, int, int]


@dataclass(frozen=True)
class PartitionSpec:
    """Sizes of the partite sets, stored non-increasing.

    ``permutation[i]`` is the position in the caller's input of the part that
    ended up at index ``i`` after sorting.
    """

    parts: tuple[int, ...]
    permutation: tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if len(self.parts) < 1:
            raise ValueError("a partition needs at least one part")
        if any(int(n) != n or n < 1 for n in self.parts):
            raise ValueError(f"part sizes must be positive integers: {self.parts}")
        order = sorted(range(len(self.parts)), key=lambda i: (-self.parts[i], i))
        object.__setattr__(self, "parts", tuple(int(self.parts[i]) for i in order))
        if not self.permutation:
            object.__setattr__(self, "permutation", tuple(order))

    @classmethod
    def of(cls, *sizes: int) -> "PartitionSpec":
        return cls(tuple(sizes))

    @property
    def t(self) -> int:
        return len(self.parts)

    @property
    def p(self) -> int:
        return sum(self.parts)

    @property
    def q(self) -> int:
        total = self.p
        return (total * total - sum(n * n for n in self.parts)) // 2

    def label(self) -> str:
        return "K_{" + ",".join(map(str, self.parts)) + "}"

    def __str__(self) -> str:
        return self.label()


@dataclass(frozen=True)
class Graph:
    """A simple graph with stable edge ids.

    ``part_of`` is set for complete multipartite graphs (``spec`` not None)
    and is all zeros for explicit edge-list graphs such as the Petersen graph.
    """

    n_vertices: int
    edges: tuple[tuple[int, int], ...]
    part_of: tuple[int, ...]
    spec: PartitionSpec | None = None
    name: str | None = None

    @classmethod
    def from_edges(cls, n_vertices: int, edges: Sequence[tuple[int, int]], name: str | None = None) -> "Graph":
        norm = sorted({(min(u, v), max(u, v)) for u, v in edges})
        if len(norm) != len(edges):
            raise ValueError("duplicate edges")
        for u, v in norm:
            if u == v or not (0 <= u < n_vertices and 0 <= v < n_vertices):
                raise ValueError(f"bad edge {(u, v)}")
        return cls(n_vertices, tuple(norm), (0,) * n_vertices, None, name)

    @property
    def p(self) -> int:
        return self.n_vertices

    @property
    def q(self) -> int:
        return len(self.edges)

    def label(self) -> str:
        if self.spec is not None:
            return self.spec.label()
        return self.name or f"graph({self.n_vertices},{len(self.edges)})"

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.n_vertices)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    def degree(self, v: int) -> int:
        return len(self.incident[v])

    def edge_id(self, u: int, v: int) -> int:
        return self.edge_index[(min(u, v), max(u, v))]

    def other_end(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        return b if v == a else a

    def components(self) -> int:
        parent = list(range(self.n_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            parent[find(u)] = find(v)
        return len({find(v) for v in range(self.n_vertices)})

    def part_ranges(self) -> list[range]:
        if self.spec is None:
            return [range(self.n_vertices)]
        out, start = [], 0
        for n in self.spec.parts:
            out.append(range(start, start + n))
            start += n
        return out


def build_complete_multipartite(spec: PartitionSpec | Sequence[int]) -> Graph:
    if not isinstance(spec, PartitionSpec):
        spec = PartitionSpec(tuple(spec))
    part_of = [i for i, n in enumerate(spec.parts) for _ in range(n)]
    p = len(part_of)
    edges = tuple((u, v) for u in range(p) for v in range(u + 1, p) if part_of[u] != part_of[v])
    return Graph(p, edges, tuple(part_of), spec, None)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner, name="petersen")


def named_graph(name: str) -> Graph:
    if name.lower() == "petersen":
        return petersen_graph()
    raise KeyError(f"unknown named graph {name!r}")


def edges_adjacent(g: Graph, e: int, f: int) -> bool:
    """True when the two edges share an endpoint; an edge is adjacent to itself."""
    m = len(g.edges)
    if not (0 <= e < m and 0 <= f < m):
        raise IndexError(f"edge id out of range: {e}, {f}")
    return bool(set(g.edges[e]) & set(g.edges[f]))


def independent_pairs(g: Graph) -> int:
    """Number of unordered pairs of edges without a common endpoint."""
    return sum(1 for e, f in combinations(range(len(g.edges)), 2) if not set(g.edges[e]) & set(g.edges[f]))


def independent_triples(g: Graph) -> Iterator[EdgeTriple]:
    """Yield every 3-set of pairwise disjoint edges, sorted by edge-id triple."""
    edges = g.edges
    m = len(edges)
    for a in range(m):
        ua, va = edges[a]
        for b in range(a + 1, m):
            ub, vb = edges[b]
            if ub in (ua, va) or vb in (ua, va):
                continue
            used = {ua, va, ub, vb}
            for c in range(b + 1, m):
                uc, vc = edges[c]
                if uc not in used and vc not in used:
                    yield (a, b, c)
