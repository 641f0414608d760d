"""Bounded exhaustive search for semi-regular drawings.

A candidate drawing is described by a crossing system: which edge triples
meet at triple points, the order of the crossings along every edge, and the
local picture at each triple point.  A system is realizable exactly when its
planarized graph has a plane embedding whose rotation at every crossing
vertex alternates the three edges with each edge's two darts opposite.

Each crossing admits 8 such rotations, forming 4 classes under reflection.
With the crossing's edges ``e1 < e2 < e3`` and each edge's darts split into
``back`` (towards the edge's lower endpoint) and ``fwd``, class ``i`` is the
rotation ``e1.back, e2.s2, e3.s3, e1.fwd, e2.s2', e3.s3'`` where bit 0 of
``i`` picks ``s2`` and bit 1 picks ``s3`` (0 = back, 1 = fwd).  A class is
enforced by a wheel gadget, so every embedding test is a linear-time planarity
test.

Triple sets are generated orderly: a set is kept only if it is the
lexicographically least image of itself under the graph's automorphisms, and
only kept sets are extended.  Least-image sets are closed under dropping
their largest triple, so every orbit is visited exactly once.
"""

from __future__ import annotations

import logging
import time
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from itertools import combinations, permutations, product
from typing import Iterator, Sequence

import networkx as nx
import numpy as np

from .counting import graph_excess
from .drawing import PlanarizedDrawing, drawing_from_neighbor_rotations, planarized_edges, validate
from .graph import EdgeTriple, Graph, independent_pairs, independent_triples
from .planar import cyclic_equal, embed_with_constraints, gadget_embedding

log = logging.getLogger(__name__)

N_CLASSES = 4


@dataclass(frozen=True)
class CrossingSystem:
    """Triples meeting at the crossings (crossing ``c`` is ``triples[c]``).

    ``edge_orders[e]`` lists the crossings met by edge ``e`` walking from its
    lower endpoint; ``interleavings[c]`` is the rotation class at crossing
    ``c``.  Either may be None, meaning "any".
    """

    triples: tuple[EdgeTriple, ...]
    edge_orders: tuple[tuple[int, ...], ...] | None = None
    interleavings: tuple[int, ...] | None = None

    @property
    def k(self) -> int:
        return len(self.triples)

    @cached_property
    def pair_use(self) -> Counter:
        return Counter(pr for t in self.triples for pr in combinations(t, 2))

    def crossings_on(self, e: int) -> list[int]:
        return [c for c, t in enumerate(self.triples) if e in t]

    def is_valid(self, g: Graph) -> bool:
        if any(n > 1 for n in self.pair_use.values()):
            return False
        for t in self.triples:
            ends = [v for e in t for v in g.edges[e]]
            if len(set(t)) != 3 or len(set(ends)) != 6:
                return False
        if self.edge_orders is not None:
            for e in range(g.q):
                if sorted(self.edge_orders[e]) != self.crossings_on(e):
                    return False
        if self.interleavings is not None:
            if len(self.interleavings) != self.k or any(not 0 <= i < N_CLASSES for i in self.interleavings):
                return False
        return True


class Status(str, Enum):
    FOUND = "found"
    NONE_WITHIN = "none-within"
    BUDGET_EXCEEDED = "budget-exceeded"


@dataclass
class SearchStats:
    nodes: int = 0
    systems: int = 0
    planarity_tests: int = 0
    seconds: float = 0.0
    screened: str | None = None
    k_ceiling: int | None = None
    per_k: dict[int, int] = field(default_factory=dict)


@dataclass(frozen=True)
class SearchOutcome:
    status: Status
    k: int | None
    k_max: int
    certificate: PlanarizedDrawing | None
    stats: SearchStats

    @property
    def found(self) -> bool:
        return self.status is Status.FOUND


@dataclass(frozen=True)
class BoundedTcr:
    """``Finite(k)`` when ``kind == "finite"``; otherwise nothing was found up to
    ``k`` (``"unknown-above"``) or the budget ran out (``"budget-exceeded"``)."""

    kind: str
    k: int

    def __str__(self) -> str:
        return {"finite": f"Finite({self.k})", "unknown-above": f"UnknownAbove({self.k})"}.get(
            self.kind, f"BudgetExceeded(at k={self.k})")


class BudgetExceeded(Exception):
    pass


@dataclass
class Budget:
    nodes: int | None = None
    seconds: float | None = None
    started: float = field(default_factory=time.monotonic)

    def check(self, stats: SearchStats) -> None:
        if self.nodes is not None and stats.nodes > self.nodes:
            raise BudgetExceeded(f"node budget {self.nodes} exceeded")
        if self.seconds is not None and time.monotonic() - self.started > self.seconds:
            raise BudgetExceeded(f"time budget {self.seconds}s exceeded")


# ---------------------------------------------------------------- symmetry

class Symmetry:
    """Least-image test for triple sets under the graph's automorphisms."""

    MAX_GROUP = 50_000
    CHUNK = 100_000

    def __init__(self, g: Graph, enabled: bool = True):
        self.g = g
        self.enabled = enabled
        n = g.p
        self.Q = g.q + 1
        self.eid = np.full((n, n), -1, dtype=np.int64)
        for i, (u, v) in enumerate(g.edges):
            self.eid[u, v] = self.eid[v, u] = i
        self._orbit_min: dict[EdgeTriple, EdgeTriple] = {}
        self._full: np.ndarray | None = None
        self.part_perms = self._part_perms() if g.spec is not None else [(0,)]
        if enabled and g.spec is None:
            self._full = self._all_automorphisms()

    def _all_automorphisms(self) -> np.ndarray:
        G = nx.Graph()
        G.add_nodes_from(range(self.g.p))
        G.add_edges_from(self.g.edges)
        maps = []
        for iso in nx.algorithms.isomorphism.GraphMatcher(G, G).isomorphisms_iter():
            maps.append([iso[v] for v in range(self.g.p)])
            if len(maps) > self.MAX_GROUP:
                log.warning("automorphism group too large; symmetry reduction disabled")
                return np.arange(self.g.p, dtype=np.int64)[None, :]
        return np.array(maps, dtype=np.int64)

    def _part_perms(self) -> list[tuple[int, ...]]:
        sizes = self.g.spec.parts
        groups: dict[int, list[int]] = {}
        for i, s in enumerate(sizes):
            groups.setdefault(s, []).append(i)
        out = []
        for choice in product(*(permutations(idx) for idx in groups.values())):
            pi = [0] * len(sizes)
            for idx, img in zip(groups.values(), choice):
                for a, b in zip(idx, img):
                    pi[a] = b
            out.append(tuple(pi))
        return sorted(out)

    def _segment_maps(self, touched: tuple[tuple[int, ...], ...]) -> Iterator[np.ndarray]:
        """Maps sending each part's touched vertices onto the first slots of
        the image part.  Some least image is always among them, since
        untouched vertices of a part are interchangeable and moving a touched
        vertex to a smaller free id never increases the image."""
        ranges = self.g.part_ranges()
        n = self.g.p
        for pi in self._part_perms():
            per_part = []
            for i, src in enumerate(touched):
                start = ranges[pi[i]].start
                per_part.append([tuple(start + j for j in perm) for perm in permutations(range(len(src)))])
            rows = []
            for combo in product(*per_part):
                row = np.zeros(n, dtype=np.int64)
                for src, img in zip(touched, combo):
                    row[list(src)] = img
                rows.append(row)
                if len(rows) >= self.CHUNK:
                    yield np.array(rows)
                    rows = []
            if rows:
                yield np.array(rows)

    def orbit_min(self, t: EdgeTriple) -> EdgeTriple:
        if t not in self._orbit_min:
            best = None
            for M in self._maps_touching((t,)):
                for row in M:
                    img = tuple(sorted(int(self.eid[row[u], row[v]]) for u, v in (self.g.edges[e] for e in t)))
                    if best is None or img < best:
                        best = img
            self._orbit_min[t] = best
        return self._orbit_min[t]

    def _maps_touching(self, triples) -> Iterator[np.ndarray]:
        if self._full is not None:
            yield self._full
            return
        used = {v for t in triples for e in t for v in self.g.edges[e]}
        touched = tuple(tuple(v for v in r if v in used) for r in self.g.part_ranges())
        yield from self._segment_maps(touched)

    def _anchored_maps(self, triples: Sequence[EdgeTriple]) -> np.ndarray:
        """Maps carrying some member triple onto the first triple, with the
        remaining touched vertices sent to the least free ids of their image
        part.  A strictly smaller image, if any exists, is reached by one of
        these."""
        g = self.g
        part_of = g.part_of
        ranges = g.part_ranges()
        anchor = triples[0]
        a_edges = [g.edges[e] for e in anchor]
        a_verts = {v for e in a_edges for v in e}
        used = sorted({v for t in triples for e in t for v in g.edges[e]})
        rows = []
        for t in triples:
            if self.orbit_min(t) != anchor:
                continue
            t_edges = [g.edges[e] for e in t]
            t_verts = {v for e in t_edges for v in e}
            rest: dict[int, list[int]] = {}
            for v in used:
                if v not in t_verts:
                    rest.setdefault(part_of[v], []).append(v)
            for pi in self.part_perms:
                fill = []
                for i, vs in rest.items():
                    slots = [y for y in ranges[pi[i]] if y not in a_verts][:len(vs)]
                    fill.append((vs, list(permutations(slots))))
                for sigma in permutations(range(3)):
                    for flips in product((False, True), repeat=3):
                        base = {}
                        for j in range(3):
                            (u, v), (a, b) = t_edges[j], a_edges[sigma[j]]
                            if flips[j]:
                                a, b = b, a
                            if part_of[a] != pi[part_of[u]] or part_of[b] != pi[part_of[v]]:
                                break
                            base[u], base[v] = a, b
                        else:
                            for combo in product(*(imgs for _, imgs in fill)):
                                row = np.zeros(g.p, dtype=np.int64)
                                for x, y in base.items():
                                    row[x] = y
                                for (vs, _), img in zip(fill, combo):
                                    row[vs] = img
                                rows.append(row)
        return np.array(rows, dtype=np.int64).reshape(-1, g.p)

    def maps_for(self, triples: Sequence[EdgeTriple]) -> Iterator[np.ndarray]:
        if self._full is not None:
            yield self._full
        else:
            yield self._anchored_maps(triples)

    def is_canonical(self, triples: Sequence[EdgeTriple]) -> bool:
        if not self.enabled:
            return True
        if any(self.orbit_min(t) < triples[0] for t in triples):
            return False
        edges = np.array(self.g.edges, dtype=np.int64)
        S = np.array(triples, dtype=np.int64)  # k x 3, rows sorted, rows ascending
        U, V = edges[S, 0], edges[S, 1]
        Q = self.Q
        target = S[:, 0] * Q * Q + S[:, 1] * Q + S[:, 2]
        for M in self.maps_for(triples):
            if not len(M):
                continue
            img = self.eid[M[:, U], M[:, V]]  # G x k x 3
            img.sort(axis=2)
            codes = img[:, :, 0] * Q * Q + img[:, :, 1] * Q + img[:, :, 2]
            codes.sort(axis=1)
            diff = codes - target
            nz = diff != 0
            first = nz.argmax(axis=1)
            rows = np.nonzero(nz.any(axis=1))[0]
            if np.any(diff[rows, first[rows]] < 0):
                return False
        return True

    def orbit_count_bruteforce(self, k: int) -> int:
        """Orbits of valid k-sets by explicit orbit enumeration (for testing)."""
        seen, orbits = set(), 0
        maps = np.concatenate(list(self.maps_for_all()))
        for S in _raw_triple_sets(self.g, k):
            if S in seen:
                continue
            orbits += 1
            for row in maps:
                img = tuple(sorted(tuple(sorted(int(self.eid[row[u], row[v]]) for u, v in (self.g.edges[e] for e in t)))
                                   for t in S))
                seen.add(img)
        return orbits

    def maps_for_all(self) -> Iterator[np.ndarray]:
        """The whole automorphism group."""
        if self._full is not None:
            yield self._full
            return
        touched = tuple(tuple(r) for r in self.g.part_ranges())
        yield from self._segment_maps(touched)


def _raw_triple_sets(g: Graph, k: int) -> Iterator[tuple[EdgeTriple, ...]]:
    triples = list(independent_triples(g))
    for S in combinations(triples, k):
        pairs = [pr for t in S for pr in combinations(t, 2)]
        if len(pairs) == len(set(pairs)):
            yield S


def enumerate_triple_sets(g: Graph, k: int, symmetry: bool | Symmetry = True) -> Iterator[tuple[EdgeTriple, ...]]:
    """Valid sets of ``k`` triples in lexicographic order, one per automorphism
    orbit when ``symmetry`` is on."""
    sym = symmetry if isinstance(symmetry, Symmetry) else Symmetry(g, enabled=symmetry)
    if k == 0:
        yield ()
        return
    triples = list(independent_triples(g))
    pairs_of = [tuple(combinations(t, 2)) for t in triples]

    def extend(chosen: list[int], used: set, start: int, depth: int):
        for i in range(start, len(triples) - (k - depth - 1)):
            if any(pr in used for pr in pairs_of[i]):
                continue
            nxt = chosen + [i]
            S = [triples[j] for j in nxt]
            if not sym.is_canonical(S):
                continue
            if depth + 1 == k:
                yield tuple(S)
            else:
                yield from extend(nxt, used | set(pairs_of[i]), i + 1, depth + 1)

    yield from extend([], set(), 0, 0)


def enumerate_crossing_systems(g: Graph, k: int, symmetry: bool = True) -> Iterator[CrossingSystem]:
    for S in enumerate_triple_sets(g, k, symmetry):
        yield CrossingSystem(S)


def edge_order_choices(g: Graph, triples: Sequence[EdgeTriple]) -> Iterator[tuple[tuple[int, ...], ...]]:
    on: list[list[int]] = [[] for _ in range(g.q)]
    for c, t in enumerate(triples):
        for e in t:
            on[e].append(c)
    yield from product(*(list(permutations(cs)) for cs in on))


# ---------------------------------------------------------------- realization

def _class_rotation(g: Graph, triple: EdgeTriple, nbr: dict, c: int, cls: int) -> list[int]:
    e1, e2, e3 = triple
    b1, f1 = nbr[(c, e1)]
    b2, f2 = nbr[(c, e2)]
    b3, f3 = nbr[(c, e3)]
    s2, s2x = (b2, f2) if cls & 1 == 0 else (f2, b2)
    s3, s3x = (b3, f3) if cls & 2 == 0 else (f3, b3)
    return [b1, s2, s3, f1, s2x, s3x]


class _Realizer:
    """Embedding tests for one (triples, edge orders) choice."""

    def __init__(self, g: Graph, triples: Sequence[EdgeTriple], orders: Sequence[Sequence[int]], stats: SearchStats):
        self.g, self.triples, self.orders, self.stats = g, tuple(triples), orders, stats
        p = g.p
        self.n = p + len(triples)
        self.edges = planarized_edges(g, orders)
        self.nbr: dict[tuple[int, int], tuple[int, int]] = {}
        for e, path in enumerate(orders):
            u, v = g.edges[e]
            walk = [u] + [p + c for c in path] + [v]
            for i, c in enumerate(path, start=1):
                self.nbr[(c, e)] = (walk[i - 1], walk[i + 1])

    @cached_property
    def triangulated(self) -> bool:
        """Edge count forces every plane embedding to be a triangulation,
        which is 3-connected and so embeds uniquely up to reflection."""
        return self.n >= 4 and len(self.edges) == 3 * self.n - 6

    def _links_can_close(self) -> bool:
        # in a triangulation the neighbors of each vertex form a cycle in its rotation order
        adj: dict[int, set[int]] = {v: set() for v in range(self.n)}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        p = self.g.p
        for c in range(len(self.triples)):
            if not any(all(r[i + 1 - 6] in adj[r[i]] for i in range(6))
                       for r in (self.rotation(c, cls) for cls in range(N_CLASSES))):
                return False
        for v in range(p):
            nb = adj[v]
            if len(nb) >= 3 and any(len(adj[w] & nb) < 2 for w in nb):
                return False
        return True

    def _realize_triangulation(self) -> PlanarizedDrawing | None:
        if not self._links_can_close():
            return None
        self.stats.planarity_tests += 1
        ok, emb = nx.check_planarity(nx.Graph(self.edges))
        if not ok:
            return None
        rot = {v: list(emb.neighbors_cw_order(v)) for v in range(self.n)}
        p = self.g.p
        combo = []
        for c in range(len(self.triples)):
            got = rot[p + c]
            cls = next((cls for cls in range(N_CLASSES)
                        if cyclic_equal(got, self.rotation(c, cls)) or cyclic_equal(got[::-1], self.rotation(c, cls))),
                       None)
            if cls is None:
                return None
            combo.append(cls)
        dr = drawing_from_neighbor_rotations(self.g, self.triples, self.orders, rot)
        return dr.with_meta(interleavings=" ".join(map(str, combo)))

    def rotation(self, c: int, cls: int) -> list[int]:
        return _class_rotation(self.g, self.triples[c], self.nbr, c, cls)

    def _embed(self, fixed: dict[int, list[int]]):
        self.stats.planarity_tests += 1
        return gadget_embedding(self.n, self.edges, fixed)

    def feasible_classes(self) -> list[list[int]] | None:
        self.stats.planarity_tests += 1
        G = nx.Graph(self.edges)
        if not nx.check_planarity(G)[0]:
            return None
        out = []
        p = self.g.p
        for c in range(len(self.triples)):
            ok = [cls for cls in range(N_CLASSES) if self._embed({p + c: self.rotation(c, cls)}) is not None]
            if not ok:
                return None
            out.append(ok)
        return out

    def realize(self, interleavings: Sequence[int] | None = None) -> PlanarizedDrawing | None:
        p = self.g.p
        if interleavings is None and self.triangulated:
            return self._realize_triangulation()
        if interleavings is None:
            choices = self.feasible_classes()
            if choices is None:
                return None
            combos: Iterator = product(*choices)
        else:
            combos = iter([tuple(interleavings)])
        for combo in combos:
            fixed = {p + c: self.rotation(c, cls) for c, cls in enumerate(combo)}
            rot = self._embed(fixed)
            if rot is not None:
                dr = drawing_from_neighbor_rotations(self.g, self.triples, self.orders, rot)
                return dr.with_meta(interleavings=" ".join(map(str, combo)))
        return None


def realize(g: Graph, system: CrossingSystem) -> PlanarizedDrawing | None:
    """A drawing realizing ``system``, or None.  Unspecified edge orders or
    interleavings are searched exhaustively (first success in lexicographic
    order)."""
    if not system.is_valid(g):
        raise ValueError("crossing system violates its invariants")
    stats = SearchStats()
    orders_iter = [system.edge_orders] if system.edge_orders is not None else edge_order_choices(g, system.triples)
    for orders in orders_iter:
        dr = _Realizer(g, system.triples, orders, stats).realize(system.interleavings)
        if dr is not None:
            return dr
    return None


def _search_triple_set(g: Graph, S: tuple[EdgeTriple, ...], stats: SearchStats, budget: Budget | None) -> PlanarizedDrawing | None:
    for orders in edge_order_choices(g, S):
        stats.nodes += 1
        if budget is not None:
            budget.check(stats)
        dr = _Realizer(g, S, orders, stats).realize()
        if dr is not None:
            return dr
    return None


_worker_graph: Graph | None = None


def _worker_init(g: Graph) -> None:
    global _worker_graph
    _worker_graph = g


def _worker_run(S):
    stats = SearchStats()
    dr = _search_triple_set(_worker_graph, S, stats, None)
    return dr, stats.nodes, stats.planarity_tests


def planar_drawing(g: Graph) -> PlanarizedDrawing | None:
    m = embed_with_constraints(g)
    if m is None:
        return None
    rot = {v: m.neighbor_rotation(v) for v in range(g.p)}
    return drawing_from_neighbor_rotations(g, [], [()] * g.q, rot)


def k_ceiling(g: Graph) -> int:
    """Each triple point uses three independent edge pairs, each pair at most once."""
    return independent_pairs(g) // 3


def search(g: Graph, k_min: int = 0, k_max: int = 1, *, workers: int = 1, budget_nodes: int | None = None,
           budget_seconds: float | None = None, symmetry: bool = True) -> SearchOutcome:
    """Look for a semi-regular drawing with ``k`` triple points, ``k`` from
    ``k_min`` to ``k_max`` in order; the first certificate in canonical order
    wins."""
    if not 0 <= k_min <= k_max:
        raise ValueError("need 0 <= k_min <= k_max")
    stats = SearchStats()
    budget = Budget(budget_nodes, budget_seconds)
    t0 = time.monotonic()

    def done(status, k=None, cert=None, k_reached=k_max):
        stats.seconds = time.monotonic() - t0
        return SearchOutcome(status, k, k_reached, cert, stats)

    if g.p >= 3 and graph_excess(g.p, g.q) > 0:
        stats.screened = "excess"
        return done(Status.NONE_WITHIN)
    ceiling = k_ceiling(g)
    stats.k_ceiling = ceiling
    sym = Symmetry(g, enabled=symmetry)
    try:
        for k in range(k_min, min(k_max, ceiling) + 1):
            before = stats.nodes
            if k == 0:
                stats.nodes += 1
                stats.planarity_tests += 1
                cert = planar_drawing(g)
            else:
                cert = _search_k(g, k, sym, stats, budget, workers)
            stats.per_k[k] = stats.nodes - before
            if cert is not None:
                cert = cert.with_meta(**{"search": f"k_min={k_min} k_max={k_max} symmetry={'on' if symmetry else 'off'}",
                                         "found_k": str(k)})
                report = validate(cert)
                assert report.accepted, f"search produced an invalid drawing: {report.violations}"
                return done(Status.FOUND, k, cert)
    except BudgetExceeded as exc:
        log.info("%s", exc)
        return done(Status.BUDGET_EXCEEDED)
    return done(Status.NONE_WITHIN)


def _search_k(g: Graph, k: int, sym: Symmetry, stats: SearchStats, budget: Budget, workers: int):
    sets = enumerate_triple_sets(g, k, sym)
    if workers <= 1:
        for S in sets:
            stats.systems += 1
            budget.check(stats)
            dr = _search_triple_set(g, S, stats, budget)
            if dr is not None:
                return dr
        return None
    import multiprocessing as mp

    sets = list(sets)
    with mp.get_context("spawn").Pool(workers, initializer=_worker_init, initargs=(g,)) as pool:
        # imap keeps submission order, so the first hit is the canonical first
        for dr, nodes, tests in pool.imap(_worker_run, sets, chunksize=1):
            stats.systems += 1
            stats.nodes += nodes
            stats.planarity_tests += tests
            if dr is not None:
                pool.terminate()
                return dr
            budget.check(stats)
    return None


def tcr_bounded(g: Graph, k_max: int, **kw) -> BoundedTcr:
    out = search(g, 0, k_max, **kw)
    if out.status is Status.FOUND:
        return BoundedTcr("finite", out.k)
    if out.status is Status.BUDGET_EXCEEDED:
        return BoundedTcr("budget-exceeded", k_max)
    return BoundedTcr("unknown-above", k_max)
