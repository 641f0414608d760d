"""Independent brute-force oracles used by the tests.

Nothing here uses symmetry reduction, wheel gadgets or networkx planarity:
realizability is decided by listing every rotation system of the planarized
graph and checking Euler's formula plus transversality at each crossing.
"""

from __future__ import annotations

from itertools import combinations, permutations, product

from tricross.graph import Graph
from tricross.planar import CombinatorialMap, enumerate_rotation_systems, trace_faces


def all_triple_sets(g: Graph, k: int):
    """Sets of k pairwise-independent edge triples, no edge pair used twice."""
    triples = []
    for t in combinations(range(g.q), 3):
        ends = [v for e in t for v in g.edges[e]]
        if len(set(ends)) == 6:
            triples.append(t)
    for S in combinations(triples, k):
        pairs = [pr for t in S for pr in combinations(t, 2)]
        if len(pairs) == len(set(pairs)):
            yield S


def _walks(g: Graph, S, orders):
    p = g.p
    return [[g.edges[e][0]] + [p + c for c in orders[e]] + [g.edges[e][1]] for e in range(g.q)]


def _spherical(m: CombinatorialMap) -> bool:
    return m.n_vertices - len(m.segments) + len(trace_faces(m)) == 2 * m.components()


def naive_realizable(g: Graph, S) -> bool:
    """Does some drawing realize the triple set S (any edge orders)?"""
    p = g.p
    on = [[c for c, t in enumerate(S) if e in t] for e in range(g.q)]
    for orders in product(*(list(permutations(cs)) for cs in on)):
        walks = _walks(g, S, orders)
        edges = [(a, b) for w in walks for a, b in zip(w, w[1:])]
        owner = {}
        for e, w in enumerate(walks):
            for a, b in zip(w, w[1:]):
                owner[(a, b)] = owner[(b, a)] = e
        if len({tuple(sorted(x)) for x in edges}) != len(edges):
            continue
        n = p + len(S)
        for m in enumerate_rotation_systems(n, edges):
            if not _spherical(m):
                continue
            ok = True
            for c in range(len(S)):
                x = p + c
                rot = [owner[(x, y)] for y in m.neighbor_rotation(x)]
                if len(set(rot[:3])) != 3 or rot[:3] != rot[3:]:
                    ok = False
                    break
            if ok:
                return True
    return False


def naive_min_k(g: Graph, k_max: int):
    for k in range(k_max + 1):
        if any(naive_realizable(g, S) for S in all_triple_sets(g, k)):
            return k
    return None
