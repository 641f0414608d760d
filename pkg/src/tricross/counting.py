"""Edge-count bounds and face profiles for planarized drawings.

A drawing with ``k`` triple points planarizes to a simple plane graph with
``p + k`` vertices and ``q + 3k`` edges, so ``k`` cancels from the planar edge
bound: a semi-regular drawing needs ``q - 3p + 6 <= 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import PartitionSpec

Profile = tuple[int, ...]


@dataclass(frozen=True)
class ExcessReport:
    p: int
    q: int
    excess: int

    @property
    def admits_by_count(self) -> bool:
        return self.excess <= 0


def _spec(spec) -> PartitionSpec:
    return spec if isinstance(spec, PartitionSpec) else PartitionSpec(tuple(spec))


def excess(spec: PartitionSpec | Sequence[int]) -> ExcessReport:
    spec = _spec(spec)
    p, q = spec.p, spec.q
    return ExcessReport(p, q, q - 3 * p + 6)


def graph_excess(p: int, q: int) -> int:
    return q - 3 * p + 6


def deficiency(p: int, q: int) -> int:
    """``3p - q - 6``: how far a plane graph is from a triangulation."""
    return 3 * p - q - 6


def bipartite_excess(n1: int, n2: int) -> int:
    return (n1 - 3) * (n2 - 3) - 3


def tripartite_excess(n1: int, n2: int, n3: int) -> int:
    return (n1 + n3 - 3) * (n2 + n3 - 3) - n3 * n3 + 3 * n3 - 3


def four_partite_excess(n1: int, n2: int, n3: int, n4: int) -> int:
    return (n1 - 1) * (n2 - 1) + (n1 + n2) * (n3 + n4 - 2) + (n3 - 3) * (n4 - 3) - 4


def four_partite_lower_bound(n3: int, n4: int) -> int:
    """Lower bound on the 4-partite excess valid whenever ``n2 >= 2``."""
    return (n3 + 1) * (n4 + 1) - 3


def five_partite_excess(n: Sequence[int]) -> int:
    n1, n2, n3, n4, n5 = n
    return (n1 + n4 - 3) * (n2 + n3 - 3) + n1 * n4 + n2 * n3 + n5 * (n1 + n2 + n3 + n4 - 3) - 3


def six_partite_excess(n: Sequence[int]) -> int:
    n1, n2, n3, n4, n5, n6 = n
    return ((n1 + n4 - 3) * (n2 + n3 - 3) + n1 * n4 + n2 * n3
            + (n5 + n6) * (n1 + n2 + n3 + n4 - 3) + n5 * n6 - 3)


def five_six_partite_bound(spec: PartitionSpec | Sequence[int]) -> int:
    """The closed-form lower bound on the excess for 5 or 6 parts."""
    spec = _spec(spec)
    if spec.t not in (5, 6):
        raise ValueError("five_six_partite_bound needs 5 or 6 parts")
    n4 = spec.parts[3]
    if spec.t == 5:
        return (2 * n4 - 3) ** 2 + 2 * n4 * n4 + spec.parts[4] - 3
    return (2 * n4 - 3) ** 2 + 2 * n4 * n4


def five_six_partite_positive(spec: PartitionSpec | Sequence[int]) -> bool:
    """Check the closed forms for 5 and 6 parts: identity with the direct
    excess, the lower bound, and positivity."""
    spec = _spec(spec)
    if spec.t not in (5, 6):
        raise ValueError("five_six_partite_positive needs 5 or 6 parts")
    closed = five_partite_excess(spec.parts) if spec.t == 5 else six_partite_excess(spec.parts)
    direct = excess(spec).excess
    floor = 1 if spec.t == 5 else 3
    return closed == direct and direct >= five_six_partite_bound(spec) >= floor


def closed_form_excess(spec: PartitionSpec | Sequence[int]) -> int | None:
    """The closed form matching the number of parts, or None for t=1 or t>6."""
    spec = _spec(spec)
    n = spec.parts
    return {
        2: lambda: bipartite_excess(*n),
        3: lambda: tripartite_excess(*n),
        4: lambda: four_partite_excess(*n),
        5: lambda: five_partite_excess(n),
        6: lambda: six_partite_excess(n),
    }.get(spec.t, lambda: None)()


_PROFILES: dict[int, frozenset[Profile]] = {
    0: frozenset({()}),
    1: frozenset({(4,)}),
    2: frozenset({(5,), (4, 4)}),
    3: frozenset({(6,), (5, 4), (4, 4, 4)}),
}


def face_profiles(d: int) -> frozenset[Profile]:
    """Non-triangular face sizes (descending) allowed in a connected plane graph
    with deficiency ``d``; every other face is a triangle."""
    if d < 0:
        raise ValueError(f"deficiency cannot be negative (got {d})")
    if d > 3:
        raise ValueError(f"face profiles are only established for d <= 3 (got {d})")
    return _PROFILES[d]


def profile_of(face_sizes: Sequence[int]) -> Profile:
    return tuple(sorted((s for s in face_sizes if s != 3), reverse=True))
