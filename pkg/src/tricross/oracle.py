"""Triple crossing numbers of complete multipartite graphs, as classified in
the literature, with the reason each value holds.

This is a lookup encoding of the known classification, not a decision
procedure; :mod:`tricross.search` provides the computational cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from .counting import excess
from .graph import PartitionSpec


@dataclass(frozen=True)
class TcrValue:
    """``n`` finite crossings, or infinite (``n is None``)."""

    n: int | None

    @property
    def finite(self) -> bool:
        return self.n is not None

    def __str__(self) -> str:
        return "infinity" if self.n is None else str(self.n)


INFINITE = TcrValue(None)


def finite(n: int) -> TcrValue:
    if n < 0:
        raise ValueError("tcr cannot be negative")
    return TcrValue(n)


class Justification(str, Enum):
    PLANAR = "planar"
    EXCESS_POSITIVE = "excess-positive"
    CASE_ANALYSIS = "bounded-search-theorem"
    CERTIFICATE = "certificate+lower-bound"


@dataclass(frozen=True)
class OracleAnswer:
    value: TcrValue
    justification: Justification
    citations: tuple[str, ...] = field(default=())


# Result tags.  Each names the classification result a value rests on.
T_EDGE_BOUND = "edge-count-bound"
T_NONPLANAR = "kuratowski-subgraph"
T_MANY_PARTS = "five-or-more-parts"
T_COMPLETE = "complete-graphs"
T_BIPARTITE = "bipartite-classification"
T_K54 = "k54-no-drawing"
T_K44 = "k44-no-drawing"
T_KN3 = "kn3-no-drawing"
T_FOUR = "four-partite-classification"
T_TRI = "tripartite-classification"
T_CROSSING = "crossing-number-bound"

# cr values quoted from the literature; nothing else is known to the oracle.
KNOWN_CR = {(6, 3): 6, (6, 4): 12, "petersen": 2}

# Finite positive values, each backed by a bundled certificate.
_BIPARTITE_FINITE = {(3, 3): 1, (4, 3): 1, (6, 3): 2, (6, 4): 4}
_FOUR_FINITE = {(1, 1, 1, 1): 0, (2, 1, 1, 1): 0, (3, 1, 1, 1): 1, (4, 1, 1, 1): 1, (6, 1, 1, 1): 2}


def _as_spec(spec) -> PartitionSpec:
    return spec if isinstance(spec, PartitionSpec) else PartitionSpec(tuple(spec))


def known_cr(spec) -> int | None:
    if isinstance(spec, str):
        return KNOWN_CR.get(spec.lower())
    return KNOWN_CR.get(_as_spec(spec).parts)


def tcr_lower_bound_from_cr(cr: int) -> int:
    if cr < 0:
        raise ValueError("crossing number cannot be negative")
    return -(-cr // 3)


def _planar(*tags: str) -> OracleAnswer:
    return OracleAnswer(finite(0), Justification.PLANAR, tags)


def _positive(k: int, *tags: str) -> OracleAnswer:
    return OracleAnswer(finite(k), Justification.CERTIFICATE, (T_NONPLANAR, *tags))


def _infinite_by_count(*tags: str) -> OracleAnswer:
    return OracleAnswer(INFINITE, Justification.EXCESS_POSITIVE, (T_EDGE_BOUND, *tags))


def _infinite_by_cases(*tags: str) -> OracleAnswer:
    return OracleAnswer(INFINITE, Justification.CASE_ANALYSIS, tags)


def _bipartite(n1: int, n2: int) -> OracleAnswer:
    if n2 <= 2:
        return _planar(T_BIPARTITE)
    if (n1, n2) in _BIPARTITE_FINITE:
        tags = [T_BIPARTITE]
        if (n1, n2) in KNOWN_CR:
            tags.append(T_CROSSING)
        return _positive(_BIPARTITE_FINITE[(n1, n2)], *tags)
    if excess((n1, n2)).excess > 0:
        return _infinite_by_count(T_BIPARTITE)
    if n2 == 3:
        return _infinite_by_cases(T_BIPARTITE, T_KN3)
    if (n1, n2) == (4, 4):
        return _infinite_by_cases(T_BIPARTITE, T_K44)
    if (n1, n2) == (5, 4):
        return _infinite_by_cases(T_BIPARTITE, T_K54)
    raise AssertionError(f"bipartite case not covered: {(n1, n2)}")  # pragma: no cover


def _tripartite(n1: int, n2: int, n3: int) -> OracleAnswer:
    if n2 == 1 or n1 == 2:
        return _planar(T_TRI)
    if excess((n1, n2, n3)).excess > 0:
        return _infinite_by_count(T_TRI)
    if (n1, n2, n3) == (3, 3, 1):
        return _positive(1, T_TRI)
    if n3 == 1 and n2 == 2:
        if n1 in (3, 4):
            return _positive(1, T_TRI, T_BIPARTITE)
        if n1 == 6:
            return _positive(2, T_TRI, T_BIPARTITE, T_CROSSING)
        return _infinite_by_cases(T_TRI, T_BIPARTITE, T_KN3)
    raise AssertionError(f"tripartite case not covered: {(n1, n2, n3)}")  # pragma: no cover


def _four_partite(parts: tuple[int, ...]) -> OracleAnswer:
    if parts in _FOUR_FINITE:
        k = _FOUR_FINITE[parts]
        if k == 0:
            return _planar(T_FOUR)
        tags = [T_FOUR, T_BIPARTITE] + ([T_CROSSING] if k == 2 else [])
        return _positive(k, *tags)
    if excess(parts).excess > 0:
        return _infinite_by_count(T_FOUR)
    # K_{n,1,1,1} minus its triangle is K_{n,3}
    return _infinite_by_cases(T_FOUR, T_BIPARTITE, T_KN3)


def tcr(spec: PartitionSpec | Sequence[int]) -> OracleAnswer:
    spec = _as_spec(spec)
    parts = spec.parts
    if spec.t == 1:
        return _planar()
    if all(n == 1 for n in parts):
        if spec.t <= 4:
            return _planar(T_COMPLETE)
        return _infinite_by_count(T_COMPLETE, T_MANY_PARTS)
    if spec.t >= 5:
        if excess(spec).excess > 0:
            return _infinite_by_count(T_MANY_PARTS)
        return _infinite_by_cases(T_MANY_PARTS)  # pragma: no cover - excess is always positive here
    if spec.t == 2:
        return _bipartite(*parts)
    if spec.t == 3:
        return _tripartite(*parts)
    return _four_partite(parts)


def tcr_named(name: str) -> OracleAnswer:
    if name.lower() == "petersen":
        # cr = 2 forces at least one triple point; one suffices
        return OracleAnswer(finite(1), Justification.CERTIFICATE, (T_NONPLANAR, T_CROSSING))
    raise KeyError(f"no classification for {name!r}")


def is_planar_multipartite(spec: PartitionSpec | Sequence[int]) -> bool:
    return tcr(spec).value == finite(0)
