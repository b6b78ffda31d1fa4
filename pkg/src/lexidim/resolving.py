"""Resolving sets and exact metric / adjacency dimension.

Two routes are kept apart on purpose:

* :func:`is_resolving` builds every representation vector and checks they are
  distinct. It is slow and obvious, and it is what witnesses are checked with.
* :func:`dimension` searches subsets by increasing size. Each landmark ``w`` is
  turned into a bitmask over vertex pairs, with bit ``{u, v}`` set when ``w``
  tells ``u`` and ``v`` apart. A set resolves the graph iff the OR of its masks
  covers every pair. A branch is cut as soon as the landmarks still available
  cannot cover the pairs that remain.

The cut also covers twin classes. A pair of twins is separated only by one of
the two twins, so any branch that has skipped two members of one class is cut
as soon as it has passed both.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Literal, Sequence

from .errors import GraphError, OracleCapExceeded
from .graph import Graph, is_connected
from .twins import twin_partition

Kind = Literal["metric", "adjacency"]
VertexSet = tuple[int, ...]

DEFAULT_SEARCH_CAP = int(os.environ.get("LEXIDIM_SEARCH_CAP", 24))
DEFAULT_ENUM_CAP = int(os.environ.get("LEXIDIM_ENUM_CAP", 12))


@dataclass(frozen=True)
class DimensionResult:
    kind: Kind
    value: int
    witness: VertexSet
    all_bases: tuple[VertexSet, ...] | None = None

    def as_dict(self) -> dict:
        out = {"kind": self.kind, "value": self.value, "witness": list(self.witness)}
        if self.all_bases is not None:
            out["all_bases"] = [list(b) for b in self.all_bases]
        return out


def _check_kind(kind: str) -> None:
    if kind not in ("metric", "adjacency"):
        raise ValueError(f"kind must be 'metric' or 'adjacency', got {kind!r}")


def _require_connected(g: Graph, kind: str) -> None:
    _check_kind(kind)
    if kind == "metric" and not is_connected(g):
        raise GraphError("metric representations need a connected graph")


def adjacency_value(g: Graph, v: int, w: int) -> int:
    if v == w:
        return 0
    return 1 if g.adjacent(v, w) else 2


def metric_representation(g: Graph, v: int, w: Sequence[int]) -> tuple[int, ...]:
    if not w:
        raise ValueError("landmark set must be nonempty")
    row = g.distances[v]
    return tuple(int(row[x]) if row[x] != float("inf") else row[x] for x in w)


def adjacency_representation(g: Graph, v: int, w: Sequence[int]) -> tuple[int, ...]:
    if not w:
        raise ValueError("landmark set must be nonempty")
    return tuple(adjacency_value(g, v, x) for x in w)


def representation(g: Graph, v: int, w: Sequence[int], kind: Kind) -> tuple[int, ...]:
    if kind == "metric":
        return metric_representation(g, v, w)
    return adjacency_representation(g, v, w)


def resolves_subset(g: Graph, w: Sequence[int], t: Iterable[int], kind: Kind = "metric") -> bool:
    """Whether the vectors of the vertices in ``t`` are pairwise distinct."""
    _require_connected(g, kind)
    t = list(t)
    if len(t) <= 1:
        return True
    if not w:
        return False
    reps = {representation(g, v, w, kind) for v in t}
    return len(reps) == len(set(t))


def is_resolving(g: Graph, w: Sequence[int], kind: Kind = "metric") -> bool:
    return resolves_subset(g, w, range(g.order), kind)


# -- pair-cover search -------------------------------------------------------------

def pair_masks(g: Graph, kind: Kind) -> list[int]:
    """For each vertex ``w``, the set of pairs ``{u, v}`` that ``w`` separates."""
    n = g.order
    if kind == "metric":
        rows = g.distances
        value = lambda u, w: rows[u][w]  # noqa: E731
    else:
        value = lambda u, w: adjacency_value(g, u, w)  # noqa: E731
    masks = []
    for w in range(n):
        col = [value(u, w) for u in range(n)]
        bit = 1
        m = 0
        for u in range(n):
            cu = col[u]
            for v in range(u + 1, n):
                if cu != col[v]:
                    m |= bit
                bit <<= 1
        masks.append(m)
    return masks


def _covers(masks: Sequence[int], size: int, find_all: bool) -> list[VertexSet]:
    """Subsets of ``size`` landmarks whose masks cover every pair, in lex order."""
    n = len(masks)
    full = (1 << (n * (n - 1) // 2)) - 1
    suffix = [0] * (n + 1)
    for j in range(n - 1, -1, -1):
        suffix[j] = suffix[j + 1] | masks[j]
    found: list[VertexSet] = []
    chosen: list[int] = []

    def walk(start: int, left: int, cur: int) -> bool:
        if left == 0:
            if cur == full:
                found.append(tuple(chosen))
                return not find_all
            return False
        for j in range(start, n - left + 1):
            if cur | suffix[j] != full:
                break
            chosen.append(j)
            if walk(j + 1, left - 1, cur | masks[j]):
                return True
            chosen.pop()
        return False

    walk(0, size, 0)
    return found


def lower_bound(g: Graph, kind: Kind = "metric") -> int:
    """Largest of the twin bound and, for adjacency, the {1, 2}-coding bound.

    Every resolving set misses at most one vertex of each twin class. Outside
    the landmarks, adjacency vectors use only the symbols 1 and 2, so ``k``
    landmarks can tell at most ``2 ** k`` other vertices apart.
    """
    _check_kind(kind)
    bound = sum(len(c) - 1 for c in twin_partition(g).classes)
    if kind == "adjacency":
        k = 0
        while 2 ** k < g.order - k:
            k += 1
        bound = max(bound, k)
    return bound


def dimension(
    g: Graph,
    kind: Kind = "metric",
    enumerate_all: bool = False,
    cap: int | None = None,
) -> DimensionResult:
    """Exact metric or adjacency dimension with its lexicographically first basis.

    Raises :class:`OracleCapExceeded` when ``g`` has more vertices than ``cap``
    (``DEFAULT_ENUM_CAP`` when listing every basis, else ``DEFAULT_SEARCH_CAP``).
    """
    _require_connected(g, kind)
    if g.order < 2:
        raise GraphError("dimension is only defined here for order >= 2")
    if cap is None:
        cap = DEFAULT_ENUM_CAP if enumerate_all else DEFAULT_SEARCH_CAP
    if g.order > cap:
        raise OracleCapExceeded(g.order, cap, "basis enumeration" if enumerate_all else "search")
    masks = pair_masks(g, kind)
    for size in range(max(1, lower_bound(g, kind)), g.order + 1):
        hits = _covers(masks, size, enumerate_all)
        if hits:
            return DimensionResult(kind, size, hits[0], tuple(hits) if enumerate_all else None)
    raise AssertionError("the full vertex set always resolves")  # pragma: no cover


def metric_dimension(g: Graph, **kw) -> int:
    return dimension(g, "metric", **kw).value


def adjacency_dimension(g: Graph, **kw) -> int:
    return dimension(g, "adjacency", **kw).value


def enumerate_adjacency_bases(g: Graph, cap: int | None = None) -> list[VertexSet]:
    return list(dimension(g, "adjacency", enumerate_all=True, cap=cap).all_bases)


def enumerate_bases(g: Graph, kind: Kind = "metric", cap: int | None = None) -> list[VertexSet]:
    return list(dimension(g, kind, enumerate_all=True, cap=cap).all_bases)


def smaller_sets_fail(g: Graph, result: DimensionResult) -> bool:
    """Check with :func:`is_resolving` that no set one smaller than the optimum resolves."""
    if result.value <= 1:
        return True
    return not any(
        is_resolving(g, w, result.kind) for w in combinations(range(g.order), result.value - 1)
    )
