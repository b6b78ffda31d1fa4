"""Immutable simple graphs, the standard families, and graph operators.

Vertices are the integers ``0 .. n-1``. Adjacency is kept twice: as frozensets
for readability and as integer bitmasks for the search code in
:mod:`lexidim.resolving`. All-pairs distances are computed by BFS once, on first
use, and cached on the instance.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import GraphError

INF = math.inf

Edge = tuple[int, int]


@dataclass(frozen=True, eq=False)
class Graph:
    """A finite simple undirected graph on ``range(order)``.

    Build instances through :func:`build_graph` (or the family constructors);
    the raw constructor trusts its ``masks`` argument.
    """

    order: int
    masks: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.order == other.order and self.masks == other.masks

    def __hash__(self) -> int:
        return hash((self.order, self.masks))

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edges()})"

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(_bits(m)) for m in self.masks)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.masks[v].bit_count()

    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.order) for v in _bits(self.masks[u]) if u < v]

    @property
    def size(self) -> int:
        return sum(m.bit_count() for m in self.masks) // 2

    @cached_property
    def distances(self) -> tuple[tuple[float, ...], ...]:
        """All-pairs hop counts; :data:`INF` between components."""
        return tuple(self._bfs(s) for s in range(self.order))

    def _bfs(self, source: int) -> tuple[float, ...]:
        dist: list[float] = [INF] * self.order
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            du = dist[u]
            for w in self.adjacency[u]:
                if dist[w] == INF:
                    dist[w] = du + 1
                    queue.append(w)
        return tuple(dist)

    def distance(self, u: int, v: int) -> float:
        return self.distances[u][v]

    def is_connected(self) -> bool:
        return is_connected(self)

    def diameter(self) -> float:
        return max(max(row) for row in self.distances)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        return build_graph(self.order, [(perm[u], perm[v]) for u, v in self.edges()])


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def build_graph(order: int, edges: Iterable[Edge], labels: Sequence[str] | None = None) -> Graph:
    """Build a graph from an edge list; duplicate edges are merged."""
    if order < 1:
        raise GraphError(f"order must be at least 1, got {order}")
    masks = [0] * order
    for i, j in edges:
        if not (0 <= i < order and 0 <= j < order):
            raise GraphError(f"edge ({i}, {j}) out of range for order {order}")
        if i == j:
            raise GraphError(f"self-loop at vertex {i}")
        masks[i] |= 1 << j
        masks[j] |= 1 << i
    if labels is not None and len(labels) != order:
        raise GraphError("labels must name every vertex")
    return Graph(order, tuple(masks), tuple(labels) if labels is not None else None)


def from_masks(masks: Sequence[int]) -> Graph:
    return build_graph(len(masks), [(u, v) for u, m in enumerate(masks) for v in _bits(m) if u < v])


# -- families ---------------------------------------------------------------

def path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    return build_graph(n, [])


def complete_multipartite(*parts: int) -> Graph:
    """Complete multipartite graph; each part is a contiguous index block."""
    if not parts or any(p < 1 for p in parts):
        raise GraphError(f"part sizes must be positive, got {parts}")
    owner = [k for k, p in enumerate(parts) for _ in range(p)]
    n = len(owner)
    return build_graph(n, [(u, v) for u, v in combinations(range(n), 2) if owner[u] != owner[v]])


def wheel(n: int) -> Graph:
    """``C_n`` joined with a hub; the hub is the last vertex."""
    return join(cycle(n), complete(1))


def fan(n: int) -> Graph:
    """``P_n`` joined with a hub; the hub is the last vertex."""
    return join(path(n), complete(1))


def star(leaves: int) -> Graph:
    return complete_multipartite(1, leaves)


# -- operators ----------------------------------------------------------------

def complement(g: Graph) -> Graph:
    full = (1 << g.order) - 1
    return Graph(g.order, tuple(full & ~m & ~(1 << v) for v, m in enumerate(g.masks)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.order
    return build_graph(g.order + h.order, g.edges() + [(u + shift, v + shift) for u, v in h.edges()])


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of ``g`` and ``h`` plus every edge between them."""
    shift = g.order
    cross = [(u, shift + v) for u in range(g.order) for v in range(h.order)]
    return build_graph(
        g.order + h.order,
        g.edges() + [(u + shift, v + shift) for u, v in h.edges()] + cross,
    )


def lex_product(g: Graph, h: Graph) -> Graph:
    """Lexicographic product ``g[h]``.

    Vertex ``(i, j)`` (``i`` in ``g``, ``j`` in ``h``) sits at flat index
    ``i * h.order + j``, so each copy of ``h`` is a contiguous block.
    """
    m = h.order
    row = (1 << m) - 1
    masks = []
    for i in range(g.order):
        outer = 0
        for r in _bits(g.masks[i]):
            outer |= row << (r * m)
        for j in range(m):
            masks.append(outer | (h.masks[j] << (i * m)))
    return Graph(g.order * m, tuple(masks))


def lex_coords(index: int, m: int) -> tuple[int, int]:
    return divmod(index, m)


def lex_index(i: int, j: int, m: int) -> int:
    return i * m + j


def is_connected(g: Graph) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.masks[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << g.order) - 1


def labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labeled simple graph on ``n`` vertices, ``2 ** C(n, 2)`` of them."""
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        masks = [0] * n
        for k, (u, v) in enumerate(pairs):
            if code >> k & 1:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
        yield Graph(n, tuple(masks))
