"""Twin vertices and the twin-class counting invariants.

Two distinct vertices are twins when their neighbourhoods agree once each is
removed from the other's. The twin classes partition the vertex set, and each
class is either a clique (type K) or an independent set (type N); singletons
are type 1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .errors import TwinStructureError
from .graph import Graph


class TwinType(str, enum.Enum):
    SINGLE = "1"
    CLIQUE = "K"
    INDEPENDENT = "N"


def are_twins(g: Graph, u: int, v: int) -> bool:
    if u == v:
        raise ValueError("twins are defined for distinct vertices")
    return g.masks[u] & ~(1 << v) == g.masks[v] & ~(1 << u)


@dataclass(frozen=True)
class TwinPartition:
    order: int
    classes: tuple[tuple[int, ...], ...]
    types: tuple[TwinType, ...]

    @property
    def iota(self) -> int:
        return len(self.classes)

    @property
    def iota_k(self) -> int:
        return self.types.count(TwinType.CLIQUE)

    @property
    def iota_n(self) -> int:
        return self.types.count(TwinType.INDEPENDENT)

    @property
    def a(self) -> int:
        """Vertices lying in clique classes."""
        return len(self.k_vertices)

    @property
    def b(self) -> int:
        """Vertices lying in independent classes."""
        return len(self.n_vertices)

    @cached_property
    def k_vertices(self) -> frozenset[int]:
        return frozenset(v for c, t in zip(self.classes, self.types) if t is TwinType.CLIQUE for v in c)

    @cached_property
    def n_vertices(self) -> frozenset[int]:
        return frozenset(
            v for c, t in zip(self.classes, self.types) if t is TwinType.INDEPENDENT for v in c
        )

    @cached_property
    def class_of(self) -> tuple[int, ...]:
        owner = [0] * self.order
        for k, c in enumerate(self.classes):
            for v in c:
                owner[v] = k
        return tuple(owner)

    def non_representatives(self, kind: TwinType) -> list[int]:
        """Members of ``kind`` classes other than each class's smallest vertex."""
        return sorted(v for c, t in zip(self.classes, self.types) if t is kind for v in c[1:])

    def is_twin_free(self) -> bool:
        return self.iota == self.order

    def as_dict(self) -> dict:
        return {
            "classes": [list(c) for c in self.classes],
            "types": [t.value for t in self.types],
            "iota": self.iota,
            "iota_K": self.iota_k,
            "iota_N": self.iota_n,
            "a": self.a,
            "b": self.b,
        }


def twin_partition(g: Graph) -> TwinPartition:
    """Group vertices into twin classes, ordered by smallest member.

    Classes come from the transitive closure of the pairwise relation, and the
    clique/independent tag is checked against the graph rather than assumed.
    """
    n = g.order
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in combinations(range(n), 2):
        if are_twins(g, u, v):
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)

    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    classes = tuple(tuple(c) for c in sorted(groups.values()))

    types = []
    for c in classes:
        if len(c) == 1:
            types.append(TwinType.SINGLE)
            continue
        pairs = list(combinations(c, 2))
        if all(g.adjacent(u, v) for u, v in pairs):
            types.append(TwinType.CLIQUE)
        elif not any(g.adjacent(u, v) for u, v in pairs):
            types.append(TwinType.INDEPENDENT)
        else:
            raise TwinStructureError(f"twin class {c} is neither a clique nor independent")
    return TwinPartition(n, classes, tuple(types))
