"""Metric dimension of lexicographic products ``G[H]``.

The value of ``beta(G[H])`` for connected ``G`` of order ``n >= 2`` depends on
two things. The first is whether the adjacency bases of ``H`` can avoid an
all-1 outside vertex (adjacent to every landmark) or an all-2 one (adjacent to
none). The second is the twin structure of ``G``. With ``k = beta_2(H)``:

=============  ==========================================  ==========================
case           adjacency bases of ``H``                    ``beta(G[H])``
=============  ==========================================  ==========================
``avoidable``  some basis has no all-1 vertex, and          ``n*k``
               some basis has no all-2 vertex
``both``       every basis has an all-1 and an all-2        ``n*(k+1) - iota(G)``
``ones``       every basis has an all-1, some has no all-2  ``n*k + a(G) - iota_K(G)``
``twos``       every basis has an all-2, some has no all-1  ``n*k + b(G) - iota_N(G)``
=============  ==========================================  ==========================

Product vertex ``(i, j)`` is flat index ``i*m + j`` (see
:func:`lexidim.graph.lex_product`).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from . import resolving
from .errors import GraphError, OracleCapExceeded
from .graph import Graph, complement, is_connected, lex_product
from .resolving import VertexSet, adjacency_representation, is_resolving
from .twins import TwinPartition, TwinType, twin_partition


class Case(str, enum.Enum):
    AVOIDABLE = "avoidable"
    BOTH = "both"
    ONES = "ones"
    TWOS = "twos"


def row(i: int, m: int) -> VertexSet:
    return tuple(range(i * m, (i + 1) * m))


def project_onto_h(s: VertexSet, i: int, m: int) -> VertexSet:
    """Columns ``j`` with ``(i, j)`` in ``s``."""
    lo = i * m
    return tuple(sorted(x - lo for x in s if lo <= x < lo + m))


@dataclass(frozen=True)
class BasisProfile:
    basis: VertexSet
    all_one: int | None  # smallest vertex adjacent to every landmark
    all_two: int | None  # smallest vertex adjacent to no landmark

    @property
    def has_all_one(self) -> bool:
        return self.all_one is not None

    @property
    def has_all_two(self) -> bool:
        return self.all_two is not None


def profile_basis(h: Graph, basis: VertexSet) -> BasisProfile:
    inside = set(basis)
    ones = twos = None
    for u in range(h.order):
        if u in inside:
            continue
        rep = adjacency_representation(h, u, basis)
        if ones is None and all(x == 1 for x in rep):
            ones = u
        if twos is None and all(x == 2 for x in rep):
            twos = u
    return BasisProfile(tuple(basis), ones, twos)


@dataclass(frozen=True)
class HClassification:
    beta2: int
    profiles: tuple[BasisProfile, ...]
    case: Case
    w1: VertexSet
    w2: VertexSet
    all_one: int | None = None  # used by the ``both`` and ``ones`` constructions
    all_two: int | None = None  # used by the ``both`` and ``twos`` constructions

    def as_dict(self) -> dict:
        return {
            "beta2": self.beta2,
            "case": self.case.value,
            "W1": list(self.w1),
            "W2": list(self.w2),
            "all_one_vertex": self.all_one,
            "all_two_vertex": self.all_two,
            "bases": [
                {"basis": list(p.basis), "all_one": p.all_one, "all_two": p.all_two}
                for p in self.profiles
            ],
        }


def classify_h(h: Graph, cap: int | None = None) -> HClassification:
    """Profile every adjacency basis of ``h`` and pick the matching case.

    The certifying bases are the lexicographically first qualifying ones. In
    the avoidable case a single basis with neither kind of vertex is used for
    both roles when one exists.
    """
    bases = resolving.enumerate_adjacency_bases(h, cap=cap)
    profiles = tuple(profile_basis(h, b) for b in bases)
    no_one = [p for p in profiles if not p.has_all_one]
    no_two = [p for p in profiles if not p.has_all_two]
    beta2 = len(bases[0])

    if no_one and no_two:
        clean = [p for p in profiles if not p.has_all_one and not p.has_all_two]
        if clean:
            return HClassification(beta2, profiles, Case.AVOIDABLE, clean[0].basis, clean[0].basis)
        return HClassification(beta2, profiles, Case.AVOIDABLE, no_one[0].basis, no_two[0].basis)
    if not no_one and not no_two:
        p = profiles[0]
        return HClassification(beta2, profiles, Case.BOTH, p.basis, p.basis, p.all_one, p.all_two)
    if not no_one:
        p = no_two[0]
        return HClassification(beta2, profiles, Case.ONES, p.basis, p.basis, all_one=p.all_one)
    p = no_one[0]
    return HClassification(beta2, profiles, Case.TWOS, p.basis, p.basis, all_two=p.all_two)


def formula_value(n: int, cls: HClassification, tw: TwinPartition) -> int:
    k = cls.beta2
    if cls.case is Case.AVOIDABLE:
        return n * k
    if cls.case is Case.BOTH:
        return n * (k + 1) - tw.iota
    if cls.case is Case.ONES:
        return n * k + tw.a - tw.iota_k
    return n * k + tw.b - tw.iota_n


def construct_witness(g: Graph, h: Graph, cls: HClassification, tw: TwinPartition | None = None) -> VertexSet:
    """Explicit resolving set of ``g[h]`` whose size is the case formula.

    ``avoidable``: columns ``W1`` on rows of vertices with an adjacent twin and
    columns ``W2`` on all other rows. Otherwise the basis ``W`` on every row,
    plus the all-1 column on each non-representative member of a clique class
    (cases ``both``, ``ones``) and the all-2 column on each non-representative
    member of an independent class (cases ``both``, ``twos``). Representatives
    are the smallest class members.
    """
    tw = tw or twin_partition(g)
    m = h.order
    s: set[int] = set()
    if cls.case is Case.AVOIDABLE:
        for i in range(g.order):
            cols = cls.w1 if i in tw.k_vertices else cls.w2
            s.update(i * m + j for j in cols)
        return tuple(sorted(s))

    for i in range(g.order):
        s.update(i * m + j for j in cls.w1)
    if cls.case in (Case.BOTH, Case.ONES):
        s.update(t * m + cls.all_one for t in tw.non_representatives(TwinType.CLIQUE))
    if cls.case in (Case.BOTH, Case.TWOS):
        s.update(t * m + cls.all_two for t in tw.non_representatives(TwinType.INDEPENDENT))
    return tuple(sorted(s))


@dataclass(frozen=True)
class LexReport:
    n: int
    m: int
    classification: HClassification | None
    formula_value: int
    witness: VertexSet
    twin_stats: TwinPartition
    oracle_value: int | None = None
    oracle_witness: VertexSet | None = None
    notes: tuple[str, ...] = field(default=())

    @property
    def case(self) -> str:
        return self.classification.case.value if self.classification else "direct"

    @property
    def verified(self) -> bool | None:
        if self.oracle_value is None:
            return None
        return self.oracle_value == self.formula_value

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "case": self.case,
            "formula_value": self.formula_value,
            "witness": list(self.witness),
            "oracle_value": self.oracle_value,
            "verified": self.verified,
            "classification": self.classification.as_dict() if self.classification else None,
            "twins_of_G": self.twin_stats.as_dict(),
            "notes": list(self.notes),
        }


def lex_dimension(
    g: Graph,
    h: Graph,
    verify: bool = False,
    cap: int | None = None,
    enum_cap: int | None = None,
) -> LexReport:
    """``beta(g[h])`` from the case dispatch, with a constructed witness.

    When ``g`` or ``h`` has a single vertex the product is a copy of the other
    factor. The theorems do not cover that case, so the value comes from the
    exact solver instead, and ``classification`` is ``None``.
    With ``verify`` the product is also solved exactly, unless it exceeds
    ``cap``, in which case ``oracle_value`` stays ``None``.
    """
    tw = twin_partition(g)
    cls = None
    notes: tuple[str, ...] = ()
    if g.order == 1:
        if h.order < 2 or not is_connected(h):
            raise GraphError("with a one-vertex G the product is H, which must be connected")
        res = resolving.dimension(h, cap=cap)
        value, witness = res.value, res.witness
        notes = ("G has one vertex: product equals H, solved exactly",)
    elif not is_connected(g):
        raise GraphError("G must be connected")
    elif h.order == 1:
        res = resolving.dimension(g, cap=cap)
        value, witness = res.value, res.witness
        notes = ("H has one vertex: product equals G, solved exactly",)
    else:
        cls = classify_h(h, cap=enum_cap)
        value = formula_value(g.order, cls, tw)
        witness = construct_witness(g, h, cls, tw)

    oracle = oracle_witness = None
    if verify:
        try:
            res = resolving.dimension(lex_product(g, h), cap=cap)
            oracle, oracle_witness = res.value, res.witness
        except OracleCapExceeded as exc:
            notes += (str(exc),)
    return LexReport(g.order, h.order, cls, value, witness, tw, oracle, oracle_witness, notes)


def witness_is_sound(g: Graph, h: Graph, report: LexReport) -> bool:
    product = lex_product(g, h)
    return len(report.witness) == report.formula_value and is_resolving(product, report.witness)


def lex_distance(g: Graph, h: Graph, x: int, y: int) -> int:
    """Distance in ``g[h]`` from the factor data alone (``g`` connected, order >= 2)."""
    m = h.order
    i, j = divmod(x, m)
    r, s = divmod(y, m)
    if i != r:
        return int(g.distances[i][r])
    return resolving.adjacency_value(h, j, s)


def complement_formula_agrees(g: Graph, h: Graph) -> bool:
    """Formula value for ``g[h]`` equals that for ``g[complement(h)]``."""
    tw = twin_partition(g)
    a = formula_value(g.order, classify_h(h), tw)
    b = formula_value(g.order, classify_h(complement(h)), tw)
    return a == b
