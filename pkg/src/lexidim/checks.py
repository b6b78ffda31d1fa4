"""Identity checks run over graph corpora by ``lexidim survey``.

Each check returns ``None`` when its preconditions do not hold for the input
(the row is reported as skipped), otherwise a list of violation messages that
is empty on success.
"""

from __future__ import annotations

from itertools import combinations
from typing import Callable

from . import lex
from .graph import INF, Graph, complement, complete, is_connected, join, lex_product
from .resolving import (
    adjacency_representation,
    dimension,
    enumerate_adjacency_bases,
    enumerate_bases,
    is_resolving,
    smaller_sets_fail,
)
from .twins import TwinType, are_twins, twin_partition


# -- single-graph checks -------------------------------------------------------------

def check_distances(g: Graph) -> list[str]:
    d = g.distances
    out = []
    for u in range(g.order):
        if d[u][u] != 0:
            out.append(f"d({u},{u}) != 0")
        for v in range(g.order):
            if d[u][v] != d[v][u]:
                out.append(f"d({u},{v}) asymmetric")
            if u != v and (d[u][v] == 1) != g.adjacent(u, v):
                out.append(f"d({u},{v}) = 1 disagrees with adjacency")
            for w in range(g.order):
                if d[u][w] != INF and d[w][v] != INF and d[u][v] > d[u][w] + d[w][v]:
                    out.append(f"triangle inequality fails at {u},{w},{v}")
    return out


def check_twin_identity(g: Graph) -> list[str]:
    tw = twin_partition(g)
    lhs = tw.iota
    rhs = g.order - tw.a - tw.b + tw.iota_n + tw.iota_k
    out = [] if lhs == rhs else [f"iota {lhs} != n - a - b + iota_N + iota_K = {rhs}"]
    for c, t in zip(tw.classes, tw.types):
        if (t is TwinType.SINGLE) != (len(c) == 1):
            out.append(f"class {c} tagged {t.value}")
    return out


def check_twin_equivalence(g: Graph) -> list[str]:
    n = g.order

    def rel(u: int, v: int) -> bool:
        return u == v or are_twins(g, u, v)

    out = []
    for u, v in combinations(range(n), 2):
        if rel(u, v) != rel(v, u):
            out.append(f"twin relation not symmetric on {u},{v}")
    for u in range(n):
        for v in range(n):
            for w in range(n):
                if rel(u, v) and rel(v, w) and not rel(u, w):
                    out.append(f"twin relation not transitive on {u},{v},{w}")
    return out


def check_twin_swap(g: Graph) -> list[str]:
    """Resolving sets contain one of any two twins, and may trade one twin for the other."""
    n = g.order
    kinds = ["adjacency"] + (["metric"] if is_connected(g) else [])
    twins = [(u, v) for u, v in combinations(range(n), 2) if are_twins(g, u, v)]
    out = []
    for kind in kinds:
        for code in range(1, 1 << n):
            w = [x for x in range(n) if code >> x & 1]
            if not is_resolving(g, w, kind):
                continue
            for u, v in twins:
                for a, b in ((u, v), (v, u)):
                    if a not in w and b not in w:
                        out.append(f"{kind} resolving set {w} misses twins {a},{b}")
                    if a in w and b not in w:
                        swapped = sorted((set(w) - {a}) | {b})
                        if not is_resolving(g, swapped, kind):
                            out.append(f"{kind}: swapping {a}->{b} in {w} breaks resolution")
    return out


def check_complement_invariance(g: Graph) -> list[str] | None:
    if g.order < 2:
        return None
    a = dimension(g, "adjacency").value
    b = dimension(complement(g), "adjacency").value
    return [] if a == b else [f"beta2 {a} != beta2 of complement {b}"]


def check_metric_le_adjacency(g: Graph) -> list[str] | None:
    if g.order < 2 or not is_connected(g):
        return None
    a = dimension(g, "metric").value
    b = dimension(g, "adjacency").value
    return [] if a <= b else [f"beta {a} > beta2 {b}"]


def check_diameter_two(g: Graph) -> list[str] | None:
    if g.order < 2 or not is_connected(g) or g.diameter() != 2:
        return None
    a = dimension(g, "metric").value
    b = dimension(g, "adjacency").value
    return [] if a == b else [f"diameter 2 but beta {a} != beta2 {b}"]


def in_extremal_one_list(g: Graph) -> bool:
    """Whether ``g`` is ``P_2``, ``P_3`` or the complement of one (order >= 2)."""
    if g.order == 2:
        return True
    return g.order == 3 and g.size in (1, 2)


def check_extremal_adjacency(g: Graph) -> list[str] | None:
    if g.order < 2:
        return None
    n = g.order
    b2 = dimension(g, "adjacency").value
    out = []
    if (b2 == 1) != in_extremal_one_list(g):
        out.append(f"beta2 = {b2} but membership in the beta2 = 1 list is {in_extremal_one_list(g)}")
    full_or_empty = g.size in (0, n * (n - 1) // 2)
    if (b2 == n - 1) != full_or_empty:
        out.append(f"beta2 = {b2}, n - 1 = {n - 1}, complete-or-empty = {full_or_empty}")
    return out


def has_clean_basis(g: Graph, bases: list[tuple[int, ...]]) -> bool:
    """Some adjacency basis leaves no vertex adjacent to all of its landmarks."""
    for b in bases:
        inside = set(b)
        if not any(
            all(x == 1 for x in adjacency_representation(g, v, b))
            for v in range(g.order) if v not in inside
        ):
            return True
    return False


def check_join_bounds(g: Graph) -> list[str] | None:
    if g.order < 2:
        return None
    b2 = dimension(g, "adjacency").value
    bj = dimension(join(g, complete(1)), "metric").value
    out = []
    if not bj - 1 <= b2 <= bj:
        out.append(f"beta(G+K1) = {bj} and beta2 = {b2} violate beta(G+K1)-1 <= beta2 <= beta(G+K1)")
    clean = has_clean_basis(g, enumerate_adjacency_bases(g, cap=max(g.order, 12)))
    if (b2 == bj) != clean:
        out.append(f"equality {b2 == bj} but clean adjacency basis exists = {clean}")
    return out


def check_universal_vertex(g: Graph) -> list[str] | None:
    n = g.order
    if n < 2 or not is_connected(g):
        return None
    universal = [u for u in range(n) if g.degree(u) == n - 1]
    if not universal:
        return None
    bases = enumerate_bases(g, "metric", cap=max(n, 12))
    return [f"every basis contains universal vertex {u}" for u in universal
            if all(u in b for b in bases)]


def check_oracle_minimality(g: Graph) -> list[str] | None:
    if g.order < 2:
        return None
    out = []
    for kind in ("metric", "adjacency"):
        if kind == "metric" and not is_connected(g):
            continue
        res = dimension(g, kind)
        if not is_resolving(g, res.witness, kind):
            out.append(f"{kind} witness {res.witness} does not resolve")
        if not smaller_sets_fail(g, res):
            out.append(f"{kind}: a set of size {res.value - 1} resolves")
    return out


GRAPH_CHECKS: dict[str, Callable[[Graph], list[str] | None]] = {
    "distances": check_distances,
    "twin-identity": check_twin_identity,
    "twin-equivalence": check_twin_equivalence,
    "twin-swap": check_twin_swap,
    "complement-invariance": check_complement_invariance,
    "metric-le-adjacency": check_metric_le_adjacency,
    "diameter-two": check_diameter_two,
    "extremal-adjacency": check_extremal_adjacency,
    "join-bounds": check_join_bounds,
    "universal-vertex": check_universal_vertex,
    "oracle-minimality": check_oracle_minimality,
}


# -- pair checks ----------------------------------------------------------------------

def _pair_ok(g: Graph, h: Graph) -> bool:
    return g.order >= 2 and is_connected(g)


def check_lex_formula(g: Graph, h: Graph) -> list[str] | None:
    if not _pair_ok(g, h):
        return None
    rep = lex.lex_dimension(g, h, verify=True, cap=max(24, g.order * h.order))
    if rep.oracle_value != rep.formula_value:
        return [f"case {rep.case}: formula {rep.formula_value} != oracle {rep.oracle_value}"]
    return []


def check_lex_witness(g: Graph, h: Graph) -> list[str] | None:
    if not _pair_ok(g, h) or h.order < 2:
        return None
    rep = lex.lex_dimension(g, h)
    return [] if lex.witness_is_sound(g, h, rep) else [
        f"case {rep.case}: witness {rep.witness} fails (size {len(rep.witness)}, formula {rep.formula_value})"
    ]


def check_row_projection(g: Graph, h: Graph) -> list[str] | None:
    """Every basis of ``g[h]`` projects to adjacency resolving sets on every row."""
    if not _pair_ok(g, h) or h.order < 2:
        return None
    n, m = g.order, h.order
    product = lex_product(g, h)
    bases = enumerate_bases(product, "metric", cap=max(12, n * m))
    b2 = dimension(h, "adjacency").value
    out = []
    if len(bases[0]) < n * b2:
        out.append(f"beta(G[H]) = {len(bases[0])} < n * beta2(H) = {n * b2}")
    for b in bases:
        for i in range(n):
            proj = lex.project_onto_h(b, i, m)
            if not is_resolving(h, proj, "adjacency"):
                out.append(f"basis {b}: row {i} projection {proj} does not resolve H")
    return out


def check_lex_complement(g: Graph, h: Graph) -> list[str] | None:
    if not _pair_ok(g, h) or h.order < 2:
        return None
    cls = lex.classify_h(h)
    if cls.case not in (lex.Case.AVOIDABLE, lex.Case.BOTH):
        return None
    return [] if lex.complement_formula_agrees(g, h) else ["formula differs for the complement of H"]


def check_twin_free_collapse(g: Graph, h: Graph) -> list[str] | None:
    if not _pair_ok(g, h) or h.order < 2 or not twin_partition(g).is_twin_free():
        return None
    rep = lex.lex_dimension(g, h)
    expected = g.order * rep.classification.beta2
    return [] if rep.formula_value == expected else [f"twin-free G but {rep.formula_value} != {expected}"]


def check_lex_distance(g: Graph, h: Graph) -> list[str] | None:
    if not _pair_ok(g, h):
        return None
    product = lex_product(g, h)
    d = product.distances
    return [
        f"d({x},{y}) = {d[x][y]} but factor formula gives {lex.lex_distance(g, h, x, y)}"
        for x in range(product.order) for y in range(product.order)
        if d[x][y] != lex.lex_distance(g, h, x, y)
    ]


PAIR_CHECKS: dict[str, Callable[[Graph, Graph], list[str] | None]] = {
    "lex-formula": check_lex_formula,
    "lex-witness": check_lex_witness,
    "row-projection": check_row_projection,
    "lex-complement": check_lex_complement,
    "twin-free-collapse": check_twin_free_collapse,
    "lex-distance": check_lex_distance,
}
