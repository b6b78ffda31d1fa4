"""Closed-form values of metric and adjacency dimension for named families.

Queries are family expressions (see :mod:`lexidim.formats`). Anything outside a
formula's proven range raises :class:`FormulaNotApplicable`; nothing is
extrapolated.
"""

from __future__ import annotations

from .errors import FormulaNotApplicable
from .formats import Ast, parse_family_ast


def path_cycle_adjacency(n: int) -> int:
    """Adjacency dimension of ``P_n`` and ``C_n`` for ``n >= 4``."""
    if n < 4:
        raise FormulaNotApplicable(f"path/cycle adjacency formula needs n >= 4, got {n}")
    return (2 * n + 2) // 5


def multipartite(parts: tuple[int, ...]) -> int:
    """Both dimensions of ``K(m1, ..., mt)``: ``m - r - 1`` if some part is a singleton, else ``m - r``.

    ``r`` counts the parts of size at least 2 and ``m`` is the order.
    """
    m = sum(parts)
    if m < 2 or any(p < 1 for p in parts):
        raise FormulaNotApplicable(f"multipartite formula needs order >= 2, got parts {parts}")
    r = sum(1 for p in parts if p >= 2)
    return m - r if r == len(parts) else m - r - 1


def wheel(n: int) -> int:
    if n < 3 or n in (3, 6):
        raise FormulaNotApplicable(f"wheel formula excludes n in {{3, 6}} (and n < 3), got {n}")
    return (2 * n + 2) // 5


def fan(n: int) -> int:
    if n in (1, 2, 3, 6) or n < 1:
        raise FormulaNotApplicable(f"fan formula excludes n in {{1, 2, 3, 6}}, got {n}")
    return (2 * n + 2) // 5


def _twin_free_order(ast: Ast) -> int | None:
    """Order of ``P_n`` (``n >= 4``) or ``C_n`` (``n >= 5``), which have no twins."""
    tag = ast[0]
    if tag == "P" and ast[1] >= 4:
        return ast[1]
    if tag == "C" and ast[1] >= 5:
        return ast[1]
    return None


def adjacency_value(ast: Ast) -> int:
    tag = ast[0]
    if tag == "comp":
        return adjacency_value(ast[1])
    if tag == "P" and ast[1] in (2, 3):
        return 1
    if tag in ("P", "C"):
        return path_cycle_adjacency(ast[1])
    if tag in ("K", "E") and ast[1] >= 2:
        return ast[1] - 1
    if tag == "Kparts":
        return multipartite(ast[1])
    raise FormulaNotApplicable(f"no adjacency closed form for {ast!r}")


def metric_value(ast: Ast) -> int:
    tag = ast[0]
    if tag == "P" and ast[1] >= 2:
        return 1
    if tag == "K" and ast[1] >= 2:
        return ast[1] - 1
    if tag == "Kparts" and len(ast[1]) >= 2:
        return multipartite(ast[1])
    if tag == "wheel":
        return wheel(ast[1])
    if tag == "fan":
        return fan(ast[1])
    if tag == "lex":
        return _lex_value(ast[1], ast[2])
    raise FormulaNotApplicable(f"no metric closed form for {ast!r}")


def _lex_value(g: Ast, h: Ast) -> int:
    n = _twin_free_order(g)
    if n is not None:
        return n * adjacency_value(h)
    if g[0] == "K" and g[1] >= 2 and h[0] == "Kparts":
        parts = h[1]
        n, m = g[1], sum(parts)
        r = sum(1 for p in parts if p >= 2)
        if m < 2:
            raise FormulaNotApplicable("H needs order >= 2")
        return n * (m - r) if r == len(parts) else n * (m - r) - 1
    raise FormulaNotApplicable(f"no closed form for lex({g!r}, {h!r})")


def closed_form(query: str | Ast, kind: str = "metric") -> int:
    """Closed-form dimension for a family expression such as ``"wheel(7)"``.

    ``kind`` is ``"metric"`` or ``"adjacency"``.
    """
    ast = parse_family_ast(query) if isinstance(query, str) else query
    if kind == "adjacency":
        return adjacency_value(ast)
    if kind == "metric":
        return metric_value(ast)
    raise ValueError(f"kind must be 'metric' or 'adjacency', got {kind!r}")
