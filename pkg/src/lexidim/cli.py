"""``lexidim`` command-line interface.

Exit codes: 0 success, 1 input error, 2 verification failure, 3 cap exceeded.
Caps default to the ``LEXIDIM_SEARCH_CAP`` / ``LEXIDIM_ENUM_CAP`` environment
variables and can be overridden with ``--cap`` / ``--enum-cap``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Iterator

from . import checks, formats, lex, resolving
from .errors import GraphError, OracleCapExceeded
from .graph import Graph, is_connected, labeled_graphs

EXIT_OK, EXIT_INPUT, EXIT_VERIFY, EXIT_CAP = 0, 1, 2, 3


class InputError(Exception):
    pass


def _env_cap(name: str, default: int) -> int:
    return int(os.environ.get(f"LEXIDIM_{name}", default))


def load_graph(arg: str) -> Graph:
    """Family expression, edge list, graph6 string, or ``@file`` holding one graph."""
    try:
        if arg.startswith("@"):
            path = Path(arg[1:])
            lines = [ln for ln in path.read_text().splitlines() if ln.strip()]
            if path.suffix == ".edges":
                return formats.parse_edge_list(" ".join(lines))
            if len(lines) != 1:
                raise InputError(f"{path}: expected exactly one graph, found {len(lines)} lines")
            return formats.parse_graph6(lines[0])
        return formats.parse(arg, formats.guess_format(arg))
    except OSError as exc:
        raise InputError(str(exc)) from exc
    except GraphError as exc:
        raise InputError(f"{arg!r}: {exc}") from exc


def _caps(args: argparse.Namespace) -> dict:
    return {"search": args.cap, "enumerate": args.enum_cap}


def _emit(args: argparse.Namespace, report: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(report, indent=2, default=str))
    else:
        print("\n".join(lines))


def _report(command: str, inputs: list[str], args, t0: float, **fields) -> dict:
    out = {
        "command": command,
        "inputs": inputs,
        "result": fields.pop("result", None),
        "witness": fields.pop("witness", None),
        "oracle": fields.pop("oracle", None),
        "case": fields.pop("case", None),
        "timings_ms": round((time.perf_counter() - t0) * 1000, 3),
        "caps": _caps(args),
    }
    out.update(fields)
    return out


def cmd_dim(args: argparse.Namespace) -> int:
    t0 = time.perf_counter()
    g = load_graph(args.graph)
    kind = "adjacency" if args.adj else "metric"
    if kind == "metric" and not is_connected(g):
        raise InputError("metric dimension needs a connected graph (use --adj)")
    cap = args.enum_cap if args.all else args.cap
    res = resolving.dimension(g, kind, enumerate_all=args.all, cap=max(cap, 1))
    report = _report("dim", [args.graph], args, t0, result=res.as_dict(), witness=list(res.witness))
    lines = [f"{'beta2' if args.adj else 'beta'} = {res.value}", f"witness: {list(res.witness)}"]
    if res.all_bases is not None:
        lines.append(f"bases ({len(res.all_bases)}):")
        lines += [f"  {list(b)}" for b in res.all_bases]
    _emit(args, report, lines)
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    t0 = time.perf_counter()
    h = load_graph(args.graph)
    if h.order < 2:
        raise InputError("classification needs order >= 2")
    cls = lex.classify_h(h, cap=args.enum_cap)
    report = _report("classify", [args.graph], args, t0, result=cls.as_dict(), case=cls.case.value)
    lines = [
        f"beta2 = {cls.beta2}",
        f"case: {cls.case.value}",
        f"W1 = {list(cls.w1)}  W2 = {list(cls.w2)}",
        "basis            all-1  all-2",
    ]
    for p in cls.profiles:
        lines.append(f"  {str(list(p.basis)):<15}{str(p.all_one):>5}  {str(p.all_two):>5}")
    _emit(args, report, lines)
    return EXIT_OK


def _lex_report(args: argparse.Namespace, verify: bool) -> tuple[lex.LexReport, Graph, Graph]:
    g, h = load_graph(args.g), load_graph(args.h)
    if not is_connected(g):
        raise InputError("G must be connected")
    return lex.lex_dimension(g, h, verify=verify, cap=args.cap, enum_cap=args.enum_cap), g, h


def cmd_lex(args: argparse.Namespace) -> int:
    t0 = time.perf_counter()
    rep, g, h = _lex_report(args, args.verify)
    sound = rep.m == 1 or rep.n == 1 or lex.witness_is_sound(g, h, rep)
    report = _report(
        "lex", [args.g, args.h], args, t0,
        result=rep.as_dict(), witness=list(rep.witness), oracle=rep.oracle_value,
        case=rep.case, witness_resolves=sound,
    )
    lines = [f"case: {rep.case}", f"beta(G[H]) = {rep.formula_value}", f"witness: {list(rep.witness)}"]
    lines += [f"note: {n}" for n in rep.notes]
    code = EXIT_OK if sound else EXIT_VERIFY
    if args.verify:
        if rep.oracle_value is None:
            lines.append("oracle: skipped (cap)")
            code = max(code, EXIT_CAP)
        else:
            ok = rep.verified
            lines.append(f"oracle: {rep.oracle_value}  {'PASS' if ok else 'FAIL'}")
            if not ok:
                code = EXIT_VERIFY
    _emit(args, report, lines)
    return code


def cmd_construct(args: argparse.Namespace) -> int:
    t0 = time.perf_counter()
    rep, g, h = _lex_report(args, False)
    pairs = [list(divmod(x, rep.m)) for x in rep.witness]
    report = _report("construct", [args.g, args.h], args, t0, result={"pairs": pairs},
                     witness=list(rep.witness), case=rep.case)
    _emit(args, report, [" ".join(f"({i},{j})" for i, j in pairs)])
    return EXIT_OK


# -- survey ---------------------------------------------------------------------------

def _corpus(path: str) -> Iterator[tuple[int, Graph | None, str]]:
    for lineno, line in enumerate(Path(path).read_text().splitlines(), start=1):
        if not line.strip():
            continue
        try:
            yield lineno, formats.parse_graph6(line), line.strip()
        except GraphError as exc:
            yield lineno, None, f"line {lineno}: {exc}"


def _run_graph_row(item: tuple[str, Graph, list[str]]) -> dict:
    label, g, names = item
    return {"graph": label, "checks": {name: _outcome(checks.GRAPH_CHECKS[name](g)) for name in names}}


def _run_pair_row(item: tuple[str, Graph, Graph, list[str]]) -> dict:
    label, g, h, names = item
    return {"pair": label, "checks": {name: _outcome(checks.PAIR_CHECKS[name](g, h)) for name in names}}


def _outcome(result: list[str] | None) -> str | list[str]:
    if result is None:
        return "skip"
    return "pass" if not result else result


def cmd_survey(args: argparse.Namespace) -> int:
    t0 = time.perf_counter()
    selected = args.check or (["lex-formula"] if args.pairs else ["twin-identity"])
    table = checks.PAIR_CHECKS if args.pairs else checks.GRAPH_CHECKS
    unknown = [c for c in selected if c not in table]
    if unknown:
        raise InputError(f"unknown check(s) {unknown}; available: {sorted(table)}")

    errors: list[str] = []
    if args.pairs:
        gs = [g for n in range(2, args.g_upto + 1) for g in labeled_graphs(n) if is_connected(g)]
        hs = [h for m in range(1, args.h_upto + 1) for h in labeled_graphs(m)]
        items = [
            (f"{formats.emit_graph6(g)} {formats.emit_graph6(h)}", g, h, selected) for g in gs for h in hs
        ]
        worker = _run_pair_row
    else:
        graphs: list[tuple[str, Graph]] = []
        if args.corpus:
            for _, g, label in _corpus(args.corpus):
                if g is None:
                    errors.append(label)
                else:
                    graphs.append((label, g))
        lo = args.labeled if args.labeled else 1
        hi = args.labeled if args.labeled else args.labeled_upto
        if hi:
            graphs += [(formats.emit_graph6(g), g) for n in range(lo, hi + 1) for g in labeled_graphs(n)]
        if not graphs and not errors:
            raise InputError("nothing to survey: give a corpus file, --labeled(-upto), or --pairs")
        items = [(label, g, selected) for label, g in graphs]
        worker = _run_graph_row

    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            rows = list(pool.map(worker, items, chunksize=64))
    else:
        rows = [worker(it) for it in items]

    violations = sum(1 for r in rows for v in r["checks"].values() if isinstance(v, list))
    summary = {
        "rows": len(rows),
        "violations": violations,
        "skipped": {c: sum(1 for r in rows if r["checks"][c] == "skip") for c in selected},
        "input_errors": errors,
    }
    report = _report("survey", [args.corpus] if args.corpus else [], args, t0,
                     result={"summary": summary, "rows": rows if args.rows else None})
    lines = [f"checks: {', '.join(selected)}", f"rows: {len(rows)}", f"violations: {violations}"]
    for r in rows:
        for name, v in r["checks"].items():
            if isinstance(v, list):
                lines.append(f"  {r.get('graph') or r.get('pair')} {name}: {v[0]}")
    lines += [f"input error: {e}" for e in errors]
    _emit(args, report, lines)
    if violations:
        return EXIT_VERIFY
    return EXIT_INPUT if errors else EXIT_OK


# -- entry point ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--cap", type=int, default=_env_cap("SEARCH_CAP", resolving.DEFAULT_SEARCH_CAP),
                        help="largest order the exact search accepts")
    common.add_argument("--enum-cap", type=int, default=_env_cap("ENUM_CAP", resolving.DEFAULT_ENUM_CAP),
                        help="largest order for listing every basis")

    p = argparse.ArgumentParser(prog="lexidim", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("dim", parents=[common], help="metric or adjacency dimension")
    d.add_argument("graph")
    d.add_argument("--adj", action="store_true", help="adjacency dimension")
    d.add_argument("--all", action="store_true", help="list every basis")
    d.set_defaults(func=cmd_dim)

    c = sub.add_parser("classify", parents=[common], help="profile the adjacency bases of H")
    c.add_argument("graph")
    c.set_defaults(func=cmd_classify)

    for name, func, text in (("lex", cmd_lex, "dimension of G[H]"),
                             ("construct", cmd_construct, "resolving set of G[H] only")):
        s = sub.add_parser(name, parents=[common], help=text)
        s.add_argument("g")
        s.add_argument("h")
        if name == "lex":
            s.add_argument("--verify", action="store_true", help="compare with the exact solver")
        s.set_defaults(func=func)

    s = sub.add_parser("survey", parents=[common], help="run identity checks over many graphs")
    s.add_argument("corpus", nargs="?", help="graph6 file, one graph per line")
    s.add_argument("--labeled-upto", type=int, default=0, metavar="N",
                   help="every labeled graph of order 1..N")
    s.add_argument("--labeled", type=int, default=0, metavar="N", help="every labeled graph of order N")
    s.add_argument("--pairs", action="store_true", help="survey (G, H) pairs instead of graphs")
    s.add_argument("--g-upto", type=int, default=3)
    s.add_argument("--h-upto", type=int, default=3)
    s.add_argument("--check", action="append",
                   help=f"graph checks: {', '.join(checks.GRAPH_CHECKS)}; "
                        f"pair checks: {', '.join(checks.PAIR_CHECKS)}")
    s.add_argument("--rows", action="store_true", help="include per-row results in JSON")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_survey)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OracleCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
