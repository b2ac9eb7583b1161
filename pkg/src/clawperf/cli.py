"""Command-line entry point.

Every subcommand writes one JSON document (or a graph6/DOT line for
``generate`` and ``catalog export-dot``) to stdout.  Exit status: 0 for an
affirmative answer, 1 for a negative finding, 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import catalog as cat
from .classify import classify_pair, verdict
from .enumeration import EnumerationQuery, EnumerationStats, collect
from .families import FamilySpec, build_family, recognize_inflation
from .graph import Graph, GraphError, parse_graph_text, to_dot, to_graph6
from .holes import is_perfect
from .iso import are_isomorphic, canonical_form
from . import sweeps

log = logging.getLogger("clawperf")


class InputError(Exception):
    pass


def load_graph(spec: str) -> Graph:
    """``@name`` for catalog graphs, else a file (graph6 or edge list), else
    a raw graph6 string."""
    try:
        if spec.startswith("@"):
            return cat.named(spec[1:])
        p = Path(spec)
        if p.is_file():
            return parse_graph_text(p.read_text())
        return parse_graph_text(spec)
    except (GraphError, OSError, UnicodeDecodeError) as exc:
        raise InputError(f"{spec}: {exc}") from None


def _emit(payload) -> None:
    json.dump(payload, sys.stdout, sort_keys=False)
    sys.stdout.write("\n")


# --------------------------------------------------------------- commands

def cmd_classify_pair(a) -> int:
    X = load_graph(a.x)
    _emit(classify_pair(X, a.alpha).as_dict())
    return 0


def cmd_verdict(a) -> int:
    G, X = load_graph(a.graph), load_graph(a.x)
    v = verdict(G, X)
    _emit(v.as_dict())
    return 0 if v.in_class and v.outcome == "Perfect" else 1


def cmd_find_hole(a) -> int:
    G = load_graph(a.graph)
    perfect, cert = is_perfect(G)
    if perfect:
        _emit({"perfect": True})
        return 0
    _emit({"perfect": False, **cert.as_dict()})
    return 1


def cmd_generate(a) -> int:
    try:
        if a.family == "inflation":
            if not a.multiplicities:
                raise InputError("inflation needs --multiplicities")
            m = tuple(int(x) for x in a.multiplicities.split(","))
            spec = FamilySpec("inflation", multiplicities=m)
        else:
            if a.param is None:
                raise InputError(f"{a.family} needs --param")
            spec = FamilySpec(a.family, a.param)
        G = build_family(spec)
    except (GraphError, ValueError) as exc:
        raise InputError(str(exc)) from None
    name = a.family if a.family == "inflation" else f"{a.family}_{a.param}"
    sys.stdout.write(to_dot(G, name) if a.dot else to_graph6(G) + "\n")
    return 0


def cmd_recognize(a) -> int:
    rec = recognize_inflation(load_graph(a.graph))
    if rec is None:
        _emit({"inflation": False, "reason": "not an inflation"})
        return 1
    _emit({"inflation": True, "k": rec[0], "multiplicities": list(rec[1])})
    return 0


def cmd_enumerate(a) -> int:
    forbid = [load_graph(f) for f in a.forbid]
    try:
        q = EnumerationQuery(
            n_max=a.n_max, forbidden=tuple(forbid), require_connected=a.connected,
            min_alpha=a.min_alpha, exclude_odd_cycles=a.exclude_odd_cycles, n_min=a.n_min,
        )
    except GraphError as exc:
        raise InputError(str(exc)) from None
    st = EnumerationStats()
    graphs = collect(q, workers=a.workers, stats=st)
    report = {**st.as_dict(), "count": len(graphs)}
    if not a.counts_only:
        report["graph6"] = [to_graph6(G) for G in graphs]
    if a.report:
        Path(a.report).write_text(json.dumps(report, indent=1) + "\n")
    _emit(report)
    return 0


def cmd_derive(a) -> int:
    st = EnumerationStats()
    found = sweeps.derive_exceptions(a.n_max, workers=a.workers, stats=st)
    excs = cat.exceptions()
    rows = []
    for G in found:
        idx = [i for i, E in enumerate(excs, 1) if are_isomorphic(G, E)]
        rows.append({"graph6": to_graph6(G), "order": G.n, "size": G.size,
                     "catalog": [f"E{i}" for i in idx]})
    derived = {canonical_form(G) for G in found}
    listed = {canonical_form(E) for E in excs if E.n <= a.n_max}
    _emit({
        "count": len(found),
        "orders": [G.n for G in found],
        "graphs": rows,
        "catalog_entries": sum(E.n <= a.n_max for E in excs),
        "catalog_classes": len(listed),
        "matches_catalog": derived == listed,
        "stats": st.as_dict(),
    })
    return 0 if derived == listed else 1


def cmd_verify(a) -> int:
    n = a.n_max
    w = a.workers
    what = a.what
    if what == "lemma5":
        res = sweeps.verify_lemma5(n or 10, drop=a.drop)
    elif what == "lemma6":
        excs = cat.exceptions()
        if a.truncate is not None:
            excs = excs[: a.truncate]
        res = sweeps.verify_lemma6(n or 11, excs, workers=w)
    elif what == "case1":
        res = sweeps.verify_case1(n or 10, workers=w)
    elif what == "bull":
        res = sweeps.verify_bull_theorem(n or 11, workers=w)
    elif what == "unavoidability":
        res = sweeps.verify_unavoidability(n or 8)
    elif what == "edge-bound":
        res = sweeps.claims_sweep(n or 10)
    else:
        ext = sweeps.h6_extension_orbits()
        ok = len(ext.types) == 3 and len(ext.two_vertex) == 3
        _emit({"ok": ok, **ext.as_dict()})
        return 0 if ok else 1
    _emit(res.as_dict())
    return 0 if res.ok else 1


def cmd_catalog(a) -> int:
    if a.action == "list":
        _emit([{"name": e.name, "order": e.graph.n, "size": e.graph.size}
               for e in cat.entries().values()])
        return 0
    if a.action == "validate":
        rep = cat.validate_catalog()
        _emit(rep.as_dict())
        return 0 if rep.ok else 1
    if not a.name:
        raise InputError(f"catalog {a.action} needs a name")
    try:
        G = cat.named(a.name)
    except GraphError as exc:
        raise InputError(str(exc)) from None
    if a.action == "export-dot":
        sys.stdout.write(to_dot(G, a.name))
        return 0
    e = cat.entries().get(a.name)
    _emit({
        "name": a.name, "graph6": to_graph6(G), "order": G.n, "size": G.size,
        "edges": [list(x) for x in G.edges()],
        "tags": list(e.tags) if e else [], "labels": e.labels if e else {},
    })
    return 0


# ----------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="clawperf", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("classify-pair", help="classify the forbidden pair {K_1_3, X}")
    s.add_argument("x")
    s.add_argument("--alpha", type=int, choices=(2, 3, 4), default=4)
    s.set_defaults(func=cmd_classify_pair)

    s = sub.add_parser("verdict", help="class membership and perfectness of G")
    s.add_argument("graph")
    s.add_argument("x")
    s.set_defaults(func=cmd_verdict)

    s = sub.add_parser("find-hole", help="odd hole or antihole certificate")
    s.add_argument("graph")
    s.set_defaults(func=cmd_find_hole)

    s = sub.add_parser("generate", help="member of a witness family or a cycle inflation")
    s.add_argument("--family", required=True, choices=("F1", "F2", "F3", "F4", "inflation"))
    s.add_argument("--param", type=int, help="cycle length for F1/F2, twin count for F3/F4")
    s.add_argument("--multiplicities", help="comma-separated class sizes for inflation")
    s.add_argument("--dot", action="store_true")
    s.set_defaults(func=cmd_generate)

    s = sub.add_parser("recognize-inflation", help="decide whether G inflates a cycle")
    s.add_argument("graph")
    s.set_defaults(func=cmd_recognize)

    s = sub.add_parser("enumerate", help="isomorph-free generation under a hereditary filter")
    s.add_argument("--forbid", nargs="*", default=[], metavar="GRAPH")
    s.add_argument("--n-max", type=int, required=True)
    s.add_argument("--n-min", type=int, default=1)
    s.add_argument("--connected", action="store_true")
    s.add_argument("--min-alpha", type=int)
    s.add_argument("--exclude-odd-cycles", action="store_true")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--counts-only", action="store_true")
    s.add_argument("--report", metavar="FILE")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("derive-exceptions", help="all imperfect class members for X = 2K1uK3")
    s.add_argument("--n-max", type=int, default=11)
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_derive)

    s = sub.add_parser("verify", help="exhaustive structural checks")
    s.add_argument("what", choices=("lemma5", "lemma6", "case1", "bull", "unavoidability",
                                    "edge-bound", "h6-orbits"))
    s.add_argument("--n-max", type=int)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--drop", type=int, choices=range(1, 8), help="lemma5: omit H_i")
    s.add_argument("--truncate", type=int, help="lemma6: keep only E1..E_k")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("catalog", help="named graphs")
    s.add_argument("action", choices=("list", "show", "export-dot", "validate"))
    s.add_argument("name", nargs="?")
    s.set_defaults(func=cmd_catalog)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"clawperf: error: {exc}", file=sys.stderr)
        return 2
    except GraphError as exc:
        print(f"clawperf: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
