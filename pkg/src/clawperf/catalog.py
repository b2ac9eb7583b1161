"""Named graphs.

Fixed graphs live in ``data/catalog.tsv`` (override with ``CLAWPERF_CATALOG``);
parametric names such as ``K1uP5`` or ``B_1_2`` are built on demand.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from itertools import combinations
from pathlib import Path

from .graph import Graph, GraphError, from_graph6, independence_number, is_connected, triangle_count
from .holes import is_perfect
from .iso import are_isomorphic, contains_induced, is_free
from .named import CLAW, Z, B, parametric


class CatalogError(GraphError):
    """Unknown name or malformed catalog file."""


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    graph: Graph
    tags: tuple[str, ...] = ()
    labels: dict[str, int] = field(default_factory=dict)


def catalog_path() -> Path | None:
    p = os.environ.get("CLAWPERF_CATALOG")
    return Path(p) if p else None


def parse_catalog(text: str) -> dict[str, CatalogEntry]:
    entries: dict[str, CatalogEntry] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        cols = line.rstrip("\n").split("\t")
        if len(cols) < 2:
            raise CatalogError(f"line {lineno}: expected name and graph6")
        name, g6 = cols[0].strip(), cols[1].strip()
        if name in entries:
            raise CatalogError(f"line {lineno}: duplicate name {name!r}")
        tags = tuple(t for t in (cols[2].split(";") if len(cols) > 2 else []) if t)
        labels = {}
        if len(cols) > 3 and cols[3].strip():
            for item in cols[3].split(","):
                key, _, val = item.partition("=")
                labels[key] = int(val)
        try:
            G = from_graph6(g6)
        except GraphError as exc:
            raise CatalogError(f"line {lineno} ({name}): {exc}") from None
        entries[name] = CatalogEntry(name, G, tags, labels)
    return entries


@lru_cache(maxsize=8)
def _load(path: str | None) -> dict[str, CatalogEntry]:
    if path is None:
        text = resources.files("clawperf").joinpath("data/catalog.tsv").read_text()
    else:
        text = Path(path).read_text()
    return parse_catalog(text)


def entries() -> dict[str, CatalogEntry]:
    p = catalog_path()
    return _load(str(p) if p else None)


def entry(name: str) -> CatalogEntry:
    try:
        return entries()[name]
    except KeyError:
        raise CatalogError(f"unknown catalog entry {name!r}") from None


_ZK = re.compile(r"^Z_?(\d+)$")
_BIJ = re.compile(r"^B_(\d+)_(\d+)$")


def named(name: str, *params: int) -> Graph:
    """Catalog graph by name; parametric families accept their parameters
    either inline (``Z2``, ``B_1_2``) or as extra arguments (``named("Z", 2)``)."""
    if params:
        if name == "Z" and len(params) == 1:
            return Z(params[0])
        if name in ("B_i_j", "B") and len(params) == 2:
            return B(*params)
        base = {"C": "C", "P": "P", "K": "K"}.get(name)
        if base and len(params) == 1:
            name = f"{base}{params[0]}"
        else:
            raise CatalogError(f"{name!r} takes no parameters {params}")
    table = entries()
    if name in table:
        return table[name].graph
    if name in ("K13", "claw"):
        return CLAW
    try:
        G = parametric(name)
    except GraphError as exc:
        raise CatalogError(f"{name}: {exc}") from None
    if G is None:
        raise CatalogError(f"unknown graph name {name!r}")
    return G


def exceptions() -> list[Graph]:
    """E1, E2, ... in index order."""
    out = []
    i = 1
    while f"E{i}" in entries():
        out.append(entries()[f"E{i}"].graph)
        i += 1
    return out


def h_graphs() -> list[Graph]:
    return [entries()[f"H{i}"].graph for i in range(1, 8)]


# ----------------------------------------------------------------- gate

def _check_tag(G: Graph, tag: str) -> bool:
    key, _, arg = tag.partition(":")
    if tag == "connected":
        return G.n > 0 and is_connected(G)
    if tag == "claw_free":
        return is_free(G, CLAW)
    if tag == "imperfect":
        return not is_perfect(G)[0]
    if tag.startswith("alpha>="):
        return independence_number(G) >= int(tag[7:])
    if tag.startswith("order="):
        return G.n == int(tag[6:])
    if tag.startswith("triangles="):
        return triangle_count(G) == int(tag[10:])
    if key == "contains":
        return contains_induced(G, named(arg)) is not None
    if key == "free":
        return is_free(G, named(arg))
    if key == "iso":
        return are_isomorphic(G, named(arg))
    raise CatalogError(f"unknown tag {tag!r}")


# orders of the exceptions as fixed by the extension structure around E1
EXCEPTION_ORDERS = {1: 8, 2: 9, 3: 9, 4: 9, 5: 10, 6: 10, 7: 10, 8: 11}


@dataclass
class CatalogReport:
    violations: list[str]
    checked: int

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {"ok": self.ok, "checked": self.checked, "violations": self.violations}


def validate_catalog(table: dict[str, CatalogEntry] | None = None) -> CatalogReport:
    """Evaluate every tag of every entry plus the cross-entry conditions."""
    table = entries() if table is None else table
    bad = []
    checked = 0
    for e in table.values():
        for tag in e.tags:
            checked += 1
            try:
                ok = _check_tag(e.graph, tag)
            except GraphError as exc:
                ok = False
                tag = f"{tag} ({exc})"
            if not ok:
                bad.append(f"{e.name}: {tag} violated")
    exc = {i: table[f"E{i}"].graph for i in EXCEPTION_ORDERS if f"E{i}" in table}
    for i, n in EXCEPTION_ORDERS.items():
        checked += 1
        if i not in exc:
            bad.append(f"E{i}: missing")
        elif exc[i].n != n:
            bad.append(f"E{i}: order {exc[i].n}, expected {n}")
    for i, j in combinations(sorted(exc), 2):
        checked += 1
        if are_isomorphic(exc[i], exc[j]):
            bad.append(f"E{j}: isomorphic to E{i}")
    for name, tag in [("H6", "iso:E1"), ("H1", "contains:C7")] + [
        (f"H{i}", "contains:C5") for i in range(2, 8)
    ] + [(f"H{i}", "claw_free") for i in range(1, 8)] + [
        ("D", "triangles=2"), ("H", "triangles=2"), ("B", "triangles=1"),
    ]:
        checked += 1
        if name not in table:
            bad.append(f"{name}: missing")
        elif tag not in table[name].tags and not _check_tag(table[name].graph, tag):
            bad.append(f"{name}: {tag} violated")
    return CatalogReport(bad, checked)
