"""Regenerate src/clawperf/data/catalog.tsv.

Every fixed graph is written out from an explicit construction below; the
resulting file is what the library loads.  Run from the repository root:

    python tools/build_catalog.py
"""

from pathlib import Path

from clawperf.graph import add_vertex, build, cycle, from_graph6, to_graph6

OUT = Path(__file__).resolve().parents[1] / "src" / "clawperf" / "data" / "catalog.tsv"

# the eight named vertices of H6, in index order
H6_LABELS = ["i1", "i1'", "i2", "i3", "v1", "v1'", "v2", "v2'"]
H6_EDGES = [
    ("i1", "v1"), ("i1", "v2"), ("i1'", "v1'"), ("i1'", "v2'"),
    ("i2", "v1"), ("i2", "v1'"), ("i3", "v2"), ("i3", "v2'"),
    ("v1", "v1'"), ("v1", "v2"), ("v1'", "v2'"),
]

# neighbourhoods in H6 of the three attachment types
TYPE_A = ["i1", "i3", "v2'"]
TYPE_B = ["i1", "i1'", "v1", "v1'", "v2", "v2'"]
TYPE_C = ["i2", "i3", "v2'", "v1", "v1'"]

SCRIPT_X = ["P6", "K1uP5", "2P3", "Z2", "K1uZ1"]


def h6():
    ix = {name: i for i, name in enumerate(H6_LABELS)}
    return build(8, [(ix[a], ix[b]) for a, b in H6_EDGES])


def extend(types, adjacent=()):
    """H6 plus one vertex per entry of ``types``; ``adjacent`` lists index
    pairs (into ``types``) of added vertices joined to each other."""
    ix = {name: i for i, name in enumerate(H6_LABELS)}
    G = h6()
    labels = list(H6_LABELS)
    for k, t in enumerate(types):
        nb = [ix[a] for a in t[1]]
        nb += [8 + j for j in range(k) if (j, k) in adjacent]
        G = add_vertex(G, nb)
        labels.append("x" + t[0])
    return G, labels


def c5_plus(*edges):
    G = cycle(5)
    for e in edges:
        G = add_vertex(G, e)
    return G


def rows():
    out = []

    def add(name, G, tags, labels=None):
        lab = ",".join(f"{a}={i}" for i, a in enumerate(labels)) if labels else ""
        out.append((name, to_graph6(G), ";".join(tags), lab))

    add("D", build(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
        ["connected", "triangles=2", "order=4"])
    add("H", build(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]),
        ["connected", "triangles=2", "order=5"])
    add("B", build(5, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)]),
        ["connected", "triangles=1", "iso:B_1_1", "order=5"])
    add("N", build(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]),
        ["connected", "triangles=1", "order=6"])

    common = ["connected", "claw_free", "contains:B_1_2"] + [f"contains:{x}" for x in SCRIPT_X]
    # C7 with a vertex on one edge
    H1 = add_vertex(cycle(7), [0, 1])
    add("H1", H1, common + ["contains:C7", "contains:2K1uK3", "order=8"])
    # C5, u on an edge, then a path of two vertices leaving u
    H2 = add_vertex(add_vertex(c5_plus([1, 2]), [5]), [6])
    add("H2", H2, common + ["contains:C5", "contains:2K1uK3", "order=8"])
    # C5, u on edge 12 with a pendant w, and z on an edge
    base = add_vertex(c5_plus([1, 2]), [5])
    for name, nb in (("H3", [1, 2, 5]), ("H4", [2, 3]), ("H5", [3, 4])):
        add(name, add_vertex(base, nb), common + ["contains:C5", "contains:2K1uK3", "order=8"])
    add("H6", h6(), common + ["contains:C5", "free:2K1uK3", "iso:E1", "order=8"], H6_LABELS)
    # independent vertices on edges 01, 12, 34 and a fourth seeing 2 3 4 0
    H7 = c5_plus([0, 1], [1, 2], [3, 4], [0, 2, 3, 4])
    add("H7", H7, common + ["contains:C5", "contains:2K1uK3", "free:H6", "alpha>=4", "order=9"])

    exc = ["connected", "claw_free", "free:2K1uK3", "alpha>=4", "imperfect"]
    A, B, C = ("A", TYPE_A), ("B", TYPE_B), ("C", TYPE_C)
    specs = [
        ("E1", [], ()),
        ("E2", [A], ()),
        ("E3", [B], ()),
        ("E4", [C], ()),
        ("E5", [A, B], ()),
        ("E6", [B, C], ()),
        ("E7", [A, C], ((0, 1),)),
        ("E8", [A, C, B], ((0, 1),)),
    ]
    for name, types, adj in specs:
        G, labels = extend(types, set(adj))
        add(name, G, exc + [f"order={G.n}"], labels)

    # family bases; the distinguished vertex is labelled d
    F3 = from_graph6("GqGT@w")
    add("F3", F3, ["connected", "claw_free", "alpha>=4", "imperfect", "order=8"],
        ["d" if v == 2 else f"u{v}" for v in range(F3.n)])
    F4 = from_graph6("HqGORo|")
    add("F4", F4, ["connected", "claw_free", "alpha>=4", "imperfect", "order=9"],
        ["d" if v == 7 else f"u{v}" for v in range(F4.n)])
    return out


def main():
    lines = [
        "# name\tgraph6\ttags\tlabels",
        "# tags: connected; claw_free; imperfect; alpha>=k; order=n; triangles=k;",
        "#       contains:<name>; free:<name>; iso:<name>",
    ]
    lines += ["\t".join(r) for r in rows()]
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text("\n".join(lines) + "\n")
    print(f"wrote {len(lines) - 3} entries to {OUT}")


if __name__ == "__main__":
    main()
