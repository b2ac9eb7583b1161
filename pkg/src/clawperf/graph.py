"""Immutable simple graphs on at most 64 vertices.

Vertex sets are plain ``int`` bitmasks (bit ``v`` set iff ``v`` is a member);
``Graph.rows[v]`` is the open neighbourhood of ``v``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

import numpy as np

from . import _kernels as K

MAX_ORDER = 64
CHROMATIC_MAX_ORDER = 16


class GraphError(ValueError):
    """Invalid graph construction or operation argument."""


class Graph6Error(GraphError):
    """Malformed graph6 input."""


def bits(mask: int) -> list[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """A labelled simple graph; equality is label equality."""

    __slots__ = ("n", "rows", "_arr")

    def __init__(self, n: int, rows: Sequence[int]):
        if not 0 <= n <= MAX_ORDER:
            raise GraphError(f"order {n} outside 0..{MAX_ORDER}")
        rows = tuple(int(r) for r in rows)
        if len(rows) != n:
            raise GraphError("row count differs from order")
        full = (1 << n) - 1
        for v, r in enumerate(rows):
            if r & ~full:
                raise GraphError(f"vertex {v} has a neighbour out of range")
            if r >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(r):
                if not rows[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency {v}-{u}")
        self.n = n
        self.rows = rows
        self._arr = None

    @classmethod
    def _trusted(cls, n: int, rows: Sequence[int]) -> "Graph":
        g = object.__new__(cls)
        g.n = n
        g.rows = tuple(int(r) for r in rows)
        g._arr = None
        return g

    @property
    def array(self) -> np.ndarray:
        if self._arr is None:
            arr = np.array(self.rows, dtype=np.uint64) if self.n else np.zeros(0, np.uint64)
            arr.setflags(write=False)
            self._arr = arr
        return self._arr

    @property
    def adj(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(bits(r)) for r in self.rows)

    def neighbors(self, v: int) -> list[int]:
        return bits(self.rows[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    @property
    def size(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.rows[u] >> (u + 1) << (u + 1))]

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"

    def __reduce__(self):
        return (Graph._trusted, (self.n, self.rows))


def build(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if not 0 <= n <= MAX_ORDER:
        raise GraphError(f"order {n} outside 0..{MAX_ORDER}")
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise GraphError(f"loop edge at {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {u}-{v} out of range for order {n}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph._trusted(n, rows)


def from_array(rows: np.ndarray, n: int | None = None) -> Graph:
    n = len(rows) if n is None else n
    return Graph._trusted(n, [int(r) for r in rows[:n]])


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph._trusted(n, [full & ~(1 << v) for v in range(n)])


def empty(n: int) -> Graph:
    return Graph._trusted(n, [0] * n)


def path(n: int) -> Graph:
    return build(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycles need at least 3 vertices")
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Graph:
    return build(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complement(G: Graph) -> Graph:
    full = (1 << G.n) - 1
    return Graph._trusted(G.n, [full & ~r & ~(1 << v) for v, r in enumerate(G.rows)])


def disjoint_union(parts: Sequence[Graph]) -> Graph:
    total = sum(p.n for p in parts)
    if total > MAX_ORDER:
        raise GraphError(f"union order {total} exceeds {MAX_ORDER}")
    rows = []
    off = 0
    for p in parts:
        rows.extend(r << off for r in p.rows)
        off += p.n
    return Graph._trusted(total, rows)


def add_vertex(G: Graph, neighbors: Iterable[int]) -> Graph:
    """G plus one new vertex (index ``G.n``) adjacent to ``neighbors``."""
    m = to_mask(neighbors)
    if m >> G.n:
        raise GraphError("neighbour out of range")
    if G.n + 1 > MAX_ORDER:
        raise GraphError("order overflow")
    rows = [r | (1 << G.n) if m >> v & 1 else r for v, r in enumerate(G.rows)]
    rows.append(m)
    return Graph._trusted(G.n + 1, rows)


def relabel(G: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    rows = [0] * G.n
    for v, r in enumerate(G.rows):
        rows[perm[v]] = to_mask(perm[u] for u in bits(r))
    return Graph._trusted(G.n, rows)


def induced_subgraph(G: Graph, S: Iterable[int] | int) -> Graph:
    verts = sorted(set(bits(S) if isinstance(S, int) else S))
    for v in verts:
        if not 0 <= v < G.n:
            raise GraphError(f"vertex {v} not in graph of order {G.n}")
    index = {v: i for i, v in enumerate(verts)}
    rows = [to_mask(index[u] for u in bits(G.rows[v]) if u in index) for v in verts]
    return Graph._trusted(len(verts), rows)


def is_connected(G: Graph) -> bool:
    if G.n == 0:
        raise GraphError("connectivity of the empty graph is undefined")
    return bool(K.is_connected_mask(G.array, K.full_mask(G.n)))


def components(G: Graph) -> list[int]:
    left = (1 << G.n) - 1
    out = []
    while left:
        start = (left & -left).bit_length() - 1
        comp = int(K.reach_within(G.array, start, np.uint64(left)))
        out.append(comp)
        left &= ~comp
    return out


def maximum_independent_set(G: Graph) -> frozenset[int]:
    if G.n == 0:
        return frozenset()
    _, s = K.independence(G.array, G.n)
    return frozenset(bits(int(s)))


def independence_number(G: Graph) -> int:
    if G.n == 0:
        return 0
    return int(K.independence(G.array, G.n)[0])


def maximum_clique(G: Graph) -> frozenset[int]:
    if G.n == 0:
        return frozenset()
    _, s = K.max_clique(G.array, G.n, K.full_mask(G.n))
    return frozenset(bits(int(s)))


def clique_number(G: Graph) -> int:
    if G.n == 0:
        return 0
    return int(K.max_clique(G.array, G.n, K.full_mask(G.n))[0])


def chromatic_number(G: Graph) -> int:
    if G.n > CHROMATIC_MAX_ORDER:
        raise GraphError(f"exact colouring limited to {CHROMATIC_MAX_ORDER} vertices")
    return int(K.chromatic(G.array, G.n))


def triangle_count(G: Graph) -> int:
    t = 0
    for u in range(G.n):
        for v in bits(G.rows[u] >> (u + 1) << (u + 1)):
            t += (G.rows[u] & G.rows[v] & ~((1 << (v + 1)) - 1)).bit_count()
    return t


def is_odd_cycle(G: Graph) -> bool:
    return (
        G.n >= 3
        and G.n % 2 == 1
        and all(r.bit_count() == 2 for r in G.rows)
        and is_connected(G)
    )


# ------------------------------------------------------------------ graph6

def _n_header(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])


def to_graph6(G: Graph) -> str:
    bitlist = []
    for j in range(1, G.n):
        r = G.rows[j]
        for i in range(j):
            bitlist.append(r >> i & 1)
    bitlist.extend([0] * (-len(bitlist) % 6))
    body = bytes(
        63 + int("".join(map(str, bitlist[k:k + 6])), 2) for k in range(0, len(bitlist), 6)
    )
    return (_n_header(G.n) + body).decode("ascii")


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise Graph6Error("empty graph6 string")
    data = s.encode("ascii", errors="replace")
    if any(c < 63 or c > 126 for c in data):
        raise Graph6Error("graph6 byte outside 63..126")
    if data[0] == 126:
        if len(data) < 4 or data[1] == 126:
            raise Graph6Error("unsupported or truncated graph6 order header")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    if n > MAX_ORDER:
        raise GraphError(f"order {n} exceeds {MAX_ORDER}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) < need:
        raise Graph6Error("truncated graph6 bit payload")
    if len(body) > need:
        raise Graph6Error("trailing bytes after graph6 payload")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if need and nbits % 6:
        pad = (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1)
        if pad:
            raise Graph6Error("non-zero padding bits")
    return Graph._trusted(n, rows)


# -------------------------------------------------------- other text forms

def to_edge_list(G: Graph) -> str:
    es = G.edges()
    lines = [f"{G.n} {len(es)}"] + [f"{u} {v}" for u, v in es]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or len(lines[0]) != 2:
        raise GraphError("edge list needs an 'n m' header")
    try:
        n, m = int(lines[0][0]), int(lines[0][1])
        edges = [(int(a), int(b)) for a, b in lines[1:]]
    except ValueError as exc:
        raise GraphError(f"malformed edge list: {exc}") from None
    if len(edges) != m:
        raise GraphError(f"header announces {m} edges, found {len(edges)}")
    return build(n, edges)


def to_dot(G: Graph, name: str = "G") -> str:
    safe = "".join(c if c.isalnum() or c == "_" else "_" for c in name) or "G"
    lines = [f"graph {safe} {{"]
    lines += [f"  {v};" for v in range(G.n) if not G.rows[v]]
    lines += [f"  {u} -- {v};" for u, v in G.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_graph_text(text: str) -> Graph:
    """Accept either a graph6 line or an edge list."""
    body = [ln for ln in text.splitlines() if ln.strip()]
    if not body:
        raise GraphError("no graph data")
    if len(body[0].split()) == 1 and len(body) == 1:
        return from_graph6(body[0])
    return from_edge_list(text)
