"""Infinite witness families, cycle inflations and cycle attachments."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Literal

from . import _kernels as K
from .catalog import entry, named
from .graph import (
    Graph,
    GraphError,
    add_vertex,
    bits,
    build,
    cycle,
    independence_number,
    is_connected,
    to_mask,
)
from .holes import find_odd_hole
from .iso import contains_induced, is_free
from .named import CLAW, B

FamilyId = Literal["F1", "F2", "F3", "F4"]
FAMILIES: tuple[FamilyId, ...] = ("F1", "F2", "F3", "F4")

# patterns each family avoids, on top of the claw
FAMILY_FREENESS: dict[str, tuple[str, ...]] = {
    "F1": ("C4", "C5", "C6", "C7", "K4", "D", "H"),
    "F2": ("B",),
    "F3": ("5K1", "3K1uK2", "K1uZ2", "3K2", "K2uP4"),
    "F4": ("K2uK3",),
}

MAX_TOTAL = 64


@dataclass(frozen=True)
class FamilySpec:
    id: str
    param: int | None = None
    multiplicities: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.id in ("F1", "F2"):
            if self.param is None or self.param < 9 or self.param % 2 == 0:
                raise GraphError(f"{self.id} needs an odd cycle length >= 9")
        elif self.id in ("F3", "F4"):
            if self.param is None or self.param < 0:
                raise GraphError(f"{self.id} needs a twin count t >= 0")
        elif self.id == "inflation":
            m = self.multiplicities
            if m is None or len(m) < 5 or min(m) < 1 or sum(m) > MAX_TOTAL:
                raise GraphError("inflation needs k >= 5 positive multiplicities, total <= 64")
        else:
            raise GraphError(f"unknown family {self.id!r}")


def add_true_twin(G: Graph, v: int) -> Graph:
    return add_vertex(G, bits(G.rows[v]) + [v])


def family_base(fid: str) -> tuple[Graph, int]:
    """Base graph of F3/F4 and its distinguished vertex."""
    e = entry(fid)
    return e.graph, e.labels["d"]


def build_family(spec: FamilySpec) -> Graph:
    if spec.id == "F1":
        return add_vertex(cycle(spec.param), [0, 1])
    if spec.id == "F2":
        return add_vertex(cycle(spec.param), [0, 1, 2])
    if spec.id in ("F3", "F4"):
        G, d = family_base(spec.id)
        for _ in range(spec.param):
            G = add_true_twin(G, d)
        return G
    return inflate_cycle(len(spec.multiplicities), spec.multiplicities)


def family_member(fid: str, index: int) -> Graph:
    """``index``-th member (from 0): F1/F2 walk l = 9, 11, ...; F3/F4 walk t."""
    if fid in ("F1", "F2"):
        return build_family(FamilySpec(fid, 9 + 2 * index))
    return build_family(FamilySpec(fid, index))


# ------------------------------------------------------------- inflations

def inflate_cycle(k: int, multiplicities) -> Graph:
    m = [int(x) for x in multiplicities]
    if k < 5 or len(m) != k:
        raise GraphError("need k >= 5 and one multiplicity per cycle vertex")
    if min(m) < 1:
        raise GraphError("multiplicities must be positive")
    if sum(m) > MAX_TOTAL:
        raise GraphError(f"inflation has more than {MAX_TOTAL} vertices")
    start = [0]
    for x in m:
        start.append(start[-1] + x)
    edges = []
    for i in range(k):
        cls = range(start[i], start[i + 1])
        nxt = range(start[(i + 1) % k], start[(i + 1) % k + 1])
        edges += [(a, b) for a in cls for b in cls if a < b]
        edges += [(a, b) for a in cls for b in nxt]
    return build(start[-1], edges)


def canonical_multiplicities(m) -> tuple[int, ...]:
    m = tuple(m)
    k = len(m)
    cands = []
    for seq in (m, m[::-1]):
        cands += [seq[i:] + seq[:i] for i in range(k)]
    return min(cands)


def twin_classes(G: Graph) -> list[int]:
    """True-twin classes as vertex masks, ordered by smallest member."""
    groups = defaultdict(int)
    for v in range(G.n):
        groups[G.rows[v] | 1 << v] |= 1 << v
    return sorted(groups.values(), key=lambda c: c & -c)


def recognize_inflation(G: Graph) -> tuple[int, tuple[int, ...]] | None:
    """``(k, multiplicities)`` if G is an inflation of C_k with k >= 5."""
    if G.n < 5:
        return None
    classes = twin_classes(G)
    k = len(classes)
    if k < 5:
        return None
    where = {}
    for i, c in enumerate(classes):
        for v in bits(c):
            where[v] = i
    nbrs = []
    for i, c in enumerate(classes):
        v = (c & -c).bit_length() - 1
        out = G.rows[v] & ~c
        adj = {where[u] for u in bits(out)}
        # the neighbouring classes must be joined completely
        if sum(classes[j] for j in adj) != out or len(adj) != 2:
            return None
        nbrs.append(sorted(adj))
    # the quotient is 2-regular; it must be one cycle through all classes
    order = [0]
    prev, cur = None, 0
    while True:
        a, b = nbrs[cur]
        nxt = b if a == prev else a
        if nxt == 0:
            break
        if nxt in order:
            return None
        order.append(nxt)
        prev, cur = cur, nxt
    if len(order) != k:
        return None
    m = [classes[i].bit_count() for i in order]
    return k, canonical_multiplicities(m)


# ------------------------------------------------------------ attachments

AttachmentType = Literal["K2", "P3", "P4", "C5", "2K2"]


def cycle_order(G: Graph, C) -> list[int]:
    """Vertices of the chordless cycle induced by ``C`` in cyclic order."""
    m = C if isinstance(C, int) else to_mask(C)
    verts = bits(m)
    if len(verts) < 4:
        raise GraphError("a cycle needs at least four vertices here")
    for v in verts:
        if (G.rows[v] & m).bit_count() != 2:
            raise GraphError("vertex set does not induce a cycle")
    order = [verts[0]]
    prev = None
    cur = verts[0]
    while True:
        a, b = bits(G.rows[cur] & m)
        nxt = b if a == prev else a
        if nxt == verts[0]:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    if len(order) != len(verts):
        raise GraphError("vertex set does not induce a single cycle")
    return order


def _runs(order: list[int], S: int) -> list[int]:
    """Lengths of maximal runs of ``S`` along the cyclic ``order``."""
    L = len(order)
    inside = [bool(S >> v & 1) for v in order]
    if all(inside):
        return [L]
    start = inside.index(False)
    runs = []
    cur = 0
    for i in range(1, L + 1):
        if inside[(start + i) % L]:
            cur += 1
        elif cur:
            runs.append(cur)
            cur = 0
    return sorted(runs)


def attachment_profile(G: Graph, C, x: int) -> str:
    """Shape of ``N(x) & C``: one of K2, P3, P4, C5, 2K2, else ``other``
    (or ``violation`` when that happens in a claw-free host)."""
    m = C if isinstance(C, int) else to_mask(C)
    if m >> x & 1:
        raise GraphError("x lies on the cycle")
    order = cycle_order(G, m)
    S = G.rows[x] & m
    if not S:
        raise GraphError("x has no neighbour on the cycle")
    L = len(order)
    runs = _runs(order, S)
    kind = "other"
    if runs == [L]:
        kind = "C5" if L == 5 else "other"
    elif runs == [2]:
        kind = "K2"
    elif runs == [3]:
        kind = "P3"
    elif runs == [4]:
        kind = "P4"
    elif runs == [2, 2] and L >= 6:
        kind = "2K2"
    if kind == "other" and is_free(G, CLAW):
        return "violation"
    return kind


# ---------------------------------------------------------- family checks

def check_family_properties(G: Graph, fid: str) -> list[str]:
    """Empty list when G has every property the family promises."""
    fails = []
    if G.n == 0 or not is_connected(G):
        fails.append("not connected")
    if not is_free(G, CLAW):
        fails.append("contains K_1_3")
    if independence_number(G) < 4:
        fails.append("independence number below 4")
    if find_odd_hole(G) is None:
        fails.append("no induced odd hole")
    for name in FAMILY_FREENESS[fid]:
        if contains_induced(G, named(name)) is not None:
            fails.append(f"contains {name}")
    return fails


# ------------------------------------------------- B_{1,p}-free structure

@dataclass(frozen=True)
class BullCheck:
    ok: bool
    branch: str
    k: int | None = None
    inflation: tuple[int, tuple[int, ...]] | None = None


def observation_bull_check(G: Graph, p: int) -> BullCheck:
    """A connected {claw, B_1_p}-free graph with an induced C_k, k >= 2p + 3,
    must be an inflation of that same C_k."""
    if p < 2:
        raise GraphError("p must be at least 2")
    if G.n == 0 or not is_connected(G):
        return BullCheck(True, "disconnected")
    if not is_free(G, CLAW):
        return BullCheck(True, "contains K_1_3")
    if not is_free(G, B(1, p)):
        return BullCheck(True, f"contains B_1_{p}")
    k = _longest_hole_at_least(G, 2 * p + 3)
    if k is None:
        return BullCheck(True, "no long induced cycle")
    rec = recognize_inflation(G)
    return BullCheck(rec is not None and rec[0] == k, "hypothesis holds", k, rec)


def _longest_hole_at_least(G: Graph, min_len: int) -> int | None:
    for L in range(G.n, min_len - 1, -1):
        if len(K.find_induced_cycle(G.array, G.n, L)):
            return L
    return None
