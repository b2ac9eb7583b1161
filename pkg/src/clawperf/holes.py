"""Odd holes, odd antiholes and perfectness.

A graph is perfect iff it has neither an odd hole nor an odd antihole, so
``is_perfect`` only ever searches for induced odd cycles in the graph and in
its complement.  ``is_perfect_by_definition`` computes chi and omega of every
induced subgraph instead and serves as the independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Literal

from . import _kernels as K
from .graph import Graph, GraphError, bits, complement, cycle, independence_number, is_connected
from .iso import contains_induced, is_free
from .named import CLAW

BY_DEFINITION_MAX_ORDER = 12

_C5 = cycle(5)


@dataclass(frozen=True)
class HoleCertificate:
    kind: Literal["hole", "antihole"]
    cycle: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.cycle)

    def as_dict(self) -> dict:
        return {"kind": self.kind, "length": self.length, "cycle": list(self.cycle)}

    def is_valid_for(self, G: Graph) -> bool:
        """Re-check the certificate against ``G`` from scratch."""
        L = self.length
        if L < 5 or L % 2 == 0 or len(set(self.cycle)) != L:
            return False
        if any(not 0 <= v < G.n for v in self.cycle):
            return False
        host = G if self.kind == "hole" else complement(G)
        return _is_chordless_cycle(host, self.cycle)


def _is_chordless_cycle(G: Graph, cyc: tuple[int, ...]) -> bool:
    L = len(cyc)
    for i, j in combinations(range(L), 2):
        consecutive = j - i == 1 or (i == 0 and j == L - 1)
        if G.has_edge(cyc[i], cyc[j]) != consecutive:
            return False
    return True


def _shortest(G: Graph, min_len: int) -> tuple[int, ...] | None:
    cyc = K.shortest_odd_hole(G.array, G.n, min_len)
    return tuple(int(v) for v in cyc) if len(cyc) else None


def find_odd_hole(G: Graph) -> HoleCertificate | None:
    """Shortest induced odd cycle of length at least five."""
    cyc = _shortest(G, 5)
    return HoleCertificate("hole", cyc) if cyc else None


def find_odd_antihole(G: Graph) -> HoleCertificate | None:
    """Shortest odd antihole.  C5 is its own complement, so a length-5
    antihole is reported as a hole in ``G``."""
    cyc = _shortest(complement(G), 5)
    if cyc is None:
        return None
    if len(cyc) == 5:
        # the complement of a 5-cycle is the 5-cycle 0 2 4 1 3
        return HoleCertificate("hole", (cyc[0], cyc[2], cyc[4], cyc[1], cyc[3]))
    return HoleCertificate("antihole", cyc)


def is_perfect(G: Graph) -> tuple[bool, HoleCertificate | None]:
    cert = find_odd_hole(G)
    if cert is None:
        cyc = _shortest(complement(G), 7)
        cert = HoleCertificate("antihole", cyc) if cyc else None
    return cert is None, cert


def is_perfect_by_definition(G: Graph) -> bool:
    """chi == omega on every induced subgraph (dynamic programming over subsets)."""
    if G.n > BY_DEFINITION_MAX_ORDER:
        raise GraphError(f"definition check limited to {BY_DEFINITION_MAX_ORDER} vertices")
    if G.n == 0:
        return True
    return int(K.perfect_by_definition(G.array, G.n)) == -1


def odd_holes_by_subsets(G: Graph, max_len: int | None = None) -> list[tuple[int, ...]]:
    """Vertex sets (sorted) inducing an odd cycle of length >= 5.

    Plain subset scan; slow, but shares no code with the path search.
    """
    top = G.n if max_len is None else min(max_len, G.n)
    out = []
    for L in range(5, top + 1, 2):
        for S in combinations(range(G.n), L):
            m = sum(1 << v for v in S)
            if all((G.rows[v] & m).bit_count() == 2 for v in S) and _connected_within(G, S[0], m):
                out.append(S)
    return out


def _connected_within(G: Graph, start: int, m: int) -> bool:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= G.rows[v] & m
        frontier = nxt & ~seen
        seen |= frontier
    return seen == m


def ben_rebea_check(G: Graph) -> tuple[bool, HoleCertificate | None]:
    """``(True, None)`` unless G is a connected claw-free graph with alpha >= 3
    that has an odd antihole but no induced C5; then ``(False, antihole)``."""
    if G.n == 0 or not is_connected(G) or not is_free(G, CLAW):
        return True, None
    if independence_number(G) < 3:
        return True, None
    anti = find_odd_antihole(G)
    if anti is None:
        return True, None
    if contains_induced(G, _C5) is not None:
        return True, None
    return False, anti
