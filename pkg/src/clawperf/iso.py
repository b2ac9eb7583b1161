"""Induced containment, isomorphism and canonical forms."""

from __future__ import annotations

from collections.abc import Iterable
from functools import lru_cache

import numpy as np

from . import _kernels as K
from .graph import Graph, from_array, triangle_count


def canonical_labeling(G: Graph) -> tuple[int, ...]:
    """``pos[v]`` = canonical position of vertex ``v``."""
    if G.n == 0:
        return ()
    _, pos, _ = K.canon(G.array, G.n, np.zeros(G.n, np.int64))
    return tuple(int(p) for p in pos)


@lru_cache(maxsize=65536)
def canonical_form(G: Graph) -> bytes:
    if G.n == 0:
        return b"\x00"
    cert, _, _ = K.canon(G.array, G.n, np.zeros(G.n, np.int64))
    return bytes([G.n]) + cert.astype("<u8").tobytes()


def canonical_graph(G: Graph) -> Graph:
    if G.n == 0:
        return G
    cert, _, _ = K.canon(G.array, G.n, np.zeros(G.n, np.int64))
    return from_array(cert)


def are_isomorphic(G: Graph, H: Graph) -> bool:
    if G.n != H.n or G.size != H.size:
        return False
    return canonical_form(G) == canonical_form(H)


def same_orbit(G: Graph, a: int, b: int) -> bool:
    """True iff an automorphism of ``G`` maps ``a`` to ``b``."""
    return bool(K.same_orbit(G.array, G.n, a, b))


class _Pattern:
    __slots__ = ("graph", "rows64", "edges", "nonedges", "triangles")

    def __init__(self, P: Graph):
        self.graph = P
        self.rows64 = np.zeros(64, np.uint64)
        self.rows64[: P.n] = P.array
        self.edges = P.size
        self.nonedges = P.n * (P.n - 1) // 2 - self.edges
        self.triangles = triangle_count(P)


@lru_cache(maxsize=4096)
def _compile(P: Graph) -> _Pattern:
    return _Pattern(P)


@lru_cache(maxsize=65536)
def _host_stats(G: Graph) -> tuple[int, int, int]:
    e = G.size
    return e, G.n * (G.n - 1) // 2 - e, triangle_count(G)


def contains_induced(host: Graph, pattern: Graph) -> tuple[int, ...] | None:
    """An induced embedding ``emb`` (``emb[p]`` = host vertex) or None."""
    if pattern.n > host.n:
        return None
    if pattern.n == 0:
        return ()
    P = _compile(pattern)
    e, ne, t = _host_stats(host)
    if P.edges > e or P.nonedges > ne or P.triangles > t:
        return None
    out = np.empty(64, np.int64)
    if not K.find_induced(host.array, host.n, P.rows64, pattern.n, -1, out):
        return None
    return tuple(int(x) for x in out[: pattern.n])


def is_free(G: Graph, patterns: Iterable[Graph] | Graph) -> bool:
    if isinstance(patterns, Graph):
        patterns = (patterns,)
    return all(contains_induced(G, P) is None for P in patterns)


def pattern_block(patterns: Iterable[Graph]) -> tuple[np.ndarray, np.ndarray]:
    """Stack patterns into the ``(rows, orders)`` arrays used by the kernels."""
    pats = list(patterns)
    arr = np.zeros((len(pats), 64), np.uint64)
    ns = np.zeros(len(pats), np.int64)
    for i, P in enumerate(pats):
        arr[i, : P.n] = P.array
        ns[i] = P.n
    return arr, ns
