"""Isomorph-free generation of small graphs in hereditary classes.

Graphs are grown one vertex at a time by canonical augmentation: a child is
kept only when its new vertex lies in the automorphism orbit of the child's
canonical deletion vertex (the eligible vertex with the largest canonical
position, eligible meaning non-cut when only connected graphs are wanted).
Every class member therefore has exactly one generation path, so no global
table of seen graphs is needed and subtrees are independent.
"""

from __future__ import annotations

import logging
import time
from collections import Counter
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import _kernels as K
from .graph import Graph, GraphError, from_array, is_odd_cycle
from .iso import are_isomorphic, canonical_form, pattern_block
from .named import CLAW

log = logging.getLogger(__name__)

MAX_ENUM_ORDER = 12


class EnvelopeError(GraphError):
    """Requested enumeration exceeds the supported order envelope."""


@dataclass(frozen=True)
class EnumerationQuery:
    n_max: int
    forbidden: tuple[Graph, ...] = ()
    require_connected: bool = False
    min_alpha: int | None = None
    exclude_odd_cycles: bool = False
    n_min: int = 1

    def __post_init__(self):
        if not 1 <= self.n_max <= MAX_ENUM_ORDER:
            raise EnvelopeError(f"n_max must lie in 1..{MAX_ENUM_ORDER}")
        object.__setattr__(self, "forbidden", tuple(self.forbidden))


@dataclass
class EnumerationStats:
    per_order: Counter = field(default_factory=Counter)
    generated: Counter = field(default_factory=Counter)
    rejected_alpha: int = 0
    rejected_connectivity: int = 0
    rejected_odd_cycle: int = 0
    seconds: float = 0.0

    def merge(self, other: "EnumerationStats") -> None:
        self.per_order.update(other.per_order)
        self.generated.update(other.generated)
        self.rejected_alpha += other.rejected_alpha
        self.rejected_connectivity += other.rejected_connectivity
        self.rejected_odd_cycle += other.rejected_odd_cycle

    def as_dict(self) -> dict:
        return {
            "per_order": {str(k): v for k, v in sorted(self.per_order.items())},
            "generated_per_order": {str(k): v for k, v in sorted(self.generated.items())},
            "rejected": {
                "alpha": self.rejected_alpha,
                "connectivity": self.rejected_connectivity,
                "odd_cycle": self.rejected_odd_cycle,
            },
            "wall_seconds": round(self.seconds, 3),
        }


class _Plan:
    """Query compiled into kernel arguments."""

    def __init__(self, q: EnumerationQuery):
        self.q = q
        pats = []
        claw = False
        for P in q.forbidden:
            if P.n == 0:
                raise GraphError("the empty graph cannot be forbidden")
            if P.n == 4 and are_isomorphic(P, CLAW):
                claw = True
            else:
                pats.append(P)
        self.claw = claw
        self.kernel_pats = pats
        self.pats, self.pat_ns = pattern_block(pats)
        # a forbidden K1 empties the class
        self.trivial = any(P.n == 1 for P in q.forbidden)
        self.alpha_target = q.min_alpha or 0

    def min_alpha_at(self, order: int) -> int:
        # alpha drops by at most one per deleted vertex
        return max(0, self.alpha_target - (self.q.n_max - order))

    def emit(self, G: Graph, alpha: int, stats: EnumerationStats) -> bool:
        q = self.q
        if G.n < q.n_min:
            return False
        if alpha < self.alpha_target:
            stats.rejected_alpha += 1
            return False
        if q.require_connected and G.n and not K.is_connected_mask(G.array, K.full_mask(G.n)):
            stats.rejected_connectivity += 1
            return False
        if q.exclude_odd_cycles and is_odd_cycle(G):
            stats.rejected_odd_cycle += 1
            return False
        stats.per_order[G.n] += 1
        return True

    def children(self, rows: np.ndarray, n: int) -> list[tuple[np.ndarray, int]]:
        if n >= self.q.n_max:
            return []
        cnt, masks, certs, alphas = K.expand(
            rows, n, self.claw, self.pats, self.pat_ns,
            self.q.require_connected, self.min_alpha_at(n + 1),
        )
        seen = set()
        out = []
        for i in range(cnt):
            key = certs[i].tobytes()
            if key in seen:
                continue
            seen.add(key)
            child = np.empty(n + 1, np.uint64)
            m = masks[i]
            for u in range(n):
                child[u] = rows[u] | (np.uint64(1) << np.uint64(n)) if (int(m) >> u) & 1 else rows[u]
            child[n] = m
            out.append((child, int(alphas[i])))
        return out


def _root(plan: _Plan) -> tuple[np.ndarray, int] | None:
    if plan.trivial:
        return None
    return np.zeros(1, np.uint64), 1


def _walk(plan: _Plan, rows: np.ndarray, alpha: int, visit, stats: EnumerationStats) -> int:
    n = len(rows)
    stats.generated[n] += 1
    count = 0
    G = from_array(rows)
    if plan.emit(G, alpha, stats):
        visit(G)
        count += 1
    for child, a in plan.children(rows, n):
        count += _walk(plan, child, a, visit, stats)
    return count


def enumerate_graphs(
    q: EnumerationQuery,
    visitor: Callable[[Graph], object],
    stats: EnumerationStats | None = None,
) -> int:
    """Visit one representative of every isomorphism class satisfying ``q``.

    Orders run from ``q.n_min`` to ``q.n_max``; the visit order is a
    deterministic depth-first traversal of the augmentation tree.
    """
    stats = stats if stats is not None else EnumerationStats()
    plan = _Plan(q)
    t0 = time.perf_counter()
    root = _root(plan)
    count = 0 if root is None else _walk(plan, root[0], root[1], visitor, stats)
    stats.seconds += time.perf_counter() - t0
    return count


# ------------------------------------------------------------ parallel path

def _frontier(plan: _Plan, depth_order: int) -> list[tuple[np.ndarray, int]]:
    root = _root(plan)
    if root is None:
        return []
    level = [root]
    while level and len(level[0][0]) < depth_order:
        level = [c for rows, _ in level for c in plan.children(rows, len(rows))]
    return level


def _collect_subtree(args):
    q, rows, alpha, predicate = args
    plan = _Plan(q)
    stats = EnumerationStats()
    found = []

    def visit(G):
        if predicate is None or predicate(G):
            found.append(G)

    _walk(plan, rows, alpha, visit, stats)
    return found, stats


def collect(
    q: EnumerationQuery,
    predicate: Callable[[Graph], bool] | None = None,
    workers: int = 1,
    stats: EnumerationStats | None = None,
) -> list[Graph]:
    """All class members accepted by ``predicate`` (module-level callable when
    ``workers > 1``), sorted by order then canonical form."""
    stats = stats if stats is not None else EnumerationStats()
    t0 = time.perf_counter()
    if workers <= 1:
        found = []

        def visit(G):
            if predicate is None or predicate(G):
                found.append(G)

        enumerate_graphs(q, visit, stats)
    else:
        plan = _Plan(q)
        split = min(q.n_max, 5)
        shallow = EnumerationStats()
        found = []

        def visit_shallow(G):
            if G.n < split and (predicate is None or predicate(G)):
                found.append(G)

        # graphs above the split order are handled directly, the rest in workers
        _walk_limited(plan, split, visit_shallow, shallow)
        stats.merge(shallow)
        jobs = [(q, rows, a, predicate) for rows, a in _frontier(plan, split)]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            for part, st in ex.map(_collect_subtree, jobs):
                found.extend(part)
                stats.merge(st)
    stats.seconds += time.perf_counter() - t0
    found.sort(key=lambda G: (G.n, canonical_form(G)))
    return found


def _walk_limited(plan: _Plan, limit: int, visit, stats: EnumerationStats) -> None:
    root = _root(plan)
    if root is None:
        return
    stack = [root]
    while stack:
        rows, a = stack.pop()
        n = len(rows)
        if n >= limit:
            continue
        stats.generated[n] += 1
        G = from_array(rows)
        if plan.emit(G, a, stats):
            visit(G)
        stack.extend(plan.children(rows, n))


def count_by_order(graphs: Iterable[Graph]) -> dict[int, int]:
    return dict(sorted(Counter(G.n for G in graphs).items()))


def dedupe(graphs: Sequence[Graph]) -> list[Graph]:
    seen = {}
    for G in graphs:
        seen.setdefault(canonical_form(G), G)
    return list(seen.values())
