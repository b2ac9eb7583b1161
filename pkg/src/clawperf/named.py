"""Parametric small graphs and the ASCII naming scheme.

Names use ``u`` for disjoint union and underscores for subscripts, with an
optional copy count in front of each part: ``2K1uK3``, ``K1uP5``, ``B_1_2``,
``K_1_3``, ``3K2``.
"""

from __future__ import annotations

import re

from .graph import Graph, GraphError, build, complete, cycle, disjoint_union, path


def Z(k: int) -> Graph:
    """Triangle 0,1,2 with a path of ``k`` further vertices hanging off vertex 2."""
    if k < 0:
        raise GraphError("Z_k needs k >= 0")
    edges = [(0, 1), (1, 2), (0, 2)]
    prev = 2
    for i in range(k):
        edges.append((prev, 3 + i))
        prev = 3 + i
    return build(3 + k, edges)


def B(i: int, j: int) -> Graph:
    """Triangle 0,1,2 with paths of ``i`` and ``j`` extra vertices at 0 and 1."""
    if i < 1 or j < 1:
        raise GraphError("B_{i,j} needs i, j >= 1")
    edges = [(0, 1), (1, 2), (0, 2)]
    nxt = 3
    for root, length in ((0, i), (1, j)):
        prev = root
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return build(nxt, edges)


def K_bip(a: int, b: int) -> Graph:
    return build(a + b, [(i, a + j) for i in range(a) for j in range(b)])


CLAW = K_bip(1, 3)

_PART = re.compile(r"^(\d*)(.+)$")
_BASE = [
    (re.compile(r"^K_(\d+)_(\d+)$"), lambda a, b: K_bip(int(a), int(b))),
    (re.compile(r"^B_(\d+)_(\d+)$"), lambda i, j: B(int(i), int(j))),
    (re.compile(r"^Z_?(\d+)$"), lambda k: Z(int(k))),
    (re.compile(r"^K(\d+)$"), lambda k: complete(int(k))),
    (re.compile(r"^P(\d+)$"), lambda k: path(int(k))),
    (re.compile(r"^C(\d+)$"), lambda k: cycle(int(k))),
]


def parametric(name: str) -> Graph | None:
    """Resolve names built from the parametric families, or None."""
    parts = []
    for token in name.split("u"):
        m = _PART.match(token)
        if not m or not m.group(2):
            return None
        count = int(m.group(1)) if m.group(1) else 1
        base = _base(m.group(2))
        if base is None or count < 1:
            return None
        parts.extend([base] * count)
    if not parts:
        return None
    return parts[0] if len(parts) == 1 else disjoint_union(parts)


def _base(token: str) -> Graph | None:
    for pattern, make in _BASE:
        m = pattern.match(token)
        if m:
            return make(*m.groups())
    return None
