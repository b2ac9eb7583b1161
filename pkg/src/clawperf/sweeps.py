"""Exhaustive small-order checks built on the generator.

Each ``verify_*`` returns a :class:`SweepResult`; ``ok`` is False exactly
when a counterexample was found, and ``details`` records what was covered so
that a vacuous pass is visible as such.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement

import numpy as np

from . import _kernels as K
from .catalog import entry, exceptions, h_graphs, named
from .classify import (
    FINITE_X,
    SCRIPT_X,
    UNAVOIDABLE,
    classify_pair,
    family_for_witness,
    unavoidable_witness,
    verdict,
)
from .enumeration import EnumerationQuery, EnumerationStats, collect, enumerate_graphs
from .families import attachment_profile, family_member, recognize_inflation
from .graph import Graph, GraphError, add_vertex, bits, cycle, to_graph6
from .holes import ben_rebea_check, find_odd_antihole, is_perfect, is_perfect_by_definition
from .iso import are_isomorphic, canonical_form, contains_induced, is_free
from .named import CLAW

log = logging.getLogger(__name__)


@dataclass
class SweepResult:
    ok: bool
    counterexample: Graph | None = None
    details: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        d = {"ok": self.ok, **self.details}
        if self.counterexample is not None:
            d["counterexample"] = to_graph6(self.counterexample)
        return d


def _has_cycle(G: Graph, L: int) -> bool:
    return len(K.find_induced_cycle(G.array, G.n, L)) > 0


def _imperfect(G: Graph) -> bool:
    return K.perfect_code(G.array, G.n) != 0


# ------------------------------------------------------------ exceptions

def exception_query(n_max: int) -> EnumerationQuery:
    return EnumerationQuery(
        n_max=n_max,
        forbidden=(CLAW, named(FINITE_X)),
        require_connected=True,
        min_alpha=4,
        exclude_odd_cycles=True,
    )


def derive_exceptions(n_max: int = 11, workers: int = 1,
                      stats: EnumerationStats | None = None) -> list[Graph]:
    """Every imperfect connected {K_1_3, 2K1uK3}-free graph with alpha >= 4
    that is not an odd cycle, up to order ``n_max``."""
    return collect(exception_query(n_max), predicate=_imperfect, workers=workers, stats=stats)


# ------------------------------------------- C5/C7 exclusion via H1..H7

def verify_lemma5(n_max: int = 10, hs: list[Graph] | None = None,
                  drop: int | None = None) -> SweepResult:
    """Connected claw-free graphs, alpha >= 4: H1-free forces C7-free and
    {H2..H7}-free forces C5-free.  ``drop`` (1..7) removes one H_i."""
    hs = list(h_graphs() if hs is None else hs)
    h1 = [hs[0]] if drop != 1 else []
    rest = [H for i, H in enumerate(hs[1:], 2) if i != drop]
    C5, C7 = cycle(5), cycle(7)
    counts = {"graphs": 0, "c7_hosts": 0, "c5_hosts": 0}
    bad: list[tuple[int, Graph]] = []

    def visit(G):
        counts["graphs"] += 1
        if contains_induced(G, C7) is not None:
            counts["c7_hosts"] += 1
            if is_free(G, h1):
                bad.append((1, G))
        if contains_induced(G, C5) is not None:
            counts["c5_hosts"] += 1
            if is_free(G, rest):
                bad.append((2, G))

    q = EnumerationQuery(n_max=n_max, forbidden=(CLAW,), require_connected=True, min_alpha=4)
    enumerate_graphs(q, visit)
    details = {**counts, "statement1_vacuous": counts["c7_hosts"] == 0}
    if bad:
        stmt, G = min(bad, key=lambda b: (b[1].n, canonical_form(b[1])))
        details["statement"] = stmt
        return SweepResult(False, G, details)
    return SweepResult(True, None, details)


# ------------------------------------- C5/C7 exclusion outside the E list

def verify_lemma6(n_max: int = 11, excs: list[Graph] | None = None,
                  workers: int = 1) -> SweepResult:
    """Connected {K_1_3, 2K1uK3}-free graphs with alpha >= 4 other than the
    listed exceptions contain neither C5 nor C7."""
    excs = exceptions() if excs is None else excs
    keys = {canonical_form(E) for E in excs}
    members = collect(
        EnumerationQuery(n_max=n_max, forbidden=(CLAW, named(FINITE_X)),
                         require_connected=True, min_alpha=4),
        predicate=_has_c5_or_c7, workers=workers,
    )
    bad = [G for G in members if canonical_form(G) not in keys]
    details = {"with_c5_or_c7": len(members), "exceptions_listed": len(excs)}
    if bad:
        return SweepResult(False, bad[0], details)
    return SweepResult(True, None, details)


def _has_c5_or_c7(G: Graph) -> bool:
    return _has_cycle(G, 5) or _has_cycle(G, 7)


# --------------------------------------------------- attachments to H6

@dataclass(frozen=True)
class H6ExtensionType:
    name: str
    neighborhoods: tuple[int, ...]  # masks over the vertices of H6


@dataclass
class H6Extensions:
    types: list[H6ExtensionType]
    two_vertex: list[Graph]
    two_vertex_labelled: list[tuple[str, str, bool]]

    def as_dict(self) -> dict:
        return {
            "orbits": len(self.types),
            "types": {t.name: [bits(m) for m in t.neighborhoods] for t in self.types},
            "two_vertex_classes": len(self.two_vertex),
            "two_vertex_graph6": [to_graph6(G) for G in self.two_vertex],
            "two_vertex_configurations": [list(c) for c in self.two_vertex_labelled],
        }


# neighbourhoods naming the three types, in the labels of the H6 entry
_TYPE_NAMES = {
    "A": ("i1", "i3", "v2'"),
    "B": ("i1", "i1'", "v1", "v1'", "v2", "v2'"),
    "C": ("i2", "i3", "v2'", "v1", "v1'"),
}


def h6_extension_orbits() -> H6Extensions:
    e = entry("H6")
    H6, labels = e.graph, e.labels
    pats = [CLAW, named(FINITE_X)]
    n = H6.n
    valid = [m for m in range(1, 1 << n) if is_free(add_vertex(H6, bits(m)), pats)]
    # rooted canonical forms: the new vertex gets its own colour
    init = np.zeros(n + 1, np.int64)
    init[n] = 1
    orbits: dict[bytes, list[int]] = {}
    for m in valid:
        G = add_vertex(H6, bits(m))
        cert, _, _ = K.canon(G.array, G.n, init)
        orbits.setdefault(cert.tobytes(), []).append(m)
    ref = {sum(1 << labels[v] for v in vs): name for name, vs in _TYPE_NAMES.items()}
    types = []
    for ms in orbits.values():
        name = next((ref[m] for m in ms if m in ref), f"T{len(types)}")
        types.append(H6ExtensionType(name, tuple(ms)))
    types.sort(key=lambda t: t.name)
    type_of = {m: t.name for t in types for m in t.neighborhoods}

    classes: dict[bytes, Graph] = {}
    configs = set()
    for a, b in combinations_with_replacement(valid, 2):
        for adj in (False, True):
            G = add_vertex(add_vertex(H6, bits(a)), bits(b) + ([n] if adj else []))
            if is_free(G, pats):
                classes.setdefault(canonical_form(G), G)
                configs.add((*sorted((type_of[a], type_of[b])), adj))
    two = sorted(classes.values(), key=canonical_form)
    return H6Extensions(types, two, sorted(configs))


# --------------------------------------------- claims around an induced cycle

@dataclass(frozen=True)
class CycleContext:
    host: Graph
    C: int
    I: int

    def __post_init__(self):
        verts = bits(self.C)
        if len(verts) < 5 or any((self.host.rows[v] & self.C).bit_count() != 2 for v in verts):
            raise GraphError("C must induce a cycle of length at least 5")
        for u in bits(self.I):
            if self.host.rows[u] & self.I:
                raise GraphError("I is not independent")

    @property
    def ell(self) -> int:
        return self.C.bit_count()

    @property
    def neighborhood(self) -> int:
        m = 0
        for v in bits(self.C):
            m |= self.host.rows[v]
        return m & ~self.C

    @property
    def e(self) -> int:
        out = self.I & ~self.C
        return sum((self.host.rows[v] & out).bit_count() for v in bits(self.C))


def verify_edge_bound(ctx: CycleContext) -> bool:
    """True when both forms of the cross-edge bound hold and agree."""
    ell, I, C, N = ctx.ell, ctx.I, ctx.C, ctx.neighborhood
    proof_form = 2 * ell - 4 * (I & C).bit_count()
    statement_form = 2 * ell - 4 * (I & (C | N)).bit_count() + 4 * (I & N).bit_count()
    return proof_form == statement_form and ctx.e <= proof_form


def verify_claim_cd2(host: Graph, C, x: int) -> bool:
    """x with a neighbour on C and one at distance >= 2 from C sees an edge of C."""
    m = C if isinstance(C, int) else sum(1 << v for v in C)
    N = 0
    for v in bits(m):
        N |= host.rows[v]
    N &= ~m
    far = ((1 << host.n) - 1) & ~m & ~N
    if m >> x & 1 or not host.rows[x] & m or not host.rows[x] & far:
        raise GraphError("x needs a neighbour on C and one outside C and N(C)")
    S = host.rows[x] & m
    if S.bit_count() != 2:
        return False
    a, b = bits(S)
    return host.has_edge(a, b)


def claims_sweep(n_max: int = 10, lengths=(5, 7)) -> SweepResult:
    """Edge bound, cd2 and attachment shapes on every claw-free host with an
    induced C5 or C7 (all maximum independent sets, all such cycles)."""
    stats = np.zeros(6, np.int64)
    hosts = [0]
    cap_c = 4096
    cycles = {L: np.empty((cap_c, L), np.int64) for L in lengths}
    indep = np.empty(8192, np.uint64)

    def visit(G):
        rows, n = G.array, G.n
        got = False
        for L in lengths:
            cnt = K.all_induced_cycles(rows, n, L, cycles[L])
            if cnt == 0:
                continue
            if cnt > cap_c:
                raise RuntimeError("cycle buffer too small")
            if not got:
                alpha = int(K.independence(rows, n)[0])
                nind = K.all_max_independent_sets(rows, n, alpha, indep)
                if nind > indep.shape[0]:
                    raise RuntimeError("independent-set buffer too small")
                got = True
            K.claims_host(rows, n, cycles[L], cnt, L, indep, nind, stats)
        hosts[0] += got

    enumerate_graphs(EnumerationQuery(n_max=n_max, forbidden=(CLAW,)), visit)
    names = ["edge_bound_checks", "edge_bound_violations", "cd2_checks",
             "cd2_violations", "attachment_checks", "attachment_violations"]
    details = {"hosts": hosts[0], **{k: int(v) for k, v in zip(names, stats)}}
    ok = stats[1] == 0 and stats[3] == 0 and stats[5] == 0
    return SweepResult(bool(ok), None, details)


def claims_sweep_reference(n_max: int, lengths=(5, 7)) -> dict:
    """Same counts as :func:`claims_sweep`, computed with the plain-Python
    helpers above; used to cross-check the kernel on small orders."""
    out = dict.fromkeys(["hosts", "edge_bound_checks", "edge_bound_violations",
                         "cd2_checks", "cd2_violations", "attachment_checks",
                         "attachment_violations"], 0)

    def visit(G):
        cyc = []
        for L in lengths:
            for S in combinations(range(G.n), L):
                m = sum(1 << v for v in S)
                if all((G.rows[v] & m).bit_count() == 2 for v in S) and _single_cycle(G, m):
                    cyc.append(m)
        if not cyc:
            return
        out["hosts"] += 1
        alpha = max(len(S) for S in _independent_sets(G))
        maxsets = [sum(1 << v for v in S) for S in _independent_sets(G) if len(S) == alpha]
        for m in cyc:
            for I in maxsets:
                out["edge_bound_checks"] += 1
                out["edge_bound_violations"] += not verify_edge_bound(CycleContext(G, m, I))
            N = 0
            for v in bits(m):
                N |= G.rows[v]
            N &= ~m
            far = ((1 << G.n) - 1) & ~m & ~N
            for x in bits(N):
                out["attachment_checks"] += 1
                out["attachment_violations"] += attachment_profile(G, m, x) == "violation"
                if G.rows[x] & far:
                    out["cd2_checks"] += 1
                    out["cd2_violations"] += not verify_claim_cd2(G, m, x)

    enumerate_graphs(EnumerationQuery(n_max=n_max, forbidden=(CLAW,)), visit)
    return out


def _single_cycle(G: Graph, m: int) -> bool:
    start = m & -m
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= G.rows[v] & m
        frontier = nxt & ~seen
        seen |= frontier
    return seen == m


def _independent_sets(G: Graph):
    sets = [()]
    for v in range(G.n):
        sets += [S + (v,) for S in sets if not any(G.has_edge(u, v) for u in S)]
    return sets


# -------------------------------------------------------- unavoidability

def verify_unavoidability(n_max: int = 8, names=UNAVOIDABLE) -> SweepResult:
    """Every X of order <= n_max outside the six maximal harmless graphs
    contains one of ``names``."""
    harmless = [named(s) for s in (*SCRIPT_X, FINITE_X)]
    pats = [named(s) for s in names]
    counts = {"graphs": 0, "outside": 0}
    bad = []

    def visit(X):
        counts["graphs"] += 1
        if any(contains_induced(H, X) is not None for H in harmless):
            return
        counts["outside"] += 1
        if is_free(X, pats) and not bad:
            bad.append(X)

    enumerate_graphs(EnumerationQuery(n_max=n_max), visit)
    return SweepResult(not bad, bad[0] if bad else None, counts)


# ---------------------------------------------------- constructive case

def lemma7_pipeline(n_max: int = 7, members: int = 5) -> SweepResult:
    """For every X classified Infinite: the witness exists and the first
    ``members`` graphs of its family are X-free, in the class and imperfect."""
    counts = {"graphs": 0, "infinite": 0, "members_checked": 0}
    fams = {}
    bad = []

    def visit(X):
        counts["graphs"] += 1
        pc = classify_pair(X, 4)
        if pc.case != "Infinite":
            return
        counts["infinite"] += 1
        w = unavoidable_witness(X)
        fid = family_for_witness(w)
        if fid not in fams:
            fams[fid] = [family_member(fid, i) for i in range(members)]
        for G in fams[fid]:
            counts["members_checked"] += 1
            v = verdict(G, X)
            if not v.in_class or v.outcome == "Perfect":
                if not bad:
                    bad.append(X)
                    counts["failure"] = {"family": fid, "member": to_graph6(G),
                                         "verdict": v.as_dict()}
                return

    enumerate_graphs(EnumerationQuery(n_max=n_max), visit)
    return SweepResult(not bad, bad[0] if bad else None, counts)


def verify_case1(n_max: int = 10, xs=SCRIPT_X, workers: int = 1) -> SweepResult:
    """For each X, every member of the class up to ``n_max`` is perfect."""
    details = {}
    for name in xs:
        X = named(name)
        q = EnumerationQuery(n_max=n_max, forbidden=(CLAW, X), require_connected=True,
                             min_alpha=4, exclude_odd_cycles=True)
        st = EnumerationStats()
        bad = collect(q, predicate=_imperfect, workers=workers, stats=st)
        details[name] = {"members": sum(st.per_order.values()), "imperfect": len(bad)}
        if bad:
            return SweepResult(False, bad[0], {**details, "failing_x": name})
    return SweepResult(True, None, details)


# ------------------------------------------------------------ B_{1,2}

def verify_bull_theorem(n_max: int = 11, forbid_b12: bool = True,
                        workers: int = 1) -> SweepResult:
    """Connected {K_1_3, B_1_2}-free graphs with alpha >= 4 are perfect or
    inflations of an odd cycle of length at least 9."""
    forbidden = (CLAW, named("B_1_2")) if forbid_b12 else (CLAW,)
    q = EnumerationQuery(n_max=n_max, forbidden=forbidden, require_connected=True, min_alpha=4)
    st = EnumerationStats()
    imperfect = collect(q, predicate=_imperfect, workers=workers, stats=st)
    recognised = []
    bad = None
    for G in imperfect:
        rec = recognize_inflation(G)
        if rec is None or rec[0] < 9 or rec[0] % 2 == 0:
            bad = bad or G
        else:
            recognised.append({"graph6": to_graph6(G), "k": rec[0], "multiplicities": list(rec[1])})
    details = {"members": sum(st.per_order.values()), "imperfect": len(imperfect),
               "inflations": recognised}
    return SweepResult(bad is None, bad, details)


# ----------------------------------------------------------- hole oracles

def spgt_oracle(n: int = 8) -> SweepResult:
    """Hole-based and definition-based perfectness agree on every graph of order n."""
    counts = {"graphs": 0, "imperfect": 0}
    bad = []

    def visit(G):
        counts["graphs"] += 1
        a = is_perfect(G)[0]
        if not a:
            counts["imperfect"] += 1
        if a != is_perfect_by_definition(G) and not bad:
            bad.append(G)

    enumerate_graphs(EnumerationQuery(n_max=n, n_min=n), visit)
    return SweepResult(not bad, bad[0] if bad else None, counts)


def ben_rebea_sweep(n_max: int = 10) -> SweepResult:
    counts = {"graphs": 0, "with_antihole": 0}
    bad = []

    def visit(G):
        counts["graphs"] += 1
        if find_odd_antihole(G) is not None:
            counts["with_antihole"] += 1
        ok, _ = ben_rebea_check(G)
        if not ok and not bad:
            bad.append(G)

    enumerate_graphs(EnumerationQuery(n_max=n_max, forbidden=(CLAW,), require_connected=True,
                                      min_alpha=3), visit)
    return SweepResult(not bad, bad[0] if bad else None, counts)


def minimal_counterexample_is(result: SweepResult, G: Graph) -> bool:
    return result.counterexample is not None and are_isomorphic(result.counterexample, G)
