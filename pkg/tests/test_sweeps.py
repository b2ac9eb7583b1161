import itertools
import time

import networkx as nx
import pytest

from clawperf.catalog import entry, exceptions, named
from clawperf.families import FamilySpec, build_family, inflate_cycle
from clawperf.graph import GraphError, add_vertex, cycle
from clawperf.iso import are_isomorphic
from clawperf.sweeps import (
    CycleContext,
    claims_sweep,
    claims_sweep_reference,
    derive_exceptions,
    h6_extension_orbits,
    lemma7_pipeline,
    minimal_counterexample_is,
    spgt_oracle,
    verify_bull_theorem,
    verify_case1,
    verify_claim_cd2,
    verify_edge_bound,
    verify_lemma5,
    verify_lemma6,
    verify_unavoidability,
)

from conftest import to_nx


class TestExceptions:
    def test_order_eight(self):
        found = derive_exceptions(8)
        assert len(found) == 1 and are_isomorphic(found[0], named("H6"))

    def test_order_nine(self):
        found = derive_exceptions(9)
        assert len(found) == 4
        excs = exceptions()[:4]
        assert all(any(are_isomorphic(G, E) for E in excs) for G in found)


class TestHGraphExclusion:
    def test_small_vacuous(self):
        r = verify_lemma5(7)
        assert r.ok and r.details["statement1_vacuous"]

    def test_drop_h6(self):
        r = verify_lemma5(8, drop=6)
        assert not r.ok and r.counterexample.n == 8
        assert minimal_counterexample_is(r, named("H6"))

    @pytest.mark.parametrize("i", [1, 2, 3, 4, 5])
    def test_each_h_needed(self, i):
        r = verify_lemma5(8, drop=i)
        assert minimal_counterexample_is(r, named(f"H{i}"))

    def test_h7_needed(self):
        r = verify_lemma5(9, drop=7)
        assert minimal_counterexample_is(r, named("H7"))


class TestExceptionExclusion:
    def test_small(self):
        assert verify_lemma6(7).ok

    def test_truncated_at_nine(self):
        r = verify_lemma6(9, exceptions()[:3])
        assert not r.ok and are_isomorphic(r.counterexample, named("E4"))


def _claw_free(G):
    for v in range(G.n):
        for a, b, c in itertools.combinations(G.neighbors(v), 3):
            if not (G.has_edge(a, b) or G.has_edge(a, c) or G.has_edge(b, c)):
                return False
    return True


def _x_free(G):
    # no triangle with two further vertices that miss it and each other
    for t in itertools.combinations(range(G.n), 3):
        if not all(G.has_edge(a, b) for a, b in itertools.combinations(t, 2)):
            continue
        rest = [v for v in range(G.n) if v not in t and not any(G.has_edge(v, u) for u in t)]
        if any(not G.has_edge(a, b) for a, b in itertools.combinations(rest, 2)):
            return False
    return True


class TestH6Orbits:
    def test_types(self):
        ext = h6_extension_orbits()
        assert [t.name for t in ext.types] == ["A", "B", "C"]
        B = next(t for t in ext.types if t.name == "B")
        labels = entry("H6").labels
        others = sum(1 << v for k, v in labels.items() if k not in ("i2", "i3"))
        assert B.neighborhoods == (others,)

    def test_fast(self):
        h6_extension_orbits()
        t = time.perf_counter()
        h6_extension_orbits()
        assert time.perf_counter() - t < 1.0

    def test_two_vertex_against_networkx(self):
        # brute force with plain adjacency checks and networkx isomorphism
        H6 = named("H6")
        singles = [m for m in range(1, 256)
                   if _claw_free(G := add_vertex(H6, [v for v in range(8) if m >> v & 1]))
                   and _x_free(G)]
        reps = []
        for a, b in itertools.combinations_with_replacement(singles, 2):
            for adj in (False, True):
                G = add_vertex(add_vertex(H6, [v for v in range(8) if a >> v & 1]),
                               [v for v in range(8) if b >> v & 1] + ([8] if adj else []))
                if _claw_free(G) and _x_free(G):
                    g = to_nx(G)
                    if not any(nx.is_isomorphic(g, r) for r in reps):
                        reps.append(g)
        ext = h6_extension_orbits()
        assert len(singles) == sum(len(t.neighborhoods) for t in ext.types) == 5
        assert len(reps) == len(ext.two_vertex) == 2
        assert ext.two_vertex_labelled == [("A", "B", False), ("A", "C", True), ("B", "C", False)]
        # A+B and A+C are one class, which is why three configurations give two graphs
        tv = exceptions()
        assert are_isomorphic(tv[4], tv[6])


class TestClaims:
    def test_c9(self):
        C9 = cycle(9)
        ctx = CycleContext(C9, (1 << 9) - 1, sum(1 << v for v in (0, 2, 4, 6)))
        assert ctx.e == 0 and verify_edge_bound(ctx)

    def test_f1(self):
        G = build_family(FamilySpec("F1", 9))
        I = sum(1 << v for v in (2, 4, 6, 8, 9))
        ctx = CycleContext(G, (1 << 9) - 1, I)
        assert ctx.e == 2 and verify_edge_bound(ctx)

    def test_bad_context(self):
        with pytest.raises(GraphError):
            CycleContext(cycle(9), 0b111, 0)
        with pytest.raises(GraphError):
            CycleContext(cycle(9), (1 << 9) - 1, 0b11)

    def test_cd2(self):
        G = add_vertex(add_vertex(cycle(9), [0, 1]), [9])
        assert verify_claim_cd2(G, range(9), 9)
        G = add_vertex(add_vertex(cycle(9), [0, 1, 2]), [9])
        assert verify_claim_cd2(G, range(9), 9) is False
        assert not _claw_free(G)
        with pytest.raises(GraphError):
            verify_claim_cd2(add_vertex(cycle(9), [0, 1]), range(9), 9)

    @pytest.mark.parametrize("n", [6, 7])
    def test_kernel_matches_reference(self, n):
        fast = claims_sweep(n)
        ref = claims_sweep_reference(n)
        assert fast.ok and fast.details == ref
        assert ref["edge_bound_checks"] > 0 and ref["attachment_checks"] > 0


class TestOtherSweeps:
    def test_unavoidability_small(self):
        r = verify_unavoidability(6)
        assert r.ok and r.details["outside"] > 0

    def test_unavoidability_default(self):
        r = verify_unavoidability()
        assert r.ok and r.details["graphs"] == sum([1, 2, 4, 11, 34, 156, 1044, 12346])

    def test_unavoidability_mutation(self):
        names = [("B_1_2" if s == "B" else s) for s in
                 ("5K1", "3K1uK2", "3K2", "K2uP4", "K_1_3", "C4", "C5", "C6", "C7",
                  "K4", "D", "H", "B", "K2uK3", "K1uZ2")]
        r = verify_unavoidability(7, names)
        assert not r.ok and r.counterexample is not None

    def test_case1_small(self):
        r = verify_case1(8)
        assert r.ok

    def test_case1_weakened(self):
        # odd cycles are outside the class, so the first hit is a C9 inflation
        assert verify_case1(9, xs=("B_1_2",)).ok
        r = verify_case1(10, xs=("B_1_2",))
        assert not r.ok and are_isomorphic(r.counterexample, inflate_cycle(9, [2] + [1] * 8))

    def test_bull_nine(self):
        r = verify_bull_theorem(9)
        assert r.ok and r.details["imperfect"] == 1
        assert r.details["inflations"][0]["multiplicities"] == [1] * 9

    def test_bull_mutation(self):
        r = verify_bull_theorem(10, forbid_b12=False)
        assert not r.ok

    def test_bull_ten_inflation(self):
        r = verify_bull_theorem(10)
        ks = sorted(tuple(x["multiplicities"]) for x in r.details["inflations"])
        assert r.ok and ks == [(1,) * 9, (1,) * 8 + (2,)]
        assert are_isomorphic(inflate_cycle(9, ks[1]), build_family(FamilySpec("F2", 9)))

    def test_witness_pipeline_small(self):
        r = lemma7_pipeline(5)
        assert r.ok and r.details["infinite"] > 0

    def test_spgt_small(self):
        r = spgt_oracle(7)
        assert r.ok and r.details["graphs"] == 1044
