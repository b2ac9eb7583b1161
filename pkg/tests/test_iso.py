import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clawperf.catalog import exceptions, named
from clawperf.graph import build, complement, cycle, disjoint_union, induced_subgraph, path, relabel
from clawperf.iso import (
    are_isomorphic,
    canonical_form,
    canonical_graph,
    canonical_labeling,
    contains_induced,
    is_free,
    same_orbit,
)
from clawperf.named import CLAW

from conftest import all_labelled, to_nx
from test_graph import graphs


def brute_iso(G, H):
    if G.n != H.n or G.size != H.size:
        return False
    return any(relabel(G, p) == H for p in itertools.permutations(range(G.n)))


def brute_contains(host, pat):
    for S in itertools.combinations(range(host.n), pat.n):
        if brute_iso(induced_subgraph(host, S), pat):
            return True
    return False


@st.composite
def graph_and_perm(draw, max_n=12):
    G = draw(graphs(max_n))
    perm = draw(st.permutations(range(G.n)))
    return G, list(perm)


class TestCanonical:
    def test_c5_relabel(self):
        rng = random.Random(1)
        for _ in range(20):
            p = list(range(5))
            rng.shuffle(p)
            assert canonical_form(relabel(cycle(5), p)) == canonical_form(cycle(5))

    @pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)])
    def test_class_counts(self, n, count):
        assert len({canonical_form(G) for G in all_labelled(n)}) == count

    @settings(max_examples=200, deadline=None)
    @given(graph_and_perm())
    def test_invariant_under_relabel(self, gp):
        G, p = gp
        assert canonical_form(relabel(G, p)) == canonical_form(G)

    @settings(max_examples=100, deadline=None)
    @given(graphs())
    def test_double_complement(self, G):
        assert canonical_form(complement(complement(G))) == canonical_form(G)

    @settings(max_examples=100, deadline=None)
    @given(graphs())
    def test_labeling_is_permutation(self, G):
        lab = canonical_labeling(G)
        assert sorted(lab) == list(range(G.n))
        assert are_isomorphic(canonical_graph(G), G)

    def test_hard_regular_graphs(self):
        # strongly regular pairs with equal parameters defeat plain refinement
        rook = nx.convert_node_labels_to_integers(nx.cartesian_product(nx.complete_graph(4), nx.complete_graph(4)))
        conn = {(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)}
        shri = [(4 * x + y, 4 * u + v) for x, y, u, v in itertools.product(range(4), repeat=4)
                if ((u - x) % 4, (v - y) % 4) in conn and 4 * x + y < 4 * u + v]
        a = build(16, rook.edges())
        b = build(16, shri)
        assert b.size == a.size == 48
        assert not are_isomorphic(a, b)
        perm = list(range(16))
        random.Random(3).shuffle(perm)
        assert are_isomorphic(a, relabel(a, perm))


class TestIsomorphism:
    def test_examples(self):
        assert are_isomorphic(cycle(5), complement(cycle(5)))
        K1, Z1 = named("K1"), named("Z1")
        assert are_isomorphic(disjoint_union([K1, Z1]), disjoint_union([Z1, K1]))
        assert not are_isomorphic(named("E2"), named("E3"))

    def test_brute_force_small(self):
        rng = random.Random(5)
        sample = [G for G in all_labelled(5)]
        for _ in range(300):
            G, H = rng.choice(sample), rng.choice(sample)
            assert are_isomorphic(G, H) == brute_iso(G, H)

    @settings(max_examples=150, deadline=None)
    @given(graphs(max_n=7), graphs(max_n=7))
    def test_brute_force_random(self, G, H):
        if G.n == H.n:
            assert are_isomorphic(G, H) == brute_iso(G, H)

    @settings(max_examples=150, deadline=None)
    @given(graphs(max_n=12), graphs(max_n=12))
    def test_networkx(self, G, H):
        if G.n == H.n and G.size == H.size:
            assert are_isomorphic(G, H) == nx.is_isomorphic(to_nx(G), to_nx(H))

    def test_exceptions_networkx(self):
        excs = exceptions()
        for (i, a), (j, b) in itertools.combinations(enumerate(excs, 1), 2):
            assert are_isomorphic(a, b) == nx.is_isomorphic(to_nx(a), to_nx(b)), (i, j)

    def test_orbits(self):
        assert same_orbit(cycle(7), 0, 4)
        P = path(4)
        assert same_orbit(P, 0, 3) and not same_orbit(P, 0, 1)


class TestContainment:
    def test_examples(self):
        assert contains_induced(path(6), path(4)) is not None
        assert contains_induced(cycle(9), CLAW) is None
        assert contains_induced(named("Z2"), named("Z1")) is not None

    def test_embedding_is_induced(self):
        emb = contains_induced(named("E1"), cycle(5))
        assert emb is not None
        E1, C5 = named("E1"), cycle(5)
        for a, b in itertools.combinations(range(5), 2):
            assert C5.has_edge(a, b) == E1.has_edge(emb[a], emb[b])

    def test_freeness(self):
        assert is_free(cycle(9), [CLAW, named("B_1_2")])
        assert is_free(named("E1"), [named("2K1uK3")])
        from clawperf.families import FamilySpec, build_family
        assert is_free(build_family(FamilySpec("F2", 9)), [named("B")])

    @settings(max_examples=120, deadline=None)
    @given(graphs(max_n=8), graphs(max_n=4))
    def test_brute_force(self, host, pat):
        if pat.n:
            assert (contains_induced(host, pat) is not None) == brute_contains(host, pat)

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=9), st.data())
    def test_hereditary(self, G, data):
        # freeness passes to induced subgraphs
        S = data.draw(st.lists(st.integers(0, max(G.n - 1, 0)), unique=True)) if G.n else []
        if is_free(G, [CLAW]):
            assert is_free(induced_subgraph(G, S), [CLAW])
