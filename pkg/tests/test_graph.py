import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clawperf.catalog import named
from clawperf.families import FamilySpec, build_family
from clawperf.graph import (
    Graph,
    Graph6Error,
    GraphError,
    build,
    chromatic_number,
    clique_number,
    complement,
    complete,
    cycle,
    disjoint_union,
    empty,
    from_edge_list,
    from_graph6,
    independence_number,
    induced_subgraph,
    is_connected,
    is_odd_cycle,
    parse_graph_text,
    path,
    to_edge_list,
    to_graph6,
    triangle_count,
)
from clawperf.iso import are_isomorphic

from conftest import to_nx


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build(n, [p for p, k in zip(pairs, keep) if k])


def brute_alpha(G):
    for k in range(G.n, 0, -1):
        for S in itertools.combinations(range(G.n), k):
            if all(not G.has_edge(a, b) for a, b in itertools.combinations(S, 2)):
                return k
    return 0


def brute_chi(G):
    for k in range(1, G.n + 1):
        for col in itertools.product(range(k), repeat=G.n):
            if all(col[u] != col[v] for u, v in G.edges()):
                return k
    return 0


class TestBuild:
    def test_k3(self):
        G = build(3, [(0, 1), (1, 2), (0, 2)])
        assert G == complete(3)

    def test_c5(self):
        assert build(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]) == cycle(5)

    def test_claw(self):
        G = build(4, [(0, 1), (0, 2), (0, 3)])
        assert [G.degree(v) for v in range(4)] == [3, 1, 1, 1]

    @pytest.mark.parametrize("edges", [[(0, 0)], [(0, 5)], [(-1, 1)]])
    def test_bad_edges(self, edges):
        with pytest.raises(GraphError):
            build(3, edges)

    def test_order_limit(self):
        with pytest.raises(GraphError):
            Graph(65, [0] * 65)


class TestGraph6:
    def test_round_trip_c5(self):
        G = from_graph6(to_graph6(cycle(5)))
        assert G == cycle(5)

    def test_k1(self):
        G = from_graph6(to_graph6(complete(1)))
        assert G.n == 1 and G.size == 0

    @pytest.mark.parametrize("bad", ["", "A!", "D?", "Bw~", "A@"])
    def test_malformed(self, bad):
        with pytest.raises(Graph6Error):
            from_graph6(bad)

    @settings(max_examples=200, deadline=None)
    @given(graphs(max_n=20))
    def test_round_trip(self, G):
        assert from_graph6(to_graph6(G)) == G

    @settings(max_examples=200, deadline=None)
    @given(graphs(max_n=20))
    def test_matches_networkx(self, G):
        ours = to_graph6(G)
        theirs = nx.to_graph6_bytes(to_nx(G), header=False).decode().strip()
        assert ours == theirs

    def test_large_header(self):
        G = path(64)
        assert from_graph6(to_graph6(G)) == G
        assert to_graph6(G).startswith("~")

    def test_edge_list(self):
        G = named("E3")
        assert from_edge_list(to_edge_list(G)) == G
        assert parse_graph_text(to_edge_list(G)) == G
        assert parse_graph_text(to_graph6(G) + "\n") == G


class TestOperations:
    def test_complement_k4(self):
        assert complement(complete(4)) == empty(4)

    def test_c5_self_complementary(self):
        assert are_isomorphic(complement(cycle(5)), cycle(5))

    def test_c7_complement(self):
        H = complement(cycle(7))
        assert H.size == 21 - 7 and all(H.degree(v) == 4 for v in range(7))

    @settings(max_examples=100, deadline=None)
    @given(graphs())
    def test_complement_involution(self, G):
        assert complement(complement(G)) == G

    def test_unions(self):
        G = disjoint_union([complete(1), path(5)])
        assert G.n == 6 and are_isomorphic(G, named("K1uP5"))
        assert are_isomorphic(disjoint_union([path(3), path(3)]), named("2P3"))
        G = disjoint_union([complete(1), complete(1), complete(3)])
        assert G.n == 5 and G.size == 3

    def test_induced(self):
        C5 = cycle(5)
        assert induced_subgraph(C5, range(5)) == C5
        assert are_isomorphic(induced_subgraph(C5, [0, 1, 2, 3]), path(4))
        assert are_isomorphic(induced_subgraph(named("K1uZ1"), [1, 2, 3, 4]), named("Z1"))

    def test_connected(self):
        assert is_connected(cycle(9))
        assert not is_connected(named("2P3"))
        assert is_connected(complete(1))

    def test_odd_cycle(self):
        assert is_odd_cycle(cycle(9)) and not is_odd_cycle(cycle(8))
        assert not is_odd_cycle(build_family(FamilySpec("F1", 9)))


class TestInvariants:
    @pytest.mark.parametrize("n,a", [(9, 4), (7, 3), (5, 2)])
    def test_alpha_cycles(self, n, a):
        assert independence_number(cycle(n)) == a

    def test_alpha_f1(self):
        G = build_family(FamilySpec("F1", 9))
        assert independence_number(G) == brute_alpha(G) == 5

    def test_omega(self):
        assert clique_number(cycle(5)) == 2
        assert clique_number(complete(4)) == 4
        E1 = named("E1")
        assert clique_number(E1) == independence_number(complement(E1)) == 3

    def test_chi(self):
        assert chromatic_number(cycle(5)) == 3
        assert chromatic_number(cycle(6)) == 2
        # E1 itself colours with omega colours; its induced C5 does not
        E1 = named("E1")
        assert chromatic_number(E1) == brute_chi(E1) == clique_number(E1) == 3
        C = induced_subgraph(E1, [3, 6, 4, 5, 7])
        assert chromatic_number(C) > clique_number(C)

    def test_triangles(self):
        assert triangle_count(complete(4)) == 4
        assert triangle_count(cycle(5)) == 0

    @settings(max_examples=150, deadline=None)
    @given(graphs(max_n=10))
    def test_alpha_is_complement_omega(self, G):
        assert independence_number(G) == clique_number(complement(G))

    @settings(max_examples=150, deadline=None)
    @given(graphs(max_n=9))
    def test_alpha_brute(self, G):
        assert independence_number(G) == brute_alpha(G)

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=7))
    def test_chi_brute(self, G):
        chi = chromatic_number(G)
        assert chi == brute_chi(G)
        assert chi >= clique_number(G)

    @settings(max_examples=100, deadline=None)
    @given(graphs(max_n=12))
    def test_omega_networkx(self, G):
        H = to_nx(G)
        best = max((len(c) for c in nx.find_cliques(H)), default=0)
        assert clique_number(G) == best


def test_graph_equality_and_hash():
    a, b = cycle(6), cycle(6)
    assert a == b and hash(a) == hash(b)
    assert {a: 1}[b] == 1
    assert isinstance(a, Graph)
