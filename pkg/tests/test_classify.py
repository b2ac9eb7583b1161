import pytest

from clawperf.catalog import exceptions, named
from clawperf.classify import (
    SCRIPT_X,
    UNAVOIDABLE,
    WITNESS_FAMILY,
    ClassifyError,
    classify_pair,
    exception_index,
    family_for_witness,
    in_script_X,
    member_of_class_G,
    unavoidable_witness,
    verdict,
)
from clawperf.enumeration import EnumerationQuery, collect
from clawperf.families import inflate_cycle
from clawperf.graph import add_vertex, complete, cycle, path
from clawperf.iso import contains_induced

X_FIN = named("2K1uK3")


class TestScriptX:
    @pytest.mark.parametrize("name", SCRIPT_X)
    def test_members_contain_themselves(self, name):
        assert in_script_X(named(name)) == name

    def test_subgraph(self):
        assert in_script_X(path(4)) == "P6"
        assert in_script_X(named("K1uZ1")) in ("K1uZ1", "Z2")

    def test_finite_x_outside(self):
        assert in_script_X(X_FIN) is None


class TestClassifyPair:
    def test_examples(self):
        assert classify_pair(named("2P3")).as_dict() == {
            "case": "AllPerfect", "alpha_threshold": 4, "witness": "2P3"}
        assert classify_pair(X_FIN).case == "FiniteExceptions"
        c = classify_pair(named("B_1_2"))
        assert c.case == "Infinite" and c.family == WITNESS_FAMILY[c.witness]
        assert classify_pair(path(5), 3).case == "AllPerfect"

    def test_lower_thresholds(self):
        assert classify_pair(path(4), 2).witness == "P4"
        assert classify_pair(path(5), 2).as_dict() == {
            "case": "Infinite", "alpha_threshold": 2, "family": "unavailable"}
        assert classify_pair(named("Z2"), 3).witness == "Z2"
        with pytest.raises(ClassifyError):
            classify_pair(path(3), 5)

    def test_claw_convention(self):
        d = classify_pair(named("K_1_3")).as_dict()
        assert d["family"] == "F1" and d["family_by_convention"] is True

    def test_finite_only_at_four(self):
        assert classify_pair(X_FIN, 3).case != "FiniteExceptions"

    def test_all_small_x_classified(self):
        # every graph on <= 6 vertices falls in exactly one case
        cases = {}
        for X in collect(EnumerationQuery(n_max=6)):
            c = classify_pair(X)
            cases[c.case] = cases.get(c.case, 0) + 1
            if c.case == "AllPerfect":
                assert contains_induced(named(c.witness), X) is not None
        assert cases["FiniteExceptions"] == 1


class TestWitness:
    @pytest.mark.parametrize("X,w", [("C4", "C4"), ("K1uZ2", "K1uZ2"), ("P7", "K2uP4")])
    def test_examples(self, X, w):
        assert unavoidable_witness(named(X)) == w

    def test_rejects_non_infinite(self):
        with pytest.raises(ClassifyError):
            unavoidable_witness(path(6))
        with pytest.raises(ClassifyError):
            unavoidable_witness(X_FIN)

    @pytest.mark.parametrize("w,f", [("B", "F2"), ("K2∪K3", "F4"), ("K2uK3", "F4"),
                                     ("K_{1,3}", "F1"), ("5K1", "F3"), ("C7", "F1")])
    def test_families(self, w, f):
        assert family_for_witness(w) == f

    def test_every_witness_mapped(self):
        assert set(UNAVOIDABLE) == set(WITNESS_FAMILY)
        with pytest.raises(ClassifyError):
            family_for_witness("P9")


class TestMembership:
    def test_examples(self):
        assert member_of_class_G(cycle(9), named("B_1_2")) == (False, "is an odd cycle")
        assert member_of_class_G(named("E1"), X_FIN) == (True, None)
        assert member_of_class_G(named("K_1_3"), path(6)) == (False, "not K_1_3-free")
        assert member_of_class_G(cycle(8), path(6))[1] == "not X-free"
        assert member_of_class_G(complete(5), path(6))[1] == "independence number below 4"
        assert member_of_class_G(named("2P3"), path(7))[1] == "not connected"


class TestVerdict:
    def test_e8(self):
        v = verdict(named("E8"), X_FIN)
        assert v.outcome == "Exception" and v.exception_index == 8
        assert v.certificate.is_valid_for(named("E8"))

    def test_all_exceptions(self):
        for i, E in enumerate(exceptions(), 1):
            v = verdict(E, X_FIN)
            assert v.in_class and v.outcome == "Exception"
            # E7 shares its class with E5; the first listed index is reported
            assert v.exception_index == (5 if i == 7 else i)

    def test_inflation(self):
        G = inflate_cycle(9, (2, 1, 1, 1, 1, 1, 1, 1, 1))
        v = verdict(G, named("B_1_2"))
        assert v.outcome == "Imperfect" and v.certificate.length == 9

    def test_perfect_member(self):
        G = add_vertex(complete(4), [0])
        G = add_vertex(add_vertex(add_vertex(G, [4]), [1]), [2])
        v = verdict(G, path(6))
        assert v.in_class and v.outcome == "Perfect"

    def test_not_in_class(self):
        d = verdict(cycle(7), X_FIN).as_dict()
        assert d == {"in_class": False, "failing_predicate": "is an odd cycle"}

    def test_exception_index_none(self):
        assert exception_index(cycle(5)) is None

    def test_case1_members_perfect(self):
        q = EnumerationQuery(n_max=8, forbidden=(named("K_1_3"), named("Z2")),
                             require_connected=True, min_alpha=4)
        for G in collect(q):
            assert verdict(G, named("Z2")).outcome == "Perfect"
