"""Forbidden pairs {K_1_3, X}: which X force perfectness, and per-graph verdicts.

Graph names here are the ASCII catalog names (``K1uZ1`` for the disjoint
union of K1 and Z1, ``K_1_3`` for the claw).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .catalog import exceptions, named
from .graph import Graph, independence_number, is_connected, is_odd_cycle
from .holes import HoleCertificate, is_perfect
from .iso import are_isomorphic, contains_induced, is_free
from .named import CLAW


class ClassifyError(ValueError):
    pass


# maximal members of the family of X forcing perfectness at alpha >= 4
SCRIPT_X = ("P6", "K1uP5", "2P3", "Z2", "K1uZ1")
# the single X that leaves finitely many imperfect graphs
FINITE_X = "2K1uK3"
# every X outside the two lists above contains one of these
UNAVOIDABLE = (
    "5K1", "3K1uK2", "3K2", "K2uP4",
    "K_1_3", "C4", "C5", "C6", "C7",
    "K4", "D", "H", "B", "K2uK3", "K1uZ2",
)
WITNESS_FAMILY = {
    **{w: "F1" for w in ("C4", "C5", "C6", "C7", "K4", "D", "H", "K_1_3")},
    "B": "F2",
    **{w: "F3" for w in ("5K1", "3K1uK2", "K1uZ2", "3K2", "K2uP4")},
    "K2uK3": "F4",
}
# witnesses whose family is a choice of this library rather than forced
CONVENTION_WITNESSES = frozenset({"K_1_3"})

# lower thresholds: X is harmless iff it sits inside one of these
SMALL_THRESHOLD_X = {2: ("Z1", "P4"), 3: ("Z2", "P5")}


def _canon_name(name: str) -> str:
    s = name.replace("∪", "u").replace(" ", "")
    return {"K_{1,3}": "K_1_3", "K13": "K_1_3", "claw": "K_1_3"}.get(s, s)


def _first_containing(X: Graph, names) -> str | None:
    for name in names:
        if contains_induced(named(name), X) is not None:
            return name
    return None


def in_script_X(X: Graph) -> str | None:
    """First of P6, K1uP5, 2P3, Z2, K1uZ1 containing X as an induced subgraph."""
    return _first_containing(X, SCRIPT_X)


@dataclass(frozen=True)
class PairCase:
    case: str  # AllPerfect | FiniteExceptions | Infinite
    alpha_threshold: int
    witness: str | None = None
    family: str | None = None
    convention: bool = False

    def as_dict(self) -> dict:
        d = {"case": self.case, "alpha_threshold": self.alpha_threshold}
        if self.witness is not None:
            d["witness"] = self.witness
        if self.family is not None:
            d["family"] = self.family
        if self.convention:
            d["family_by_convention"] = True
        return d


def classify_pair(X: Graph, alpha_threshold: int = 4) -> PairCase:
    if alpha_threshold in SMALL_THRESHOLD_X:
        hit = _first_containing(X, SMALL_THRESHOLD_X[alpha_threshold])
        if hit:
            return PairCase("AllPerfect", alpha_threshold, witness=hit)
        return PairCase("Infinite", alpha_threshold, family="unavailable")
    if alpha_threshold != 4:
        raise ClassifyError("alpha threshold must be 2, 3 or 4")
    hit = in_script_X(X)
    if hit:
        return PairCase("AllPerfect", 4, witness=hit)
    if are_isomorphic(X, named(FINITE_X)):
        return PairCase("FiniteExceptions", 4)
    w = _unavoidable(X)
    if w is None:
        # the unavoidable list would be incomplete; surface it instead of guessing
        raise ClassifyError("X contains none of the unavoidable graphs")
    return PairCase("Infinite", 4, witness=w, family=WITNESS_FAMILY[w],
                    convention=w in CONVENTION_WITNESSES)


def _unavoidable(X: Graph) -> str | None:
    for name in UNAVOIDABLE:
        if contains_induced(X, named(name)) is not None:
            return name
    return None


def unavoidable_witness(X: Graph) -> str:
    """First of the fifteen unavoidable graphs inside X."""
    if in_script_X(X) or are_isomorphic(X, named(FINITE_X)):
        raise ClassifyError("X is not in the infinite case")
    w = _unavoidable(X)
    if w is None:
        raise ClassifyError("X contains none of the unavoidable graphs")
    return w


def family_for_witness(witness: str) -> str:
    try:
        return WITNESS_FAMILY[_canon_name(witness)]
    except KeyError:
        raise ClassifyError(f"unknown witness {witness!r}") from None


def member_of_class_G(G: Graph, X: Graph) -> tuple[bool, str | None]:
    """Membership in the class of connected {K_1_3, X}-free graphs that are
    not odd cycles and have independence number at least 4."""
    if G.n == 0 or not is_connected(G):
        return False, "not connected"
    if not is_free(G, CLAW):
        return False, "not K_1_3-free"
    if not is_free(G, X):
        return False, "not X-free"
    if is_odd_cycle(G):
        return False, "is an odd cycle"
    if independence_number(G) < 4:
        return False, "independence number below 4"
    return True, None


@dataclass(frozen=True)
class Verdict:
    in_class: bool
    failing_predicate: str | None = None
    outcome: str | None = None  # Perfect | Exception | Imperfect
    exception_index: int | None = None
    certificate: HoleCertificate | None = field(default=None, compare=False)

    def as_dict(self) -> dict:
        d: dict = {"in_class": self.in_class}
        if not self.in_class:
            d["failing_predicate"] = self.failing_predicate
            return d
        d["outcome"] = self.outcome
        if self.exception_index is not None:
            d["index"] = self.exception_index
            d["exception_index"] = self.exception_index
        if self.certificate is not None:
            d["certificate"] = self.certificate.as_dict()
        return d


def exception_index(G: Graph) -> int | None:
    for i, E in enumerate(exceptions(), 1):
        if are_isomorphic(G, E):
            return i
    return None


def verdict(G: Graph, X: Graph) -> Verdict:
    ok, why = member_of_class_G(G, X)
    if not ok:
        return Verdict(False, failing_predicate=why)
    perfect, cert = is_perfect(G)
    if perfect:
        return Verdict(True, outcome="Perfect")
    if are_isomorphic(X, named(FINITE_X)):
        i = exception_index(G)
        if i is not None:
            return Verdict(True, outcome="Exception", exception_index=i, certificate=cert)
    return Verdict(True, outcome="Imperfect", certificate=cert)
