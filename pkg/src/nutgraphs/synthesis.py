"""Which orders admit a rho-regular nut graph, and how to build one.

For rho in {3, 4} a nut graph of any admissible order is obtained from a
small seed by repeatedly applying the Fowler construction at vertex 0. Each
step adds 2*rho vertices and keeps the graph rho-regular and nut.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from . import catalog
from .constructions import antiprism, fowler, fowler_lift, fowler_site
from .graph import Graph, is_regular
from .kernel import GraphClass, NutCertificate, Tag, classify, mat_vec

__all__ = [
    "Membership",
    "Verdict",
    "SynthesisPlan",
    "SynthesisError",
    "CertificationReport",
    "membership",
    "plan",
    "construct_regular_nut",
    "certify",
]


class Membership(str, enum.Enum):
    MEMBER = "Member"
    NON_MEMBER = "NonMember"
    UNKNOWN = "Unknown"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Verdict:
    status: Membership
    reason: str

    def __bool__(self):
        return self.status is Membership.MEMBER


class SynthesisError(ValueError):
    def __init__(self, verdict: Verdict):
        super().__init__(verdict.reason)
        self.verdict = verdict


@dataclass(frozen=True)
class SynthesisPlan:
    rho: int
    target_order: int
    seed_name: str
    seed_order: int
    steps: int
    vertex_rule: str = "vertex 0"


def membership(rho: int, n: int) -> Verdict:
    if rho < 0 or n < 1:
        raise ValueError("need rho >= 0 and n >= 1")
    if rho in (0, 1):
        # 0- and 1-regular graphs are disjoint copies of K1 or K2; K2 is
        # nonsingular, and nK1 has nullity n.
        if rho == 0 and n == 1:
            return Verdict(Membership.NON_MEMBER,
                           "K1 has an all-nonzero kernel but is excluded as a trivial graph")
        return Verdict(Membership.NON_MEMBER,
                       f"{rho}-regular graphs are unions of K{rho + 1}, never nut for n >= 2")
    if rho == 2:
        return Verdict(Membership.NON_MEMBER, "no regular nut graphs of degree two (cycles are never nut)")
    if rho == 3:
        if n % 2:
            return Verdict(Membership.NON_MEMBER, "a cubic graph has even order")
        if n < 12:
            return Verdict(Membership.NON_MEMBER, "no cubic nut graph has fewer than 12 vertices")
        if n in (14, 16):
            return Verdict(Membership.NON_MEMBER, f"no cubic nut graph on {n} vertices")
        return Verdict(Membership.MEMBER, "cubic nut graph from Fowler expansion of a seed")
    if rho == 4:
        if n in (8, 10, 12) or n >= 14:
            return Verdict(Membership.MEMBER, "quartic nut graph from Fowler expansion of a seed")
        if n % 2:
            return Verdict(Membership.NON_MEMBER, "no quartic nut graph of odd order at most 13")
        return Verdict(Membership.NON_MEMBER, "no quartic nut graph has fewer than 8 vertices")
    return Verdict(Membership.UNKNOWN, f"existence of {rho}-regular nut graphs is an open problem")


# (residue, seed name, seed order); the antiprisms are built on demand.
_CUBIC_SEEDS = {0: ("frucht", 12), 2: ("cubic20", 20), 4: ("cubic22", 22)}
_QUARTIC_SEEDS = {
    0: ("antiprism4", 8),
    2: ("antiprism5", 10),
    4: ("quartic12", 12),
    6: ("antiprism7", 14),
    7: ("quartic15", 15),
    1: ("quartic17", 17),
    3: ("quartic19", 19),
    5: ("quartic21", 21),
}


def plan(rho: int, n: int) -> SynthesisPlan:
    verdict = membership(rho, n)
    if not verdict:
        raise SynthesisError(verdict)
    if rho == 3:
        name, order = _CUBIC_SEEDS[n % 6]
    else:
        name, order = _QUARTIC_SEEDS[n % 8]
    steps, rem = divmod(n - order, 2 * rho)
    assert rem == 0 and steps >= 0, (rho, n, name)
    return SynthesisPlan(rho, n, name, order, steps)


def _seed_graph(name: str) -> Graph:
    if name.startswith("antiprism") and name != "antiprism4":
        return antiprism(int(name[len("antiprism"):]))
    return catalog.seed(name).graph


def construct_regular_nut(rho: int, n: int) -> tuple[Graph, NutCertificate, SynthesisPlan]:
    """Build a rho-regular nut graph on n vertices with its kernel vector.

    The seed's kernel vector is carried through each step by ``fowler_lift``
    and the result is checked against the final adjacency matrix.
    """
    p = plan(rho, n)
    g = _seed_graph(p.seed_name)
    cls = classify(g)
    if cls.tag is not Tag.NUT:
        raise ArithmeticError(f"seed {p.seed_name} is not a nut graph")
    x = list(cls.witness.vector)
    for _ in range(p.steps):
        site = fowler_site(g, 0)
        x = fowler_lift(x, site)
        g = fowler(g, 0)
    if g.order != n or not is_regular(g, rho):
        raise ArithmeticError("Fowler expansion lost regularity or order")
    if any(mat_vec(g, x)) or not all(x):
        raise ArithmeticError("lifted vector is not an admissible kernel vector")
    return g, NutCertificate(tuple(x)), p


@dataclass(frozen=True)
class CertificationReport:
    order: int
    rho: int
    regular: bool
    classification: GraphClass

    @property
    def tag(self) -> Tag:
        return self.classification.tag

    @property
    def nullity(self) -> int:
        return self.classification.nullity

    @property
    def certificate(self) -> Optional[NutCertificate]:
        w = self.classification.witness
        return w if isinstance(w, NutCertificate) else None

    @property
    def ok(self) -> bool:
        return self.regular and self.tag is Tag.NUT


def certify(g: Graph, rho: int) -> CertificationReport:
    """Recompute regularity and class from scratch."""
    return CertificationReport(g.order, rho, is_regular(g, rho), classify(g))
