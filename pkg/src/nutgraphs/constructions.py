"""Fowler construction, 4-fold subdivision, circulants and antiprisms."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, degree, new_graph
from .kernel import mat_vec

__all__ = [
    "FowlerSite",
    "CirculantSpec",
    "LinearForm",
    "fowler_site",
    "fowler",
    "fowler_lift",
    "subdivide_4fold",
    "cycle",
    "antiprism",
    "circulant",
    "circulant_eigenvalues",
    "antiprism_eigenvalue_closed_form",
    "antiprism_nullity",
    "antiprism_kernel_closed_form",
    "antiprism_propagate",
]


@dataclass(frozen=True)
class FowlerSite:
    """Where and how a Fowler gadget is attached.

    ``neighbors`` are the old neighbours u_1 < ... < u_rho of ``v``; the new
    vertices are q_i = n + i - 1 and p_i = n + rho + i - 1.
    """

    base: Graph
    v: int
    neighbors: tuple[int, ...]

    @property
    def rho(self) -> int:
        return len(self.neighbors)

    @property
    def q(self) -> tuple[int, ...]:
        n = self.base.order
        return tuple(range(n, n + self.rho))

    @property
    def p(self) -> tuple[int, ...]:
        n = self.base.order
        return tuple(range(n + self.rho, n + 2 * self.rho))

    @property
    def degenerate(self) -> bool:
        # rho = 1 leaves the p-q block empty
        return self.rho == 1


def fowler_site(g: Graph, v: int) -> FowlerSite:
    if degree(g, v) == 0:
        raise ValueError(f"vertex {v} is isolated; the Fowler construction needs degree >= 1")
    return FowlerSite(g, v, tuple(g.neighbors(v)))


def fowler(g: Graph, v: int) -> Graph:
    site = fowler_site(g, v)
    u, q, p = site.neighbors, site.q, site.p
    rho = site.rho
    edges = [e for e in g.edges if v not in e]
    for i in range(rho):
        edges.append((v, q[i]))
        edges.append((u[i], p[i]))
        for j in range(rho):
            if i != j:
                edges.append((p[i], q[j]))
    return new_graph(g.order + 2 * rho, edges)


def fowler_lift(x: Sequence[int], site: FowlerSite) -> list[int]:
    """Kernel vector of F(G, v) obtained from a kernel vector of G."""
    if len(x) != site.base.order:
        raise ValueError(f"vector has length {len(x)}, graph has order {site.base.order}")
    a = x[site.v]
    out = list(x) + [0] * (2 * site.rho)
    for i, ui in enumerate(site.neighbors):
        out[site.q[i]] = x[ui]
        out[site.p[i]] = a
    out[site.v] = -(site.rho - 1) * a
    return out


def subdivide_4fold(g: Graph, e: Sequence[int]) -> Graph:
    a, b = sorted((int(e[0]), int(e[1])))
    if not (0 <= a < g.order and 0 <= b < g.order) or not g.has_edge(a, b):
        raise ValueError(f"({a}, {b}) is not an edge")
    n = g.order
    path = [a, n, n + 1, n + 2, n + 3, b]
    edges = [f for f in g.edges if f != (a, b)]
    edges += list(zip(path, path[1:]))
    return new_graph(n + 4, edges)


@dataclass(frozen=True)
class CirculantSpec:
    order: int
    offsets: tuple[int, ...]

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("circulant order must be at least 1")
        offs = tuple(sorted(set(self.offsets)))
        if len(offs) != len(self.offsets):
            raise ValueError("circulant offsets must be distinct")
        for s in offs:
            if not 1 <= s <= self.order // 2:
                raise ValueError(f"offset {s} outside 1..{self.order // 2}")
        object.__setattr__(self, "offsets", offs)


def circulant(spec: CirculantSpec) -> Graph:
    n = spec.order
    edges = set()
    for i in range(n):
        for s in spec.offsets:
            j = (i + s) % n
            edges.add((min(i, j), max(i, j)))
    return new_graph(n, sorted(edges))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return circulant(CirculantSpec(n, (1,)))


def antiprism(n: int) -> Graph:
    """A_n on 2n vertices, i.e. Ci_2n(1, 2)."""
    if n < 3:
        raise ValueError("antiprism needs n >= 3")
    return circulant(CirculantSpec(2 * n, (1, 2)))


def circulant_eigenvalues(spec: CirculantSpec) -> list[float]:
    n = spec.order
    out = []
    for r in range(n):
        lam = 0.0
        for s in spec.offsets:
            c = math.cos(2 * math.pi * r * s / n)
            # s = n/2 links each vertex to a single antipode
            lam += c if 2 * s == n else 2 * c
        out.append(lam)
    return out


def antiprism_eigenvalue_closed_form(n: int, r: int) -> float:
    c = math.cos(math.pi * r / n)
    return 2 * (2 * c - 1) * (c + 1)


def antiprism_nullity(n: int) -> int:
    if n < 3:
        raise ValueError("antiprism needs n >= 3")
    return 3 if n % 3 == 0 else 1


_BLOCKS = ((0, 0, -1, 0, 0, 1), (0, -1, 0, 0, 1, 0), (-1, 0, 0, 1, 0, 0))


def antiprism_kernel_closed_form(n: int) -> list[list[int]]:
    if n < 3:
        raise ValueError("antiprism needs n >= 3")
    if n % 3 == 0:
        return [list(block) * (n // 3) for block in _BLOCKS]
    return [[-1, 1] * n]


@dataclass(frozen=True)
class LinearForm:
    """Integer combination of the symbols a, b, c, d."""

    a: int = 0
    b: int = 0
    c: int = 0
    d: int = 0

    def coefficients(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def __add__(self, other: LinearForm) -> LinearForm:
        return LinearForm(*(x + y for x, y in zip(self.coefficients(), other.coefficients())))

    def __neg__(self) -> LinearForm:
        return LinearForm(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other: LinearForm) -> LinearForm:
        return self + (-other)

    def __call__(self, a: int, b: int, c: int, d: int) -> int:
        return self.a * a + self.b * b + self.c * c + self.d * d

    def __str__(self):
        parts = []
        for coef, sym in zip(self.coefficients(), "abcd"):
            if coef == 0:
                continue
            sign = "-" if coef < 0 else "+"
            mag = "" if abs(coef) == 1 else str(abs(coef))
            parts.append(f"{sign}{mag}{sym}")
        if not parts:
            return "0"
        s = "".join(parts)
        return s[1:] if s[0] == "+" else s


def antiprism_propagate(n: int) -> tuple[list[LinearForm], list[list[int]]]:
    """Solve A x = 0 on A_n symbolically from x = (a, b, c, d, ...).

    Vertices follow the circulant order (entry i is vertex i + 1 of the
    interleaved outer/inner drawing). The zero-sum rule at vertex i fixes
    entry i + 2; the four equations left over at the wrap-around (vertices
    2n-1, 2n, 1, 2) are returned, negated, as the rows of Q.
    """
    if n < 3:
        raise ValueError("antiprism needs n >= 3")
    size = 2 * n
    x: list[LinearForm] = [LinearForm(1), LinearForm(b=1), LinearForm(c=1), LinearForm(d=1)]
    x += [LinearForm()] * (size - 4)
    for i in range(2, size - 2):
        x[i + 2] = -(x[i - 2] + x[i - 1] + x[i + 1])
    q = []
    for i in (size - 2, size - 1, 0, 1):
        total = LinearForm()
        for s in (-2, -1, 1, 2):
            total = total + x[(i + s) % size]
        q.append(list((-total).coefficients()))
    return x, q


def check_kernel_vector(g: Graph, x: Sequence[int]) -> bool:
    return len(x) == g.order and not any(mat_vec(g, x))
