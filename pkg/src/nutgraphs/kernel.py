"""Exact adjacency null spaces and the nut/core classification.

All rank decisions use fraction-free elimination over Python integers; no
floating point is involved.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd
from typing import Optional, Sequence

from .graph import Graph

__all__ = [
    "Tag",
    "KernelCertificate",
    "NutCertificate",
    "GraphClass",
    "Lemma5Error",
    "AdjacentPair",
    "NotSingleton",
    "kernel",
    "nullity",
    "core_vertices",
    "admissible_vector",
    "classify",
    "check_lemma5",
    "mat_vec",
    "primitive",
]


class Tag(str, enum.Enum):
    NON_SINGULAR = "NonSingular"
    SINGULAR_NON_CORE = "SingularNonCore"
    CORE_NON_NUT = "CoreNonNut"
    NUT = "Nut"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class KernelCertificate:
    order: int
    nullity: int
    basis: tuple[tuple[int, ...], ...]

    def to_text(self) -> str:
        lines = [f"nullity {self.nullity}"]
        lines += [" ".join(map(str, x)) for x in self.basis]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> KernelCertificate:
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines or not lines[0].startswith("nullity "):
            raise ValueError("certificate must start with 'nullity k'")
        k = int(lines[0].split()[1])
        rows = tuple(tuple(int(t) for t in ln.split()) for ln in lines[1 : 1 + k])
        if len(rows) != k:
            raise ValueError(f"expected {k} vectors, found {len(rows)}")
        order = len(rows[0]) if rows else 0
        return cls(order, k, rows)


@dataclass(frozen=True)
class NutCertificate:
    vector: tuple[int, ...]


@dataclass(frozen=True)
class GraphClass:
    tag: Tag
    nullity: int
    witness: Optional[object] = None


class Lemma5Error(ValueError):
    pass


class AdjacentPair(Lemma5Error):
    pass


class NotSingleton(Lemma5Error):
    pass


def mat_vec(g: Graph, x: Sequence[int]) -> list[int]:
    """A(g) @ x: neighbourhood sums."""
    return [sum(x[w] for w in g.neighbors(v)) for v in range(g.order)]


def primitive(x: Sequence[int]) -> tuple[int, ...]:
    """Divide by the entry gcd and make the first nonzero entry positive."""
    d = 0
    for t in x:
        d = gcd(d, t)
    if d == 0:
        return tuple(x)
    lead = next(t for t in x if t)
    if lead < 0:
        d = -d
    return tuple(t // d for t in x)


def _fraction_free_rref(m: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    # Gauss-Jordan with Bareiss division: every update is an exact integer
    # division by the previous pivot, and all pivots end equal.
    rows = len(m)
    cols = len(m[0]) if rows else 0
    prev = 1
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        best = -1
        bval = 0
        for i in range(r, rows):
            v = abs(m[i][c])
            if v > bval:
                best, bval = i, v
        if best < 0:
            continue
        m[r], m[best] = m[best], m[r]
        prow = m[r]
        p = prow[c]
        for i in range(rows):
            if i == r:
                continue
            row = m[i]
            f = row[c]
            if f:
                m[i] = [(p * a - f * b) // prev for a, b in zip(row, prow)]
            elif p != prev:
                m[i] = [p * a // prev for a in row]
        prev = p
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m[:r], pivots


def kernel(g: Graph) -> KernelCertificate:
    n = g.order
    red, pivots = _fraction_free_rref(g.adjacency_matrix())
    # All pivots of the fraction-free RREF share one value d; the kernel vector
    # for free column f is d*e_f - sum_i red[i][f] * e_{pivot_i}.
    d = red[0][pivots[0]] if pivots else 1
    if any(red[i][pc] != d for i, pc in enumerate(pivots)):
        raise ArithmeticError("fraction-free elimination produced unequal pivots")
    pivot_set = set(pivots)
    basis = []
    for f in range(n):
        if f in pivot_set:
            continue
        x = [0] * n
        x[f] = d
        for i, pc in enumerate(pivots):
            x[pc] = -red[i][f]
        basis.append(primitive(x))
    for x in basis:
        if any(mat_vec(g, x)):
            raise ArithmeticError("kernel basis vector failed A.x = 0")
    return KernelCertificate(n, len(basis), tuple(basis))


def nullity(g: Graph) -> int:
    return kernel(g).nullity


def core_vertices(cert: KernelCertificate) -> set[int]:
    out = set()
    for x in cert.basis:
        out.update(i for i, t in enumerate(x) if t)
    return out


def admissible_vector(cert: KernelCertificate) -> Optional[tuple[int, ...]]:
    """All-nonzero kernel vector, or None when some vertex is not core.

    Uses sum(t**i * basis[i]) with t one more than the largest basis entry in
    absolute value; by Cauchy's root bound no coordinate polynomial vanishes
    at t.
    """
    if cert.nullity == 0 or len(core_vertices(cert)) != cert.order:
        return None
    t = 1 + max(abs(e) for x in cert.basis for e in x)
    vec = [0] * cert.order
    w = 1
    for x in cert.basis:
        for j, e in enumerate(x):
            vec[j] += w * e
        w *= t
    return primitive(vec)


def classify(g: Graph) -> GraphClass:
    cert = kernel(g)
    if cert.nullity == 0:
        return GraphClass(Tag.NON_SINGULAR, 0, cert)
    if len(core_vertices(cert)) != g.order:
        return GraphClass(Tag.SINGULAR_NON_CORE, cert.nullity, cert)
    if cert.nullity == 1:
        return GraphClass(Tag.NUT, 1, NutCertificate(cert.basis[0]))
    return GraphClass(Tag.CORE_NON_NUT, cert.nullity, admissible_vector(cert))


def check_lemma5(g: Graph, x: Sequence[int], u: int, v: int) -> bool:
    """For non-adjacent u, v with private neighbours u', v': x(u') == x(v').

    ``x`` must be an admissible kernel vector of ``g``.
    """
    if len(x) != g.order or any(mat_vec(g, x)) or not all(x):
        raise Lemma5Error("x is not an admissible kernel vector of g")
    if u == v or g.has_edge(u, v):
        raise AdjacentPair(f"vertices {u} and {v} must be distinct and non-adjacent")
    only_u = g.adj[u] & ~g.adj[v]
    only_v = g.adj[v] & ~g.adj[u]
    if only_u.bit_count() != 1 or only_v.bit_count() != 1:
        raise NotSingleton("exclusive neighbourhoods of u and v must be singletons")
    return x[only_u.bit_length() - 1] == x[only_v.bit_length() - 1]
