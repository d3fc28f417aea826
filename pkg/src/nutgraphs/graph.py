"""Simple undirected graphs, canonical forms and graph6/DOT I/O."""

from __future__ import annotations

from typing import Iterable, Sequence

__all__ = [
    "Graph",
    "GraphError",
    "LabelOutOfRange",
    "SelfLoop",
    "DuplicateEdge",
    "Graph6Error",
    "new_graph",
    "from_adjacency",
    "degree",
    "is_regular",
    "canonical_form",
    "canonical_labelling",
    "parse_graph6",
    "write_graph6",
    "write_dot",
]


class GraphError(ValueError):
    """Rejected graph construction. ``reason`` names the violated rule."""

    reason = "invalid"


class LabelOutOfRange(GraphError):
    reason = "label-out-of-range"


class SelfLoop(GraphError):
    reason = "self-loop"


class DuplicateEdge(GraphError):
    reason = "duplicate-edge"


class Graph6Error(ValueError):
    pass


class Graph:
    """Immutable simple graph on vertices ``0..order-1``.

    Edges are kept as a sorted tuple of ``(u, v)`` pairs with ``u < v``;
    ``adj[v]`` is the neighbourhood of ``v`` as an integer bitmask.
    """

    __slots__ = ("order", "edges", "adj")

    def __init__(self, order: int, edges: tuple[tuple[int, int], ...], adj: tuple[int, ...]):
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "adj", adj)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.order == other.order and self.edges == other.edges

    def __hash__(self):
        return hash((self.order, self.edges))

    def __repr__(self):
        return f"Graph(order={self.order}, edges={len(self.edges)})"

    @property
    def size(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def adjacency_matrix(self) -> list[list[int]]:
        n = self.order
        return [[a >> j & 1 for j in range(n)] for a in self.adj]

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return new_graph(self.order, [(perm[u], perm[v]) for u, v in self.edges])

    def is_connected(self) -> bool:
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self.order) - 1


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def new_graph(order: int, edges: Iterable[Sequence[int]]) -> Graph:
    if order < 1:
        raise GraphError(f"order must be at least 1, got {order}")
    adj = [0] * order
    norm = []
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < order and 0 <= v < order):
            raise LabelOutOfRange(f"edge ({u}, {v}) has a label outside 0..{order - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        if u > v:
            u, v = v, u
        if adj[u] >> v & 1:
            raise DuplicateEdge(f"duplicate edge ({u}, {v})")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        norm.append((u, v))
    norm.sort()
    return Graph(order, tuple(norm), tuple(adj))


def from_adjacency(adj: Sequence[int]) -> Graph:
    """Build a graph from symmetric neighbourhood bitmasks."""
    n = len(adj)
    edges = [(u, v) for u in range(n) for v in _bits(adj[u] >> (u + 1) << (u + 1))]
    return new_graph(n, edges)


def degree(g: Graph, v: int) -> int:
    if not 0 <= v < g.order:
        raise IndexError(f"vertex {v} out of range for order {g.order}")
    return g.adj[v].bit_count()


def is_regular(g: Graph, rho: int) -> bool:
    return all(a.bit_count() == rho for a in g.adj)


# -- canonical labelling ------------------------------------------------------
#
# Equitable refinement, individualisation of the first smallest non-trivial
# cell, and a search for the leaf minimising (trace of quotient invariants,
# adjacency code). Subtrees equivalent under automorphisms already found are
# skipped.


def _equitable(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(cells):
            smask = 0
            for v in cells[i]:
                smask |= 1 << v
            new = []
            for c in cells:
                if len(c) == 1:
                    new.append(c)
                    continue
                counts = [(adj[v] & smask).bit_count() for v in c]
                vals = sorted(set(counts))
                if len(vals) == 1:
                    new.append(c)
                    continue
                for val in vals:
                    new.append([v for v, k in zip(c, counts) if k == val])
                changed = True
            cells = new
            i += 1
    return cells


def _quotient(adj: Sequence[int], cells: list[list[int]]) -> tuple:
    masks = []
    for c in cells:
        m = 0
        for v in c:
            m |= 1 << v
        masks.append(m)
    return tuple((len(c), tuple((adj[c[0]] & m).bit_count() for m in masks)) for c in cells)


def _leaf_code(adj: Sequence[int], order: list[int]) -> int:
    code = 0
    for j in range(1, len(order)):
        aj = adj[order[j]]
        for i in range(j):
            code = (code << 1) | (aj >> order[i] & 1)
    return code


def canonical_labelling(g: Graph) -> list[int]:
    """Vertex order of the canonical leaf: ``result[i]`` becomes vertex ``i``."""
    adj = g.adj
    n = g.order
    best: list = [None]  # [(traces, code), order]
    autos: list[dict[int, int]] = []

    def orbit_reps(cell: list[int], prefix: tuple[int, ...]) -> list[int]:
        parent = {v: v for v in cell}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for gamma in autos:
            if any(gamma[p] != p for p in prefix):
                continue
            for v in cell:
                w = gamma[v]
                if w in parent:
                    a, b = find(v), find(w)
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        return parent, find

    def visit(cells, prefix, traces):
        cells = _equitable(adj, cells)
        traces = traces + (_quotient(adj, cells),)
        if best[0] is not None:
            head = best[0][0][0][: len(traces)]
            if traces > head:
                return
        if len(cells) == n:
            order = [c[0] for c in cells]
            key = (traces, _leaf_code(adj, order))
            if best[0] is None or key < best[0][0]:
                best[0] = (key, order)
            elif key == best[0][0]:
                ref = best[0][1]
                autos.append({ref[i]: order[i] for i in range(n)})
            return
        size = min(len(c) for c in cells if len(c) > 1)
        t = next(i for i, c in enumerate(cells) if len(c) == size)
        target = sorted(cells[t])
        done: list[int] = []
        for w in target:
            if done:
                parent, find = orbit_reps(target, prefix)
                if any(find(w) == find(d) for d in done):
                    continue
            rest = [v for v in cells[t] if v != w]
            child = cells[:t] + [[w], rest] + cells[t + 1 :]
            visit(child, prefix + (w,), traces)
            done.append(w)

    visit([list(range(n))], (), ())
    return best[0][1]


def canonical_form(g: Graph) -> bytes:
    """Key equal for two graphs exactly when they are isomorphic."""
    n = g.order
    code = _leaf_code(g.adj, canonical_labelling(g))
    nbits = n * (n - 1) // 2
    return n.to_bytes(4, "big") + code.to_bytes((nbits + 7) // 8, "big")


# -- graph6 ---------------------------------------------------------------------

_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def write_graph6(g: Graph) -> str:
    n = g.order
    out = [_encode_n(n)]
    acc = 0
    nacc = 0
    for j in range(1, n):
        aj = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (aj >> i & 1)
            nacc += 1
            if nacc == 6:
                out.append(chr(acc + 63))
                acc = nacc = 0
    if nacc:
        out.append(chr((acc << (6 - nacc)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER) :]
    if not s:
        raise Graph6Error("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside the graph6 range 0x3F-0x7E")
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] != 63:
        if len(vals) < 4:
            raise Graph6Error("truncated order header")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    else:
        if len(vals) < 8:
            raise Graph6Error("truncated order header")
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        pos = 8
    if n < 1:
        raise Graph6Error("graph6 order must be at least 1")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = vals[pos:]
    if len(body) < need:
        raise Graph6Error(f"expected {need} data characters, got {len(body)}")
    if len(body) > need:
        raise Graph6Error("trailing characters after graph6 data")
    pad = need * 6 - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return new_graph(n, edges)


def write_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(g.order)]
    lines += [f"  {u} -- {v};" for u, v in g.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"
