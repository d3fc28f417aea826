"""Named seed graphs with known classification.

Edge lists are transcribed from published drawings, relabelled 0-based.
Each entry is checked against its expected class by the test suite, so a
transcription slip shows up as a failed Nut classification.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import Graph, new_graph, write_graph6
from .kernel import Tag

__all__ = ["SeedEntry", "SEED_NAMES", "seed", "all_seeds"]


@dataclass(frozen=True)
class SeedEntry:
    name: str
    graph: Graph
    expected_class: Tag
    expected_order: int
    expected_degree: Optional[int]
    graph6: str
    source: str


# The three nut graphs on 7 vertices. In the middle drawing vertices 1, 2, 3
# are collinear; the 1-3 edge hidden behind the path 1-2-3 is restored.
_NUT7_A = [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4), (4, 5), (4, 6), (5, 6)]
_NUT7_B = [(0, 1), (0, 2), (0, 4), (0, 5), (1, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 4), (4, 5), (5, 6)]
_NUT7_C = [(0, 1), (0, 3), (0, 4), (0, 6), (1, 2), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5), (5, 6)]

# Antiprism A_4, the smallest quartic nut graph.
_ANTIPRISM4 = [
    (0, 1), (0, 3), (0, 4), (0, 5), (1, 2), (1, 5), (1, 6), (2, 3),
    (2, 6), (2, 7), (3, 4), (3, 7), (4, 5), (4, 7), (5, 6), (6, 7),
]

# Frucht graph.
_FRUCHT = [
    (0, 1), (0, 9), (0, 10), (1, 2), (1, 8), (2, 3), (2, 8), (3, 4), (3, 11),
    (4, 5), (4, 11), (5, 6), (5, 10), (6, 7), (6, 9), (7, 8), (7, 9), (10, 11),
]

_CUBIC20 = [
    (0, 1), (0, 9), (0, 10), (1, 2), (1, 11), (2, 3), (2, 12), (3, 4), (3, 13), (4, 5),
    (4, 14), (5, 6), (5, 15), (6, 7), (6, 16), (7, 8), (7, 17), (8, 9), (8, 18), (9, 19),
    (10, 12), (10, 14), (11, 17), (11, 19), (12, 16), (13, 15), (13, 17), (14, 18), (15, 19), (16, 18),
]

_CUBIC22 = [
    (0, 1), (0, 4), (0, 5), (1, 2), (1, 6), (2, 3), (2, 11), (3, 12), (3, 13), (4, 5), (4, 16),
    (5, 16), (6, 7), (6, 17), (7, 8), (7, 14), (8, 9), (8, 14), (9, 10), (9, 15), (10, 11), (10, 15),
    (11, 20), (12, 13), (12, 21), (13, 21), (14, 18), (15, 19), (16, 17), (17, 18), (18, 19), (19, 20),
    (20, 21),
]

_CUBIC26 = [
    (0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (2, 7), (3, 7), (3, 8), (4, 9), (4, 10),
    (5, 6), (5, 11), (6, 12), (7, 13), (8, 14), (8, 15), (9, 15), (9, 16), (10, 11), (10, 17),
    (11, 18), (12, 13), (12, 18), (13, 14), (14, 19), (15, 20), (16, 21), (16, 22), (17, 22),
    (17, 23), (18, 19), (19, 20), (20, 24), (21, 24), (21, 25), (22, 23), (23, 25), (24, 25),
]

# Drawn as cubic26 with vertex 25 blown up into the triangle 25-26-27. This is a
# faithful copy of the drawing, but it is nonsingular, so it fails its own check.
_CUBIC28 = [
    (0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (2, 7), (3, 7), (3, 8), (4, 9), (4, 10),
    (5, 6), (5, 11), (6, 12), (7, 13), (8, 14), (8, 15), (9, 15), (9, 16), (10, 11), (10, 17),
    (11, 18), (12, 13), (12, 18), (13, 14), (14, 19), (15, 20), (16, 21), (16, 22), (17, 22),
    (17, 23), (18, 19), (19, 20), (20, 24), (21, 24), (21, 27), (22, 23), (23, 26), (24, 25),
    (25, 26), (25, 27), (26, 27),
]

# One of the 269 quartic nut graphs of order 12.
_QUARTIC12 = [
    (0, 5), (0, 6), (0, 9), (0, 11), (1, 6), (1, 7), (1, 8), (1, 9), (2, 6), (2, 8), (2, 9), (2, 10),
    (3, 7), (3, 8), (3, 10), (3, 11), (4, 8), (4, 9), (4, 10), (4, 11), (5, 7), (5, 10), (5, 11), (6, 7),
]

# Quartic nut graphs of odd order.
_QUARTIC15 = [
    (0, 6), (0, 8), (0, 10), (0, 11), (1, 6), (1, 9), (1, 11), (1, 12), (2, 7), (2, 9),
    (2, 11), (2, 12), (3, 7), (3, 10), (3, 12), (3, 14), (4, 8), (4, 9), (4, 13), (4, 14),
    (5, 8), (5, 12), (5, 13), (5, 14), (6, 10), (6, 13), (7, 11), (7, 13), (8, 14), (9, 10),
]

_QUARTIC17 = [
    (0, 6), (0, 10), (0, 15), (0, 16), (1, 7), (1, 8), (1, 11), (1, 12), (2, 7), (2, 9),
    (2, 14), (2, 15), (3, 8), (3, 11), (3, 12), (3, 14), (4, 9), (4, 10), (4, 13), (4, 14),
    (5, 11), (5, 12), (5, 15), (5, 16), (6, 13), (6, 14), (6, 16), (7, 12), (7, 13), (8, 10),
    (8, 15), (9, 11), (9, 13), (10, 16),
]

_QUARTIC19 = [
    (0, 7), (0, 8), (0, 13), (0, 17), (1, 7), (1, 11), (1, 12), (1, 16), (2, 8), (2, 12),
    (2, 14), (2, 17), (3, 9), (3, 11), (3, 15), (3, 18), (4, 9), (4, 12), (4, 13), (4, 15),
    (5, 10), (5, 14), (5, 15), (5, 16), (6, 10), (6, 16), (6, 17), (6, 18), (7, 11), (7, 13),
    (8, 13), (8, 14), (9, 16), (9, 18), (10, 17), (10, 18), (11, 14), (12, 15),
]

_QUARTIC21 = [
    (0, 9), (0, 11), (0, 13), (0, 14), (1, 9), (1, 13), (1, 18), (1, 20), (2, 10), (2, 12),
    (2, 14), (2, 15), (3, 10), (3, 13), (3, 15), (3, 16), (4, 11), (4, 12), (4, 19), (4, 20),
    (5, 11), (5, 17), (5, 18), (5, 20), (6, 12), (6, 17), (6, 19), (6, 20), (7, 14), (7, 15),
    (7, 16), (7, 19), (8, 14), (8, 16), (8, 18), (8, 19), (9, 16), (9, 17), (10, 15), (10, 18),
    (11, 13), (12, 17),
]

# name -> (order, edges, degree, provenance)
_TABLE: dict[str, tuple[int, list, Optional[int], str]] = {
    "nut7_a": (7, _NUT7_A, None, "7-vertex nut graph, first drawing"),
    "nut7_b": (7, _NUT7_B, None, "7-vertex nut graph, second drawing (hidden edge 0-2 restored)"),
    "nut7_c": (7, _NUT7_C, None, "7-vertex nut graph, third drawing"),
    "antiprism4": (8, _ANTIPRISM4, 4, "smallest quartic nut graph"),
    "frucht": (12, _FRUCHT, 3, "Frucht graph, a smallest cubic nut graph"),
    "cubic20": (20, _CUBIC20, 3, "cubic nut graph drawing, order 20"),
    "cubic22": (22, _CUBIC22, 3, "cubic nut graph drawing, order 22"),
    "cubic26": (26, _CUBIC26, 3, "cubic nut graph drawing, order 26"),
    "cubic28": (28, _CUBIC28, 3, "cubic nut graph drawing, order 28"),
    "quartic12": (12, _QUARTIC12, 4, "quartic nut graph of order 12"),
    "quartic15": (15, _QUARTIC15, 4, "odd-order quartic nut graph drawing, order 15"),
    "quartic17": (17, _QUARTIC17, 4, "odd-order quartic nut graph drawing, order 17"),
    "quartic19": (19, _QUARTIC19, 4, "odd-order quartic nut graph drawing, order 19"),
    "quartic21": (21, _QUARTIC21, 4, "odd-order quartic nut graph drawing, order 21"),
}

SEED_NAMES: tuple[str, ...] = tuple(_TABLE)

_cache: dict[str, SeedEntry] = {}


def seed(name: str) -> SeedEntry:
    if name not in _TABLE:
        raise KeyError(f"unknown seed {name!r}; choose from {', '.join(SEED_NAMES)}")
    if name not in _cache:
        order, edges, rho, source = _TABLE[name]
        g = new_graph(order, edges)
        _cache[name] = SeedEntry(name, g, Tag.NUT, order, rho, write_graph6(g), source)
    return _cache[name]


def all_seeds() -> list[SeedEntry]:
    return [seed(name) for name in SEED_NAMES]
