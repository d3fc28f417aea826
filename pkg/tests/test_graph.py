from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nutgraphs.graph import (
    DuplicateEdge,
    Graph6Error,
    LabelOutOfRange,
    SelfLoop,
    canonical_form,
    canonical_labelling,
    degree,
    from_adjacency,
    is_regular,
    new_graph,
    parse_graph6,
    write_dot,
    write_graph6,
)

from oracles import brute_force_classes, random_graph, relabel_random


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return new_graph(n, [p for p, k in zip(pairs, keep) if k])


def test_new_graph_normalises_edges():
    g = new_graph(4, [(3, 0), (1, 2), (0, 1)])
    assert g.edges == ((0, 1), (0, 3), (1, 2))
    assert g.degrees() == [2, 2, 1, 1]
    assert g.size == 3


@pytest.mark.parametrize(
    "edges, exc, reason",
    [
        ([(0, 4)], LabelOutOfRange, "label-out-of-range"),
        ([(-1, 2)], LabelOutOfRange, "label-out-of-range"),
        ([(2, 2)], SelfLoop, "self-loop"),
        ([(0, 1), (1, 0)], DuplicateEdge, "duplicate-edge"),
    ],
)
def test_new_graph_rejections(edges, exc, reason):
    with pytest.raises(exc) as info:
        new_graph(4, edges)
    assert info.value.reason == reason


def test_order_zero_rejected():
    with pytest.raises(ValueError):
        new_graph(0, [])


def test_degree_and_regularity():
    k4 = new_graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    assert degree(k4, 2) == 3
    assert is_regular(k4, 3)
    assert not is_regular(k4, 2)
    with pytest.raises(IndexError):
        degree(k4, 4)


def test_graph_is_immutable():
    g = new_graph(2, [(0, 1)])
    with pytest.raises(AttributeError):
        g.order = 3


def test_connectivity():
    assert new_graph(3, [(0, 1), (1, 2)]).is_connected()
    assert not new_graph(3, [(0, 1)]).is_connected()
    assert new_graph(1, []).is_connected()


def test_graph6_known_strings():
    k4 = parse_graph6("C~")
    assert k4.size == 6 and is_regular(k4, 3)
    assert write_graph6(new_graph(1, [])) == "@"
    assert parse_graph6(">>graph6<<C~") == k4


@pytest.mark.parametrize("bad", ["", "!!!", "C", "C~~", "B~", "~?", "?"])
def test_graph6_malformed(bad):
    with pytest.raises(Graph6Error):
        parse_graph6(bad)


def test_graph6_large_order_header():
    g = new_graph(70, [(i, i + 1) for i in range(69)])
    s = write_graph6(g)
    assert s.startswith("~")
    assert parse_graph6(s) == g


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=12))
def test_graph6_roundtrip(g):
    assert parse_graph6(write_graph6(g)) == g


@settings(max_examples=150, deadline=None)
@given(graphs(), st.randoms(use_true_random=False))
def test_canonical_form_is_invariant(g, rng):
    assert canonical_form(g) == canonical_form(relabel_random(rng, g))


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_canonical_labelling_is_permutation(g):
    lab = canonical_labelling(g)
    assert sorted(lab) == list(range(g.order))


def test_canonical_form_separates_cospectral_pair():
    # C4 + K1 and the star K_{1,4} share a spectrum but are not isomorphic.
    a = new_graph(5, [(0, 1), (1, 2), (2, 3), (3, 0)])
    b = new_graph(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
    assert canonical_form(a) != canonical_form(b)


def test_canonical_form_counts_match_known_totals():
    # Numbers of unlabelled graphs on 1..5 vertices.
    assert [len(brute_force_classes(n)) for n in range(1, 6)] == [1, 2, 4, 11, 34]


def test_canonical_form_on_regular_graphs():
    rng = random.Random(5)
    petersen = new_graph(10, [(i, (i + 1) % 5) for i in range(5)]
                         + [(i, i + 5) for i in range(5)]
                         + [(5 + i, 5 + (i + 2) % 5) for i in range(5)])
    for _ in range(5):
        assert canonical_form(relabel_random(rng, petersen)) == canonical_form(petersen)
    prism = new_graph(10, [(i, (i + 1) % 5) for i in range(5)]
                      + [(i, i + 5) for i in range(5)]
                      + [(5 + i, 5 + (i + 1) % 5) for i in range(5)])
    assert canonical_form(prism) != canonical_form(petersen)


def test_from_adjacency_roundtrip():
    rng = random.Random(1)
    for _ in range(20):
        g = random_graph(rng, rng.randint(1, 10))
        assert from_adjacency(g.adj) == g


def test_write_dot():
    text = write_dot(new_graph(3, [(0, 2)]), name="T")
    assert text.splitlines() == ["graph T {", "  0;", "  1;", "  2;", "  0 -- 2;", "}"]
