from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dgcliques.core import (
    Clique,
    Link,
    StaticGraph,
    TemporalNetwork,
    TimeInterval,
    canonical_link,
    interval_intersection,
    neighbors_of_set,
    sort_cliques,
)

intervals = st.tuples(
    st.integers(-50, 50), st.integers(0, 40)
).map(lambda p: TimeInterval(p[0], p[0] + p[1]))


def test_interval_duration_and_contains():
    iv = TimeInterval(2, 8)
    assert iv.duration == 6
    assert iv.contains(TimeInterval(3, 8))
    assert not iv.contains(TimeInterval(1, 8))


def test_interval_clamp():
    assert TimeInterval(-3, 12).clamp(TimeInterval(0, 10)) == TimeInterval(0, 10)
    assert TimeInterval(2, 6).clamp(TimeInterval(0, 10)) == TimeInterval(2, 6)


def test_intersection_examples():
    got = interval_intersection(
        [TimeInterval(0, 10), TimeInterval(2, 12), TimeInterval(0, 8)]
    )
    assert got == TimeInterval(2, 8)
    assert interval_intersection([TimeInterval(0, 3), TimeInterval(5, 9)]) is None
    assert interval_intersection([TimeInterval(4, 4)]) == TimeInterval(4, 4)


def test_intersection_of_nothing_rejected():
    with pytest.raises(ValueError):
        interval_intersection([])


@given(st.lists(intervals, min_size=1, max_size=6), st.randoms())
def test_intersection_order_free_and_contained(ivs, rnd):
    expected = interval_intersection(ivs)
    shuffled = list(ivs)
    rnd.shuffle(shuffled)
    assert interval_intersection(shuffled) == expected
    if expected is not None:
        for iv in ivs:
            assert iv.contains(expected)


def test_canonical_link():
    assert canonical_link(5, 2, 9) == Link(2, 5, 9)
    assert canonical_link(2, 5, 9) == Link(2, 5, 9)
    with pytest.raises(ValueError):
        canonical_link(3, 3, 1)


def test_neighbors_of_set():
    path = StaticGraph.from_pairs([(0, 1), (1, 2)])
    assert neighbors_of_set(path, [0, 1]) == {2}
    triangle = StaticGraph.from_pairs([(0, 1), (0, 2), (1, 2)])
    assert neighbors_of_set(triangle, [0, 1]) == {2}
    assert neighbors_of_set(triangle, [0, 1, 2]) == set()
    lone = StaticGraph.from_pairs([(0, 1)])
    assert neighbors_of_set(lone, [0, 1]) == set()


def test_from_triples_canonicalizes():
    net = TemporalNetwork.from_triples(
        [("2", "1", 5), ("1", "2", 5), ("1", "2", 7), ("3", "1", 6)]
    )
    assert net.labels == ("1", "2", "3")
    # mirrored and repeated contacts collapse
    assert net.links == (Link(0, 1, 5), Link(0, 1, 7), Link(0, 2, 6))
    assert net.lifetime == TimeInterval(5, 7)
    assert net.edge_index.times(1, 0) == (5, 7)
    assert net.edge_index.frequency(0, 2) == 1
    assert net.n_static_edges == 2


def test_from_triples_rejects_self_loop():
    with pytest.raises(ValueError):
        TemporalNetwork.from_triples([("a", "a", 1)])


def test_numeric_labels_sort_by_value():
    net = TemporalNetwork.from_triples([("10", "2", 0), ("10", "3", 1)])
    assert net.labels == ("2", "3", "10")


def test_mixed_labels_sort_lexicographically():
    net = TemporalNetwork.from_triples([("b", "a", 0), ("b", "10", 1)])
    assert net.labels == ("10", "a", "b")


def test_empty_network():
    net = TemporalNetwork.from_triples([])
    assert net.links == ()
    assert net.labels == ()
    assert net.n_vertices == 0


def test_rebased_shifts_to_zero():
    net = TemporalNetwork.from_triples([("a", "b", 10), ("a", "c", 14)])
    shifted = net.rebased()
    assert shifted.lifetime == TimeInterval(0, 4)
    assert [l.t for l in shifted.links] == [0, 4]
    assert shifted.labels == net.labels


@given(
    st.lists(
        st.tuples(st.integers(0, 5), st.integers(0, 5), st.integers(-20, 20)).filter(
            lambda r: r[0] != r[1]
        ),
        max_size=30,
    )
)
def test_construction_is_idempotent(rows):
    net = TemporalNetwork.from_triples(rows)
    again = TemporalNetwork.from_triples(
        (net.labels[u], net.labels[v], t) for u, v, t in net.links
    )
    assert again == net


def test_sort_cliques_order():
    a = Clique((0, 1), TimeInterval(0, 5))
    b = Clique((0, 1, 2), TimeInterval(3, 9))
    c = Clique((0, 2), TimeInterval(0, 5))
    d = Clique((0, 1), TimeInterval(2, 4))
    assert sort_cliques([a, b, c, d]) == [b, a, c, d]
