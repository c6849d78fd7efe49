"""Core types for temporal link streams and their cliques.

Timestamps are integers on a unit grid.  A link is an undirected contact
between two distinct vertices at one instant; vertices are stored as
dense indices with the original labels kept for output.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple


class TimeInterval(NamedTuple):
    """Closed integer interval with start <= end."""

    start: int
    end: int

    @property
    def duration(self) -> int:
        return self.end - self.start

    def contains(self, other: "TimeInterval") -> bool:
        return self.start <= other.start and other.end <= self.end

    def clamp(self, bounds: "TimeInterval") -> "TimeInterval":
        # Callers guarantee the clamped interval stays non-empty, which
        # holds whenever self overlaps bounds.
        return TimeInterval(max(self.start, bounds.start), min(self.end, bounds.end))


class Link(NamedTuple):
    """Undirected contact (u, v) at instant t, canonical with u < v."""

    u: int
    v: int
    t: int


def canonical_link(u: int, v: int, t: int) -> Link:
    """Order the endpoints; self loops are the caller's error."""
    if u == v:
        raise ValueError(f"self loop at vertex {u}")
    return Link(u, v, t) if u < v else Link(v, u, t)


def interval_intersection(intervals: Iterable[TimeInterval]) -> TimeInterval | None:
    """Common sub-interval of all inputs, or None when empty."""
    start = None
    end = None
    for iv in intervals:
        if start is None:
            start, end = iv.start, iv.end
        else:
            if iv.start > start:
                start = iv.start
            if iv.end < end:
                end = iv.end
    if start is None:
        raise ValueError("intersection of no intervals")
    if start > end:
        return None
    return TimeInterval(start, end)


class Clique(NamedTuple):
    """Vertex set (sorted tuple, two or more members) with its interval."""

    members: tuple[int, ...]
    interval: TimeInterval


def sort_cliques(cliques: Iterable[Clique]) -> list[Clique]:
    """Canonical output order: larger first, then by interval start, then members."""
    return sorted(
        cliques,
        key=lambda c: (-len(c.members), c.interval.start, c.members, c.interval.end),
    )


@dataclass(frozen=True)
class StaticGraph:
    """Aggregated undirected graph of the pairs that ever interact."""

    adjacency: dict[int, frozenset[int]]

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "StaticGraph":
        adj: dict[int, set[int]] = {}
        for u, v in pairs:
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        return cls({u: frozenset(ns) for u, ns in adj.items()})

    def neighbors(self, u: int) -> frozenset[int]:
        return self.adjacency.get(u, frozenset())

    @property
    def n_edges(self) -> int:
        return sum(len(ns) for ns in self.adjacency.values()) // 2


def neighbors_of_set(graph: StaticGraph, members: Iterable[int]) -> set[int]:
    """Vertices adjacent to at least one member, excluding the members."""
    members = set(members)
    out: set[int] = set()
    for u in members:
        out |= graph.neighbors(u)
    return out - members


@dataclass(frozen=True)
class EdgeOccurrenceIndex:
    """Strictly increasing contact times per canonical vertex pair."""

    entries: dict[tuple[int, int], tuple[int, ...]]

    def times(self, u: int, v: int) -> tuple[int, ...]:
        key = (u, v) if u < v else (v, u)
        return self.entries.get(key, ())

    def frequency(self, u: int, v: int) -> int:
        return len(self.times(u, v))


@dataclass(frozen=True)
class TemporalNetwork:
    """Deduplicated, sorted link stream over dense vertex indices.

    ``labels[i]`` is the original token for vertex ``i``; indices follow
    the sorted label order (numeric when every label parses as an
    integer), so construction does not depend on input order.
    """

    links: tuple[Link, ...]
    labels: tuple[str, ...]
    lifetime: TimeInterval = field(default=TimeInterval(0, 0))

    @classmethod
    def from_triples(cls, triples: Iterable[tuple[object, object, int]]) -> "TemporalNetwork":
        """Build from (u, v, t) triples with arbitrary vertex tokens.

        Mirrored and repeated triples collapse to one link.  Self loops
        are rejected; drop them upstream when they are expected.
        """
        raw = [(str(u), str(v), int(t)) for u, v, t in triples]
        for u, v, _ in raw:
            if u == v:
                raise ValueError(f"self loop at vertex {u!r}")
        tokens = {u for u, _, _ in raw} | {v for _, v, _ in raw}
        labels = tuple(sorted(tokens, key=_label_sort_key(tokens)))
        index = {lab: i for i, lab in enumerate(labels)}
        links = sorted({canonical_link(index[u], index[v], t) for u, v, t in raw})
        if not links:
            return cls((), (), TimeInterval(0, 0))
        lo = min(l.t for l in links)
        hi = max(l.t for l in links)
        return cls(tuple(links), labels, TimeInterval(lo, hi))

    @property
    def n_vertices(self) -> int:
        return len(self.labels)

    @property
    def n_links(self) -> int:
        return len(self.links)

    @cached_property
    def edge_index(self) -> EdgeOccurrenceIndex:
        entries: dict[tuple[int, int], list[int]] = {}
        for u, v, t in self.links:
            entries.setdefault((u, v), []).append(t)
        return EdgeOccurrenceIndex({k: tuple(sorted(ts)) for k, ts in entries.items()})

    @cached_property
    def static_graph(self) -> StaticGraph:
        return StaticGraph.from_pairs((u, v) for u, v in {(l.u, l.v) for l in self.links})

    @property
    def n_static_edges(self) -> int:
        return len(self.edge_index.entries)

    def member_labels(self, members: Iterable[int]) -> list[str]:
        return [self.labels[i] for i in members]

    def rebased(self) -> "TemporalNetwork":
        """Shift timestamps so the earliest link sits at zero."""
        if not self.links:
            return self
        off = self.lifetime.start
        links = tuple(Link(u, v, t - off) for u, v, t in self.links)
        return TemporalNetwork(links, self.labels, TimeInterval(0, self.lifetime.end - off))


def _label_sort_key(tokens: Iterable[str]):
    toks = list(tokens)
    try:
        values = {tok: int(tok) for tok in toks}
    except ValueError:
        return lambda tok: tok
    return lambda tok: values[tok]
