"""Vertex-set growth by interval intersection, the second phase.

Starting from the size-two cliques, each generation tries to add one
static neighbor to every clique of the previous generation.  The valid
intervals of a grown set are intersections of the interval lists of all
its one-smaller subsets; a clique is maximal when no grown set keeps its
exact interval and no generation widened it.  gamma never appears here:
it is already encoded in the size-two intervals.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable

from .core import (
    Clique,
    StaticGraph,
    TemporalNetwork,
    TimeInterval,
    neighbors_of_set,
    sort_cliques,
)
from .stretch import stretch_all

DEFAULT_MAX_PRODUCT_TUPLES = 1_000_000

CliqueDictionary = dict[tuple[int, ...], list[TimeInterval]]


class ProductLimitError(RuntimeError):
    """Raised when intersecting interval lists would examine too many tuples."""

    def __init__(self, members: tuple[int, ...], tuples: int, limit: int):
        self.members = members
        self.tuples = tuples
        self.limit = limit
        super().__init__(
            f"interval intersection for {members} needs {tuples} tuples, "
            f"limit is {limit}"
        )


def _prune_dominated(intervals: Iterable[TimeInterval]) -> list[TimeInterval]:
    """Drop intervals contained in another; result sorted by start."""
    out: list[TimeInterval] = []
    best_end: int | None = None
    for iv in sorted(set(intervals), key=lambda iv: (iv.start, -iv.end)):
        if best_end is None or iv.end > best_end:
            out.append(iv)
            best_end = iv.end
    return out


def generate_intervals_for(
    x_new: tuple[int, ...],
    dictionary: CliqueDictionary,
    delta: int,
    *,
    max_product_tuples: int = DEFAULT_MAX_PRODUCT_TUPLES,
) -> list[TimeInterval]:
    """Valid intervals of ``x_new`` from its one-smaller subsets.

    Every subset must already have an entry, otherwise no interval
    exists.  One interval is picked from each subset's list and the picks
    are intersected; intersections shorter than delta are discarded and
    contained ones pruned.  The lists are folded pairwise with pruning
    after every step, which yields the same final set as expanding the
    whole product while touching far fewer tuples; the tuple budget
    counts the pairs actually examined.
    """
    lists: list[list[TimeInterval]] = []
    for skip in range(len(x_new)):
        subset = x_new[:skip] + x_new[skip + 1 :]
        entry = dictionary.get(subset)
        if not entry:
            return []
        lists.append(entry)

    examined = 0
    partial = [iv for iv in lists[0] if iv.duration >= delta]
    for nxt in lists[1:]:
        if not partial:
            return []
        examined += len(partial) * len(nxt)
        if examined > max_product_tuples:
            raise ProductLimitError(x_new, examined, max_product_tuples)
        merged = []
        for p in partial:
            for q in nxt:
                start = p.start if p.start >= q.start else q.start
                end = p.end if p.end <= q.end else q.end
                if end - start >= delta:
                    merged.append(TimeInterval(start, end))
        partial = _prune_dominated(merged)
    return partial


def expand_clique(
    c: Clique,
    graph: StaticGraph,
    dictionary: CliqueDictionary,
    delta: int,
    *,
    max_product_tuples: int = DEFAULT_MAX_PRODUCT_TUPLES,
) -> tuple[bool, set[Clique]]:
    """Grow one clique by each static neighbor of its members.

    Returns whether ``c`` is still maximal, plus the cliques of any
    vertex set grown here for the first time.  Their intervals are
    recorded in ``dictionary``, so a set reached again through another
    parent is answered by membership lookup alone.
    """
    is_max = True
    generated: set[Clique] = set()
    for v in sorted(neighbors_of_set(graph, c.members)):
        x_new = tuple(sorted(c.members + (v,)))
        if x_new in dictionary:
            if c.interval in dictionary[x_new]:
                is_max = False
        else:
            intervals = generate_intervals_for(
                x_new, dictionary, delta, max_product_tuples=max_product_tuples
            )
            if intervals:
                dictionary[x_new] = intervals
                for iv in intervals:
                    generated.add(Clique(x_new, iv))
                    if iv == c.interval:
                        is_max = False
    return is_max, generated


def enumerate_maximal(
    initial: Iterable[Clique],
    graph: StaticGraph,
    delta: int,
    *,
    threads: int = 1,
    max_product_tuples: int = DEFAULT_MAX_PRODUCT_TUPLES,
    generation_hook: Callable[[int, frozenset[Clique]], None] | None = None,
) -> set[Clique]:
    """All maximal cliques reachable from the size-two seed set.

    Generation i holds the cliques of size i + 1; the loop ends when a
    generation grows nothing new.  ``generation_hook`` observes each
    generation before it is processed.  With ``threads`` above one the
    generations are expanded in parallel; results are identical because
    a grown set's intervals depend only on the previous generation.
    """
    dictionary: CliqueDictionary = {}
    for c in initial:
        dictionary.setdefault(c.members, []).append(c.interval)
    for entry in dictionary.values():
        entry.sort()

    result: set[Clique] = set()
    current = sort_cliques(initial)
    generation = 1
    while current:
        if generation_hook:
            generation_hook(generation, frozenset(current))
        if threads > 1:
            wave = _expand_generation_parallel(
                current, graph, dictionary, delta, threads, max_product_tuples, result
            )
        else:
            wave = set()
            for c in current:
                is_max, generated = expand_clique(
                    c, graph, dictionary, delta, max_product_tuples=max_product_tuples
                )
                wave |= generated
                if is_max:
                    result.add(c)
        current = sort_cliques(wave)
        generation += 1
    return result


def _expand_generation_parallel(
    current: list[Clique],
    graph: StaticGraph,
    dictionary: CliqueDictionary,
    delta: int,
    threads: int,
    max_product_tuples: int,
    result: set[Clique],
) -> set[Clique]:
    # The dictionary is read-only while workers intersect, so growth is a
    # pure function of the previous generation and needs no locking.
    grown_keys: set[tuple[int, ...]] = set()
    for members in {c.members for c in current}:
        for v in neighbors_of_set(graph, members):
            x_new = tuple(sorted(members + (v,)))
            if x_new not in dictionary:
                grown_keys.add(x_new)

    def generate(key: tuple[int, ...]) -> tuple[tuple[int, ...], list[TimeInterval]]:
        return key, generate_intervals_for(
            key, dictionary, delta, max_product_tuples=max_product_tuples
        )

    wave: set[Clique] = set()
    with ThreadPoolExecutor(max_workers=threads) as pool:
        for key, intervals in pool.map(generate, sorted(grown_keys)):
            if intervals:
                dictionary[key] = intervals
                wave.update(Clique(key, iv) for iv in intervals)

    for c in current:
        is_max = True
        for v in neighbors_of_set(graph, c.members):
            entry = dictionary.get(tuple(sorted(c.members + (v,))))
            if entry and c.interval in entry:
                is_max = False
                break
        if is_max:
            result.add(c)
    return wave


def enumerate_maximal_cliques(
    network: TemporalNetwork,
    delta: int,
    gamma: int,
    *,
    clamp: bool = False,
    threads: int = 1,
    max_product_tuples: int = DEFAULT_MAX_PRODUCT_TUPLES,
    generation_hook: Callable[[int, frozenset[Clique]], None] | None = None,
) -> list[Clique]:
    """Full pipeline: stretch each edge, then grow vertex sets.

    Returns the maximal cliques in canonical order.  With ``clamp`` the
    size-two intervals are cut to the observed lifetime before growth.
    """
    if delta < 0:
        raise ValueError("delta must be non-negative")
    if gamma < 1:
        raise ValueError("gamma must be at least 1")
    clamp_to = network.lifetime if clamp else None
    initial = stretch_all(
        network.edge_index, delta, gamma, clamp_to=clamp_to, threads=threads
    )
    result = enumerate_maximal(
        initial,
        network.static_graph,
        delta,
        threads=threads,
        max_product_tuples=max_product_tuples,
        generation_hook=generation_hook,
    )
    return sort_cliques(result)
