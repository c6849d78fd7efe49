"""Brute force reference for clique validity and maximal enumeration.

The predicate ``is_dg_clique`` is a direct, readable transcription of the
definition and stays independent of the two phase pipeline.  The
enumerators below check every candidate (vertex set, interval) pair over
a bounded universe; they exist to validate the fast path, not to scale.
"""

from __future__ import annotations

import itertools
import random
from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .bulk import enumerate_maximal_cliques
from .core import Clique, TemporalNetwork, TimeInterval


class BudgetExceededError(ValueError):
    """Raised when an input is too large for exhaustive checking."""


@dataclass(frozen=True)
class OracleBudget:
    """Hard caps on instance size accepted by the brute force path."""

    max_vertices: int = 10
    max_lifetime: int = 40

    def check(self, network: TemporalNetwork) -> None:
        if network.n_vertices > self.max_vertices:
            raise BudgetExceededError(
                f"{network.n_vertices} vertices exceed max_vertices={self.max_vertices}"
            )
        span = network.lifetime.duration
        if span > self.max_lifetime:
            raise BudgetExceededError(
                f"lifetime span {span} exceeds max_lifetime={self.max_lifetime}"
            )


def is_dg_clique(
    network: TemporalNetwork,
    members: Iterable[int],
    interval: TimeInterval,
    delta: int,
    gamma: int,
) -> bool:
    """Check the defining window condition for one candidate clique.

    Every pair of members must interact at least gamma times inside
    [tau, min(tau + delta, end)] for every integer tau from start to
    max(end - delta, start).
    """
    mem = sorted(set(members))
    if len(mem) < 2:
        raise ValueError("a clique needs at least two members")
    if interval.start > interval.end:
        raise ValueError("empty interval")
    index = network.edge_index
    for i, u in enumerate(mem):
        for v in mem[i + 1 :]:
            if not _pair_windows_ok(index.times(u, v), interval, delta, gamma):
                return False
    return True


def _pair_windows_ok(
    times: Sequence[int], interval: TimeInterval, delta: int, gamma: int
) -> bool:
    ta, tb = interval
    for tau in range(ta, max(tb - delta, ta) + 1):
        hi = min(tau + delta, tb)
        if bisect_right(times, hi) - bisect_left(times, tau) < gamma:
            return False
    return True


def enumerate_maximal_bruteforce(
    network: TemporalNetwork,
    delta: int,
    gamma: int,
    budget: OracleBudget | None = None,
    *,
    clamp: bool = False,
) -> set[Clique]:
    """All maximal cliques by exhaustive search over the interval universe.

    A candidate is maximal when no further vertex keeps the same interval
    valid and neither one step widening of the interval stays valid.
    Without clamping the universe extends delta beyond the lifetime on
    both sides, matching the reach of the stretching phase.
    """
    tables = _build_tables(network, delta, gamma, budget, clamp)
    if tables is None:
        return set()
    out: set[Clique] = set()
    n = network.n_vertices
    for members, pair_mask, valid_idx in _subset_cliques(tables, n):
        keep = _without_interval_extensions(tables, pair_mask, valid_idx)
        if keep.size:
            keep = _without_vertex_additions(tables, members, pair_mask, keep, n)
        for i in keep:
            out.add(Clique(members, tables.interval_at(int(i))))
    return out


def enumerate_duration_maximal_bruteforce(
    network: TemporalNetwork,
    delta: int,
    gamma: int,
    budget: OracleBudget | None = None,
    *,
    clamp: bool = False,
) -> set[Clique]:
    """Cliques whose interval cannot be widened, ignoring vertex additions."""
    tables = _build_tables(network, delta, gamma, budget, clamp)
    if tables is None:
        return set()
    out: set[Clique] = set()
    for members, pair_mask, valid_idx in _subset_cliques(tables, network.n_vertices):
        for i in _without_interval_extensions(tables, pair_mask, valid_idx):
            out.add(Clique(members, tables.interval_at(int(i))))
    return out


@dataclass
class _Tables:
    lo: int
    grid: int
    a_off: np.ndarray
    b_off: np.ndarray
    row_start: np.ndarray
    valid_masks: np.ndarray
    pair_bit: dict[tuple[int, int], int]
    usable: int

    def interval_at(self, i: int) -> TimeInterval:
        return TimeInterval(self.lo + int(self.a_off[i]), self.lo + int(self.b_off[i]))

    def index_of(self, a_off: int, b_off: int) -> int:
        return int(self.row_start[a_off]) + (b_off - a_off)


def _build_tables(
    network: TemporalNetwork,
    delta: int,
    gamma: int,
    budget: OracleBudget | None,
    clamp: bool,
) -> _Tables | None:
    if delta < 0:
        raise ValueError("delta must be non-negative")
    if gamma < 1:
        raise ValueError("gamma must be at least 1")
    (budget or OracleBudget()).check(network)
    if not network.links:
        return None
    if clamp:
        lo, hi = network.lifetime
    else:
        lo = network.lifetime.start - delta
        hi = network.lifetime.end + delta
    grid = hi - lo + 1

    a_off, b_off = np.triu_indices(grid)
    a_off = a_off.astype(np.int64)
    b_off = b_off.astype(np.int64)
    durations = b_off - a_off
    long_enough = durations >= delta
    # Row r of the triangular layout starts after rows 0..r-1, which hold
    # grid - j entries each.
    rows = np.arange(grid, dtype=np.int64)
    row_start = np.concatenate(([0], np.cumsum(grid - rows)))[:-1]

    n = network.n_vertices
    pairs = list(itertools.combinations(range(n), 2))
    if len(pairs) > 64:
        raise BudgetExceededError(f"{len(pairs)} vertex pairs exceed the 64 bit mask")
    pair_bit = {p: i for i, p in enumerate(pairs)}
    index = network.edge_index

    valid_masks = np.zeros(a_off.shape[0], dtype=np.uint64)
    usable = 0
    # Clipped lookups keep short intervals in range; the duration mask
    # below discards their long-window values anyway.
    safe_b = np.clip(b_off - delta + 1, 0, max(grid - delta, 0))
    safe_a = np.minimum(a_off, max(grid - delta, 0))
    for (u, v), bit in pair_bit.items():
        times = index.times(u, v)
        if len(times) < gamma:
            continue
        counts = np.bincount(np.asarray(times, dtype=np.int64) - lo, minlength=grid)
        prefix = np.concatenate(([0], np.cumsum(counts)))
        if grid > delta:
            windows = prefix[delta + 1 :] - prefix[: grid - delta]
            bad = np.concatenate(([0], np.cumsum(windows < gamma)))
            ge_ok = (bad[safe_b] - bad[safe_a]) == 0
        else:
            ge_ok = np.zeros_like(long_enough)
        lt_ok = (prefix[b_off + 1] - prefix[a_off]) >= gamma
        valid = np.where(long_enough, ge_ok, lt_ok)
        if valid.any():
            valid_masks |= valid.astype(np.uint64) << np.uint64(bit)
            usable |= 1 << bit
    return _Tables(lo, grid, a_off, b_off, row_start, valid_masks, pair_bit, usable)


def _subset_cliques(tables: _Tables, n: int):
    """Yield (members, pair mask, valid interval indices) per vertex subset."""
    for size in range(2, n + 1):
        for members in itertools.combinations(range(n), size):
            mask = 0
            for p in itertools.combinations(members, 2):
                mask |= 1 << tables.pair_bit[p]
            if mask & ~tables.usable:
                continue
            m = np.uint64(mask)
            valid_idx = np.nonzero((tables.valid_masks & m) == m)[0]
            if valid_idx.size:
                yield members, m, valid_idx


def _without_interval_extensions(
    tables: _Tables, pair_mask: np.uint64, valid_idx: np.ndarray
) -> np.ndarray:
    a = tables.a_off[valid_idx]
    b = tables.b_off[valid_idx]
    extendable = np.zeros(valid_idx.shape[0], dtype=bool)

    left = a > 0
    if left.any():
        li = tables.row_start[a[left] - 1] + (b[left] - a[left] + 1)
        ok = (tables.valid_masks[li] & pair_mask) == pair_mask
        extendable[left] |= ok

    right = b < tables.grid - 1
    if right.any():
        ok = (tables.valid_masks[valid_idx[right] + 1] & pair_mask) == pair_mask
        extendable[right] |= ok

    return valid_idx[~extendable]


def _without_vertex_additions(
    tables: _Tables,
    members: tuple[int, ...],
    pair_mask: np.uint64,
    idx: np.ndarray,
    n: int,
) -> np.ndarray:
    absorbed = np.zeros(idx.shape[0], dtype=bool)
    member_set = set(members)
    for v in range(n):
        if v in member_set:
            continue
        grown = int(pair_mask)
        for u in members:
            grown |= 1 << tables.pair_bit[(u, v) if u < v else (v, u)]
        if grown & ~tables.usable:
            continue
        g = np.uint64(grown)
        absorbed |= (tables.valid_masks[idx] & g) == g
    return idx[~absorbed]


def random_temporal_network(
    rng: random.Random, n_vertices: int, lifetime: int, density: float
) -> TemporalNetwork:
    """Uniform link placement over all (pair, instant) slots."""
    triples = []
    for u in range(n_vertices):
        for v in range(u + 1, n_vertices):
            for t in range(lifetime + 1):
                if rng.random() < density:
                    triples.append((u, v, t))
    return TemporalNetwork.from_triples(triples)


LabelledClique = tuple[tuple[str, ...], int, int]


@dataclass(frozen=True)
class VerifyMismatch:
    trial: int
    links: tuple[tuple[str, str, int], ...]
    missing: tuple[LabelledClique, ...]
    unexpected: tuple[LabelledClique, ...]


@dataclass
class VerifyReport:
    delta: int
    gamma: int
    trials_run: int = 0
    mismatch: VerifyMismatch | None = None
    densities: tuple[float, ...] = field(default=(0.05, 0.15, 0.35))

    @property
    def ok(self) -> bool:
        return self.mismatch is None


def _with_span_at_least(network: TemporalNetwork, span: int) -> TemporalNetwork:
    """Pad the stream with one extra contact so the lifetime reaches span."""
    if not network.links or network.lifetime.duration >= span:
        return network
    labels = network.labels
    triples = [(labels[u], labels[v], t) for u, v, t in network.links]
    u, v, _ = triples[0]
    triples.append((u, v, network.lifetime.start + span))
    return TemporalNetwork.from_triples(triples)


def run_verify_trials(
    trials: int,
    delta: int,
    gamma: int,
    *,
    max_vertices: int = 7,
    max_lifetime: int = 25,
    seed: int = 0,
    densities: tuple[float, ...] = (0.05, 0.15, 0.35),
    clamp: bool = False,
) -> VerifyReport:
    """Compare the pipeline against brute force on random instances.

    Stops at the first disagreement and records the offending network so
    it can be replayed.  Density levels cycle across trials.  With clamp
    the instances are padded to a lifetime of at least delta; clamped
    streams shorter than one window fall outside the pipeline's scope.
    """
    if clamp and delta > max_lifetime:
        raise ValueError("clamped verification needs max_lifetime >= delta")
    rng = random.Random(seed)
    budget = OracleBudget(max_vertices=max_vertices, max_lifetime=max_lifetime)
    report = VerifyReport(delta=delta, gamma=gamma, densities=densities)
    span_floor = max(1, delta) if clamp else 1
    for trial in range(trials):
        n = rng.randint(2, max_vertices)
        span = rng.randint(min(span_floor, max_lifetime), max_lifetime)
        density = densities[trial % len(densities)]
        network = random_temporal_network(rng, n, span, density)
        if clamp:
            network = _with_span_at_least(network, delta)
        expected = enumerate_maximal_bruteforce(network, delta, gamma, budget, clamp=clamp)
        actual = set(enumerate_maximal_cliques(network, delta, gamma, clamp=clamp))
        report.trials_run += 1
        if actual != expected:
            labels = network.labels

            def labelled(cliques: set[Clique]) -> tuple[LabelledClique, ...]:
                return tuple(
                    (
                        tuple(labels[i] for i in c.members),
                        c.interval.start,
                        c.interval.end,
                    )
                    for c in sorted(cliques)
                )

            report.mismatch = VerifyMismatch(
                trial=trial,
                links=tuple((labels[u], labels[v], t) for u, v, t in network.links),
                missing=labelled(expected - actual),
                unexpected=labelled(actual - expected),
            )
            break
    return report
