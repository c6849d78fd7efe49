"""Parameter sweeps over the (delta, gamma) grid with basic metrics.

Cells run sequentially so wall times stay honest; an opt-in parallel
mode trades the timing columns for throughput.  A window of delta + 1
instants can hold at most delta + 1 contacts, so cells with gamma above
delta + 1 are recorded as empty without running the pipeline.
"""

from __future__ import annotations

import csv
import resource
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import IO, Iterable, Sequence

from .bulk import DEFAULT_MAX_PRODUCT_TUPLES, ProductLimitError, enumerate_maximal_cliques
from .core import Clique, TemporalNetwork

SWEEP_FIELDS = (
    "delta",
    "gamma",
    "clique_count",
    "max_cardinality",
    "max_duration",
    "wall_time_s",
    "peak_mem_bytes",
    "note",
)

PIGEONHOLE_NOTE = "gamma exceeds delta+1"


def summarize(cliques: Iterable[Clique]) -> tuple[int, int, int]:
    """Count, largest member count and longest duration; zeros when empty."""
    count = 0
    max_cardinality = 0
    max_duration = 0
    for c in cliques:
        count += 1
        if len(c.members) > max_cardinality:
            max_cardinality = len(c.members)
        if c.interval.duration > max_duration:
            max_duration = c.interval.duration
    return count, max_cardinality, max_duration


@dataclass(frozen=True)
class SweepRecord:
    delta: int
    gamma: int
    clique_count: int
    max_cardinality: int
    max_duration: int
    wall_time_s: float | None
    peak_mem_bytes: int | None
    note: str = ""


def _peak_rss_bytes() -> int:
    peak = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
    # Linux reports kibibytes, macOS bytes.
    return peak if sys.platform == "darwin" else peak * 1024


def _run_cell(
    network: TemporalNetwork,
    delta: int,
    gamma: int,
    clamp: bool,
    threads: int,
    max_product_tuples: int,
    timed: bool,
) -> SweepRecord:
    if gamma > delta + 1:
        return SweepRecord(delta, gamma, 0, 0, 0, 0.0 if timed else None,
                           _peak_rss_bytes() if timed else None, PIGEONHOLE_NOTE)
    started = time.perf_counter()
    note = ""
    try:
        cliques = enumerate_maximal_cliques(
            network,
            delta,
            gamma,
            clamp=clamp,
            threads=threads,
            max_product_tuples=max_product_tuples,
        )
    except ProductLimitError as err:
        cliques = []
        note = str(err)
    count, cardinality, duration = summarize(cliques)
    wall = time.perf_counter() - started
    return SweepRecord(
        delta,
        gamma,
        count,
        cardinality,
        duration,
        wall if timed else None,
        _peak_rss_bytes() if timed else None,
        note,
    )


def run_sweep(
    network: TemporalNetwork,
    deltas: Sequence[int],
    gammas: Sequence[int],
    *,
    clamp: bool = False,
    threads: int = 1,
    max_product_tuples: int = DEFAULT_MAX_PRODUCT_TUPLES,
    parallel_cells: bool = False,
) -> list[SweepRecord]:
    """One record per (delta, gamma) cell, in grid order.

    A failed cell (for example a tripped intersection guard) is recorded
    in its note and the sweep moves on.
    """
    cells = [(d, g) for d in deltas for g in gammas]
    if parallel_cells:
        with ThreadPoolExecutor() as pool:
            return list(
                pool.map(
                    lambda cell: _run_cell(
                        network, cell[0], cell[1], clamp, threads,
                        max_product_tuples, timed=False,
                    ),
                    cells,
                )
            )
    return [
        _run_cell(network, d, g, clamp, threads, max_product_tuples, timed=True)
        for d, g in cells
    ]


def write_sweep_csv(records: Iterable[SweepRecord], fh: IO[str]) -> None:
    """Write records with a fixed header; missing timings become blanks."""
    writer = csv.writer(fh)
    writer.writerow(SWEEP_FIELDS)
    for r in records:
        writer.writerow([
            r.delta,
            r.gamma,
            r.clique_count,
            r.max_cardinality,
            r.max_duration,
            "" if r.wall_time_s is None else f"{r.wall_time_s:.6f}",
            "" if r.peak_mem_bytes is None else r.peak_mem_bytes,
            r.note,
        ])
