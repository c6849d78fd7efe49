"""Per-edge interval stretching, the first phase of the pipeline.

A single scan over each pair's contact times grows a buffer of
occurrences that can coexist inside one valid interval.  When the next
contact is too far away the buffer is flushed as a size-two clique whose
interval extends delta beyond the gamma-th occurrence on both ends, and
the scan restarts from the contacts of the last delta instants, so
overlapping runs are not lost.
"""

from __future__ import annotations

from bisect import bisect_left
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence

from .core import Clique, EdgeOccurrenceIndex, TimeInterval


def _first_gamma_th(buf: Sequence[int], gamma: int) -> int:
    """gamma-th buffered occurrence from the front (one based)."""
    return buf[gamma - 1]


def _last_gamma_th(buf: Sequence[int], gamma: int) -> int:
    """gamma-th buffered occurrence from the back (one based)."""
    return buf[len(buf) - gamma]


def stretch_edge(
    times: Sequence[int],
    delta: int,
    gamma: int,
    *,
    clamp_to: TimeInterval | None = None,
    buffer_hook: Callable[[Sequence[int]], None] | None = None,
) -> set[TimeInterval]:
    """Maximal valid intervals for one pair with the given contact times.

    ``times`` must be strictly increasing.  Fewer than gamma contacts can
    never satisfy a window, so the result is empty.  ``buffer_hook``
    observes the buffer after every change and exists for invariant
    checks in tests.
    """
    if delta < 0:
        raise ValueError("delta must be non-negative")
    if gamma < 1:
        raise ValueError("gamma must be at least 1")
    times = list(times)
    if any(a >= b for a, b in zip(times, times[1:])):
        raise ValueError("contact times must be strictly increasing")
    out: set[TimeInterval] = set()
    if len(times) < gamma:
        return out

    def emit(buf: list[int]) -> None:
        iv = TimeInterval(
            _first_gamma_th(buf, gamma) - delta, _last_gamma_th(buf, gamma) + delta
        )
        out.add(iv.clamp(clamp_to) if clamp_to is not None else iv)

    def lookback(i: int) -> list[int]:
        # Contacts of the last delta instants, current one included.
        return times[bisect_left(times, times[i] - delta) : i + 1]

    buf = [times[0]]
    if buffer_hook:
        buffer_hook(buf)
    for i in range(1, len(times)):
        t = times[i]
        if len(buf) < gamma:
            if t - buf[0] <= delta:
                buf.append(t)
            else:
                buf = lookback(i)
        else:
            # The extra unit of slack keeps any gamma consecutive
            # buffered contacts within one delta window.
            if _last_gamma_th(buf, gamma) + 1 + delta >= t:
                buf.append(t)
            else:
                emit(buf)
                buf = lookback(i)
        if buffer_hook:
            buffer_hook(buf)
    # Tail flush; also covers a single contact, which the loop never sees.
    if len(buf) >= gamma:
        emit(buf)
    return out


def stretch_all(
    index: EdgeOccurrenceIndex,
    delta: int,
    gamma: int,
    *,
    clamp_to: TimeInterval | None = None,
    threads: int = 1,
) -> set[Clique]:
    """Size-two cliques for every pair with at least gamma contacts."""
    edges = [(pair, ts) for pair, ts in sorted(index.entries.items()) if len(ts) >= gamma]

    def one(item: tuple[tuple[int, int], tuple[int, ...]]) -> list[Clique]:
        pair, ts = item
        return [
            Clique(pair, iv)
            for iv in stretch_edge(ts, delta, gamma, clamp_to=clamp_to)
        ]

    out: set[Clique] = set()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for cliques in pool.map(one, edges):
                out.update(cliques)
    else:
        for item in edges:
            out.update(one(item))
    return out
