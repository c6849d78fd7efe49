#!/usr/bin/env python3
"""Regenerate the committed synthetic fixture and its golden outputs.

The stream is 200 distinct (pair, instant) contacts over 10 vertices and
41 instants, drawn with a fixed seed.  Golden files are produced by the
exhaustive brute force path, not the two-phase pipeline, so they stay an
independent reference; the script still cross-checks that the pipeline
agrees before writing anything.
"""

from __future__ import annotations

import random
import sys
from pathlib import Path

from dgcliques.cli import _format_cliques
from dgcliques.core import sort_cliques
from dgcliques.bulk import enumerate_maximal_cliques
from dgcliques.ingest import parse_link_stream
from dgcliques.oracle import OracleBudget, enumerate_maximal_bruteforce

SEED = 20260823
N_VERTICES = 10
MAX_T = 40
N_LINKS = 200
GOLDEN_PARAMS = [(2, 1), (3, 2), (4, 2)]

DATA_DIR = Path(__file__).resolve().parent.parent / "tests" / "data"


def main() -> int:
    rng = random.Random(SEED)
    slots = [
        (u, v, t)
        for u in range(N_VERTICES)
        for v in range(u + 1, N_VERTICES)
        for t in range(MAX_T + 1)
    ]
    chosen = rng.sample(slots, N_LINKS)
    rng.shuffle(chosen)

    DATA_DIR.mkdir(parents=True, exist_ok=True)
    stream_path = DATA_DIR / "synthetic_200.txt"
    with open(stream_path, "w") as fh:
        fh.write(f"# synthetic link stream: {N_VERTICES} vertices, "
                 f"{N_LINKS} contacts, t in [0, {MAX_T}]\n")
        fh.write("# fields: u v t\n")
        for u, v, t in chosen:
            fh.write(f"{u} {v} {t}\n")

    network = parse_link_stream(stream_path)
    assert network.n_links == N_LINKS, network.n_links
    assert network.n_vertices == N_VERTICES, network.n_vertices

    budget = OracleBudget(max_vertices=N_VERTICES, max_lifetime=MAX_T)
    for delta, gamma in GOLDEN_PARAMS:
        reference = sort_cliques(
            enumerate_maximal_bruteforce(network, delta, gamma, budget)
        )
        pipeline = enumerate_maximal_cliques(network, delta, gamma)
        if pipeline != reference:
            print(f"pipeline disagrees with brute force at ({delta}, {gamma})",
                  file=sys.stderr)
            return 1
        golden = DATA_DIR / f"golden_d{delta}_g{gamma}.jsonl"
        golden.write_text(_format_cliques(network, reference, "jsonl"))
        print(f"wrote {golden.name}: {len(reference)} cliques")
    print(f"wrote {stream_path.name}: {network.n_links} links, "
          f"{network.n_vertices} vertices, lifetime {network.lifetime}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
