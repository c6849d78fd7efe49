from __future__ import annotations

import os
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from dgcliques import TemporalNetwork

settings.register_profile(
    "suite",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture
def triangle_network() -> TemporalNetwork:
    """Three vertices, every pair linked at t = 1, 2, 3."""
    pairs = [("u", "v"), ("u", "w"), ("v", "w")]
    return TemporalNetwork.from_triples(
        [(a, b, t) for a, b in pairs for t in (1, 2, 3)]
    )


@pytest.fixture
def five_vertex_network() -> TemporalNetwork:
    """Small stream with overlapping per-pair runs and growable triples."""
    pair_times = {
        ("1", "2"): [1, 4, 5, 9, 10, 11],
        ("1", "3"): [4, 5, 10, 11, 12],
        ("2", "3"): [3, 5, 8, 10],
        ("2", "4"): [6, 7, 9, 10],
        ("3", "4"): [2, 4, 6, 8],
        ("3", "5"): [7, 8],
        ("4", "5"): [5, 7],
    }
    return TemporalNetwork.from_triples(
        [(u, v, t) for (u, v), ts in pair_times.items() for t in ts]
    )


@pytest.fixture
def fixture_stream_path() -> Path:
    return DATA_DIR / "synthetic_200.txt"


def golden_path(delta: int, gamma: int) -> Path:
    return DATA_DIR / f"golden_d{delta}_g{gamma}.jsonl"


def dataset_dir() -> Path:
    return Path(os.environ.get("DGCLIQUES_DATA", Path(__file__).parent.parent / "data"))
