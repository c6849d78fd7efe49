"""Reading and describing plain-text link streams.

One link per line, three whitespace/comma/tab separated fields, either
u v t or t u v order.  Comment lines start with '#' or '%'.  Extra
columns are ignored, mirrored duplicates collapse, self loops are
dropped and counted.
"""

from __future__ import annotations

import gzip
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterator

from .core import TemporalNetwork

log = logging.getLogger(__name__)

COMMENT_PREFIXES = ("#", "%")


class ParseError(ValueError):
    """Input file violates the link stream format; carries the line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


@dataclass(frozen=True)
class IngestConfig:
    """How to read a link stream file.

    ``separator`` "auto" inspects the first data line, preferring tab,
    then comma, then whitespace.  ``rebase`` shifts timestamps so the
    stream starts at zero.  ``clamp_to_lifetime`` is carried along for
    the enumeration stage.
    """

    column_order: str = "uvt"
    separator: str = "auto"
    rebase: bool = False
    clamp_to_lifetime: bool = False

    def __post_init__(self):
        if self.column_order not in ("uvt", "tuv"):
            raise ValueError(f"unknown column order {self.column_order!r}")
        if self.separator not in ("auto", "space", "comma", "tab"):
            raise ValueError(f"unknown separator {self.separator!r}")


@dataclass(frozen=True)
class ParseReport:
    """Counts gathered while reading: raw data lines and dropped self loops."""

    raw_links: int = 0
    self_loops: int = 0


@dataclass(frozen=True)
class DatasetStats:
    nodes: int
    links: int
    static_edges: int
    lifetime: int


def _detect_separator(line: str) -> str:
    if "\t" in line:
        return "tab"
    if "," in line:
        return "comma"
    return "space"


def _split(line: str, separator: str) -> list[str]:
    if separator == "tab":
        return [f.strip() for f in line.split("\t")]
    if separator == "comma":
        return [f.strip() for f in line.split(",")]
    return line.split()


def _data_lines(fh: IO[str]) -> Iterator[tuple[int, str]]:
    for number, raw in enumerate(fh, start=1):
        line = raw.strip()
        if not line or line.startswith(COMMENT_PREFIXES):
            continue
        yield number, line


def _open_text(path: Path) -> IO[str]:
    if str(path).endswith(".gz"):
        return gzip.open(path, "rt")
    return open(path, "r")


def parse_link_stream_with_report(
    path: Path | str, config: IngestConfig | None = None
) -> tuple[TemporalNetwork, ParseReport]:
    """Parse a link stream file, also returning read statistics."""
    config = config or IngestConfig()
    path = Path(path)
    separator = config.separator
    triples: list[tuple[str, str, int]] = []
    raw_links = 0
    self_loops = 0
    with _open_text(path) as fh:
        for number, line in _data_lines(fh):
            if separator == "auto":
                separator = _detect_separator(line)
            fields = _split(line, separator)
            if len(fields) < 3:
                raise ParseError(
                    f"expected 3 fields, found {len(fields)}", line=number
                )
            if config.column_order == "uvt":
                u, v, t_raw = fields[0], fields[1], fields[2]
            else:
                t_raw, u, v = fields[0], fields[1], fields[2]
            try:
                t = int(t_raw)
            except ValueError:
                raise ParseError(
                    f"timestamp {t_raw!r} is not an integer", line=number
                ) from None
            raw_links += 1
            if u == v:
                self_loops += 1
                continue
            triples.append((u, v, t))
    if not triples:
        raise ParseError(f"no links found in {path}")
    if self_loops:
        log.warning("dropped %d self loops while reading %s", self_loops, path)
    network = TemporalNetwork.from_triples(triples)
    if config.rebase:
        network = network.rebased()
    return network, ParseReport(raw_links=raw_links, self_loops=self_loops)


def parse_link_stream(
    path: Path | str, config: IngestConfig | None = None
) -> TemporalNetwork:
    """Parse a link stream file into a temporal network."""
    return parse_link_stream_with_report(path, config)[0]


def write_link_stream(network: TemporalNetwork, path: Path | str) -> None:
    """Write the network back as sorted "u v t" lines."""
    with open(path, "w") as fh:
        for u, v, t in network.links:
            fh.write(f"{network.labels[u]} {network.labels[v]} {t}\n")


def compute_stats(network: TemporalNetwork) -> DatasetStats:
    """Node, link, static edge counts and the lifetime span."""
    if not network.links:
        raise ValueError("stats of an empty network")
    return DatasetStats(
        nodes=network.n_vertices,
        links=network.n_links,
        static_edges=network.n_static_edges,
        lifetime=network.lifetime.duration,
    )
