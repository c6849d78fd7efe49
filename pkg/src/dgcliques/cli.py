"""Command line front end.

Subcommands: enumerate (write all maximal cliques), sweep (metrics over
a delta/gamma grid), verify (random differential check against brute
force) and stats (dataset summary).  Exit codes: 0 success, 1 usage or
parse errors, 2 tripped work guards, 3 verification disagreement.
"""

from __future__ import annotations

import argparse
import io
import json
import os
import sys
import tempfile
import time
from pathlib import Path

from . import __version__
from .bulk import (
    DEFAULT_MAX_PRODUCT_TUPLES,
    ProductLimitError,
    enumerate_maximal_cliques,
)
from .core import Clique, TemporalNetwork
from .ingest import (
    IngestConfig,
    ParseError,
    parse_link_stream_with_report,
)
from .oracle import run_verify_trials
from .sweep import run_sweep, summarize, write_sweep_csv

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_GUARD = 2
EXIT_MISMATCH = 3


class _Parser(argparse.ArgumentParser):
    """argparse with usage failures mapped to exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _add_input_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", required=True, type=Path, help="link stream file (.gz ok)")
    p.add_argument("--columns", choices=("uvt", "tuv"), default="uvt",
                   help="field order per line")
    p.add_argument("--separator", choices=("auto", "space", "comma", "tab"),
                   default="auto")
    p.add_argument("--rebase", action="store_true",
                   help="shift timestamps to start at zero")
    p.add_argument("--clamp", action="store_true",
                   help="cut clique intervals to the observed lifetime")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dgclique", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[], help="write all maximal cliques")
    _add_input_flags(p)
    p.add_argument("--delta", type=_nonnegative_int, required=True)
    p.add_argument("--gamma", type=_positive_int, required=True)
    p.add_argument("--output", type=Path, default=None, help="default stdout")
    p.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--max-product-tuples", type=int, default=DEFAULT_MAX_PRODUCT_TUPLES)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("sweep", help="metrics over a delta/gamma grid")
    _add_input_flags(p)
    p.add_argument("--deltas", required=True, help="comma separated, e.g. 1,2,4")
    p.add_argument("--gammas", required=True, help="comma separated, e.g. 1,2")
    p.add_argument("--output", type=Path, default=None, help="default stdout")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--max-product-tuples", type=int, default=DEFAULT_MAX_PRODUCT_TUPLES)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="differential check against brute force")
    p.add_argument("--delta", type=_nonnegative_int, required=True)
    p.add_argument("--gamma", type=_positive_int, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-vertices", type=int, default=7)
    p.add_argument("--max-lifetime", type=int, default=25)
    p.add_argument("--clamp", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("stats", help="dataset summary as one JSON line")
    _add_input_flags(p)
    p.set_defaults(func=cmd_stats)

    return parser


def _load(args) -> tuple[TemporalNetwork, "ParseReport"]:
    config = IngestConfig(
        column_order=args.columns,
        separator=args.separator,
        rebase=args.rebase,
        clamp_to_lifetime=getattr(args, "clamp", False),
    )
    return parse_link_stream_with_report(args.input, config)


def _write_output(text: str, path: Path | None) -> None:
    """Write the whole payload, atomically when a path is given."""
    if path is None:
        sys.stdout.write(text)
        return
    directory = path.parent if str(path.parent) else Path(".")
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def _format_cliques(network: TemporalNetwork, cliques: list[Clique], fmt: str) -> str:
    lines = []
    for c in cliques:
        labels = network.member_labels(c.members)
        if fmt == "jsonl":
            lines.append(json.dumps(
                {"members": labels, "t_a": c.interval.start, "t_b": c.interval.end},
                separators=(",", ":"),
            ))
        else:
            lines.append(f"{';'.join(labels)}|{c.interval.start}|{c.interval.end}")
    return "".join(line + "\n" for line in lines)


def cmd_enumerate(args) -> int:
    network, _ = _load(args)
    started = time.perf_counter()
    cliques = enumerate_maximal_cliques(
        network,
        args.delta,
        args.gamma,
        clamp=args.clamp,
        threads=args.threads,
        max_product_tuples=args.max_product_tuples,
    )
    wall = time.perf_counter() - started
    _write_output(_format_cliques(network, cliques, args.format), args.output)
    count, cardinality, duration = summarize(cliques)
    print(
        f"cliques={count} max_cardinality={cardinality} "
        f"max_duration={duration} wall_time_s={wall:.3f}",
        file=sys.stderr,
    )
    return EXIT_OK


def _int_list(text: str, flag: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise ValueError(f"{flag} expects comma separated integers, got {text!r}") from None


def cmd_sweep(args) -> int:
    deltas = _int_list(args.deltas, "--deltas")
    gammas = _int_list(args.gammas, "--gammas")
    if not deltas or not gammas:
        raise ValueError("empty delta or gamma list")
    if min(deltas) < 0:
        raise ValueError("delta must be non-negative")
    if min(gammas) < 1:
        raise ValueError("gamma must be at least 1")
    network, _ = _load(args)
    records = run_sweep(
        network,
        deltas,
        gammas,
        clamp=args.clamp,
        threads=args.threads,
        max_product_tuples=args.max_product_tuples,
    )
    buffer = io.StringIO()
    write_sweep_csv(records, buffer)
    _write_output(buffer.getvalue(), args.output)
    print(f"cells={len(records)}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.trials < 0:
        raise ValueError("trials must be non-negative")
    report = run_verify_trials(
        args.trials,
        args.delta,
        args.gamma,
        max_vertices=args.max_vertices,
        max_lifetime=args.max_lifetime,
        seed=args.seed,
        clamp=args.clamp,
    )
    if report.ok:
        if report.trials_run == 0:
            print("no trials run", file=sys.stderr)
        else:
            print(
                f"ok: {report.trials_run} trials agree "
                f"(delta={args.delta}, gamma={args.gamma})",
                file=sys.stderr,
            )
        return EXIT_OK
    m = report.mismatch
    print(
        f"disagreement in trial {m.trial} (delta={args.delta}, gamma={args.gamma})",
        file=sys.stderr,
    )
    print("links:", file=sys.stderr)
    for u, v, t in m.links:
        print(f"  {u} {v} {t}", file=sys.stderr)
    for title, cliques in (("missing", m.missing), ("unexpected", m.unexpected)):
        for labels, start, end in cliques:
            print(f"  {title}: {{{','.join(labels)}}} [{start},{end}]", file=sys.stderr)
    return EXIT_MISMATCH


def cmd_stats(args) -> int:
    network, report = _load(args)
    if report.self_loops:
        print(f"warning: dropped {report.self_loops} self loops", file=sys.stderr)
    payload = {
        "nodes": network.n_vertices,
        "links": network.n_links,
        "static_edges": network.n_static_edges,
        "lifetime": network.lifetime.duration,
        "raw_links": report.raw_links,
    }
    print(json.dumps(payload, separators=(",", ":")))
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ProductLimitError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_GUARD
    except (ParseError, ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
