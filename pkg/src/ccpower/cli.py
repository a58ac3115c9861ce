"""Command-line front end.

Subcommands::

    ccpower compute FILE     exact indices via the counting engine
    ccpower oracle FILE      the same indices by definitional brute force
    ccpower validate FILE    structural diagnostics for a game file
    ccpower bench            engine-vs-oracle timing table on random instances

Exit codes: 0 success, 1 input or validation error, 2 brute-force size guard.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
import time
from random import Random

from . import genfun, oracle, randgames
from .gamefile import GameFileError, load_configured_game
from .indices import (
    banzhaf_coleman_cc,
    configuration_index,
    index_report,
    normalize,
)
from .model import ConfiguredGame, GameError
from .report import DEFAULT_PRECISION, render_report


def _add_render_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--index",
        choices=("banzhaf", "configuration", "both"),
        default="both",
        help="which index column(s) to compute (default: both)",
    )
    parser.add_argument(
        "--format",
        choices=("table", "csv", "json"),
        default="table",
        help="output format (default: table)",
    )
    parser.add_argument(
        "--precision",
        type=int,
        default=DEFAULT_PRECISION,
        metavar="N",
        help=f"decimal places for index values (default: {DEFAULT_PRECISION})",
    )
    parser.add_argument(
        "--exact",
        action="store_true",
        help="print exact fractions (num/den) instead of decimals",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ccpower",
        description="Exact power indices for weighted majority games "
        "with overlapping coalition blocks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="compute indices with the counting engine")
    p_compute.add_argument("file", help="JSON game description")
    _add_render_flags(p_compute)
    p_compute.add_argument(
        "--normalize-banzhaf",
        action="store_true",
        help="rescale the generalized Banzhaf-Coleman column to sum to 1 "
        "(a convenience rescaling, not part of the index definition)",
    )
    p_compute.add_argument(
        "--dump-counts",
        metavar="PATH",
        help="also write the engine's coefficient tables as CSV "
        "(columns i,k,m,r,t,count; r,t empty for the weight-only table)",
    )

    p_oracle = sub.add_parser("oracle", help="compute indices by brute-force enumeration")
    p_oracle.add_argument("file", help="JSON game description")
    _add_render_flags(p_oracle)
    p_oracle.add_argument(
        "--diff",
        action="store_true",
        help="run both engine and oracle and report the first discrepancy",
    )

    p_validate = sub.add_parser("validate", help="check a game file and print diagnostics")
    p_validate.add_argument("file", help="JSON game description")

    p_bench = sub.add_parser("bench", help="time engine vs oracle on random instances")
    p_bench.add_argument("--p", default="4..10", metavar="A..B", help="player counts (default 4..10)")
    p_bench.add_argument("--c", default="3", metavar="A..B", help="block counts (default 3)")
    p_bench.add_argument("--reps", type=int, default=1, metavar="N", help="instances per size (default 1)")
    p_bench.add_argument("--seed", type=int, default=0, metavar="N", help="base seed (default 0)")
    p_bench.add_argument("--max-weight", type=int, default=20, metavar="W", help="weight bound (default 20)")

    return parser


def _fail(message: str, code: int = 1) -> int:
    print(f"ccpower: error: {message}", file=sys.stderr)
    return code


def _load(path: str) -> ConfiguredGame:
    return load_configured_game(path)


def _compute_vectors(cg: ConfiguredGame, which: str, backend: str):
    beta = phi = None
    if which in ("banzhaf", "both"):
        beta = banzhaf_coleman_cc(cg) if backend == "engine" else oracle.oracle_banzhaf_cc(cg)
    if which in ("configuration", "both"):
        phi = (
            configuration_index(cg)
            if backend == "engine"
            else oracle.oracle_configuration_index(cg)
        )
    return beta, phi


def _print_report(cg, beta, phi, args, beta_header="beta") -> None:
    report = index_report(cg, beta=beta, phi=phi)
    rendered = render_report(
        report,
        precision=args.precision,
        exact=args.exact,
        beta_header=beta_header,
    )
    if args.format == "table":
        sys.stdout.write(rendered.as_table())
    elif args.format == "csv":
        sys.stdout.write(rendered.as_csv())
    else:
        sys.stdout.write(rendered.as_json())


def _dump_counts_csv(cg: ConfiguredGame) -> str:
    """Nonzero engine coefficients, ordered by (i, k, m, r, t), 1-based i/k."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["i", "k", "m", "r", "t", "count"])
    for i in range(cg.num_players):
        for k in cg.blocks_containing(i):
            wc = genfun.weight_counts(cg, i, k)
            for m, count in sorted(wc.nonzero().items()):
                writer.writerow([i + 1, k + 1, m, "", "", count])
            tc = genfun.tri_counts(cg, i, k)
            for (m, r, t), count in sorted(tc.nonzero().items()):
                writer.writerow([i + 1, k + 1, m, r, t, count])
    return buf.getvalue()


def _cmd_compute(args) -> int:
    if args.precision < 0:
        return _fail("--precision must be >= 0")
    try:
        cg = _load(args.file)
        beta, phi = _compute_vectors(cg, args.index, "engine")
        beta_header = "beta"
        if args.normalize_banzhaf and beta is not None:
            beta = normalize(beta)
            beta_header = "beta_normalized"
        if args.dump_counts:
            with open(args.dump_counts, "w", encoding="utf-8") as fh:
                fh.write(_dump_counts_csv(cg))
    except (OSError, GameFileError, GameError, ValueError) as e:
        return _fail(str(e))
    _print_report(cg, beta, phi, args, beta_header=beta_header)
    return 0


def _cmd_oracle(args) -> int:
    if args.precision < 0:
        return _fail("--precision must be >= 0")
    try:
        cg = _load(args.file)
    except (OSError, GameFileError, GameError) as e:
        return _fail(str(e))
    try:
        if args.diff:
            mismatches = []
            e_beta, e_phi = _compute_vectors(cg, args.index, "engine")
            o_beta, o_phi = _compute_vectors(cg, args.index, "oracle")
            for name, engine_vec, oracle_vec in (
                ("beta", e_beta, o_beta),
                ("phi", e_phi, o_phi),
            ):
                if engine_vec is None:
                    continue
                for i, (ev, ov) in enumerate(zip(engine_vec, oracle_vec)):
                    if ev != ov:
                        mismatches.append((name, i, ev, ov))
            if mismatches:
                name, i, ev, ov = mismatches[0]
                print(
                    f"discrepancy: {name} of player {i + 1}: "
                    f"engine {ev} != oracle {ov}"
                )
                return 1
            print("no discrepancies")
            return 0
        beta, phi = _compute_vectors(cg, args.index, "oracle")
    except oracle.InstanceTooLarge as e:
        return _fail(str(e), code=2)
    _print_report(cg, beta, phi, args)
    return 0


def _cmd_validate(args) -> int:
    try:
        cg = _load(args.file)
    except (OSError, GameFileError, GameError) as e:
        return _fail(str(e))
    cfg = cg.config
    if cfg.is_partition():
        classification = "partition (pairwise disjoint blocks)"
    else:
        classification = "cover with overlapping blocks (not a partition)"
    lines = [
        "valid",
        f"players: {cg.num_players}",
        f"blocks: {cg.num_blocks}",
        f"total weight: {cg.game.total_weight}",
        f"quota: {cg.game.quota}",
        f"classification: {classification}",
        "memberships:",
    ]
    for i in range(cg.num_players):
        blocks = ",".join(str(k + 1) for k in cg.blocks_containing(i))
        lines.append(
            f"  player {i + 1} ({cg.game.label_of(i)}): weight "
            f"{cg.game.weights[i]}, in {len(cg.blocks_containing(i))} "
            f"block(s): {blocks}"
        )
    print("\n".join(lines))
    return 0


def _parse_range(text: str, what: str) -> range:
    try:
        if ".." in text:
            lo_s, hi_s = text.split("..", 1)
            lo, hi = int(lo_s), int(hi_s)
        else:
            lo = hi = int(text)
    except ValueError:
        raise ValueError(f"invalid {what} range {text!r} (expected N or A..B)")
    if lo < 1 or hi < lo:
        raise ValueError(f"invalid {what} range {text!r}: need 1 <= A <= B")
    return range(lo, hi + 1)


def _cmd_bench(args) -> int:
    try:
        p_range = _parse_range(args.p, "player")
        c_range = _parse_range(args.c, "block")
        if args.reps < 1:
            raise ValueError("--reps must be >= 1")
        if args.max_weight < 1:
            raise ValueError("--max-weight must be >= 1")
        for c in c_range:
            if c > (1 << p_range.start) - 1:
                raise ValueError(
                    f"{c} distinct blocks are impossible with {p_range.start} players"
                )
    except ValueError as e:
        return _fail(str(e))

    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["p", "c", "rep", "seed", "engine_ms", "oracle_ms"])
    for p in p_range:
        for c in c_range:
            for rep in range(args.reps):
                seed = args.seed * 1_000_003 + p * 10_007 + c * 101 + rep
                rng = Random(seed)
                cg = randgames.random_configured_game(rng, p, c, args.max_weight)

                start = time.perf_counter()
                banzhaf_coleman_cc(cg)
                configuration_index(cg)
                engine_ms = (time.perf_counter() - start) * 1000.0

                try:
                    oracle.check_instance(cg)
                    start = time.perf_counter()
                    oracle.oracle_banzhaf_cc(cg)
                    oracle.oracle_configuration_index(cg)
                    oracle_ms = f"{(time.perf_counter() - start) * 1000.0:.3f}"
                except oracle.InstanceTooLarge:
                    oracle_ms = ""
                writer.writerow([p, c, rep, seed, f"{engine_ms:.3f}", oracle_ms])
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {
        "compute": _cmd_compute,
        "oracle": _cmd_oracle,
        "validate": _cmd_validate,
        "bench": _cmd_bench,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
