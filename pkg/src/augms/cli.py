"""Command line entry point: ``augms build | query | bench | synth``.

Exit codes: 0 success, 1 usage error, 2 data error.
"""
from __future__ import annotations

import argparse
import logging
import random
import sys
from concurrent.futures import ThreadPoolExecutor

from . import index_io
from .bench import run_bench, write_csv
from .corpus import (
    RECORD_SEPARATOR,
    concatenate,
    mutate,
    read_patterns,
    read_records,
    sample_patterns,
    synthetic_pangenome,
)
from .index import VARIANTS, IndexBuilder
from .lce import LCE_BACKENDS
from .matcher import QueryStats, compute_ms, extract_mems
from .suffix import SENTINEL
from .thresholds import THRESHOLD_STORAGES

log = logging.getLogger("augms")

EXIT_OK, EXIT_USAGE, EXIT_DATA = 0, 1, 2

INPUT_HELP = (
    "FASTA (records joined with byte 0x01, then terminated by 0x00) or raw "
    "bytes with line breaks removed. Sequences are upper-cased; N and other "
    "ambiguity codes are kept as ordinary symbols."
)


class UsageError(Exception):
    pass


class DataError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _csv_list(choices):
    def parse(value):
        items = [v.strip() for v in value.split(",") if v.strip()]
        bad = [v for v in items if v not in choices]
        if bad or not items:
            raise argparse.ArgumentTypeError(f"choose from {', '.join(choices)}")
        return items
    return parse


def _print_sizes(index, report, out) -> None:
    print(f"n\t{index.n}", file=out)
    print(f"r\t{index.r}", file=out)
    print(f"n/r\t{index.n / index.r:.2f}", file=out)
    print(f"bytes\t{report.total}", file=out)
    print(f"header\t{report.header}", file=out)
    for name, size in report.sections.items():
        print(f"section:{name}\t{size}", file=out)


def _load_text(path):
    try:
        records = [seq for _, seq in read_records(path)]
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc}") from None
    try:
        return concatenate(records)
    except ValueError as exc:
        raise DataError(str(exc)) from None


def _load_patterns(path):
    try:
        patterns = read_patterns(path)
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc}") from None
    for name, seq in patterns:
        if SENTINEL in seq or RECORD_SEPARATOR in seq:
            raise DataError(f"pattern {name} contains a reserved byte")
    return patterns


def cmd_build(args, out) -> int:
    text = _load_text(args.input)
    index = IndexBuilder(text).build(args.encoding, args.lce, args.thresholds)
    try:
        report = index_io.save(index, args.output)
    except OSError as exc:
        raise DataError(f"cannot write {args.output}: {exc}") from None
    _print_sizes(index, report, out)
    return EXIT_OK


def cmd_query(args, out) -> int:
    try:
        index = index_io.load(args.index)
    except OSError as exc:
        raise DataError(f"cannot read index {args.index}: {exc}") from None
    except index_io.IndexFormatError as exc:
        raise DataError(f"{args.index}: {exc}") from None
    patterns = _load_patterns(args.patterns)

    def run(item):
        stats = QueryStats()
        return compute_ms(index, item[1], stats=stats), stats

    with ThreadPoolExecutor(max_workers=args.threads) as pool:
        results = list(pool.map(run, patterns))
    total = QueryStats()
    for (name, _), (ms, stats) in zip(patterns, results):
        total += stats
        if args.mems:
            for i, pos, length in extract_mems(ms, args.min_len):
                print(f"{name} {i} {pos} {length}", file=out)
        else:
            print(ms.format(), file=out)
    log.info("stats %s", total.as_dict())
    return EXIT_OK


def cmd_bench(args, out) -> int:
    if len(set(args.variants)) != len(args.variants) or len(set(args.lce)) != len(args.lce):
        raise UsageError("variants and backends must not repeat")
    text = _load_text(args.text)
    patterns = [seq for _, seq in _load_patterns(args.patterns)]
    if args.mutate:
        rng = random.Random(args.seed)
        alphabet = bytes(sorted(set(text[:-1]) - {RECORD_SEPARATOR}))
        patterns = [mutate(p, args.mutate, rng, alphabet) for p in patterns]
    records = run_bench(text, patterns, args.variants, args.lce, args.thresholds, args.repeats)
    if args.csv == "-":
        write_csv(records, out)
    else:
        with open(args.csv, "w", newline="") as fh:
            write_csv(records, fh)
    for rec in records:
        log.info("%s/%s bytes=%d calls=%d skips=%d mean_us=%.1f", rec.variant, rec.lce_backend,
                 rec.index_bytes, rec.lce_calls, rec.lce_skips, rec.mean_query_us)
    return EXIT_OK


def cmd_synth(args, out) -> int:
    records = synthetic_pangenome(args.copies, args.length, args.divergence, args.seed)
    with open(args.text, "w") as fh:
        for k, rec in enumerate(records, start=1):
            fh.write(f">copy{k}\n{rec.decode()}\n")
    if args.patterns:
        pats = sample_patterns(records, args.count, args.pattern_length, args.mutate, args.seed + 1)
        with open(args.patterns, "w") as fh:
            for k, p in enumerate(pats, start=1):
                fh.write(f">read{k}\n{p.decode()}\n")
    return EXIT_OK


def _rate(value):
    v = float(value)
    if not 0.0 <= v <= 1.0:
        raise argparse.ArgumentTypeError("must be within [0, 1]")
    return v


def _positive(value):
    v = int(value)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="augms", description="Matching statistics over a run-length BWT "
                "index with augmented thresholds.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("build", help="build an index file", description=INPUT_HELP)
    b.add_argument("input")
    b.add_argument("output")
    b.add_argument("--encoding", choices=VARIANTS, default="full")
    b.add_argument("--lce", choices=LCE_BACKENDS, default="naive")
    b.add_argument("--thresholds", choices=THRESHOLD_STORAGES, default="array")
    b.set_defaults(func=cmd_build)

    q = sub.add_parser("query", help="matching statistics or MEMs for patterns",
                       description="Patterns come from FASTA or one per line; they are upper-cased.")
    q.add_argument("index")
    q.add_argument("patterns")
    kind = q.add_mutually_exclusive_group()
    kind.add_argument("--ms", action="store_true", help="print pos:len per position (default)")
    kind.add_argument("--mems", action="store_true", help="print 'pattern-id i pos len' per MEM")
    q.add_argument("--min-len", type=_positive, default=1)
    q.add_argument("--threads", type=_positive, default=1)
    q.set_defaults(func=cmd_query)

    be = sub.add_parser("bench", help="compare variants, write CSV", description=INPUT_HELP)
    be.add_argument("text")
    be.add_argument("patterns")
    be.add_argument("--variants", type=_csv_list(VARIANTS), default=list(VARIANTS))
    be.add_argument("--lce", type=_csv_list(LCE_BACKENDS), default=["naive"])
    be.add_argument("--thresholds", choices=THRESHOLD_STORAGES, default="array")
    be.add_argument("--csv", default="-", help="output path, '-' for stdout")
    be.add_argument("--repeats", type=_positive, default=1)
    be.add_argument("--mutate", type=_rate, default=0.0, help="point-mutation rate applied to patterns")
    be.add_argument("--seed", type=int, default=0)
    be.set_defaults(func=cmd_bench)

    s = sub.add_parser("synth", help="write a synthetic pangenome (and reads) as FASTA")
    s.add_argument("text")
    s.add_argument("--patterns")
    s.add_argument("--copies", type=_positive, default=16)
    s.add_argument("--length", type=_positive, default=50_000)
    s.add_argument("--divergence", type=_rate, default=0.001)
    s.add_argument("--count", type=_positive, default=100)
    s.add_argument("--pattern-length", type=_positive, default=500)
    s.add_argument("--mutate", type=_rate, default=0.01)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_synth)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "query" and args.min_len != 1 and not args.mems:
        parser.error("--min-len requires --mems")
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"augms: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DataError as exc:
        print(f"augms: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
