"""Side-by-side query benchmark of index variants."""
from __future__ import annotations

import csv
import hashlib
import time
from dataclasses import asdict, dataclass, fields

from .index import IndexBuilder
from .index_io import size_report
from .matcher import QueryStats, compute_ms


@dataclass
class BenchRecord:
    variant: str
    lce_backend: str
    threshold_storage: str
    n: int
    r: int
    n_over_r: str
    index_bytes: int
    header_bytes: int
    rlbwt_bytes: int
    thresholds_bytes: int
    thr_lce_bytes: int
    lce_bytes: int
    patterns: int
    repeats: int
    total_query_us: float
    mean_query_us: float
    direct_extensions: int
    jumps: int
    lce_calls: int
    lce_skips: int
    skip_fraction: float
    ms_checksum: str


CSV_COLUMNS = [f.name for f in fields(BenchRecord)]


def ms_checksum(outputs) -> str:
    h = hashlib.sha256()
    for ms in outputs:
        h.update(ms.format().encode())
        h.update(b"\n")
    return h.hexdigest()[:16]


def run_bench(text, patterns: list[bytes], variants, backends=("naive",),
              thresholds: str = "array", repeats: int = 1,
              builder: IndexBuilder | None = None) -> list[BenchRecord]:
    """One record per (variant, backend); only the query loop is timed."""
    if repeats < 1:
        raise ValueError("repeats must be >= 1")
    builder = builder or IndexBuilder(text)
    records = []
    for backend in backends:
        for variant in variants:
            index = builder.build(variant, backend, thresholds)
            report = size_report(index)
            elapsed = 0.0
            counters = None
            for _ in range(repeats):
                stats = QueryStats()
                start = time.perf_counter()
                outputs = [compute_ms(index, p, stats=stats) for p in patterns]
                elapsed += time.perf_counter() - start
                if counters is not None and counters != stats:
                    raise RuntimeError("query counters differ between repeats")
                counters = stats
            total_us = elapsed / repeats * 1e6
            records.append(BenchRecord(
                variant=variant,
                lce_backend=backend,
                threshold_storage=thresholds,
                n=index.n,
                r=index.r,
                n_over_r=f"{index.n / index.r:.2f}",
                index_bytes=report.total,
                header_bytes=report.header,
                rlbwt_bytes=report.sections.get("rlbwt", 0),
                thresholds_bytes=report.sections.get("thresholds", 0),
                thr_lce_bytes=report.sections.get("thr_lce", 0),
                lce_bytes=report.sections.get("lce", 0),
                patterns=len(patterns),
                repeats=repeats,
                total_query_us=round(total_us, 1),
                mean_query_us=round(total_us / max(1, len(patterns)), 1),
                skip_fraction=round(counters.lce_skips / counters.jumps, 4) if counters.jumps else 0.0,
                ms_checksum=ms_checksum(outputs),
                **counters.as_dict(),
            ))
    return records


def write_csv(records: list[BenchRecord], fh) -> None:
    writer = csv.DictWriter(fh, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for rec in records:
        writer.writerow(asdict(rec))
