"""Sequence ingestion and synthetic workloads."""
from __future__ import annotations

import random
from pathlib import Path

from .suffix import SENTINEL, Text

RECORD_SEPARATOR = 0x01
RESERVED = bytes([SENTINEL, RECORD_SEPARATOR])
DNA = b"ACGT"


def canonical(seq: bytes) -> bytes:
    """Upper-case; ambiguity codes such as N are kept as ordinary symbols."""
    return seq.upper()


def read_records(path) -> list[tuple[str, bytes]]:
    """FASTA records as (name, sequence), or the whole file as one raw record.

    Sequences are case-folded. Raw input has its line breaks removed.
    """
    data = Path(path).read_bytes()
    stripped = data.lstrip()
    if stripped.startswith(b">"):
        records = []
        name, chunks = None, []
        for line in stripped.splitlines():
            if line.startswith(b">"):
                if name is not None:
                    records.append((name, canonical(b"".join(chunks))))
                name = line[1:].split(maxsplit=1)[0].decode("utf-8", "replace") if line[1:].strip() else ""
                chunks = []
            else:
                chunks.append(line.strip())
        records.append((name, canonical(b"".join(chunks))))
    else:
        records = [("1", canonical(data.replace(b"\r", b"").replace(b"\n", b"")))]
    return records


def read_patterns(path) -> list[tuple[str, bytes]]:
    """Patterns from FASTA, or one per non-empty line (named by line number)."""
    data = Path(path).read_bytes()
    if data.lstrip().startswith(b">"):
        return [(name, seq) for name, seq in read_records(path) if seq]
    out = []
    for k, line in enumerate(data.splitlines(), start=1):
        line = line.strip()
        if line:
            out.append((str(k), canonical(line)))
    return out


def concatenate(records: list[bytes]) -> Text:
    """Join records with the record separator and terminate with the sentinel."""
    if not records or not any(records):
        raise ValueError("no sequence data")
    for rec in records:
        bad = set(rec) & set(RESERVED)
        if bad:
            raise ValueError(f"sequence contains reserved byte(s) {sorted(bad)}")
    return Text(bytes([RECORD_SEPARATOR]).join(records) + bytes([SENTINEL]))


def mutate(seq: bytes, rate: float, rng: random.Random, alphabet: bytes = DNA) -> bytes:
    """Independent point substitutions, each to a different symbol of ``alphabet``."""
    if not 0.0 <= rate <= 1.0:
        raise ValueError("mutation rate must be in [0, 1]")
    out = bytearray(seq)
    for k, c in enumerate(out):
        if rng.random() < rate:
            choices = [a for a in alphabet if a != c]
            out[k] = rng.choice(choices)
    return bytes(out)


def synthetic_pangenome(copies: int = 16, length: int = 50_000, divergence: float = 0.001,
                        seed: int = 0) -> list[bytes]:
    """``copies`` mutated variants of one random DNA seed sequence."""
    rng = random.Random(seed)
    base = bytes(rng.choice(DNA) for _ in range(length))
    return [mutate(base, divergence, rng) for _ in range(copies)]


def sample_patterns(records: list[bytes], count: int, length: int, rate: float,
                    seed: int = 0) -> list[bytes]:
    """Substrings of random records, point-mutated at ``rate``."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        rec = rng.choice(records)
        start = rng.randrange(0, max(1, len(rec) - length + 1))
        out.append(mutate(rec[start:start + length], rate, rng))
    return out
