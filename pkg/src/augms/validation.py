"""Input checks shared by the estimator and the CLI."""
from __future__ import annotations

from .corpus import concatenate
from .suffix import SENTINEL, Text


def _to_bytes(seq, what: str) -> bytes:
    if isinstance(seq, str):
        return seq.encode("latin-1")
    if isinstance(seq, (bytes, bytearray, memoryview)):
        return bytes(seq)
    raise TypeError(f"{what} must be str or bytes, got {type(seq).__name__}")


def check_text(X) -> Text:
    """Coerce ``X`` into a sentinel-terminated text.

    A ``Text`` is taken as is. A single sequence gets the 0x00 sentinel
    appended. A list or tuple of sequences is joined with the 0x01 record
    separator first.
    """
    if isinstance(X, Text):
        return X
    if isinstance(X, (list, tuple)):
        return concatenate([_to_bytes(rec, "record") for rec in X])
    data = _to_bytes(X, "text")
    if not data:
        raise ValueError("text is empty")
    if SENTINEL in data:
        raise ValueError("text contains the reserved sentinel byte 0x00")
    return Text.from_sequence(data)


def check_patterns(X) -> tuple[list[bytes], bool]:
    """Patterns as a list of bytes, plus whether a single pattern was given."""
    if isinstance(X, (str, bytes, bytearray, memoryview)):
        return [_to_bytes(X, "pattern")], True
    patterns = [_to_bytes(p, "pattern") for p in X]
    return patterns, False


def check_choice(name: str, value, choices) -> None:
    if value not in choices:
        raise ValueError(f"{name} must be one of {tuple(choices)}, got {value!r}")
