"""Versioned binary index file.

Layout (little-endian throughout)::

    magic      8 bytes  b"AUGMSIDX"
    version    u32      1
    n          u64
    r          u64
    sigma      u16      number of distinct symbols, sentinel included
    alphabet   sigma bytes, ascending (sentinel first)
    encoding   u8       0 = phoni (no threshold LCEs), 1..6 = full, byte,
                        bv-full, bv-byte, dac, bv-dac
    lce        u8       0 = naive (stores the text), 1 = lcp-rmq (isa + lcp)
    thresholds u8       0 = array, 1 = sigma-bv
    sections   u8       section count
    crc        u32      CRC-32 of all header bytes above
    then per section:
    id u8 | length u64 | crc32 u32 | payload

Section ids: 1 rlbwt, 2 thresholds, 3 threshold LCEs (absent for phoni),
4 LCE backend.
"""
from __future__ import annotations

import io
import os
import struct
import zlib
from dataclasses import dataclass

from .index import VARIANTS, AugmentedIndex
from .lce import LCE_BACKENDS, LcpRmqLCE, NaiveLCE
from .rlbwt import RLBWT
from .succinct import IntVector, Reader
from .thresholds import THRESHOLD_STORAGES, ArrayThresholds, SigmaThresholds, decode

MAGIC = b"AUGMSIDX"
VERSION = 1

SEC_RLBWT, SEC_THRESHOLDS, SEC_THR_LCE, SEC_LCE = 1, 2, 3, 4
SECTION_NAMES = {SEC_RLBWT: "rlbwt", SEC_THRESHOLDS: "thresholds", SEC_THR_LCE: "thr_lce", SEC_LCE: "lce"}
_SECTION_HEAD = struct.Struct("<BQI")
_HEAD_FIXED = struct.Struct("<8sIQQH")


class IndexFormatError(ValueError):
    pass


class BadMagicError(IndexFormatError):
    pass


class UnsupportedVersionError(IndexFormatError):
    pass


class UnsupportedEncodingError(IndexFormatError):
    pass


class ChecksumError(IndexFormatError):
    pass


class TruncatedFileError(IndexFormatError):
    pass


@dataclass
class SaveReport:
    total: int
    header: int
    sections: dict[str, int]


def _rlbwt_bytes(rl: RLBWT) -> bytes:
    return (
        IntVector(rl.heads[1:], 8).to_bytes()
        + IntVector(rl.lengths[1:]).to_bytes()
        + IntVector(rl.sa_start[1:]).to_bytes()
        + IntVector(rl.sa_end[1:]).to_bytes()
    )


def _rlbwt_from(data: bytes) -> RLBWT:
    reader = Reader(data)
    heads = IntVector.from_reader(reader).values
    lengths = IntVector.from_reader(reader).values
    sa_start = IntVector.from_reader(reader).values
    sa_end = IntVector.from_reader(reader).values
    if reader.offset != len(data):
        raise IndexFormatError("trailing bytes in rlbwt section")
    return RLBWT(bytes(heads), lengths, sa_start, sa_end)


def _header(index: AugmentedIndex, nsections: int) -> bytes:
    alphabet = index.rlbwt.alphabet
    body = (
        _HEAD_FIXED.pack(MAGIC, VERSION, index.n, index.r, len(alphabet))
        + alphabet
        + bytes([
            VARIANTS.index(index.variant),
            LCE_BACKENDS.index(index.lce.kind),
            THRESHOLD_STORAGES.index(index.thresholds.storage),
            nsections,
        ])
    )
    return body + struct.pack("<I", zlib.crc32(body))


def to_bytes(index: AugmentedIndex) -> tuple[bytes, SaveReport]:
    sections = [(SEC_RLBWT, _rlbwt_bytes(index.rlbwt)), (SEC_THRESHOLDS, index.thresholds.to_bytes())]
    if index.lce_table is not None:
        sections.append((SEC_THR_LCE, index.lce_table.to_bytes()))
    sections.append((SEC_LCE, index.lce.to_bytes()))
    header = _header(index, len(sections))
    parts = [header]
    sizes = {}
    for sid, payload in sections:
        framed = _SECTION_HEAD.pack(sid, len(payload), zlib.crc32(payload)) + payload
        parts.append(framed)
        sizes[SECTION_NAMES[sid]] = len(framed)
    data = b"".join(parts)
    return data, SaveReport(total=len(data), header=len(header), sections=sizes)


def save(index: AugmentedIndex, destination) -> SaveReport:
    """Write the index to a path or binary file object; returns exact byte counts."""
    data, report = to_bytes(index)
    if isinstance(destination, (str, os.PathLike)):
        with open(destination, "wb") as fh:
            fh.write(data)
    else:
        destination.write(data)
    return report


def from_bytes(data: bytes) -> AugmentedIndex:
    if len(data) < 8 or data[:8] != MAGIC:
        raise BadMagicError("not an index file (bad magic)")
    reader = Reader(data)
    try:
        _, version, n, r, sigma = _HEAD_FIXED.unpack(reader.take(_HEAD_FIXED.size))
        if version != VERSION:
            raise UnsupportedVersionError(f"unsupported version {version}")
        alphabet = reader.take(sigma)
        enc_tag, lce_tag, thr_tag, nsections = reader.take(4)
        head_end = reader.offset
        (crc,) = struct.unpack("<I", reader.take(4))
    except ValueError as exc:
        if isinstance(exc, IndexFormatError):
            raise
        raise TruncatedFileError("file ends inside the header") from None
    if enc_tag >= len(VARIANTS):
        raise UnsupportedEncodingError(f"unsupported encoding tag {enc_tag}")
    if lce_tag >= len(LCE_BACKENDS):
        raise UnsupportedEncodingError(f"unsupported LCE backend tag {lce_tag}")
    if thr_tag >= len(THRESHOLD_STORAGES):
        raise UnsupportedEncodingError(f"unsupported threshold storage tag {thr_tag}")
    if zlib.crc32(data[:head_end]) != crc:
        raise ChecksumError("header checksum mismatch")

    payloads: dict[int, bytes] = {}
    for _ in range(nsections):
        if reader.offset + _SECTION_HEAD.size > len(data):
            raise TruncatedFileError("file ends inside a section header")
        sid, length, crc = _SECTION_HEAD.unpack(reader.take(_SECTION_HEAD.size))
        if reader.offset + length > len(data):
            raise TruncatedFileError(f"section {sid} truncated")
        payload = reader.take(length)
        if zlib.crc32(payload) != crc:
            raise ChecksumError(f"checksum mismatch in section {SECTION_NAMES.get(sid, sid)}")
        payloads[sid] = payload
    if reader.offset != len(data):
        raise IndexFormatError("trailing bytes after last section")

    variant = VARIANTS[enc_tag]
    expected = {SEC_RLBWT, SEC_THRESHOLDS, SEC_LCE} | ({SEC_THR_LCE} if variant != "phoni" else set())
    if set(payloads) != expected:
        raise IndexFormatError(f"sections {sorted(payloads)} do not match variant {variant}")

    rl = _rlbwt_from(payloads[SEC_RLBWT])
    if rl.n != n or rl.r != r or rl.alphabet != alphabet:
        raise IndexFormatError("header does not match rlbwt section")
    storage = THRESHOLD_STORAGES[thr_tag]
    thr_cls = ArrayThresholds if storage == "array" else SigmaThresholds
    thresholds = thr_cls.from_bytes(payloads[SEC_THRESHOLDS], n, rl)
    table = decode(payloads[SEC_THR_LCE], variant, rl) if variant != "phoni" else None
    backend_cls = NaiveLCE if LCE_BACKENDS[lce_tag] == "naive" else LcpRmqLCE
    backend = backend_cls.from_bytes(payloads[SEC_LCE])
    if backend.n != n:
        raise IndexFormatError("LCE backend size does not match header")
    return AugmentedIndex(rlbwt=rl, thresholds=thresholds, lce_table=table, lce=backend,
                          sentinel=alphabet[0])


def load(source) -> AugmentedIndex:
    if isinstance(source, (str, os.PathLike)):
        with open(source, "rb") as fh:
            data = fh.read()
    elif isinstance(source, (bytes, bytearray)):
        data = bytes(source)
    else:
        data = source.read()
    return from_bytes(data)


def size_report(index: AugmentedIndex) -> SaveReport:
    buf = io.BytesIO()
    return save(index, buf)
