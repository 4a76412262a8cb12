import io
import struct
import zlib

import pytest
from hypothesis import given, settings, strategies as st

from augms import index_io
from augms.index import VARIANTS, IndexBuilder
from augms.index_io import (
    BadMagicError,
    ChecksumError,
    IndexFormatError,
    TruncatedFileError,
    UnsupportedEncodingError,
    UnsupportedVersionError,
    from_bytes,
    to_bytes,
)
from augms.lce import LCE_BACKENDS
from augms.matcher import QueryStats, compute_ms
from augms.thresholds import THRESHOLD_STORAGES

from strategies import text_and_pattern


def outputs(index, patterns):
    res = []
    for p in patterns:
        stats = QueryStats()
        res.append((compute_ms(index, p, stats=stats).format(), stats.as_dict()))
    return res


@settings(max_examples=60)
@given(text_and_pattern(), st.sampled_from(VARIANTS), st.sampled_from(LCE_BACKENDS),
       st.sampled_from(THRESHOLD_STORAGES))
def test_roundtrip_property(case, variant, backend, storage):
    text, pattern = case
    index = IndexBuilder(text).build(variant, backend, storage)
    data, report = to_bytes(index)
    assert report.total == len(data) == report.header + sum(report.sections.values())
    back = from_bytes(data)
    assert (back.variant, back.lce.kind, back.thresholds.storage) == (variant, backend, storage)
    assert outputs(back, [pattern]) == outputs(index, [pattern])
    assert to_bytes(back)[0] == data


def test_file_roundtrip(tmp_path, abra_builder):
    index = abra_builder.build("bv-dac", "lcp-rmq", "sigma-bv")
    path = tmp_path / "abra.idx"
    index_io.save(index, path)
    assert outputs(index_io.load(path), ["abra", "adra"]) == outputs(index, ["abra", "adra"])
    buf = io.BytesIO()
    index_io.save(index, buf)
    buf.seek(0)
    assert outputs(index_io.load(buf), ["cad"]) == outputs(index, ["cad"])


def test_phoni_has_no_threshold_lce_section(abra_builder):
    report = index_io.size_report(abra_builder.build("phoni"))
    assert "thr_lce" not in report.sections
    assert "thr_lce" in index_io.size_report(abra_builder.build("full")).sections


def test_byte_section_smaller_than_full():
    text = (b"ACGTACGGTCA" * 40)[:-3] + b"TTG\0"     # n > 256, so full entries need two bytes
    b = IndexBuilder(text)
    full = index_io.size_report(b.build("full")).sections["thr_lce"]
    byte = index_io.size_report(b.build("byte")).sections["thr_lce"]
    assert byte < full


@pytest.fixture
def saved(abra_builder):
    return to_bytes(abra_builder.build("full"))[0]


def test_empty_file_is_bad_magic():
    with pytest.raises(BadMagicError):
        from_bytes(b"")


def test_bad_magic(saved):
    with pytest.raises(BadMagicError):
        from_bytes(b"X" + saved[1:])


def _rewrite_header(data, offset, value):
    """Patch one header byte and recompute the header checksum."""
    sigma = struct.unpack_from("<H", data, 28)[0]
    end = 30 + sigma + 4
    head = bytearray(data[:end])
    head[offset] = value
    return bytes(head) + struct.pack("<I", zlib.crc32(bytes(head))) + data[end + 4:]


def test_unsupported_version(saved):
    bumped = saved[:8] + struct.pack("<I", 2) + saved[12:]
    with pytest.raises(UnsupportedVersionError):
        from_bytes(bumped)


def test_unsupported_encoding_tag(saved):
    sigma = struct.unpack_from("<H", saved, 28)[0]
    for k in range(3):
        with pytest.raises(UnsupportedEncodingError):
            from_bytes(_rewrite_header(saved, 30 + sigma + k, 99))


def test_header_checksum(saved):
    sigma = struct.unpack_from("<H", saved, 28)[0]
    corrupt = bytearray(saved)
    corrupt[30] ^= 0x01          # first alphabet byte
    with pytest.raises(ChecksumError):
        from_bytes(bytes(corrupt))
    assert sigma > 0


def test_every_truncation_fails(saved):
    for cut in range(len(saved)):
        with pytest.raises(IndexFormatError):
            from_bytes(saved[:cut])


def test_truncation_error_type(saved):
    with pytest.raises(TruncatedFileError):
        from_bytes(saved[:-1])


def test_every_flipped_payload_byte_fails(saved):
    sigma = struct.unpack_from("<H", saved, 28)[0]
    start = 30 + sigma + 8
    for k in range(start, len(saved)):
        corrupt = bytearray(saved)
        corrupt[k] ^= 0x40
        with pytest.raises(IndexFormatError):
            from_bytes(bytes(corrupt))


def test_trailing_bytes(saved):
    with pytest.raises(IndexFormatError):
        from_bytes(saved + b"\0")
