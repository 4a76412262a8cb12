"""Succinct building blocks: bitvectors, packed integer vectors, Elias-Fano
sequences and directly addressable codes.

Every structure serializes to a self-delimiting byte string (``to_bytes``) and
reports its exact serialized size through ``nbytes``. Rank/select support is
rebuilt on load instead of being persisted.
"""
from __future__ import annotations

import struct
from bisect import bisect_right
from typing import Iterable, Sequence

import numpy as np

_U64 = struct.Struct("<Q")
_U8 = struct.Struct("<B")


class Reader:
    """Cursor over a bytes buffer used by the ``from_bytes`` constructors."""

    def __init__(self, data: bytes, offset: int = 0):
        self.data = data
        self.offset = offset

    def take(self, size: int) -> bytes:
        end = self.offset + size
        if end > len(self.data):
            raise ValueError("unexpected end of data")
        chunk = self.data[self.offset:end]
        self.offset = end
        return chunk

    def u8(self) -> int:
        return self.take(1)[0]

    def u64(self) -> int:
        return _U64.unpack(self.take(8))[0]


def _pack_bits(bits: np.ndarray) -> list[int]:
    """Pack a 0/1 array into little-endian 64-bit words."""
    raw = np.packbits(bits.astype(np.uint8), bitorder="little")
    pad = (-len(raw)) % 8
    if pad:
        raw = np.concatenate([raw, np.zeros(pad, dtype=np.uint8)])
    return np.frombuffer(raw.tobytes(), dtype="<u8").tolist()


class BitVector:
    """Static bitvector with rank1/select1 over 64-bit words."""

    def __init__(self, bits: Iterable[int] | np.ndarray):
        arr = np.asarray(bits if isinstance(bits, np.ndarray) else list(bits), dtype=np.uint8)
        self._init_words(len(arr), _pack_bits(arr) if len(arr) else [])

    @classmethod
    def _from_words(cls, length: int, words: list[int]) -> "BitVector":
        self = cls.__new__(cls)
        self._init_words(length, words)
        return self

    def _init_words(self, length: int, words: list[int]) -> None:
        self.length = length
        self.words = words
        cum = [0]
        total = 0
        for w in words:
            total += w.bit_count()
            cum.append(total)
        self._cum = cum
        self.ones = total

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.words[i >> 6] >> (i & 63)) & 1

    def rank1(self, i: int) -> int:
        """Number of set bits in positions ``[0, i)``."""
        w = i >> 6
        rem = i & 63
        if rem == 0:
            return self._cum[w]
        return self._cum[w] + (self.words[w] & ((1 << rem) - 1)).bit_count()

    def select1(self, k: int) -> int:
        """Position of the ``k``-th set bit (1-based ``k``)."""
        if not 1 <= k <= self.ones:
            raise IndexError(k)
        w = bisect_right(self._cum, k - 1) - 1
        word = self.words[w]
        need = k - self._cum[w]
        for _ in range(need - 1):
            word &= word - 1
        return (w << 6) + ((word & -word).bit_length() - 1)

    def to_bytes(self) -> bytes:
        return _U64.pack(self.length) + np.asarray(self.words, dtype="<u8").tobytes()

    @classmethod
    def from_reader(cls, reader: Reader) -> "BitVector":
        length = reader.u64()
        nwords = (length + 63) // 64
        words = np.frombuffer(reader.take(8 * nwords), dtype="<u8").tolist()
        return cls._from_words(length, words)

    @property
    def nbytes(self) -> int:
        return 8 + 8 * len(self.words)


def bits_needed(value: int) -> int:
    return max(1, int(value).bit_length())


class IntVector:
    """Fixed-width unsigned integers, bit-packed on disk, plain list in memory."""

    def __init__(self, values: Sequence[int], width: int | None = None):
        self.values = [int(v) for v in values]
        if width is None:
            width = bits_needed(max(self.values, default=0))
        if not 1 <= width <= 64:
            raise ValueError(f"width must be in [1, 64], got {width}")
        if self.values and max(self.values) >> width:
            raise ValueError("value does not fit in width")
        self.width = width

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> int:
        return self.values[i]

    def _payload(self) -> bytes:
        if not self.values:
            return b""
        arr = np.asarray(self.values, dtype="<u8")
        bits = np.unpackbits(arr.view(np.uint8).reshape(-1, 8), axis=1, bitorder="little")
        flat = bits[:, : self.width].reshape(-1)
        return np.asarray(_pack_bits(flat), dtype="<u8").tobytes()

    def to_bytes(self) -> bytes:
        return _U8.pack(self.width) + _U64.pack(len(self.values)) + self._payload()

    @classmethod
    def from_reader(cls, reader: Reader) -> "IntVector":
        width = reader.u8()
        count = reader.u64()
        nwords = (count * width + 63) // 64
        raw = np.frombuffer(reader.take(8 * nwords), dtype=np.uint8)
        if count == 0:
            return cls([], width)
        bits = np.unpackbits(raw, bitorder="little")[: count * width].reshape(count, width)
        padded = np.zeros((count, 64), dtype=np.uint8)
        padded[:, :width] = bits
        values = np.packbits(padded, axis=1, bitorder="little").view("<u8").reshape(-1)
        return cls(values.tolist(), width)

    @property
    def nbytes(self) -> int:
        return 9 + 8 * ((len(self.values) * self.width + 63) // 64)


class EliasFano:
    """Monotone (non-decreasing) integer sequence in Elias-Fano form.

    Used as the sparse bitvector holding one symbol's thresholds: element
    ``k`` is the position of the ``k``-th set bit.
    """

    def __init__(self, values: Sequence[int], universe: int):
        values = [int(v) for v in values]
        if any(b < a for a, b in zip(values, values[1:])):
            raise ValueError("Elias-Fano input must be non-decreasing")
        if values and (values[0] < 0 or values[-1] >= universe):
            raise ValueError("value outside universe")
        m = len(values)
        self.universe = universe
        self.count = m
        self.low_width = max(0, (universe // m).bit_length() - 1) if m else 0
        lw = self.low_width
        mask = (1 << lw) - 1
        self.lows = IntVector([v & mask for v in values], max(lw, 1))
        high_len = m + (universe >> lw) + 1
        bits = np.zeros(high_len, dtype=np.uint8)
        for k, v in enumerate(values):
            bits[(v >> lw) + k] = 1
        self.highs = BitVector(bits)

    def __len__(self) -> int:
        return self.count

    def __getitem__(self, k: int) -> int:
        """Element ``k`` (0-based)."""
        if not 0 <= k < self.count:
            raise IndexError(k)
        high = self.highs.select1(k + 1) - k
        if self.low_width == 0:
            return high
        return (high << self.low_width) | self.lows[k]

    def to_bytes(self) -> bytes:
        return (
            _U64.pack(self.universe)
            + _U64.pack(self.count)
            + self.lows.to_bytes()
            + self.highs.to_bytes()
        )

    @classmethod
    def from_reader(cls, reader: Reader) -> "EliasFano":
        self = cls.__new__(cls)
        self.universe = reader.u64()
        self.count = reader.u64()
        self.low_width = max(0, (self.universe // self.count).bit_length() - 1) if self.count else 0
        self.lows = IntVector.from_reader(reader)
        self.highs = BitVector.from_reader(reader)
        return self

    @property
    def nbytes(self) -> int:
        return 16 + self.lows.nbytes + self.highs.nbytes


# DAC layout. Values needing more than DAC_CHUNK_BITS * DAC_LEVELS bits escape
# into a full-width overflow table addressed by rank over the last level's
# continuation bitvector.
DAC_CHUNK_BITS = 4
DAC_LEVELS = 2


class DAC:
    """Directly addressable codes with escaping."""

    def __init__(self, values: Sequence[int], chunk_bits: int = DAC_CHUNK_BITS,
                 levels: int = DAC_LEVELS):
        if chunk_bits < 1 or levels < 1:
            raise ValueError("chunk_bits and levels must be positive")
        self.chunk_bits = chunk_bits
        self.levels = levels
        mask = (1 << chunk_bits) - 1
        current = [int(v) for v in values]
        self._chunks: list[IntVector] = []
        self._more: list[BitVector] = []
        overflow: list[int] = []
        for level in range(levels):
            shift = chunk_bits * level
            self._chunks.append(IntVector([(v >> shift) & mask for v in current], chunk_bits))
            cont = np.fromiter(((v >> (shift + chunk_bits)) > 0 for v in current),
                               dtype=np.uint8, count=len(current))
            self._more.append(BitVector(cont))
            current = [v for v, c in zip(current, cont) if c]
        overflow = current
        self._overflow = IntVector(overflow)
        self._size = len(values)

    def __len__(self) -> int:
        return self._size

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self._size:
            raise IndexError(i)
        value = 0
        for level in range(self.levels):
            value |= self._chunks[level][i] << (self.chunk_bits * level)
            more = self._more[level]
            if not more[i]:
                return value
            i = more.rank1(i)
        return self._overflow[i]

    def to_bytes(self) -> bytes:
        out = [_U8.pack(self.chunk_bits), _U8.pack(self.levels), _U64.pack(self._size)]
        for chunks, more in zip(self._chunks, self._more):
            out.append(chunks.to_bytes())
            out.append(more.to_bytes())
        out.append(self._overflow.to_bytes())
        return b"".join(out)

    @classmethod
    def from_reader(cls, reader: Reader) -> "DAC":
        self = cls.__new__(cls)
        self.chunk_bits = reader.u8()
        self.levels = reader.u8()
        self._size = reader.u64()
        self._chunks, self._more = [], []
        for _ in range(self.levels):
            self._chunks.append(IntVector.from_reader(reader))
            self._more.append(BitVector.from_reader(reader))
        self._overflow = IntVector.from_reader(reader)
        return self

    @property
    def nbytes(self) -> int:
        return 10 + sum(c.nbytes + m.nbytes for c, m in zip(self._chunks, self._more)) \
            + self._overflow.nbytes
