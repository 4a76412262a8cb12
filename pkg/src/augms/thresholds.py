"""Thresholds and threshold LCEs, built together from LCP range minima.

For two consecutive runs of the same symbol, the earlier ending at ``e1`` and
the later (run ``x``) starting at ``s2``, the threshold ``t`` is a position of
the minimum of ``lcp[e1+1..s2]``. Alongside it we keep

* ``thr_lce_e[x] = LCE(sa[e1], sa[t-1]) = min(lcp[e1+1..t-1])``
* ``thr_lce_s[x] = LCE(sa[t], sa[s2])   = min(lcp[t+1..s2])``

The first value is never consulted when ``t == e1 + 1`` and the second never
when ``t == s2``; such entries are "unused".
"""
from __future__ import annotations

from dataclasses import dataclass

from .rlbwt import RLBWT
from .succinct import DAC, BitVector, EliasFano, IntVector, Reader
from .suffix import SuffixBundle

ENCODINGS = ("full", "byte", "bv-full", "bv-byte", "dac", "bv-dac")
THRESHOLD_STORAGES = ("array", "sigma-bv")
SIDES = ("e", "s")
BYTE_ESCAPE = 0xFF


class UndefinedThresholdError(KeyError):
    """Raised when asking for the threshold of a symbol's first run."""


def full_width(n: int) -> int:
    """Bits per value for full-width storage: whole bytes covering ceil(log2 n)."""
    bits = max(1, (n - 1).bit_length())
    return 8 * ((bits + 7) // 8)


# -- thresholds ---------------------------------------------------------------

class ArrayThresholds:
    """Thresholds as a plain packed array indexed by run ordinal; 0 marks undefined."""

    storage = "array"

    def __init__(self, values: list[int], n: int):
        # values[0] is a dummy slot
        self.n = n
        self._vec = IntVector(values[1:], full_width(n + 1))
        self._values = values

    @property
    def r(self) -> int:
        return len(self._values) - 1

    def is_defined(self, x: int) -> bool:
        return self._values[x] != 0

    def __getitem__(self, x: int) -> int:
        t = self._values[x]
        if t == 0:
            raise UndefinedThresholdError(x)
        return t

    def to_bytes(self) -> bytes:
        return self._vec.to_bytes()

    @classmethod
    def from_bytes(cls, data: bytes, n: int, rlbwt: RLBWT) -> "ArrayThresholds":
        vec = IntVector.from_reader(Reader(data))
        return cls([0] + vec.values, n)

    @property
    def nbytes(self) -> int:
        return self._vec.nbytes


class SigmaThresholds:
    """Thresholds as one sparse (Elias-Fano) bitvector per symbol.

    The thresholds between consecutive runs of one symbol are strictly
    increasing, so the k-th later run of symbol c finds its threshold as the
    k-th set bit of c's bitvector.
    """

    storage = "sigma-bv"

    def __init__(self, per_symbol: dict[int, EliasFano], rlbwt: RLBWT, n: int):
        self.n = n
        self._rlbwt = rlbwt
        self._per_symbol = per_symbol

    @classmethod
    def from_array(cls, table: ArrayThresholds, rlbwt: RLBWT) -> "SigmaThresholds":
        per_symbol = {}
        for c in rlbwt.alphabet:
            runs = rlbwt.sym_runs[c]
            per_symbol[c] = EliasFano([table[x] for x in runs[1:]], table.n + 1)
        return cls(per_symbol, rlbwt, table.n)

    @property
    def r(self) -> int:
        return self._rlbwt.r

    def is_defined(self, x: int) -> bool:
        return self._rlbwt.sym_rank[x] != 0

    def __getitem__(self, x: int) -> int:
        k = self._rlbwt.sym_rank[x]
        if k == 0:
            raise UndefinedThresholdError(x)
        return self._per_symbol[self._rlbwt.heads[x]][k - 1]

    def to_bytes(self) -> bytes:
        return b"".join(bytes([c]) + self._per_symbol[c].to_bytes() for c in sorted(self._per_symbol))

    @classmethod
    def from_bytes(cls, data: bytes, n: int, rlbwt: RLBWT) -> "SigmaThresholds":
        reader = Reader(data)
        per_symbol = {}
        while reader.offset < len(data):
            c = reader.u8()
            per_symbol[c] = EliasFano.from_reader(reader)
        if set(per_symbol) != set(rlbwt.alphabet):
            raise ValueError("threshold bitvectors do not match the BWT alphabet")
        return cls(per_symbol, rlbwt, n)

    @property
    def nbytes(self) -> int:
        return sum(1 + ef.nbytes for ef in self._per_symbol.values())


# -- raw threshold LCEs ------------------------------------------------------

@dataclass
class RawThresholdLce:
    """Uncompressed threshold LCEs; index 0 is a dummy slot, unused entries hold 0."""

    e: list[int]
    s: list[int]
    used_e: list[bool]
    used_s: list[bool]

    @property
    def r(self) -> int:
        return len(self.e) - 1

    def slots(self) -> list[tuple[int, bool]]:
        """Interleaved (value, used) pairs: slot 2(x-1) is side e, 2(x-1)+1 side s."""
        out = []
        for x in range(1, self.r + 1):
            out.append((self.e[x], self.used_e[x]))
            out.append((self.s[x], self.used_s[x]))
        return out


def _choose_threshold(bundle: SuffixBundle, e1: int, s2: int) -> int:
    # Among minima of lcp[e1+1..s2] take the rightmost one before s2; s2 itself
    # only when its lcp is strictly smaller than everything before it.
    if s2 == e1 + 1:
        return s2
    pos, value = bundle.lcp_range_min(e1 + 1, s2 - 1, tie="right")
    return s2 if bundle.lcp[s2] < value else pos


def build_augmented(bundle: SuffixBundle, rlbwt: RLBWT) -> tuple[ArrayThresholds, RawThresholdLce]:
    """Compute thresholds and both threshold LCEs for every run in one scan."""
    if bundle.n != rlbwt.n:
        raise ValueError("bundle and RLBWT were built from different texts")
    r = rlbwt.r
    thr = [0] * (r + 1)
    lce_e = [0] * (r + 1)
    lce_s = [0] * (r + 1)
    used_e = [False] * (r + 1)
    used_s = [False] * (r + 1)
    for runs in rlbwt.sym_runs.values():
        for prev, x in zip(runs, runs[1:]):
            e1 = rlbwt.run_end(prev)
            s2 = rlbwt.run_start(x)
            t = _choose_threshold(bundle, e1, s2)
            thr[x] = t
            if t > e1 + 1:
                used_e[x] = True
                lce_e[x] = bundle.lcp_range_min(e1 + 1, t - 1)[1]
            if t < s2:
                used_s[x] = True
                lce_s[x] = bundle.lcp_range_min(t + 1, s2)[1]
    return ArrayThresholds(thr, bundle.n), RawThresholdLce(lce_e, lce_s, used_e, used_s)


def threshold_lookup(table, x: int) -> int:
    return table[x]


# -- encoded threshold LCEs ----------------------------------------------------

class ThresholdLceTable:
    """Threshold LCEs under one storage encoding.

    ``lookup`` returns the exact stored value or None when the encoding could
    not keep it (overflow, unmarked entry); it never returns a wrong number.
    """

    encoding: str

    def __init__(self, rlbwt: RLBWT | None = None):
        self._rlbwt = rlbwt

    def lookup(self, x: int, side: str) -> int | None:
        if side not in SIDES:
            raise ValueError(f"side must be 'e' or 's', got {side!r}")
        if self._rlbwt is not None and self._rlbwt.sym_rank[x] == 0:
            raise UndefinedThresholdError(x)
        return self._get(2 * (x - 1) + (side == "s"))

    def _get(self, slot: int) -> int | None:
        raise NotImplementedError

    def to_bytes(self) -> bytes:
        return b"".join(part.to_bytes() for part in self._parts())

    @property
    def nbytes(self) -> int:
        return sum(part.nbytes for part in self._parts())


class FullLceTable(ThresholdLceTable):
    encoding = "full"

    def __init__(self, vec: IntVector, rlbwt=None):
        super().__init__(rlbwt)
        self.vec = vec

    @classmethod
    def build(cls, raw: RawThresholdLce, n: int, rlbwt=None):
        return cls(IntVector([v for v, _ in raw.slots()], full_width(n)), rlbwt)

    def _get(self, slot):
        return self.vec[slot]

    def _parts(self):
        return [self.vec]

    @classmethod
    def from_reader(cls, reader, rlbwt=None):
        return cls(IntVector.from_reader(reader), rlbwt)


class ByteLceTable(ThresholdLceTable):
    """One byte per entry; the top byte value is reserved as the overflow escape."""

    encoding = "byte"

    def __init__(self, vec: IntVector, rlbwt=None):
        super().__init__(rlbwt)
        self.vec = vec

    @classmethod
    def build(cls, raw, n, rlbwt=None):
        return cls(IntVector([min(v, BYTE_ESCAPE) for v, _ in raw.slots()], 8), rlbwt)

    def _get(self, slot):
        v = self.vec[slot]
        return None if v == BYTE_ESCAPE else v

    def _parts(self):
        return [self.vec]

    @classmethod
    def from_reader(cls, reader, rlbwt=None):
        return cls(IntVector.from_reader(reader), rlbwt)


class _MarkedLceTable(ThresholdLceTable):
    """A bitvector over all slots marks the stored ones; payload holds only those."""

    def __init__(self, marks: BitVector, payload, rlbwt=None):
        super().__init__(rlbwt)
        self.marks = marks
        self.payload = payload

    def _get(self, slot):
        if not self.marks[slot]:
            return None
        return self.payload[self.marks.rank1(slot)]

    def _parts(self):
        return [self.marks, self.payload]


class BvFullLceTable(_MarkedLceTable):
    encoding = "bv-full"

    @classmethod
    def build(cls, raw, n, rlbwt=None):
        slots = raw.slots()
        marks = BitVector([used for _, used in slots])
        return cls(marks, IntVector([v for v, used in slots if used], full_width(n)), rlbwt)

    @classmethod
    def from_reader(cls, reader, rlbwt=None):
        return cls(BitVector.from_reader(reader), IntVector.from_reader(reader), rlbwt)


class BvByteLceTable(_MarkedLceTable):
    encoding = "bv-byte"

    @classmethod
    def build(cls, raw, n, rlbwt=None):
        slots = raw.slots()
        keep = [used and v <= 0xFF for v, used in slots]
        payload = IntVector([v for (v, _), k in zip(slots, keep) if k], 8)
        return cls(BitVector(keep), payload, rlbwt)

    @classmethod
    def from_reader(cls, reader, rlbwt=None):
        return cls(BitVector.from_reader(reader), IntVector.from_reader(reader), rlbwt)


class DacLceTable(ThresholdLceTable):
    encoding = "dac"

    def __init__(self, dac: DAC, rlbwt=None):
        super().__init__(rlbwt)
        self.dac = dac

    @classmethod
    def build(cls, raw, n, rlbwt=None):
        return cls(DAC([v for v, _ in raw.slots()]), rlbwt)

    def _get(self, slot):
        return self.dac[slot]

    def _parts(self):
        return [self.dac]

    @classmethod
    def from_reader(cls, reader, rlbwt=None):
        return cls(DAC.from_reader(reader), rlbwt)


class BvDacLceTable(_MarkedLceTable):
    encoding = "bv-dac"

    @classmethod
    def build(cls, raw, n, rlbwt=None):
        slots = raw.slots()
        marks = BitVector([used for _, used in slots])
        return cls(marks, DAC([v for v, used in slots if used]), rlbwt)

    @classmethod
    def from_reader(cls, reader, rlbwt=None):
        return cls(BitVector.from_reader(reader), DAC.from_reader(reader), rlbwt)


LCE_TABLES = {
    cls.encoding: cls
    for cls in (FullLceTable, ByteLceTable, BvFullLceTable, BvByteLceTable, DacLceTable, BvDacLceTable)
}


def encode(raw: RawThresholdLce, encoding: str, n: int, rlbwt: RLBWT | None = None) -> ThresholdLceTable:
    try:
        cls = LCE_TABLES[encoding]
    except KeyError:
        raise ValueError(f"unknown encoding {encoding!r}; expected one of {ENCODINGS}") from None
    return cls.build(raw, n, rlbwt)


def decode(data: bytes, encoding: str, rlbwt: RLBWT | None = None) -> ThresholdLceTable:
    reader = Reader(data)
    table = LCE_TABLES[encoding].from_reader(reader, rlbwt)
    if reader.offset != len(data):
        raise ValueError("trailing bytes after threshold LCE table")
    return table


def lookup(table: ThresholdLceTable, x: int, side: str) -> int | None:
    return table.lookup(x, side)
