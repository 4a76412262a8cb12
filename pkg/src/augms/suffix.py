"""Suffix array, inverse suffix array, BWT and LCP construction.

All positions exposed here are 1-based: arrays carry a dummy slot at index 0
so that ``sa[k]`` is the text position of the k-th smallest suffix.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

SENTINEL = 0x00


class Text(bytes):
    """A byte string whose last symbol is its unique, strictly smallest sentinel."""

    def __new__(cls, data: bytes | str):
        if isinstance(data, str):
            data = data.encode("latin-1")
        data = bytes(data)
        if not data:
            raise ValueError("text is empty")
        sentinel = data[-1]
        body = data[:-1]
        if sentinel in body:
            raise ValueError("sentinel symbol occurs more than once")
        if body and min(body) <= sentinel:
            raise ValueError("sentinel must compare strictly smaller than every other symbol")
        return super().__new__(cls, data)

    @classmethod
    def from_sequence(cls, seq: bytes | str, sentinel: int = SENTINEL) -> "Text":
        """Append ``sentinel`` to a raw sequence."""
        if isinstance(seq, str):
            seq = seq.encode("latin-1")
        return cls(bytes(seq) + bytes([sentinel]))

    @property
    def n(self) -> int:
        return len(self)

    @property
    def sentinel(self) -> int:
        return self[-1]

    @property
    def alphabet(self) -> bytes:
        """Sorted distinct non-sentinel symbols."""
        return bytes(sorted(set(self[:-1])))


def suffix_array(codes: np.ndarray) -> np.ndarray:
    """0-based suffix array by prefix doubling over integer codes."""
    n = len(codes)
    _, rank = np.unique(codes, return_inverse=True)
    rank = rank.astype(np.int64)
    if n == 1:
        return np.zeros(1, dtype=np.int64)
    k = 1
    while True:
        second = np.zeros(n, dtype=np.int64)
        second[: n - k] = rank[k:] + 1
        key = rank * (n + 1) + second
        sa = np.argsort(key, kind="stable")
        sk = key[sa]
        new_rank = np.empty(n, dtype=np.int64)
        new_rank[sa] = np.concatenate(([0], np.cumsum(sk[1:] != sk[:-1])))
        rank = new_rank
        if rank[sa[-1]] == n - 1:
            return sa
        k *= 2


def kasai(text: bytes, sa: list[int], isa: list[int]) -> list[int]:
    """1-based LCP array: ``lcp[k]`` = lcp of suffixes ``sa[k-1]`` and ``sa[k]``."""
    n = len(text)
    lcp = [0] * (n + 1)
    h = 0
    for i in range(1, n + 1):
        k = isa[i]
        if k > 1:
            j = sa[k - 1]
            while i + h <= n and j + h <= n and text[i + h - 1] == text[j + h - 1]:
                h += 1
            lcp[k] = h
            if h:
                h -= 1
        else:
            h = 0
    return lcp


class RangeMinimum:
    """Range-minimum queries with a fixed tie-breaking side.

    Blocks of ``block`` values keep in-block prefix and suffix minima; a
    sparse table over block minima answers the middle part. Minima are stored
    as combined keys ``value * (n + 1) + tiebreak`` so that a plain ``min``
    resolves ties toward the requested side.
    """

    def __init__(self, values, tie: str = "left", block: int = 32):
        if tie not in ("left", "right"):
            raise ValueError("tie must be 'left' or 'right'")
        vals = np.asarray(values, dtype=np.int64)
        n = len(vals)
        if n == 0:
            raise ValueError("empty input")
        self.n = n
        self.tie = tie
        self.block = block
        self._base = n + 1
        idx = np.arange(n, dtype=np.int64)
        self._keys = vals * self._base + (idx if tie == "left" else n - idx)

        nb = (n + block - 1) // block
        padded = np.full(nb * block, np.iinfo(np.int64).max, dtype=np.int64)
        padded[:n] = self._keys
        grid = padded.reshape(nb, block)
        self._prefix = np.minimum.accumulate(grid, axis=1).reshape(-1)
        self._suffix = np.minimum.accumulate(grid[:, ::-1], axis=1)[:, ::-1].reshape(-1)
        table = [grid.min(axis=1)]
        span = 1
        while 2 * span <= nb:
            prev = table[-1]
            table.append(np.minimum(prev[:-span], prev[span:]))
            span *= 2
        self._table = [t.tolist() for t in table]

    def _decode(self, key: int) -> tuple[int, int]:
        value, tb = divmod(int(key), self._base)
        pos = tb if self.tie == "left" else self.n - tb
        return pos, value

    def query(self, lo: int, hi: int) -> tuple[int, int]:
        """(position, value) of the minimum of ``values[lo..hi]`` (0-based, inclusive)."""
        if not 0 <= lo <= hi < self.n:
            raise IndexError(f"invalid range [{lo}, {hi}] for length {self.n}")
        b = self.block
        bl, bh = lo // b, hi // b
        if bl == bh:
            return self._decode(self._keys[lo:hi + 1].min())
        best = min(self._suffix[lo], self._prefix[hi])
        if bh - bl > 1:
            a, z = bl + 1, bh - 1
            level = (z - a + 1).bit_length() - 1
            row = self._table[level]
            best = min(best, row[a], row[z - (1 << level) + 1])
        return self._decode(best)


@dataclass(eq=False)
class SuffixBundle:
    """Construction-time suffix structures of a text (1-based, index 0 unused)."""

    text: Text
    sa: list[int]
    isa: list[int]
    bwt: bytes
    lcp: list[int]
    _rmq: dict = field(default_factory=dict, repr=False)

    @property
    def n(self) -> int:
        return len(self.text)

    def rmq(self, tie: str = "left") -> RangeMinimum:
        if tie not in self._rmq:
            self._rmq[tie] = RangeMinimum(self.lcp[1:], tie=tie)
        return self._rmq[tie]

    def lcp_range_min(self, lo: int, hi: int, tie: str = "left") -> tuple[int, int]:
        """Position and value of the minimum of ``lcp[lo..hi]`` (1-based, inclusive).

        Ties resolve to the leftmost position unless ``tie="right"``.
        """
        if not 1 <= lo <= hi <= self.n:
            raise IndexError(f"invalid lcp range [{lo}, {hi}] for n={self.n}")
        pos, value = self.rmq(tie).query(lo - 1, hi - 1)
        return pos + 1, value


def build_suffix_bundle(text: Text | bytes | str) -> SuffixBundle:
    if not isinstance(text, Text):
        text = Text(text)
    n = len(text)
    sa0 = suffix_array(np.frombuffer(text, dtype=np.uint8))
    sa = [0] + (sa0 + 1).tolist()
    isa = [0] * (n + 1)
    for k in range(1, n + 1):
        isa[sa[k]] = k
    prev = sa0 - 1
    prev[prev < 0] = n - 1
    bwt = np.frombuffer(text, dtype=np.uint8)[prev].tobytes()
    lcp = kasai(text, sa, isa)
    return SuffixBundle(text=text, sa=sa, isa=isa, bwt=bwt, lcp=lcp)


def lcp_range_min(bundle: SuffixBundle, lo: int, hi: int) -> tuple[int, int]:
    return bundle.lcp_range_min(lo, hi)
