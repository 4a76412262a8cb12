"""Longest-common-extension backends over text positions (1-based)."""
from __future__ import annotations

from .succinct import IntVector, Reader
from .suffix import RangeMinimum, SuffixBundle, Text

LCE_BACKENDS = ("naive", "lcp-rmq")


class NaiveLCE:
    """Stores the text and compares suffixes directly, in galloping slices."""

    kind = "naive"

    def __init__(self, text: bytes):
        self.text = bytes(text)
        self.n = len(self.text)

    @classmethod
    def from_bundle(cls, bundle: SuffixBundle) -> "NaiveLCE":
        return cls(bundle.text)

    def _check(self, i: int, j: int) -> None:
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"text positions ({i}, {j}) out of range 1..{self.n}")

    def lce(self, i: int, j: int, stats=None) -> int:
        self._check(i, j)
        if stats is not None:
            stats.lce_calls += 1
        if i == j:
            return self.n - i + 1
        t = self.text
        a, b = i - 1, j - 1
        limit = self.n - max(a, b)
        done = 0
        step = 16
        while done < limit:
            hi = min(done + step, limit)
            if t[a + done:a + hi] != t[b + done:b + hi]:
                # answer lies in [done, hi)
                lo = done
                while lo + 1 < hi:
                    mid = (lo + hi) // 2
                    if t[a + lo:a + mid] == t[b + lo:b + mid]:
                        lo = mid
                    else:
                        hi = mid
                return lo
            done = hi
            step *= 2
        return limit

    def to_bytes(self) -> bytes:
        return self.text

    @classmethod
    def from_bytes(cls, data: bytes) -> "NaiveLCE":
        Text(data)
        return cls(data)

    @property
    def nbytes(self) -> int:
        return self.n


class LcpRmqLCE:
    """LCE as a range minimum over the LCP array between the two suffix ranks."""

    kind = "lcp-rmq"

    def __init__(self, isa: list[int], lcp: list[int]):
        # both 1-based with a dummy slot at 0
        self.isa = isa
        self.lcp = lcp
        self.n = len(isa) - 1
        self._rmq = RangeMinimum(lcp[1:])

    @classmethod
    def from_bundle(cls, bundle: SuffixBundle) -> "LcpRmqLCE":
        return cls(bundle.isa, bundle.lcp)

    def lce(self, i: int, j: int, stats=None) -> int:
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"text positions ({i}, {j}) out of range 1..{self.n}")
        if stats is not None:
            stats.lce_calls += 1
        if i == j:
            return self.n - i + 1
        a, b = self.isa[i], self.isa[j]
        if a > b:
            a, b = b, a
        # lcp[a+1..b], shifted to the 0-based RMQ
        return self._rmq.query(a, b - 1)[1]

    def to_bytes(self) -> bytes:
        return IntVector(self.isa[1:]).to_bytes() + IntVector(self.lcp[1:]).to_bytes()

    @classmethod
    def from_bytes(cls, data: bytes) -> "LcpRmqLCE":
        reader = Reader(data)
        isa = IntVector.from_reader(reader).values
        lcp = IntVector.from_reader(reader).values
        if reader.offset != len(data) or len(isa) != len(lcp):
            raise ValueError("malformed lcp-rmq section")
        return cls([0] + isa, [0] + lcp)

    @property
    def nbytes(self) -> int:
        total = 0
        for arr in (self.isa, self.lcp):
            width = max(1, max(arr).bit_length())
            total += 9 + 8 * ((self.n * width + 63) // 64)
        return total


def make_backend(kind: str, bundle: SuffixBundle):
    if kind == "naive":
        return NaiveLCE.from_bundle(bundle)
    if kind == "lcp-rmq":
        return LcpRmqLCE.from_bundle(bundle)
    raise ValueError(f"unknown LCE backend {kind!r}; expected one of {LCE_BACKENDS}")
