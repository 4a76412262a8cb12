"""Run-length BWT with rank/select, LF and SA samples at run boundaries.

Positions (BWT rows), run ordinals and text positions are 1-based. Internal
lists keep a dummy slot at index 0.
"""
from __future__ import annotations

from bisect import bisect_left, bisect_right

import numpy as np

from .suffix import SuffixBundle


def _symbol(c) -> int:
    if isinstance(c, int):
        return c
    if isinstance(c, str):
        c = c.encode("latin-1")
    if len(c) != 1:
        raise ValueError(f"expected a single symbol, got {c!r}")
    return c[0]


class RLBWT:
    """Run-length encoded BWT of a text, with per-run SA samples."""

    def __init__(self, heads: bytes, lengths: list[int], sa_start: list[int], sa_end: list[int]):
        r = len(heads)
        if not (len(lengths) == len(sa_start) == len(sa_end) == r) or r == 0:
            raise ValueError("run arrays must be non-empty and of equal length")
        self.r = r
        self.heads = [0] + list(heads)
        self.lengths = [0] + [int(v) for v in lengths]
        self.sa_start = [0] + [int(v) for v in sa_start]
        self.sa_end = [0] + [int(v) for v in sa_end]
        starts = [0] * (r + 2)
        pos = 1
        for x in range(1, r + 1):
            starts[x] = pos
            pos += self.lengths[x]
        starts[r + 1] = pos
        self.starts = starts
        self.n = pos - 1

        # per symbol: ordinals of its runs and cumulative occurrence counts
        # (cum[c][k] = occurrences of c in the first k runs of c)
        self.sym_runs: dict[int, list[int]] = {}
        self.sym_cum: dict[int, list[int]] = {}
        self.sym_rank = [0] * (r + 1)
        for x in range(1, r + 1):
            c = self.heads[x]
            runs = self.sym_runs.setdefault(c, [])
            cum = self.sym_cum.setdefault(c, [0])
            self.sym_rank[x] = len(runs)
            runs.append(x)
            cum.append(cum[-1] + self.lengths[x])
        self.alphabet = bytes(sorted(self.sym_runs))
        self.C = [0] * 257
        total = 0
        counts = [0] * 256
        for c, cum in self.sym_cum.items():
            counts[c] = cum[-1]
        for c in range(256):
            self.C[c] = total
            total += counts[c]
        self.C[256] = total

    @classmethod
    def from_bundle(cls, bundle: SuffixBundle) -> "RLBWT":
        bwt = np.frombuffer(bundle.bwt, dtype=np.uint8)
        n = len(bwt)
        brk = np.flatnonzero(bwt[1:] != bwt[:-1]) + 1
        starts0 = np.concatenate(([0], brk))
        ends0 = np.concatenate((brk - 1, [n - 1]))
        sa = bundle.sa
        return cls(
            heads=bwt[starts0].tobytes(),
            lengths=(ends0 - starts0 + 1).tolist(),
            sa_start=[sa[s + 1] for s in starts0.tolist()],
            sa_end=[sa[e + 1] for e in ends0.tolist()],
        )

    # -- run lookup ---------------------------------------------------------
    def run_of_position(self, j: int) -> int:
        if not 1 <= j <= self.n:
            raise IndexError(f"BWT position {j} out of range 1..{self.n}")
        return bisect_right(self.starts, j, 1, self.r + 1) - 1

    def run_start(self, x: int) -> int:
        return self.starts[x]

    def run_end(self, x: int) -> int:
        return self.starts[x + 1] - 1

    def __getitem__(self, j: int) -> int:
        return self.heads[self.run_of_position(j)]

    def bwt(self) -> bytes:
        return b"".join(bytes([self.heads[x]]) * self.lengths[x] for x in range(1, self.r + 1))

    # -- rank / select ------------------------------------------------------
    def count(self, c) -> int:
        cum = self.sym_cum.get(_symbol(c))
        return cum[-1] if cum else 0

    def rank(self, c, j: int) -> int:
        """Occurrences of ``c`` in ``BWT[1..j-1]``."""
        c = _symbol(c)
        if not 1 <= j <= self.n:
            raise IndexError(f"BWT position {j} out of range 1..{self.n}")
        runs = self.sym_runs.get(c)
        if runs is None:
            return 0
        x = bisect_right(self.starts, j, 1, self.r + 1) - 1
        if self.heads[x] == c:
            return self.sym_cum[c][self.sym_rank[x]] + (j - self.starts[x])
        return self.sym_cum[c][bisect_left(runs, x)]

    def select(self, c, i: int) -> int | None:
        """Position of the ``i``-th occurrence of ``c``, or None if there are fewer."""
        c = _symbol(c)
        if i < 1:
            raise ValueError("occurrence ordinal must be >= 1")
        cum = self.sym_cum.get(c)
        if cum is None or i > cum[-1]:
            return None
        k = bisect_right(cum, i - 1) - 1
        x = self.sym_runs[c][k]
        return self.starts[x] + (i - 1 - cum[k])

    def lf(self, j: int) -> int:
        x = self.run_of_position(j)
        c = self.heads[x]
        return self.C[c] + self.sym_cum[c][self.sym_rank[x]] + (j - self.starts[x]) + 1

    def sa_sample(self, x: int, side: str) -> int:
        if not 1 <= x <= self.r:
            raise IndexError(f"run ordinal {x} out of range 1..{self.r}")
        if side == "start":
            return self.sa_start[x]
        if side == "end":
            return self.sa_end[x]
        raise ValueError(f"side must be 'start' or 'end', got {side!r}")

    def is_first_run_of_symbol(self, x: int) -> bool:
        return self.sym_rank[x] == 0
