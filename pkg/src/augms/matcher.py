"""One-pass matching statistics over the index, with optional LCE skipping.

Processing runs right to left. Before position i is handled, BWT row ``q``
holds the suffix starting at ``MS[i+1].pos``, so ``BWT[q]`` is the symbol
preceding the current match. Matching that symbol extends the match by one;
otherwise we jump to the closest same-symbol row above (run end ``e1``) or
below (run start ``s2``) as the threshold dictates, and the new length is
``min(LCE(sample, MS[i+1].pos), MS[i+1].len) + 1``. In augmented mode a stored
threshold LCE can prove that minimum equals ``MS[i+1].len`` without querying.
"""
from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field

from .index import AugmentedIndex

MODES = ("baseline", "augmented")


@dataclass
class QueryStats:
    direct_extensions: int = 0
    jumps: int = 0
    lce_calls: int = 0
    lce_skips: int = 0

    def __iadd__(self, other: "QueryStats") -> "QueryStats":
        self.direct_extensions += other.direct_extensions
        self.jumps += other.jumps
        self.lce_calls += other.lce_calls
        self.lce_skips += other.lce_skips
        return self

    def as_dict(self) -> dict[str, int]:
        return {
            "direct_extensions": self.direct_extensions,
            "jumps": self.jumps,
            "lce_calls": self.lce_calls,
            "lce_skips": self.lce_skips,
        }


@dataclass
class MatchingStatistics:
    """``pos[k]``/``lengths[k]`` describe pattern position k + 1; pos is None for no match."""

    pos: list[int | None] = field(default_factory=list)
    lengths: list[int] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.lengths)

    def __iter__(self):
        return iter(zip(self.pos, self.lengths))

    def format(self) -> str:
        return " ".join(f"{'-' if p is None else p}:{ln}" for p, ln in self)


class SkipSoundnessError(AssertionError):
    pass


def _as_pattern(pattern) -> bytes:
    if isinstance(pattern, str):
        pattern = pattern.encode("latin-1")
    return bytes(pattern)


class Matcher:
    """Right-to-left matching-statistics stepper bound to one index.

    The state between steps is ``(q, pos, length)``: ``pos`` is the start of
    the current match (None when ``length`` is 0) and ``q`` the BWT row of the
    suffix starting at ``pos``.
    """

    def __init__(self, index: AugmentedIndex, mode: str | None = None, verify: bool = False):
        if mode is None:
            mode = "baseline" if index.lce_table is None else "augmented"
        if mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
        if mode == "augmented" and index.lce_table is None:
            raise ValueError("augmented mode needs an index with threshold LCEs")
        self.index = index
        self.mode = mode
        self.verify = verify
        self._augmented = mode == "augmented"
        rl = index.rlbwt
        self._rl = rl
        self._thresholds = index.thresholds
        self._table = index.lce_table
        self._lce = index.lce.lce

    def step(self, state, c: int, stats: QueryStats, trace: list | None = None, i: int = 0):
        """Extend the match described by ``state`` by symbol ``c`` on the left."""
        q, prev_pos, prev_len = state
        rl = self._rl
        runs = rl.sym_runs.get(c)
        if runs is None:
            return 0, None, 0
        C = rl.C
        if prev_len == 0:
            # (re)start at the first occurrence of c, which begins a run
            return C[c] + 1, rl.sa_start[runs[0]] - 1, 1
        starts = rl.starts
        x = bisect_right(starts, q, 1, rl.r + 1) - 1
        cum = rl.sym_cum[c]
        if rl.heads[x] == c:
            stats.direct_extensions += 1
            return C[c] + cum[rl.sym_rank[x]] + (q - starts[x]) + 1, prev_pos - 1, prev_len + 1

        stats.jumps += 1
        k = bisect_left(runs, x)          # runs of c strictly before row q
        rank_c = cum[k]
        forced = k == 0 or k == len(runs)
        if k == 0:
            up = False
        elif k == len(runs):
            up = True
        else:
            up = q < self._thresholds[runs[k]]
        if up:
            target_run = runs[k - 1]
            sample = rl.sa_end[target_run]
            target_row = starts[target_run + 1] - 1
            q_next = C[c] + rank_c
        else:
            target_run = runs[k]
            sample = rl.sa_start[target_run]
            target_row = starts[target_run]
            q_next = C[c] + rank_c + 1

        skipped = False
        new_len = None
        if self._augmented and not forced:
            known = self._table.lookup(runs[k], "e" if up else "s")
            if known is not None and prev_len <= known:
                new_len = prev_len + 1
                skipped = True
                stats.lce_skips += 1
                if self.verify:
                    expect = min(self._lce(sample, prev_pos), prev_len) + 1
                    if expect != new_len:
                        raise SkipSoundnessError(
                            f"skip at pattern position {i} gave {new_len}, LCE gives {expect}")
        if new_len is None:
            new_len = min(self._lce(sample, prev_pos, stats), prev_len) + 1
        if trace is not None:
            trace.append((i, q, target_row, None if forced else runs[k],
                          "e" if up else "s", forced, prev_len, new_len, skipped))
        return q_next, sample - 1, new_len

    def run(self, pattern, stats: QueryStats | None = None, trace: list | None = None) -> MatchingStatistics:
        P = _as_pattern(pattern)
        m = len(P)
        if m == 0:
            raise ValueError("pattern is empty")
        if self.index.sentinel in P:
            raise ValueError("pattern contains the sentinel symbol")
        if stats is None:
            stats = QueryStats()
        pos: list[int | None] = [None] * m
        lens = [0] * m
        state = (0, None, 0)
        step = self.step
        for i in range(m - 1, -1, -1):
            state = step(state, P[i], stats, trace, i + 1)
            pos[i], lens[i] = state[1], state[2]
        return MatchingStatistics(pos, lens)


def compute_ms(index: AugmentedIndex, pattern, mode: str | None = None,
               stats: QueryStats | None = None, verify: bool = False,
               trace: list | None = None) -> MatchingStatistics:
    """Matching statistics of ``pattern`` against the indexed text.

    ``mode`` defaults to "augmented" when the index stores threshold LCEs and
    "baseline" otherwise. With ``verify=True`` every skipped LCE query is
    recomputed (uncounted) and checked. ``trace``, when given, receives one
    tuple ``(i, q, target_row, run, side, forced, prev_len, new_len, skipped)``
    per jump; ``run`` is None for forced jumps.
    """
    return Matcher(index, mode, verify).run(pattern, stats, trace)


def extract_mems(ms: MatchingStatistics, min_len: int = 1) -> list[tuple[int, int, int]]:
    """(pattern index, text position, length) of each MEM with length >= ``min_len``.

    A MEM starts at i when the match at i is not the right-truncation of the
    match at i - 1, i.e. ``len[i-1] <= len[i]``.
    """
    if min_len < 1:
        raise ValueError("min_len must be >= 1")
    out = []
    lens = ms.lengths
    for k, (p, ln) in enumerate(ms):
        if ln >= min_len and (k == 0 or lens[k - 1] <= ln):
            out.append((k + 1, p, ln))
    return out
