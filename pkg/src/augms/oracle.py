"""Brute-force reference implementations.

Nothing here reuses the index code: suffixes are sorted by direct comparison,
LCEs are scanned symbol by symbol, and matches are found by substring search.
Inputs are capped because everything is quadratic or worse.
"""
from __future__ import annotations

from dataclasses import dataclass

MAX_SORT_N = 20_000
MAX_THRESHOLD_N = 2_000


def _b(s) -> bytes:
    return s.encode("latin-1") if isinstance(s, str) else bytes(s)


def naive_suffix_array(text) -> list[int]:
    """1-based suffix array (no dummy slot) by sorting suffixes directly."""
    t = _b(text)
    assert len(t) <= MAX_SORT_N, "oracle input too large"
    return [i + 1 for i in sorted(range(len(t)), key=lambda i: t[i:])]


def oracle_lce(text, i: int, j: int) -> int:
    t = _b(text)
    n = len(t)
    k = 0
    while i + k <= n and j + k <= n and t[i + k - 1] == t[j + k - 1]:
        k += 1
    return k


def oracle_ms(text, pattern) -> tuple[list[int | None], list[int]]:
    """(pos, len) lists; the sentinel (last symbol of ``text``) never matches."""
    body = _b(text)[:-1]
    p = _b(pattern)
    m = len(p)
    pos: list[int | None] = []
    lens: list[int] = []
    for i in range(m):
        best, where = 0, None
        while i + best < m:
            hit = body.find(p[i:i + best + 1])
            if hit < 0:
                break
            best += 1
            where = hit + 1
        pos.append(where)
        lens.append(best)
    return pos, lens


def occurs_at(text, pattern, pos: int, i: int, length: int) -> bool:
    """True when ``pattern[i..i+length-1]`` (1-based i) equals ``text[pos..]``."""
    t, p = _b(text), _b(pattern)
    if pos < 1 or pos + length - 1 > len(t) - 1:
        return False
    return t[pos - 1:pos - 1 + length] == p[i - 1:i - 1 + length]


@dataclass
class ThresholdReport:
    ok: bool
    checked: int = 0
    run: int | None = None
    k: int | None = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _runs(bwt: bytes) -> list[tuple[int, int, int]]:
    out = []
    start = 1
    for k in range(2, len(bwt) + 2):
        if k > len(bwt) or bwt[k - 1] != bwt[start - 1]:
            out.append((bwt[start - 1], start, k - 1))
            start = k
    return out


def oracle_threshold_check(text, thresholds) -> ThresholdReport:
    """Check the threshold condition at every gap between same-symbol runs.

    ``thresholds`` maps a run ordinal (1-based, over runs of the BWT derived
    here from a naive suffix sort) to its threshold row. For rows k strictly
    between e1 and s2: k < t needs LCE(e1, k) >= LCE(k, s2), and k >= t needs
    LCE(e1, k) <= LCE(k, s2), LCE taken between the suffixes at those rows.
    """
    t = _b(text)
    assert len(t) <= MAX_THRESHOLD_N, "oracle input too large"
    sa = naive_suffix_array(t)
    bwt = bytes(t[s - 2] if s > 1 else t[-1] for s in sa)
    last_end: dict[int, int] = {}
    checked = 0
    for x, (c, s, e) in enumerate(_runs(bwt), start=1):
        if c in last_end:
            e1, s2 = last_end[c], s
            thr = thresholds[x]
            if not e1 < thr <= s2:
                return ThresholdReport(False, checked, x, None, f"threshold {thr} outside ({e1}, {s2}]")
            for k in range(e1 + 1, s2):
                up = oracle_lce(t, sa[e1 - 1], sa[k - 1])
                down = oracle_lce(t, sa[k - 1], sa[s2 - 1])
                checked += 1
                if (k < thr and up < down) or (k >= thr and up > down):
                    return ThresholdReport(False, checked, x, k,
                                           f"row {k}: LCE with e1={up}, with s2={down}, threshold {thr}")
        last_end[c] = e
    return ThresholdReport(True, checked)


def oracle_mems(text, pattern) -> set[tuple[int, int]]:
    """All (pattern index, length) whose substring occurs in the text and can
    be extended neither left nor right while still occurring."""
    body = _b(text)[:-1]
    p = _b(pattern)
    m = len(p)
    out = set()
    for i in range(m):
        for j in range(i + 1, m + 1):
            if p[i:j] not in body:
                break
            right_max = j == m or p[i:j + 1] not in body
            left_max = i == 0 or p[i - 1:j] not in body
            if right_max and left_max:
                out.add((i + 1, j - i))
    return out


def mem_occurrences(text, pattern, i: int, length: int) -> list[int]:
    body = _b(text)[:-1]
    sub = _b(pattern)[i - 1:i - 1 + length]
    out, k = [], body.find(sub)
    while k >= 0:
        out.append(k + 1)
        k = body.find(sub, k + 1)
    return out
