import pytest
from hypothesis import given, settings

from augms.index import VARIANTS, IndexBuilder
from augms.lce import LCE_BACKENDS
from augms.matcher import Matcher, QueryStats, compute_ms, extract_mems
from augms.oracle import mem_occurrences, occurs_at, oracle_mems, oracle_ms

from strategies import text_and_pattern


def test_abra(abra):
    stats = QueryStats()
    ms = compute_ms(abra, "abra", stats=stats)
    assert ms.lengths == [4, 3, 2, 1] and ms.pos == [8, 9, 10, 11]
    assert ms.format() == "8:4 9:3 10:2 11:1"
    assert stats.jumps == 0 and stats.direct_extensions == 3


@pytest.mark.parametrize("variant", VARIANTS)
def test_adra(abra_builder, variant):
    index = abra_builder.build(variant)
    trace, stats = [], QueryStats()
    ms = compute_ms(index, "adra", "baseline", stats, trace=trace)
    assert list(ms) == [(6, 2), (7, 1), (10, 2), (11, 1)]
    assert stats.jumps == 1 and stats.lce_calls == 1
    (i, _, _, run, side, forced, prev_len, new_len, skipped), = trace
    assert (i, run, side, forced, prev_len, new_len, skipped) == (2, None, "e", True, 2, 1, False)


def test_absent_symbols(abra):
    ms = compute_ms(abra, "zzzz")
    assert ms.lengths == [0] * 4 and ms.format() == "-:0 -:0 -:0 -:0"
    assert compute_ms(abra, "azza").lengths == [1, 0, 0, 1]


def test_pattern_errors(abra):
    with pytest.raises(ValueError):
        compute_ms(abra, "")
    with pytest.raises(ValueError):
        compute_ms(abra, "ab$")


def test_mode_errors(abra_builder):
    with pytest.raises(ValueError):
        compute_ms(abra_builder.build("phoni"), "abra", "augmented")
    with pytest.raises(ValueError):
        compute_ms(abra_builder.build("full"), "abra", "fast")


def test_default_mode(abra_builder):
    assert Matcher(abra_builder.build("phoni")).mode == "baseline"
    assert Matcher(abra_builder.build("dac")).mode == "augmented"


def test_mems_examples(abra):
    assert extract_mems(compute_ms(abra, "abra")) == [(1, 8, 4)]
    assert [i for i, _, _ in extract_mems(compute_ms(abra, "adra"))] == [1, 3]
    assert extract_mems(compute_ms(abra, "abra"), min_len=5) == []
    assert extract_mems(compute_ms(abra, "zzzz")) == []
    with pytest.raises(ValueError):
        extract_mems(compute_ms(abra, "abra"), 0)


@settings(max_examples=150)
@given(text_and_pattern())
def test_all_combinations_match_oracle(case):
    text, pattern = case
    b = IndexBuilder(text)
    _, want = oracle_ms(text, pattern)
    seen = set()
    for variant in VARIANTS:
        for backend in LCE_BACKENDS:
            for storage in ("array", "sigma-bv"):
                index = b.build(variant, backend, storage)
                modes = ("baseline",) if variant == "phoni" else ("baseline", "augmented")
                for mode in modes:
                    stats = QueryStats()
                    ms = compute_ms(index, pattern, mode, stats, verify=True)
                    assert ms.lengths == want
                    for i, (pos, ln) in enumerate(ms, start=1):
                        if ln:
                            assert occurs_at(text, pattern, pos, i, ln)
                    assert stats.jumps == stats.lce_calls + stats.lce_skips
                    assert stats.direct_extensions + stats.jumps <= len(pattern)
                    seen.add(ms.format())
    assert len(seen) == 1


@settings(max_examples=150)
@given(text_and_pattern())
def test_mems_match_oracle(case):
    text, pattern = case
    ms = compute_ms(IndexBuilder(text).build("full"), pattern)
    mems = extract_mems(ms)
    assert {(i, ln) for i, _, ln in mems} == oracle_mems(text, pattern)
    for i, pos, ln in mems:
        assert pos in mem_occurrences(text, pattern, i, ln)


def test_trace_records_skips():
    text = (b"CCGTAATGCCTTTCCCTAACAGAGTTTTTCGTACTCGTGACCATAATGCCTTTCCCTAACAGAGTTTTTCGAACTCGTG"
            b"TCCGCAATGCCTTTCCTTAACAGAGTTTTTCGAACTCGAGTCCGTAATGCCTTTCGCGAACAGAGTTTTTCGAATTCGTCT\0")
    b = IndexBuilder(text)
    pattern = b"GATTTTTTCGTACTCGTGACTATAATGGCA"
    trace, stats = [], QueryStats()
    ms = compute_ms(b.build("full"), pattern, stats=stats, trace=trace, verify=True)
    assert stats.lce_skips > 0
    assert len(trace) == stats.jumps
    assert sum(ev[8] for ev in trace) == stats.lce_skips
    for ev in trace:
        if ev[5]:
            assert ev[3] is None and not ev[8]
    base = QueryStats()
    assert compute_ms(b.build("phoni"), pattern, stats=base).format() == ms.format()
    assert base.lce_calls == stats.lce_calls + stats.lce_skips
