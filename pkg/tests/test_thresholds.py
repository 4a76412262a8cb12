import pytest
from hypothesis import given

from augms.index import IndexBuilder
from augms.oracle import oracle_lce, oracle_threshold_check
from augms.thresholds import (
    ENCODINGS,
    RawThresholdLce,
    SigmaThresholds,
    UndefinedThresholdError,
    decode,
    encode,
    threshold_lookup,
)

from gatta import neighborhood
from strategies import texts


def threshold_map(builder):
    thr = builder.thresholds
    return {x: thr[x] for x in range(1, builder.rlbwt.r + 1) if thr.is_defined(x)}


def test_abracadabra_thresholds(abra_builder):
    thr, raw = abra_builder.thresholds, abra_builder.raw_lce
    # 'a' runs 1 and 7, 'r' runs 2 and 5
    assert thr[7] == 2 and threshold_lookup(thr, 7) == 2
    assert not raw.used_e[7] and raw.used_s[7] and raw.s[7] == 0
    assert thr[5] == 3 and threshold_lookup(thr, 5) == 3
    assert not raw.used_e[5] and raw.used_s[5] and raw.s[5] == 1
    with pytest.raises(UndefinedThresholdError):
        thr[1]


def test_gatta_neighborhood_values():
    nb = neighborhood()
    raw = nb.builder.raw_lce
    assert nb.s2 - nb.e1 == 7 and nb.t - nb.e1 == 4
    assert raw.e[nb.run] == 3 and raw.s[nb.run] == 5
    for enc in ENCODINGS:
        table = nb.builder.build(enc).lce_table
        assert table.lookup(nb.run, "e") == 3
        assert table.lookup(nb.run, "s") == 5


def test_oracle_accepts_built_thresholds(abra_builder):
    assert oracle_threshold_check(b"abracadabra$", threshold_map(abra_builder))


def test_abracadabra_gaps_are_all_ties(abra_builder):
    # every row in both gaps is equally close to both runs, so any split passes
    for t7 in range(2, 8):
        for t5 in range(3, 6):
            assert oracle_threshold_check(b"abracadabra$", {7: t7, 5: t5})


@pytest.mark.parametrize("shift", [1, -2])
def test_oracle_locates_perturbation(shift):
    # the row just above the threshold is a tie, hence -2 rather than -1
    from gatta import TEXT
    nb = neighborhood()
    moved = threshold_map(nb.builder)
    moved[nb.run] += shift
    report = oracle_threshold_check(TEXT, moved)
    assert not report and report.run == nb.run
    assert report.k == (nb.t if shift == 1 else nb.t - 2)


def test_oracle_rejects_threshold_outside_gap(abra_builder):
    bad = threshold_map(abra_builder)
    bad[5] = 10
    assert not oracle_threshold_check(b"abracadabra$", bad)


def test_one_run_per_symbol_is_vacuous():
    b = IndexBuilder(b"ACGT\0")
    assert threshold_map(b) == {}
    report = oracle_threshold_check(b"ACGT\0", {})
    assert report and report.checked == 0


@given(texts())
def test_thresholds_and_raw_lce_against_oracle(text):
    b = IndexBuilder(text)
    assert oracle_threshold_check(text, threshold_map(b))
    rl, sa, raw = b.rlbwt, b.bundle.sa, b.raw_lce
    for x, t in threshold_map(b).items():
        e1 = rl.run_end(rl.sym_runs[rl.heads[x]][rl.sym_rank[x] - 1])
        s2 = rl.run_start(x)
        assert e1 < t <= s2
        assert raw.used_e[x] == (t > e1 + 1)
        assert raw.used_s[x] == (t < s2)
        if raw.used_e[x]:
            assert raw.e[x] == oracle_lce(text, sa[e1], sa[t - 1])
        if raw.used_s[x]:
            assert raw.s[x] == oracle_lce(text, sa[t], sa[s2])


@given(texts())
def test_sigma_storage_matches_array(text):
    b = IndexBuilder(text)
    sigma = SigmaThresholds.from_array(b.thresholds, b.rlbwt)
    loaded = SigmaThresholds.from_bytes(sigma.to_bytes(), b.bundle.n, b.rlbwt)
    for x in range(1, b.rlbwt.r + 1):
        assert sigma.is_defined(x) == b.thresholds.is_defined(x)
        if sigma.is_defined(x):
            assert sigma[x] == loaded[x] == b.thresholds[x]


@given(texts())
def test_encodings_never_lie(text):
    b = IndexBuilder(text)
    raw = b.raw_lce
    for enc in ENCODINGS:
        table = encode(raw, enc, b.bundle.n, b.rlbwt)
        back = decode(table.to_bytes(), enc, b.rlbwt)
        assert len(table.to_bytes()) == table.nbytes
        for x, _ in threshold_map(b).items():
            for side, values, used in (("e", raw.e, raw.used_e), ("s", raw.s, raw.used_s)):
                got = table.lookup(x, side)
                assert back.lookup(x, side) == got
                if used[x] and got is not None:
                    assert got == values[x]
                if used[x] and enc in ("full", "bv-full", "dac", "bv-dac"):
                    assert got == values[x]


def synthetic_raw(values):
    """Two runs: every value on side e of run 2, side s unused."""
    return RawThresholdLce([0, 0, values], [0, 0, 0], [False, False, True], [False, False, False])


@pytest.mark.parametrize("value", [0, 1, 17, 254])
def test_byte_in_range_is_exact(value):
    for enc in ("byte", "bv-byte"):
        assert encode(synthetic_raw(value), enc, 1000).lookup(2, "e") == value


def test_byte_escape_value():
    assert encode(synthetic_raw(255), "byte", 1000).lookup(2, "e") is None
    assert encode(synthetic_raw(255), "bv-byte", 1000).lookup(2, "e") == 255


@pytest.mark.parametrize("value", [256, 300, 70000])
def test_byte_overflow_is_unknown(value):
    for enc in ("byte", "bv-byte"):
        assert encode(synthetic_raw(value), enc, 100000).lookup(2, "e") is None
    for enc in ("full", "bv-full", "dac", "bv-dac"):
        assert encode(synthetic_raw(value), enc, 100000).lookup(2, "e") == value


def test_bv_unused_entry_has_no_payload():
    raw = synthetic_raw(9)
    for enc in ("bv-full", "bv-byte", "bv-dac"):
        table = encode(raw, enc, 1000)
        assert table.lookup(2, "s") is None
        assert table.lookup(1, "e") is None
        assert sum(table.marks[i] for i in range(len(table.marks))) == 1
        assert len(table.payload) == 1


def test_unknown_encoding():
    with pytest.raises(ValueError):
        encode(synthetic_raw(1), "nibble", 10)


def test_bad_side(abra):
    with pytest.raises(ValueError):
        abra.lce_table.lookup(7, "x")
