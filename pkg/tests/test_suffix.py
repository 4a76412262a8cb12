import pytest
from hypothesis import given, strategies as st

from augms.oracle import naive_suffix_array, oracle_lce
from augms.suffix import RangeMinimum, Text, build_suffix_bundle

from strategies import texts


def test_acacac():
    b = build_suffix_bundle("ACACAC$")
    assert b.sa[1:] == [7, 5, 3, 1, 6, 4, 2]
    assert b.bwt == b"CCC$AAA"


def test_abracadabra(abra_builder):
    b = abra_builder.bundle
    assert b.sa[1:] == [12, 11, 8, 1, 4, 6, 9, 2, 5, 7, 10, 3]
    assert b.bwt == b"ard$rcaaaabb"
    assert b.lcp[1:] == [0, 0, 1, 4, 1, 1, 0, 3, 0, 0, 0, 2]


def test_two_symbols():
    b = build_suffix_bundle("A$")
    assert b.sa[1:] == [2, 1]
    assert b.bwt == b"A$"
    assert b.lcp[1:] == [0, 0]


def test_lcp_range_min_examples(abra_builder):
    b = abra_builder.bundle
    assert b.lcp_range_min(2, 7) == (2, 0)
    assert b.lcp_range_min(3, 5) == (3, 1)
    assert b.lcp_range_min(3, 5, tie="right") == (5, 1)
    for k in range(1, 13):
        assert b.lcp_range_min(k, k) == (k, b.lcp[k])


def test_lcp_range_min_rejects_bad_range(abra_builder):
    with pytest.raises(IndexError):
        abra_builder.bundle.lcp_range_min(5, 4)


@pytest.mark.parametrize("bad", ["", "ab$c", "a$b$", "ab"])
def test_text_validation(bad):
    # "ab" fails because 'b' is not smaller than 'a'
    with pytest.raises(ValueError):
        Text(bad)


@given(texts())
def test_bundle_matches_naive_sort(text):
    b = build_suffix_bundle(text)
    sa = naive_suffix_array(text)
    assert b.sa[1:] == sa
    for k in range(1, len(text) + 1):
        assert b.isa[sa[k - 1]] == k
        assert b.bwt[k - 1] == text[sa[k - 1] - 2]
        if k > 1:
            assert b.lcp[k] == oracle_lce(text, sa[k - 2], sa[k - 1])
    assert b.lcp[1] == 0


@given(st.lists(st.integers(0, 6), min_size=1, max_size=200), st.data())
def test_range_minimum(values, data):
    lo = data.draw(st.integers(0, len(values) - 1))
    hi = data.draw(st.integers(lo, len(values) - 1))
    want = min(values[lo:hi + 1])
    window = values[lo:hi + 1]
    left = RangeMinimum(values, "left", block=4).query(lo, hi)
    right = RangeMinimum(values, "right", block=4).query(lo, hi)
    assert left == (lo + window.index(want), want)
    assert right == (hi - window[::-1].index(want), want)
