from hypothesis import given

from augms.rlbwt import RLBWT
from augms.suffix import build_suffix_bundle

from strategies import texts


def runs_of(text):
    rl = RLBWT.from_bundle(build_suffix_bundle(text))
    return rl, [(chr(rl.heads[x]), rl.run_start(x), rl.run_end(x)) for x in range(1, rl.r + 1)]


def test_run_examples():
    rl, runs = runs_of("ACACAC$")
    assert rl.r == 3 and runs == [("C", 1, 3), ("$", 4, 4), ("A", 5, 7)]
    assert runs_of("abracadabra$")[0].r == 8
    assert runs_of("A$")[0].r == 2


def test_abracadabra_queries(abra_builder):
    rl = abra_builder.rlbwt
    assert rl.rank("a", 7) == 1
    assert rl.rank("a", 8) == 2
    assert all(rl.rank(c, 1) == 0 for c in "abcdr$")
    assert rl.rank("z", 5) == 0
    assert rl.select("a", 2) == 7
    assert rl.select("d", 2) is None
    assert rl.select("$", 1) == 4
    assert rl.run_of_position(8) == 7
    assert rl.run_of_position(1) == 1
    assert rl.run_of_position(12) == 8
    assert (rl.lf(1), rl.lf(7), rl.lf(11)) == (2, 3, 7)
    assert rl.sa_sample(7, "start") == 9
    assert rl.sa_sample(7, "end") == 7
    single = rl.run_of_position(3)          # 'd'
    assert rl.sa_sample(single, "start") == rl.sa_sample(single, "end")


@given(texts())
def test_against_plain_bwt(text):
    b = build_suffix_bundle(text)
    rl = RLBWT.from_bundle(b)
    bwt = b.bwt
    n = len(bwt)
    assert rl.bwt() == bwt
    assert rl.r == 1 + sum(bwt[k] != bwt[k - 1] for k in range(1, n))
    for j in range(1, n + 1):
        c = bwt[j - 1]
        assert rl[j] == c
        assert rl.rank(c, j) == bwt[:j - 1].count(c)
        assert b.sa[rl.lf(j)] == (b.sa[j] - 2) % n + 1
    for c in set(bwt):
        occ = [k + 1 for k, v in enumerate(bwt) if v == c]
        assert [rl.select(c, i) for i in range(1, len(occ) + 2)] == occ + [None]
    for x in range(1, rl.r + 1):
        assert rl.sa_sample(x, "start") == b.sa[rl.run_start(x)]
        assert rl.sa_sample(x, "end") == b.sa[rl.run_end(x)]
