import pytest
from hypothesis import given
from hypothesis import strategies as st

from cdindex.cd import cd_index_of_flag, cd_words
from cdindex.paths import (LabeledPath, check_admissible, count_weighted, descents,
                           enumerate_admissible, enumerate_weighted, format_path, is_admissible,
                           parse_path, path_mdeg, support)
from cdindex.poset import build_boolean, flag_f_vector
from oracles import brute_admissible

words = st.integers(0, 7).flatmap(lambda n: st.sampled_from(cd_words(n)))


def test_membership_examples():
    assert is_admissible((0, 1, 0, 2, 2, 3, 6), "cddc")
    assert check_admissible((0, 0, 2, 0, 4), "dd") == "bound on descent"
    assert is_admissible(tuple(range(6)), "ccccc")


@pytest.mark.parametrize("f,word,reason", [
    ((0, 1, 3), "cc", "range"),
    ((1, 1, 2), "cc", "range"),
    ((0, 0, 2), "cc", "strict ascent"),
    ((0, 1, 3), "d", "range"),
    ((0, 1, 2, 3), "dc", "weak descent"),
])
def test_rejections(f, word, reason):
    assert check_admissible(f, word) == reason


def test_length_mismatch():
    with pytest.raises(ValueError):
        is_admissible((0, 1), "cc")


def test_enumerate_dd():
    assert enumerate_admissible("dd") == [(0, 0, 1, 0, 4), (0, 0, 1, 1, 4), (0, 0, 2, 1, 4), (0, 0, 2, 2, 4)]


def test_enumerate_small():
    assert enumerate_admissible("cccc") == [(0, 1, 2, 3, 4)]
    assert len(enumerate_admissible("dcc")) == 3
    assert enumerate_admissible("") == [(0,)]


@pytest.mark.parametrize("n", range(0, 8))
def test_enumerate_matches_brute_force(n):
    for w in cd_words(n):
        got = enumerate_admissible(w)
        assert got == sorted(brute_admissible(w))
        assert len(set(got)) == len(got)
        assert all(is_admissible(f, w) for f in got)


@pytest.mark.parametrize("n", range(0, 9))
def test_counts_are_boolean_cd_index(n):
    psi = cd_index_of_flag(flag_f_vector(build_boolean(n + 1)))
    for w in cd_words(n):
        assert len(enumerate_admissible(w)) == psi[w]


def test_weighted_examples():
    h = (1, 3, 3, 1)
    dc = enumerate_weighted("dc", h)
    assert len(dc) == 4
    assert [b for b in dc if b.path == (0, 0, 1, 3)] == [LabeledPath((0, 0, 1, 3), k) for k in (1, 2, 3)]
    assert [b for b in dc if b.path == (0, 0, 2, 3)] == [LabeledPath((0, 0, 2, 3), 1)]
    assert count_weighted("cd", h) == 6
    assert count_weighted("ccc", h) == 1


@pytest.mark.parametrize("n", range(1, 7))
def test_weighted_all_ones(n):
    for w in cd_words(n):
        assert count_weighted(w, (1,) * (n + 1)) == len(enumerate_admissible(w))


def test_weighted_rejects_bad_h():
    with pytest.raises(ValueError):
        enumerate_weighted("cd", (1, -1, 3, 1))
    with pytest.raises(ValueError):
        enumerate_weighted("cd", (1, 1, 1))


def test_identity_has_single_label():
    for n in range(1, 6):
        h = (1,) + (7,) * (n - 1) + (1,)
        assert enumerate_weighted("c" * n, h) == [LabeledPath(tuple(range(n + 1)), 1)]


def test_support():
    assert support((0, 1, 2, 3)) == frozenset()
    assert support((0, 0, 2, 3, 4)) == {1}
    assert support((0, 1, 0, 2, 2, 3, 6)) == {2, 3, 4, 5}


@given(words)
def test_support_excludes_ends_and_mdeg_recovered(w):
    for f in enumerate_admissible(w):
        s = support(f)
        assert 0 not in s and len(f) - 1 not in s
        assert path_mdeg(f) == tuple(1 if i in descents(f) else 0 for i in range(1, len(f)))
        assert is_admissible(f, w)


def test_text_format():
    assert format_path((0, 1, 0, 2, 2, 3, 6)) == "(0,1,0,2,2,3,6)"
    assert parse_path("(0,1,0,2,2,3,6)") == (0, 1, 0, 2, 2, 3, 6)
    assert parse_path("(0,0,1,3)#2") == LabeledPath((0, 0, 1, 3), 2)
    assert str(LabeledPath((0, 0, 1, 3), 2)) == "(0,0,1,3)#2"
    with pytest.raises(ValueError):
        parse_path("0,1")
