import pytest
from hypothesis import given, settings, strategies as st

from chaingraphs import structure, words
from chaingraphs.errors import UsageError
from chaingraphs.graphs import graph_from_word, is_prime, nontrivial_modules

words_st = st.text(alphabet="01", min_size=1, max_size=11)


def test_classification_examples():
    found = structure.classify_modules_gw("10010")
    assert [(m.shape, m.witness) for m in found] == [("pair_i0_in", (-1, 4))]
    found = structure.classify_modules_gw("10")
    assert [(m.shape, m.witness) for m in found] == [("whole_I", (0, 1))]
    assert structure.classify_modules_gw("101") == []


def test_exceptional_length_three_words():
    # 100 and 011 carry the extra module {0, 2} next to the whole of I
    assert [m.witness for m in structure.classify_modules_gw("100")] == [(0, 2), (0, 1, 2)]
    assert [m.witness for m in structure.classify_modules_gw("011")] == [(0, 2), (0, 1, 2)]
    assert len(structure.classify_modules_gw("110")) == 2
    assert len(structure.classify_modules_gw("001")) == 2


def test_predicate_examples():
    assert structure.prime_gw_predicate("101")
    assert not structure.prime_gw_predicate("011")
    assert structure.prime_gw_predicate("0")
    with pytest.raises(UsageError):
        structure.classify_modules_gw("")


@settings(max_examples=150)
@given(words_st)
def test_classification_equals_module_scan(w):
    got = sorted(m.witness for m in structure.classify_modules_gw(w))
    assert got == sorted(nontrivial_modules(graph_from_word(w)))
    assert structure.witnesses_are_modules(w)


@given(words_st)
def test_predicate_matches_primality(w):
    assert structure.prime_gw_predicate(w) == is_prime(graph_from_word(w))


@given(words_st)
def test_complement_word_preserves_module_shapes(w):
    a = [(m.shape, m.witness) for m in structure.classify_modules_gw(w)]
    b = [(m.shape, m.witness) for m in structure.classify_modules_gw(words.complement_word(w))]
    assert a == b


def test_length_threshold_on_fibonacci_factors():
    s = words.parse_stream("fibonacci")
    stats = words.RunStats(2, 1)
    for n in range(7, 13):
        for w in words.factors(s.prefix(2000), n):
            assert structure.check_length_threshold(stats, w).status == "pass"


def test_length_threshold_on_periodic_0011():
    s = words.parse_stream("periodic:0011")
    stats = words.RunStats(2, 2)
    for n in range(1, 13):
        for w in words.factors(s.prefix(100), n):
            assert structure.check_length_threshold(stats, w).ok


def test_length_threshold_precondition():
    v = structure.check_length_threshold(words.RunStats(1, 1), "1000001")
    assert v.status == "precondition"


def test_deletions():
    assert structure.deletion_primality("101") == {-1: False, 0: False, 1: False, 2: False}
    with pytest.raises(UsageError):
        structure.deletion_primality("011")
    with pytest.raises(UsageError):
        structure.deletion_primality("10")


@settings(max_examples=80)
@given(st.text(alphabet="01", min_size=3, max_size=10))
def test_deletion_confinement(w):
    if not is_prime(graph_from_word(w)):
        return
    assert structure.deletion_confinement(w).status == "pass"
