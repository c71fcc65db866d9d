from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from chaingraphs import graphs
from chaingraphs.errors import BudgetExceeded, UsageError
from chaingraphs.graphs import Graph, graph_from_word

words_st = st.text(alphabet="01", min_size=1, max_size=9)


def rule_edges(w):
    """Edge rule applied pair by pair, independent of the library."""
    out = set()
    for j in range(len(w)):
        for i in range(-1, j):
            if (w[j] == "1") == (j == i + 1):
                out.add((i, j))
    return out


def brute_modules(g):
    n = g.order
    out = []
    for k in range(2, n):
        for s in combinations(g.labels, k):
            if graphs.is_module(g, s):
                out.append(s)
    return sorted(out, key=lambda m: (len(m), m))


def test_word_graph_examples():
    assert graph_from_word("1").edges() == [(-1, 0)]
    assert graph_from_word("11").edges() == [(-1, 0), (0, 1)]
    assert graph_from_word("00").edges() == [(-1, 1)]
    assert graph_from_word("101").edges() == [(-1, 0), (-1, 1), (1, 2)]


@given(words_st)
def test_word_graph_matches_rule(w):
    g = graph_from_word(w)
    assert g.labels == tuple(range(-1, len(w)))
    assert set(g.edges()) == rule_edges(w)


def test_modules_examples():
    assert graphs.is_module(graph_from_word("11"), [-1, 1])
    assert not graphs.is_module(graph_from_word("11"), [0, 1])
    assert graphs.nontrivial_modules(graph_from_word("11")) == [(-1, 1)]
    assert graphs.nontrivial_modules(graph_from_word("10")) == [(0, 1)]
    assert graphs.nontrivial_modules(graph_from_word("101")) == []
    assert graphs.is_prime(graph_from_word("101"))
    assert not graphs.is_prime(graph_from_word("00"))
    assert graphs.is_prime(graphs.complete(1))


@given(words_st)
def test_singletons_are_modules(w):
    g = graph_from_word(w)
    assert all(graphs.is_module(g, [v]) for v in g.labels)
    assert graphs.is_module(g, g.labels)


@settings(max_examples=60)
@given(words_st)
def test_module_scan_matches_brute_force(w):
    g = graph_from_word(w)
    assert graphs.nontrivial_modules(g) == brute_modules(g)


@given(words_st)
def test_modules_of_complement(w):
    g = graph_from_word(w)
    assert graphs.nontrivial_modules(graphs.complement(g)) == graphs.nontrivial_modules(g)


def test_module_budget():
    with pytest.raises(BudgetExceeded):
        graphs.nontrivial_modules(graph_from_word("0" * 25))


def test_induced_and_delete():
    p4 = graphs.path(4)
    assert graphs.induced(p4, [0, 1, 3]).edges() == [(0, 1)]
    assert graphs.induced(p4, [0, 1, 2]).edges() == [(0, 1), (1, 2)]
    assert graphs.delete_vertex(p4, 0).labels == (1, 2, 3)
    with pytest.raises(UsageError):
        p4.index(9)


def test_standard_graphs():
    assert graphs.cycle(5).size == 5
    assert graphs.complete(4).size == 6
    assert graphs.star(3).degree(0) == 3
    u = graphs.disjoint_union(graphs.path(2), graphs.path(3))
    assert u.order == 5 and u.size == 3


@given(words_st)
def test_serialisation_round_trip(w):
    g = graph_from_word(w)
    assert graphs.from_text(graphs.to_text(g)) == g
    assert graphs.from_json(graphs.to_json(g)) == g


def test_bad_graph_input():
    with pytest.raises(UsageError):
        Graph.from_edges([0, 1], [(0, 0)])
    with pytest.raises(UsageError):
        graphs.from_text("n 2\nlabels 0 1\ne 0 5\n")
