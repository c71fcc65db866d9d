from itertools import combinations, permutations

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from chaingraphs import graphs, realizers
from chaingraphs.errors import UsageError
from chaingraphs.graphs import Graph, graph_from_word
from chaingraphs.realizers import Realizer

words_st = st.text(alphabet="01", min_size=1, max_size=9)


def brute_orientable(g):
    """Try every orientation of every edge; tiny graphs only."""
    edges = g.edges()
    for mask in range(1 << len(edges)):
        arcs = {(u, v) if mask >> k & 1 else (v, u) for k, (u, v) in enumerate(edges)}
        if all((a, d) in arcs for a, b in arcs for c, d in arcs if b == c):
            return True
    return False


def test_small_realizers():
    assert realizers.build_realizer("1") == Realizer((-1, 0), (-1, 0))
    assert realizers.build_realizer("0") == Realizer((-1, 0), (0, -1))
    r = realizers.build_realizer("11")
    assert realizers.verify_realizer(graph_from_word("11"), r)
    assert r.is_extremal(1)


def test_verify_examples():
    p4 = graph_from_word("101")
    assert realizers.verify_realizer(p4, realizers.build_realizer("101"))
    r = realizers.build_realizer("101")
    # reversing one order realizes the incomparability relation instead
    assert not realizers.verify_realizer(p4, Realizer(r.L, tuple(reversed(r.M))))
    for n in range(1, 5):
        same = Realizer(tuple(range(n)), tuple(range(n)))
        assert realizers.verify_realizer(graphs.complete(n), same)
        if n > 1:
            assert not realizers.verify_realizer(graphs.path(n) if n > 2 else Graph.empty(2), same)


def test_permutation_examples():
    assert realizers.permutation_from_realizer(realizers.build_realizer("1"), graph_from_word("1")) == (2, 1)
    assert realizers.permutation_from_realizer(realizers.build_realizer("0"), graph_from_word("0")) == (1, 2)
    sigma = realizers.permutation_from_realizer(realizers.build_realizer("101"), graph_from_word("101"))
    assert sorted(sigma) == [1, 2, 3, 4]
    assert nx.is_isomorphic(nx.Graph(realizers.inversion_graph(sigma).edges()),
                            nx.Graph(graph_from_word("101").edges()))
    with pytest.raises(UsageError):
        realizers.permutation_from_realizer(Realizer((-1, 0), (-1, 0)), graph_from_word("0"))


@settings(max_examples=150)
@given(words_st)
def test_realizer_properties(w):
    g = graph_from_word(w)
    r = realizers.build_realizer(w)
    assert realizers.verify_realizer(g, r)
    assert realizers.intersection_order(r).is_valid()
    assert r.is_extremal(len(w) - 1)
    sigma = realizers.permutation_from_realizer(r, g)
    inv = realizers.inversion_graph(sigma, r.L)
    assert {frozenset(e) for e in inv.edges()} == {frozenset(e) for e in g.edges()}
    if len(w) >= 3:
        assert realizers.interval_confinement_check(w, r).status == "pass"


def test_interval_examples():
    for w in ("10101", "111111"):
        assert realizers.interval_confinement_check(w, realizers.build_realizer(w)).status == "pass"
    r = realizers.build_realizer("10101")
    # vertex 4 dropped between -1 and 0 in L
    bad = realizers.interval_confinement_check("10101", Realizer((-1, 4, 0, 1, 2, 3), r.M))
    assert bad.status == "fail" and bad.witness == (0, 4)


def test_comparability_examples():
    assert realizers.is_comparability(graphs.cycle(5)) is None
    assert realizers.is_comparability(graphs.cycle(6)) is not None
    assert realizers.is_comparability(graphs.path(4)) is not None
    assert not realizers.is_permutation_graph(graphs.cycle(5))
    assert not realizers.is_permutation_graph(graphs.cycle(6))
    for n in range(1, 11):
        w = ("10" * n)[:n]
        assert realizers.is_permutation_graph(graph_from_word(w))


@st.composite
def small_graphs(draw):
    n = draw(st.integers(1, 6))
    pairs = list(combinations(range(n), 2))
    return Graph.from_edges(range(n), draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else [])


@settings(max_examples=150)
@given(small_graphs())
def test_comparability_matches_brute_force(g):
    p = realizers.is_comparability(g)
    assert (p is not None) == brute_orientable(g)
    if p is not None:
        assert p.is_valid()
        assert set(map(tuple, map(sorted, p.less))) == set(g.edges())


def test_permutation_graphs_are_inversion_graphs():
    # every inversion graph on 5 points is recognised, and nothing else is
    seen = {}
    for sigma in permutations(range(1, 6)):
        g = realizers.inversion_graph(sigma)
        seen[tuple(g.edges())] = g
    for g in seen.values():
        assert realizers.is_permutation_graph(g)
    assert not realizers.is_permutation_graph(graphs.cycle(5))
