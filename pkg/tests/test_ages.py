import pytest
from hypothesis import given, settings, strategies as st

from chaingraphs import ages, graphs, words
from chaingraphs.canon import canonical_form
from chaingraphs.embed import embeds, is_embedding
from chaingraphs.errors import PreconditionError, UsageError
from chaingraphs.graphs import graph_from_word
from chaingraphs.verify import linear_forest_bounds

S = words.parse_stream


def counts(spec, k, window):
    return ages.age_members(S(spec), k, window).counts()


def test_path_age_counts():
    # linear forests on 1..4 vertices: 1, 2, 3, 5
    assert counts("periodic:1", 4, 12) == {1: 1, 2: 2, 3: 3, 4: 5}
    assert len(ages.age_members(S("periodic:1"), 2, 12)) == 3


def test_fibonacci_has_triangle_and_independent_triple():
    cat = ages.age_members(S("fibonacci"), 3, 30)
    assert graphs.complete(3) in cat
    assert graphs.Graph.empty(3) in cat


def test_catalog_witnesses_are_induced_subgraphs():
    s = S("thue-morse")
    cat = ages.age_members(s, 5, 80)
    host = ages.window_graph(s, 80)
    for key, entry in cat.classes.items():
        assert canonical_form(graphs.induced(host, entry.witness)) == key


@settings(max_examples=40, deadline=None)
@given(st.text(alphabet="01", min_size=1, max_size=11), st.integers(1, 5))
def test_type_enumeration_matches_subset_scan(u, k):
    k = min(k, len(u) + 1)
    fast = ages.age_members(S("finite:" + u), k, len(u))
    slow = ages.age_members_bruteforce(graph_from_word(u), k)
    assert sorted(fast.classes) == sorted(slow.classes)


@settings(max_examples=60, deadline=None)
@given(st.text(alphabet="01", min_size=1, max_size=9), st.text(alphabet="01", min_size=1, max_size=4))
def test_word_graph_embedding_matches_generic_search(u, v):
    h = graph_from_word(v)
    f = ages.word_graph_embedding(h, u)
    assert (f is None) == (embeds(h, graph_from_word(u)) is None)
    if f is not None:
        assert is_embedding(h, graph_from_word(u), f)


def test_contains_examples():
    assert ages.age_contains(S("periodic:1"), graphs.path(5), 10).status == "yes"
    assert ages.age_contains(S("periodic:1"), graphs.complete(3), 20).status == "no_within_window"
    assert ages.age_contains(S("fibonacci"), graph_from_word("101"), 40).status == "yes"


def test_path_age_bounds_match_oracle():
    rep = ages.age_bounds(S("periodic:1"), 7, 30)
    got = {canonical_form(g) for g in rep.bounds}
    assert got == linear_forest_bounds(7)
    expected = [graphs.complete(3), graphs.star(3)] + [graphs.cycle(n) for n in range(4, 8)]
    assert got == {canonical_form(g) for g in expected}
    assert rep.complete_up_to == 7


def test_periodic_bounds_stabilise():
    a = ages.age_bounds(S("periodic:01"), 4, 40).by_order()
    b = ages.age_bounds(S("periodic:01"), 5, 40).by_order()
    assert a == {k: v for k, v in b.items() if k <= 4}
    assert b.get(5, 0) == 1 and sum(b.values()) == 3


def test_bounds_are_verified_bounds():
    s = S("fibonacci")
    rep = ages.age_bounds(s, 6, 300)
    assert rep.bounds
    for g in rep.bounds:
        assert ages.is_bound(g, s, 300).status == "pass"


def test_unsaturated_catalog_reports_unknown():
    rep = ages.age_bounds(S("finite:0110"), 4)
    assert rep.to_dict()["complete_up_to"] in ("unknown", 4)


def test_saturation():
    assert ages.saturation_check(S("periodic:01"), 4, 20, 40)
    assert ages.saturation_check(S("fibonacci"), 4, 30, 60)
    assert not ages.saturation_check(S("finite:0101"), 4, 3, 4)
    with pytest.raises(UsageError):
        ages.saturation_check(S("fibonacci"), 4, 60, 30)


def test_transfer_preconditions():
    with pytest.raises(PreconditionError):
        ages.bound_from_word_bound(S("periodic:01"), "00", 40)
    with pytest.raises(PreconditionError):
        ages.bound_from_word_bound(S("fibonacci"), "0110", 400)


def test_rigidity_contract_cases():
    assert ages.embedding_rigidity_check(S("periodic:1"), "1" * 10, 15).status == "vacuous"
    assert ages.embedding_rigidity_check(S("periodic:01"), "0101", 30).status == "precondition"


@pytest.mark.parametrize("spec,window", [("periodic:011", 24), ("periodic:0011", 28)])
def test_rigidity_for_every_length_ten_factor(spec, window):
    s = S(spec)
    for w in words.factors(s.prefix(window), 10):
        assert ages.embedding_rigidity_check(s, w, window).status == "pass"


def test_prefix_necessity_on_fibonacci():
    s = S("fibonacci")
    for w in words.factors(s.prefix(400), 9):
        assert ages.prefix_embedding_necessity_check(s, w, 400).status == "pass"


def test_jonsson_examples():
    rep = ages.jonsson_levels(S("fibonacci"), 6, 1000)
    assert rep.level_sizes == [2, 3, 4, 5, 6, 7]
    rep = ages.jonsson_levels(S("periodic:01"), 4, 100)
    assert rep.level_sizes == [2, 2, 2, 2]
    assert rep.witnesses == {n: n + 1 for n in range(1, 5)}
    rep = ages.jonsson_levels(S("periodic:1"), 3, 100)
    assert rep.level_sizes == [1, 1, 1]
    assert rep.witnesses == {1: 1, 2: 2, 3: 3}


def test_factor_inclusion():
    s1, s2 = S("thue-morse"), S("fibonacci")
    v = ages.factor_inclusion_check(s1, s2, 4, 200)
    assert v.status == "pass"
    g = graph_from_word(v.witness)
    assert graphs.is_prime(g)
    assert ages.age_contains(s1, g, 200).status == "yes"
    assert ages.age_contains(s2, g, 200).status == "no_within_window"
    assert ages.factor_inclusion_check(S("periodic:01"), s2, 4, 200).status == "holds"
    assert ages.factor_inclusion_check(S("periodic:01"), S("periodic:10"), 4, 200).status == "holds"


def test_type_graph_round_trip():
    u = words.fibonacci_prefix(40)
    for tau in sorted(ages.realisable_types(u, 3)[3])[:20]:
        pos = ages.find_positions(u, tau)
        assert ages.type_string(u, pos) == tau
        assert canonical_form(graphs.induced(graph_from_word(u), pos)) == canonical_form(ages.type_graph(tau))
