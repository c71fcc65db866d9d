"""Module classification and primality of word graphs G_w.

Vertices of G_w are written in chain coordinates: i_0 = -1 and i_k = k - 1,
so I = {0, ..., n-1}, i_1 = 0 and i_n = n - 1 for a word of length n.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import UsageError
from .graphs import delete_vertex, graph_from_word, is_module, is_prime, nontrivial_modules
from .verdict import Verdict
from .words import RunStats, check_word, run_stats

SHAPES = ("whole_I", "i0_plus_tail", "pair_i0_in", "pair_i1_in")


@dataclass(frozen=True)
class ModuleClassification:
    shape: str
    witness: tuple[int, ...]
    word_pattern: str

    def __str__(self) -> str:
        return f"{self.shape} {self.word_pattern} {' '.join(map(str, self.witness))}"


def _shape_sets(n: int) -> dict[str, tuple[int, ...]]:
    # the cardinality-n shapes come first so that for n = 2 they win over
    # the coinciding pair shapes
    return {
        "whole_I": tuple(range(n)),
        "i0_plus_tail": (-1,) + tuple(range(1, n)),
        "pair_i0_in": (-1, n - 1),
        "pair_i1_in": (0, n - 1),
    }


def _patterns(n: int) -> list[tuple[str, str, str]]:
    """(shape, pattern name, word) for every word pattern with a module, n >= 3."""
    out = [
        ("pair_i0_in", "10^{n-3}10", "1" + "0" * (n - 3) + "10"),
        ("pair_i0_in", "01^{n-3}01", "0" + "1" * (n - 3) + "01"),
        ("whole_I", "10^{n-1}", "1" + "0" * (n - 1)),
        ("whole_I", "01^{n-1}", "0" + "1" * (n - 1)),
        ("i0_plus_tail", "001^{n-2}", "00" + "1" * (n - 2)),
        ("i0_plus_tail", "110^{n-2}", "11" + "0" * (n - 2)),
    ]
    if n == 3:
        out += [("pair_i1_in", "100", "100"), ("pair_i1_in", "011", "011")]
    else:
        out += [
            ("pair_i1_in", "110^{n-4}10", "11" + "0" * (n - 4) + "10"),
            ("pair_i1_in", "001^{n-4}01", "00" + "1" * (n - 4) + "01"),
        ]
    return out


def _sort(found: list[ModuleClassification]) -> list[ModuleClassification]:
    return sorted(found, key=lambda m: (len(m.witness), m.witness, m.shape))


def classify_modules_gw(w: str) -> list[ModuleClassification]:
    """Every nontrivial module of G_w with the word pattern that produces it."""
    check_word(w)
    n = len(w)
    if n < 1:
        raise UsageError("classification needs |w| >= 1")
    sets = _shape_sets(n)
    if n <= 2:
        found = []
        for module in nontrivial_modules(graph_from_word(w)):
            shape = next(s for s, members in sets.items() if members == module)
            found.append(ModuleClassification(shape, module, "brute-force"))
        return _sort(found)
    found = [
        ModuleClassification(shape, sets[shape], name)
        for shape, name, word in _patterns(n)
        if word == w
    ]
    return _sort(found)


def prime_gw_predicate(w: str) -> bool:
    return not classify_modules_gw(w) if w else True


def check_length_threshold(stats: RunStats, w: str) -> Verdict:
    """If |w| > l + 4 for the run statistics of the ambient word set, G_w must be prime."""
    own = run_stats(w)
    if own.max_zero_run > stats.max_zero_run or own.max_one_run > stats.max_one_run:
        return Verdict(
            "precondition", w,
            f"w has runs ({own.max_zero_run}, {own.max_one_run}) exceeding the stated "
            f"({stats.max_zero_run}, {stats.max_one_run})",
        )
    if len(w) <= stats.l_value + 4:
        return Verdict("vacuous", None, f"|w| = {len(w)} <= l + 4 = {stats.l_value + 4}")
    if is_prime(graph_from_word(w)):
        return Verdict("pass")
    return Verdict("fail", w, "G_w is not prime")


def deletion_primality(w: str) -> dict[int, bool]:
    """For each vertex x of a prime G_w, whether G_w minus x is still prime."""
    check_word(w)
    if len(w) < 3:
        raise UsageError("deletion analysis needs |w| >= 3")
    g = graph_from_word(w)
    if not is_prime(g):
        raise UsageError(f"G_{w} is not prime")
    return {x: is_prime(delete_vertex(g, x)) for x in g.labels}


def deletion_confinement(w: str) -> Verdict:
    """Primality-preserving deletions may only remove -1, 0 or |w| - 1."""
    allowed = {-1, 0, len(w) - 1}
    table = deletion_primality(w)
    stray = [x for x, keeps in table.items() if keeps and x not in allowed]
    if stray:
        return Verdict("fail", stray[0], "deletion outside {i_0, i_1, i_n} keeps G_w prime",
                       data={"deletions": table})
    return Verdict("pass", data={"deletions": table})


def witnesses_are_modules(w: str) -> bool:
    g = graph_from_word(w)
    return all(is_module(g, m.witness) for m in classify_modules_gw(w))
