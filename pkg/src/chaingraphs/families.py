"""Finite members of the unavoidable prime families.

Vertices a_1..a_n get labels 0..n-1, b_1..b_n get n..2n-1, and any extra
vertex (centre, apex) gets 2n.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import UsageError
from .graphs import Graph, is_prime
from .verdict import Verdict

FAMILIES = (
    "half_graph", "half_split", "half_split_I", "half_split_star",
    "thin_spider", "thick_spider", "star_subdivision", "line_K2n",
)
SWEEP_BUDGET = 8


def _a(i: int) -> int:
    return i - 1


def _b(n: int, j: int) -> int:
    return n + j - 1


def vertex_names(name: str, n: int) -> dict[int, str]:
    names = {_a(i): f"a{i}" for i in range(1, n + 1)}
    names.update({_b(n, j): f"b{j}" for j in range(1, n + 1)})
    if name in ("half_split_I", "half_split_star"):
        names[2 * n] = "x"
    elif name == "star_subdivision":
        names[2 * n] = "c"
    return names


def _half(n: int, b_clique: bool) -> list[tuple[int, int]]:
    edges = [(_a(i), _b(n, j)) for i in range(1, n + 1) for j in range(i, n + 1)]
    if b_clique:
        edges += [(_b(n, i), _b(n, j)) for i, j in combinations(range(1, n + 1), 2)]
    return edges


def _spider(n: int, thin: bool) -> list[tuple[int, int]]:
    edges = [(_b(n, i), _b(n, j)) for i, j in combinations(range(1, n + 1), 2)]
    edges += [(_a(i), _b(n, j)) for i in range(1, n + 1) for j in range(1, n + 1) if (i == j) == thin]
    return edges


def generate(name: str, n: int) -> Graph:
    if n < 1:
        raise UsageError("family size must be >= 1")
    labels = list(range(2 * n))
    if name == "half_graph":
        edges = _half(n, False)
    elif name == "half_split":
        edges = _half(n, True)
    elif name == "half_split_I":
        labels.append(2 * n)
        edges = _half(n, True) + [(2 * n, _a(i)) for i in range(1, n + 1)]
    elif name == "half_split_star":
        labels.append(2 * n)
        edges = _half(n, True) + [(2 * n, _a(1))]
    elif name == "thin_spider":
        edges = _spider(n, True)
    elif name == "thick_spider":
        edges = _spider(n, False)
    elif name == "star_subdivision":
        # K_{1,n} with every edge subdivided: centre - a_i - b_i
        labels.append(2 * n)
        edges = [(2 * n, _a(i)) for i in range(1, n + 1)] + [(_a(i), _b(n, i)) for i in range(1, n + 1)]
    elif name == "line_K2n":
        # edges x1y_i -> a_i, x2y_i -> b_i; adjacent when they share an endpoint
        edges = [(_a(i), _a(j)) for i, j in combinations(range(1, n + 1), 2)]
        edges += [(_b(n, i), _b(n, j)) for i, j in combinations(range(1, n + 1), 2)]
        edges += [(_a(i), _b(n, i)) for i in range(1, n + 1)]
    else:
        raise UsageError(f"unknown family {name!r}; expected one of {', '.join(FAMILIES)}")
    return Graph.from_edges(labels, edges)


@dataclass(frozen=True)
class SweepRow:
    family: str
    n: int
    order: int
    prime: bool


def family_primality_sweep(n_max: int = SWEEP_BUDGET, families=FAMILIES, n_min: int = 3) -> list[SweepRow]:
    rows = []
    for name in families:
        for n in range(n_min, n_max + 1):
            g = generate(name, n)
            rows.append(SweepRow(name, n, g.order, is_prime(g)))
    return rows


def sweep_verdict(rows: list[SweepRow]) -> Verdict:
    bad = [r for r in rows if not r.prime]
    if bad:
        return Verdict("fail", (bad[0].family, bad[0].n), f"{len(bad)} non-prime members")
    return Verdict("pass")
