"""Finite simple graphs with stable integer labels, the word graph G_w,
and brute-force module analysis.

Adjacency is stored as one Python int per vertex (bit ``j`` of row ``i`` set
iff internal vertices ``i`` and ``j`` are adjacent).  Labels are arbitrary
distinct integers; word graphs use ``-1, 0, ..., n-1``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable

import numpy as np

from .errors import BudgetExceeded, UsageError
from .words import check_word

MODULE_BUDGET = 20


@dataclass(frozen=True)
class Graph:
    labels: tuple[int, ...]
    rows: tuple[int, ...]

    def __post_init__(self):
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise UsageError("graph labels must be pairwise distinct")
        if len(self.rows) != n:
            raise UsageError("one adjacency row per vertex required")
        for i, r in enumerate(self.rows):
            if r >> n or (r >> i) & 1:
                raise UsageError("adjacency must be irreflexive and within range")
            for j in _bits(r):
                if not (self.rows[j] >> i) & 1:
                    raise UsageError("adjacency must be symmetric")

    # -- construction ------------------------------------------------------
    @classmethod
    def from_edges(cls, labels: Iterable[int], edges: Iterable[tuple[int, int]]) -> "Graph":
        labels = tuple(labels)
        pos = {lab: i for i, lab in enumerate(labels)}
        rows = [0] * len(labels)
        for u, v in edges:
            try:
                i, j = pos[u], pos[v]
            except KeyError as exc:
                raise UsageError(f"edge endpoint {exc.args[0]} is not a vertex") from None
            if i == j:
                raise UsageError("loops are not allowed")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls(labels, tuple(rows))

    @classmethod
    def empty(cls, n: int = 0) -> "Graph":
        return cls(tuple(range(n)), (0,) * n)

    # -- queries -----------------------------------------------------------
    @property
    def order(self) -> int:
        return len(self.labels)

    def index(self, label: int) -> int:
        try:
            return self._positions()[label]
        except KeyError:
            raise UsageError(f"unknown vertex label {label}") from None

    def _positions(self) -> dict[int, int]:
        return _positions(self.labels)

    def adjacent(self, u: int, v: int) -> bool:
        return bool((self.rows[self.index(u)] >> self.index(v)) & 1)

    def neighbors(self, u: int) -> list[int]:
        return [self.labels[j] for j in _bits(self.rows[self.index(u)])]

    def degree(self, u: int) -> int:
        return bin(self.rows[self.index(u)]).count("1")

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for i, r in enumerate(self.rows):
            for j in _bits(r):
                if i < j:
                    a, b = self.labels[i], self.labels[j]
                    out.append((a, b) if a < b else (b, a))
        return sorted(out)

    @property
    def size(self) -> int:
        return sum(bin(r).count("1") for r in self.rows) // 2

    def relabel(self, mapping: dict[int, int]) -> "Graph":
        return Graph(tuple(mapping[lab] for lab in self.labels), self.rows)

    def normalized(self) -> "Graph":
        """Same graph with labels 0..n-1 in current vertex order."""
        return Graph(tuple(range(self.order)), self.rows)

    def __repr__(self) -> str:
        return f"Graph(labels={list(self.labels)}, edges={self.edges()})"


@lru_cache(maxsize=4096)
def _positions(labels: tuple[int, ...]) -> dict[int, int]:
    return {lab: i for i, lab in enumerate(labels)}


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


# --------------------------------------------------------------------------
# standard graphs

def path(n: int) -> Graph:
    return Graph.from_edges(range(n), [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(range(n), [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(range(n), combinations(range(n), 2))


def star(n: int) -> Graph:
    """K_{1,n} with centre 0."""
    return Graph.from_edges(range(n + 1), [(0, i) for i in range(1, n + 1)])


def disjoint_union(*graphs: Graph) -> Graph:
    labels, edges, offset = [], [], 0
    for g in graphs:
        labels.extend(range(offset, offset + g.order))
        for i, r in enumerate(g.rows):
            edges.extend((offset + i, offset + j) for j in _bits(r) if i < j)
        offset += g.order
    return Graph.from_edges(labels, edges)


# --------------------------------------------------------------------------
# word graphs and basic operations

def graph_from_word(w: str) -> Graph:
    """G_w on {-1, 0, ..., |w|-1}: for i < j, {i, j} is an edge iff
    (w_j = 1 and j = i + 1) or (w_j = 0 and j != i + 1)."""
    check_word(w)
    n = len(w) + 1
    rows = [0] * n
    # internal index k <-> label k - 1
    for jj in range(1, n):
        letter = w[jj - 1]
        if letter == "1":
            nbrs = 1 << (jj - 1)
        else:
            nbrs = ((1 << jj) - 1) & ~(1 << (jj - 1))
        rows[jj] |= nbrs
        for ii in _bits(nbrs):
            rows[ii] |= 1 << jj
    return Graph(tuple(range(-1, n - 1)), tuple(rows))


def complement(g: Graph) -> Graph:
    full = (1 << g.order) - 1
    return Graph(g.labels, tuple(full & ~r & ~(1 << i) for i, r in enumerate(g.rows)))


def induced(g: Graph, vertices: Iterable[int]) -> Graph:
    """Induced subgraph on ``vertices`` (labels), kept in the parent's vertex order."""
    wanted = set(vertices)
    idx = sorted(g.index(v) for v in wanted)
    return _induced_by_index(g, idx)


def _induced_by_index(g: Graph, idx: list[int]) -> Graph:
    rows = []
    for i in idx:
        r = g.rows[i]
        rows.append(sum(1 << k for k, j in enumerate(idx) if (r >> j) & 1))
    return Graph(tuple(g.labels[i] for i in idx), tuple(rows))


def delete_vertex(g: Graph, v: int) -> Graph:
    return induced(g, [u for u in g.labels if u != v])


# --------------------------------------------------------------------------
# modules

def is_module(g: Graph, vertices: Iterable[int]) -> bool:
    """True iff no vertex outside the set distinguishes two of its members."""
    mask = 0
    for v in vertices:
        mask |= 1 << g.index(v)
    for i, r in enumerate(g.rows):
        if (mask >> i) & 1:
            continue
        hit = r & mask
        if hit and hit != mask:
            return False
    return True


_CHUNK_BITS = 16


def nontrivial_modules(g: Graph, budget: int = MODULE_BUDGET) -> list[tuple[int, ...]]:
    """Every module S with 2 <= |S| < |V|, by exhaustive scan of all subsets.

    Sorted by size, then lexicographically by (sorted) labels.
    """
    n = g.order
    if n > budget:
        raise BudgetExceeded(f"module scan over {n} vertices exceeds budget {budget}")
    if n < 3:
        return []
    adj = np.zeros((n, n), dtype=np.int32)
    for i, r in enumerate(g.rows):
        for j in _bits(r):
            adj[i, j] = 1
    shifts = np.arange(n, dtype=np.int64)
    chunk = 1 << min(n, _CHUNK_BITS)
    found = []
    for start in range(0, 1 << n, chunk):
        codes = np.arange(start, start + chunk, dtype=np.int64)
        sub = ((codes[:, None] >> shifts) & 1).astype(np.int32)
        sizes = sub.sum(axis=1)
        counts = sub @ adj  # neighbours inside S, for every vertex
        bad = (sub == 0) & (counts != 0) & (counts != sizes[:, None])
        ok = ~bad.any(axis=1) & (sizes >= 2) & (sizes < n)
        for code in codes[ok].tolist():
            found.append(tuple(sorted(g.labels[i] for i in _bits(code))))
    return sorted(found, key=lambda m: (len(m), m))


def is_prime(g: Graph, budget: int = MODULE_BUDGET) -> bool:
    """Prime (indecomposable): no nontrivial module; graphs on <= 2 vertices are prime."""
    if g.order <= 2:
        return True
    return not nontrivial_modules(g, budget)


# --------------------------------------------------------------------------
# text / structured formats

def to_text(g: Graph) -> str:
    lines = [f"n {g.order}", "labels " + " ".join(map(str, g.labels)).rstrip()]
    lines += [f"e {u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_text(text: str) -> Graph:
    order, labels, edges = None, None, []
    for raw in text.splitlines():
        parts = raw.split()
        if not parts:
            continue
        try:
            if parts[0] == "n":
                order = int(parts[1])
            elif parts[0] == "labels":
                labels = [int(x) for x in parts[1:]]
            elif parts[0] == "e":
                edges.append((int(parts[1]), int(parts[2])))
            else:
                raise UsageError(f"unrecognised graph line: {raw!r}")
        except (IndexError, ValueError):
            raise UsageError(f"malformed graph line: {raw!r}") from None
    if order is None or labels is None or len(labels) != order:
        raise UsageError("graph text needs 'n <order>' and a matching 'labels' line")
    return Graph.from_edges(labels, edges)


def to_dict(g: Graph) -> dict:
    return {"order": g.order, "labels": list(g.labels), "edges": [list(e) for e in g.edges()]}


def from_dict(d: dict) -> Graph:
    try:
        g = Graph.from_edges(d["labels"], [tuple(e) for e in d["edges"]])
    except KeyError as exc:
        raise UsageError(f"graph document missing field {exc.args[0]!r}") from None
    if g.order != d.get("order", g.order):
        raise UsageError("graph document order does not match its labels")
    return g


def to_json(g: Graph) -> str:
    return json.dumps(to_dict(g))


def from_json(text: str) -> Graph:
    return from_dict(json.loads(text))
