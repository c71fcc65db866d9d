"""Canonical forms for small graphs.

Equitable refinement of an ordered partition, individualization of vertices in
the first smallest non-singleton cell, and the lexicographically least
adjacency string over all leaves of the search tree.  Automorphisms found
along the way (two leaves with the same string) prune sibling branches lying
in one orbit of the prefix stabiliser.
"""
from __future__ import annotations

from functools import lru_cache

from .errors import BudgetExceeded
from .graphs import Graph

CANON_BUDGET = 16


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _refine(rows: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Split cells by neighbour counts into each cell until stable.

    Depends only on the partition structure, never on vertex names, so it
    commutes with relabeling.
    """
    cells = [list(c) for c in cells]
    changed = True
    while changed:
        changed = False
        for s in range(len(cells)):
            smask = 0
            for v in cells[s]:
                smask |= 1 << v
            out = []
            for c in cells:
                if len(c) == 1:
                    out.append(c)
                    continue
                groups: dict[int, list[int]] = {}
                for v in c:
                    groups.setdefault(_popcount(rows[v] & smask), []).append(v)
                if len(groups) > 1:
                    changed = True
                    out.extend(groups[k] for k in sorted(groups))
                else:
                    out.append(c)
            if changed:
                cells = out
                break
    return cells


def _leaf_key(rows: tuple[int, ...], order: list[int]) -> int:
    n = len(order)
    key = 0
    for i in range(n):
        r = rows[order[i]]
        for j in range(i + 1, n):
            key = (key << 1) | ((r >> order[j]) & 1)
    return key


def _orbit_rep(v: int, auts: list[tuple[int, ...]], prefix: list[int]) -> int:
    """Smallest element in the orbit of ``v`` under the automorphisms found so
    far that fix every vertex of ``prefix``."""
    gens = [g for g in auts if all(g[p] == p for p in prefix)]
    seen = {v}
    frontier = [v]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = g[x]
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return min(seen)


def _search(rows: tuple[int, ...]) -> tuple[int, list[int]]:
    n = len(rows)
    best_key: int | None = None
    best_order: list[int] = []
    first_key: int | None = None
    first_order: list[int] = []
    auts: list[tuple[int, ...]] = []

    def record(order: list[int]):
        nonlocal best_key, best_order, first_key, first_order
        key = _leaf_key(rows, order)
        if first_key is None:
            first_key, first_order = key, order
        elif key == first_key:
            auts.append(_mapping(first_order, order, n))
        if best_key is None or key < best_key:
            best_key, best_order = key, order
        elif key == best_key and order != best_order:
            auts.append(_mapping(best_order, order, n))

    def visit(cells: list[list[int]], prefix: list[int]):
        if len(cells) == n:
            record([c[0] for c in cells])
            return
        idx = min((i for i, c in enumerate(cells) if len(c) > 1), key=lambda i: (len(cells[i]), i))
        target = cells[idx]
        explored: list[int] = []
        for v in target:
            if explored and any(_orbit_rep(v, auts, prefix) == _orbit_rep(u, auts, prefix) for u in explored):
                continue
            explored.append(v)
            split = cells[:idx] + [[v], [u for u in target if u != v]] + cells[idx + 1:]
            visit(_refine(rows, split), prefix + [v])

    visit(_refine(rows, [list(range(n))]) if n else [], [])
    return best_key or 0, best_order


def _mapping(a: list[int], b: list[int], n: int) -> tuple[int, ...]:
    g = [0] * n
    for x, y in zip(a, b):
        g[x] = y
    return tuple(g)


@lru_cache(maxsize=1 << 18)
def _canonical_rows(n: int, rows: tuple[int, ...]) -> tuple[bytes, tuple[int, ...]]:
    key, order = _search(rows)
    nbits = n * (n - 1) // 2
    body = key.to_bytes((nbits + 7) // 8, "big") if nbits else b""
    return bytes([n]) + body, tuple(order)


def canonical_form(g: Graph, budget: int = CANON_BUDGET) -> bytes:
    """Byte key, equal for two graphs iff they are isomorphic.  The first
    byte is the order, so keys also sort graphs by order first."""
    if g.order > budget:
        raise BudgetExceeded(f"canonical form over {g.order} vertices exceeds budget {budget}")
    return _canonical_rows(g.order, g.rows)[0]


def canonical_labeling(g: Graph, budget: int = CANON_BUDGET) -> tuple[int, ...]:
    """Vertex labels of ``g`` listed in canonical position order."""
    if g.order > budget:
        raise BudgetExceeded(f"canonical form over {g.order} vertices exceeds budget {budget}")
    order = _canonical_rows(g.order, g.rows)[1]
    return tuple(g.labels[i] for i in order)


def canonical_graph(g: Graph) -> Graph:
    """The canonical representative of ``g``'s class, labelled 0..n-1."""
    order = _canonical_rows(g.order, g.rows)[1]
    pos = {v: i for i, v in enumerate(order)}
    rows = [0] * g.order
    for v in order:
        r = 0
        for u in range(g.order):
            if (g.rows[v] >> u) & 1:
                r |= 1 << pos[u]
        rows[pos[v]] = r
    return Graph(tuple(range(g.order)), tuple(rows))


def is_isomorphic(a: Graph, b: Graph) -> bool:
    return a.order == b.order and canonical_form(a) == canonical_form(b)
