"""Induced-subgraph embedding search.

Backtracking over bitsets: at each step the vertex of H with the fewest
remaining candidates is mapped next, and the candidate set of every vertex is
the intersection of the G-neighbourhoods (or non-neighbourhoods) of the images
already chosen.  Ties are broken by H vertex order and candidates are tried in
G vertex order, so results are reproducible.
"""
from __future__ import annotations

from .errors import BudgetExceeded
from .graphs import Graph, _bits

NODE_BUDGET = 2_000_000

Embedding = dict  # H label -> G label


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _search(h: Graph, g: Graph, budget: int, first_only: bool):
    nh, ng = h.order, g.order
    if nh > ng:
        return []
    if nh == 0:
        return [()]
    full = (1 << ng) - 1
    g_rows = g.rows
    g_non = tuple(full & ~r & ~(1 << i) for i, r in enumerate(g_rows))
    g_deg = [_popcount(r) for r in g_rows]
    h_deg = [_popcount(r) for r in h.rows]

    # degree pruning: an image needs at least as many neighbours and
    # non-neighbours as its preimage
    init = []
    for a in range(nh):
        need_non = nh - 1 - h_deg[a]
        mask = 0
        for v in range(ng):
            if g_deg[v] >= h_deg[a] and ng - 1 - g_deg[v] >= need_non:
                mask |= 1 << v
        init.append(mask)

    h_rows = h.rows
    image = [-1] * nh
    results = []
    nodes = 0

    def extend(cands: list[int], used: int, depth: int) -> bool:
        nonlocal nodes
        if depth == nh:
            results.append(tuple(image))
            return first_only
        best, best_count = -1, ng + 1
        for a in range(nh):
            if image[a] < 0:
                c = _popcount(cands[a] & ~used)
                if c < best_count:
                    best, best_count = a, c
                    if c == 0:
                        return False
        a = best
        for v in _bits(cands[a] & ~used):
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(f"embedding search exceeded {budget} nodes")
            image[a] = v
            nxt = list(cands)
            ok = True
            for b in range(nh):
                if image[b] < 0:
                    nxt[b] &= g_rows[v] if (h_rows[a] >> b) & 1 else g_non[v]
                    if not nxt[b] & ~used & ~(1 << v):
                        ok = False
                        break
            if ok and extend(nxt, used | (1 << v), depth + 1):
                return True
            image[a] = -1
        return False

    extend(init, 0, 0)
    return results


def embeds(h: Graph, g: Graph, budget: int = NODE_BUDGET) -> Embedding | None:
    """Some induced embedding of ``h`` into ``g`` as a label map, or ``None``."""
    found = _search(h, g, budget, first_only=True)
    if not found:
        return None
    return {h.labels[a]: g.labels[v] for a, v in enumerate(found[0])}


def all_embeddings(h: Graph, g: Graph, budget: int = NODE_BUDGET) -> list[Embedding]:
    """Every induced embedding, sorted by the tuple of image labels
    (listed in ``h``'s vertex order)."""
    found = _search(h, g, budget, first_only=False)
    maps = [tuple(g.labels[v] for v in img) for img in found]
    maps.sort()
    return [dict(zip(h.labels, img)) for img in maps]


def is_embedding(h: Graph, g: Graph, f: Embedding) -> bool:
    """Independent check that ``f`` is injective and preserves edges and non-edges."""
    if sorted(f) != sorted(h.labels) or len(set(f.values())) != len(f):
        return False
    for i, u in enumerate(h.labels):
        for v in h.labels[i + 1:]:
            if h.adjacent(u, v) != g.adjacent(f[u], f[v]):
                return False
    return True
