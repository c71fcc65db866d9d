"""Windowed ages of word graphs: members, membership, bounds and diagnostics.

Induced subgraphs of G_u for a window u are enumerated through their *type
strings*.  For chosen positions f_0 < f_1 < ... < f_{k-1} the adjacency of
f_b to the earlier chosen vertices depends only on the letter u(f_b) and on
whether f_{b-1} = f_b - 1.  So each subset is described by k - 1 symbols,
and the set of realisable type strings can be built right to left by dynamic
programming instead of visiting every vertex subset.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .canon import _canonical_rows, canonical_form, canonical_graph
from .embed import NODE_BUDGET, all_embeddings
from .errors import BudgetExceeded, PreconditionError, UsageError
from .graphs import Graph, delete_vertex, graph_from_word, induced, is_prime
from .verdict import Verdict
from .words import (
    WordStream, all_factors, factor_set, is_factor, l_value, level_sizes,
    recurrence_function, shortlex, show,
)

TYPE_BUDGET = 2_000_000

# type-string symbols: (letter, consecutive?)
_SYM = {("0", False): "a", ("1", False): "b", ("0", True): "c", ("1", True): "d"}
_DECODE = {v: k for k, v in _SYM.items()}


# --------------------------------------------------------------------------
# windows

def primitive_period(seed: str) -> int:
    n = len(seed)
    for p in range(1, n + 1):
        if n % p == 0 and seed[:p] * (n // p) == seed:
            return p
    return n


def default_window(stream: WordStream, max_order: int) -> int:
    if stream.kind == "finite":
        return len(stream.word)
    if stream.kind == "periodic":
        return max(4 * primitive_period(stream.word), 8 * max_order)
    return max(200, 20 * max_order)


@lru_cache(maxsize=64)
def window_graph(stream: WordStream, window: int) -> Graph:
    """G_u for u the length-``window`` prefix (labels -1 .. window-1)."""
    return graph_from_word(stream.prefix(window))


# --------------------------------------------------------------------------
# type strings

def type_graph(tau: str) -> Graph:
    """The graph on 0..k-1 realised by any position set with type string ``tau``."""
    k = len(tau) + 1
    rows = [0] * k
    for b, sym in enumerate(tau, start=1):
        letter, consec = _DECODE[sym]
        if letter == "1":
            nbrs = 1 << (b - 1) if consec else 0
        else:
            nbrs = ((1 << b) - 1) & ~((1 << (b - 1)) if consec else 0)
        rows[b] = nbrs
        for a in range(b):
            if (nbrs >> a) & 1:
                rows[a] |= 1 << b
    return Graph(tuple(range(k)), tuple(rows))


def type_string(u: str, positions: tuple[int, ...]) -> str:
    return "".join(
        _SYM[(u[q], q == p + 1)] for p, q in zip(positions, positions[1:])
    )


def realisable_types(u: str, max_len: int, budget: int = TYPE_BUDGET) -> list[set[str]]:
    """For r = 0..max_len, every type string of length r realised by
    positions inside -1..|u|-1.

    With C(s, r) the types of sequences starting at s and D(p, r) those of
    sequences whose second element is at least p:
        C(s, r) = {sym(u[s+1], consecutive) + x : x in C(s+1, r-1)} | D(s+2, r)
        D(p, r) = {sym(u[p], gap) + x : x in C(p, r-1)} | D(p+1, r)
    """
    W = len(u)
    empty: frozenset = frozenset()
    # C(s+1, .) and D(s+2, .) for the current s, starting at s = W-2
    c_next = [frozenset({""})] + [empty] * max_len
    d_cur = [empty] * (max_len + 1)
    seen = [set() for _ in range(max_len + 1)]
    seen[0].add("")
    if W == 0:
        return seen
    for s in range(W - 2, -2, -1):
        q = s + 1
        sym_c = _SYM[(u[q], True)]
        c_here = [frozenset({""})]
        for r in range(1, max_len + 1):
            ext = {sym_c + x for x in c_next[r - 1]}
            seen[r] |= ext
            if len(seen[r]) > budget:
                raise BudgetExceeded(f"more than {budget} type strings of length {r}")
            c_here.append(frozenset(ext) | d_cur[r] if ext - d_cur[r] else d_cur[r])
        if s == -1:
            # every C(s, r) with s >= -1 has its gap part inside D(1, r)
            for r in range(1, max_len + 1):
                seen[r] |= d_cur[r]
            break
        sym_g = _SYM[(u[q], False)]
        d_new = [empty]
        for r in range(1, max_len + 1):
            ext = {sym_g + x for x in c_next[r - 1]}
            d_new.append(d_cur[r] | ext if ext - d_cur[r] else d_cur[r])
        d_cur = d_new
        c_next = c_here
    return seen


def word_graph_embedding(h: Graph, u: str, budget: int = NODE_BUDGET) -> dict | None:
    """An embedding of ``h`` into G_u, or None; exact.

    Orders the vertices of ``h`` by their future images.  Relative to the
    vertices already placed, the next one must see nobody (letter 1, gap),
    only the previous one (1, consecutive), everybody (0, gap) or everybody
    but the previous one (0, consecutive).  Along an ordering the set of
    feasible positions for the last vertex is tracked as a bitmask (bit p+1
    for position p), so positions are never branched on; failed states
    (placed set, last vertex, feasible set) are memoised.
    """
    k, W = h.order, len(u)
    if k == 0:
        return {}
    if k > W + 1:
        return None
    rows = h.rows
    full = (1 << k) - 1
    letter_mask = {a: sum(1 << (q + 1) for q in range(W) if u[q] == a) for a in "01"}
    dead: set[tuple[int, int, int]] = set()
    order: list[int] = []
    symbols: list[str] = []
    nodes = 0

    def moves(v: int, mask: int, last: int):
        seen = rows[v] & mask
        lastbit = 1 << last
        if seen == 0:
            yield "1", False
        if seen == lastbit:
            yield "1", True
        if seen == mask:
            yield "0", False
        if seen == mask & ~lastbit:
            yield "0", True

    def go(mask: int, last: int, feasible: int) -> bool:
        nonlocal nodes
        if mask == full:
            return True
        state = (mask, last, feasible)
        if state in dead:
            return False
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"word-graph embedding search exceeded {budget} nodes")
        low = (feasible & -feasible).bit_length() - 1
        for v in range(k):
            if (mask >> v) & 1:
                continue
            for letter, consec in moves(v, mask, last):
                if consec:
                    nxt = (feasible << 1) & letter_mask[letter]
                else:
                    nxt = letter_mask[letter] & ~((1 << (low + 2)) - 1)
                if not nxt:
                    continue
                order.append(v)
                symbols.append(_SYM[(letter, consec)])
                if go(mask | (1 << v), v, nxt):
                    return True
                order.pop()
                symbols.pop()
        dead.add(state)
        return False

    anywhere = (1 << (W + 1)) - 1
    for first in range(k):
        order[:] = [first]
        symbols[:] = []
        if go(1 << first, first, anywhere):
            places = find_positions(u, "".join(symbols))
            return {h.labels[v]: p for v, p in zip(order, places)}
    return None


def find_positions(u: str, tau: str) -> tuple[int, ...] | None:
    """Lexicographically least positions in -1..|u|-1 with type string ``tau``."""
    W = len(u)
    need = [_DECODE[c] for c in tau]
    dead: set[tuple[int, int]] = set()

    def go(pos: int, i: int) -> tuple[int, ...] | None:
        if i == len(need):
            return ()
        if (pos, i) in dead:
            return None
        letter, consec = need[i]
        targets = [pos + 1] if consec else range(pos + 2, W)
        for q in targets:
            if q < W and u[q] == letter:
                rest = go(q, i + 1)
                if rest is not None:
                    return (q,) + rest
        dead.add((pos, i))
        return None

    for start in range(-1, W):
        rest = go(start, 0)
        if rest is not None:
            return (start,) + rest
    return None


# --------------------------------------------------------------------------
# catalogs

@dataclass
class CatalogEntry:
    graph: Graph  # induced subgraph of the source, carrying source labels
    witness: tuple[int, ...]


@dataclass
class IsoCatalog:
    """Isomorphism classes keyed by canonical form, grouped by order."""

    source: str
    window: int
    max_order: int
    classes: dict[bytes, CatalogEntry] = field(default_factory=dict)

    def add(self, key: bytes, graph: Graph, witness: tuple[int, ...]) -> None:
        if key not in self.classes:
            self.classes[key] = CatalogEntry(graph, witness)

    def __contains__(self, item) -> bool:
        key = item if isinstance(item, bytes) else canonical_form(item)
        return key in self.classes

    def __len__(self) -> int:
        return len(self.classes)

    def keys(self, order: int | None = None) -> list[bytes]:
        return sorted(k for k in self.classes if order is None or k[0] == order)

    @property
    def size_index(self) -> dict[int, list[bytes]]:
        out: dict[int, list[bytes]] = {}
        for k in sorted(self.classes):
            out.setdefault(k[0], []).append(k)
        return out

    def counts(self) -> dict[int, int]:
        return {order: len(keys) for order, keys in self.size_index.items()}

    def dump_lines(self) -> list[str]:
        lines = []
        for key in self.keys():
            g = canonical_graph(self.classes[key].graph)
            edges = " ".join(f"{a}-{b}" for a, b in g.edges()) or "-"
            lines.append(f"{key[0]} {key.hex()} {edges}")
        return lines


def age_members(stream: WordStream, max_order: int, window: int | None = None,
                budget: int = TYPE_BUDGET) -> IsoCatalog:
    """Isomorphism classes of induced subgraphs with 1..max_order vertices of the
    window graph."""
    if max_order < 1:
        raise UsageError("max_order must be >= 1")
    window = default_window(stream, max_order) if window is None else window
    if window < max_order and not stream.is_finite:
        raise UsageError("need window >= max_order")
    u = stream.prefix(window)
    host = window_graph(stream, window)
    types = realisable_types(u, max_order - 1, budget)
    cat = IsoCatalog(str(stream), window, max_order)
    firsts: dict[bytes, str] = {}
    for r in range(max_order):
        for tau in sorted(types[r]):
            g = type_graph(tau)
            key = canonical_form(g)
            if key not in firsts:
                firsts[key] = tau
    for key in sorted(firsts):
        pos = find_positions(u, firsts[key])
        cat.add(key, induced(host, pos), pos)
    return cat


def age_members_bruteforce(host: Graph, max_order: int, source: str = "graph") -> IsoCatalog:
    """Reference enumeration over every vertex subset (small hosts only)."""
    cat = IsoCatalog(source, host.order, max_order)
    for k in range(1, max_order + 1):
        for subset in combinations(host.labels, k):
            g = induced(host, subset)
            cat.add(canonical_form(g), g, subset)
    return cat


def age_contains(stream: WordStream, h: Graph, window: int,
                 budget: int = NODE_BUDGET) -> Verdict:
    f = word_graph_embedding(h, stream.prefix(window), budget)
    if f is None:
        return Verdict("no_within_window", None, f"no embedding into the length-{window} window")
    return Verdict("yes", f)


def saturation_check(stream: WordStream, max_order: int, w1: int, w2: int) -> bool:
    if not w1 < w2:
        raise UsageError("need w1 < w2")
    a = age_members(stream, max_order, w1)
    b = age_members(stream, max_order, w2)
    return set(a.classes) == set(b.classes)


# --------------------------------------------------------------------------
# bounds

@dataclass
class BoundReport:
    bounds: list[Graph]
    search_order_max: int
    window: int
    complete_up_to: int | None  # None: unknown

    def by_order(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for g in self.bounds:
            out[g.order] = out.get(g.order, 0) + 1
        return out

    def to_dict(self) -> dict:
        return {
            "bounds": [{"order": g.order, "edges": [list(e) for e in g.edges()]} for g in self.bounds],
            "search_order_max": self.search_order_max,
            "window": self.window,
            "complete_up_to": "unknown" if self.complete_up_to is None else self.complete_up_to,
        }


def _extensions(rows: tuple[int, ...]):
    """All graphs obtained by adding one vertex with any neighbourhood."""
    k = len(rows)
    for nb in range(1 << k):
        new = tuple(r | (((nb >> i) & 1) << k) for i, r in enumerate(rows)) + (nb,)
        yield new


def _deletion_rows(rows: tuple[int, ...], x: int) -> tuple[int, ...]:
    low = (1 << x) - 1
    out = []
    for i, r in enumerate(rows):
        if i != x:
            out.append((r & low) | ((r >> (x + 1)) << x))
    return tuple(out)


def bounds_of_catalog(cat: IsoCatalog, max_order: int) -> list[Graph]:
    """Graphs of order <= max_order outside the catalog whose one-vertex
    deletions all lie in it, from one-vertex extensions of catalog members."""
    found: dict[bytes, tuple[int, ...]] = {}
    for k in range(2, max_order + 1):
        tried: set[bytes] = set()
        for key in cat.keys(k - 1):
            base = cat.classes[key].graph.rows
            for rows in _extensions(base):
                ck = _canonical_rows(k, rows)[0]
                if ck in tried:
                    continue
                tried.add(ck)
                if ck in cat.classes:
                    continue
                if all(_canonical_rows(k - 1, _deletion_rows(rows, x))[0] in cat.classes
                       for x in range(k)):
                    found[ck] = rows
    return [canonical_graph(Graph(tuple(range(len(r))), r)) for _, r in sorted(found.items())]


def age_bounds(stream: WordStream, max_order: int, window: int | None = None) -> BoundReport:
    window = default_window(stream, max_order) if window is None else window
    cat = age_members(stream, max_order, window)
    bounds = bounds_of_catalog(cat, max_order)
    if stream.is_finite and window >= len(stream.word):
        complete = max_order
    else:
        wider = age_members(stream, max_order, 2 * window)
        complete = max_order if set(wider.classes) == set(cat.classes) else None
    return BoundReport(bounds, max_order, window, complete)


def is_bound(h: Graph, stream: WordStream, window: int, budget: int = NODE_BUDGET) -> Verdict:
    """Direct check against the window graph: ``h`` does not embed, every
    one-vertex deletion does."""
    u = stream.prefix(window)
    if word_graph_embedding(h, u, budget) is not None:
        return Verdict("fail", None, "graph embeds into the window")
    for x in h.labels:
        if word_graph_embedding(delete_vertex(h, x), u, budget) is None:
            return Verdict("fail", x, f"deleting {x} leaves a graph outside the window age")
    return Verdict("pass")


def bound_from_word_bound(stream: WordStream, w: str, window: int) -> tuple[Graph, Verdict]:
    """G_{w0 w} for a word bound w of the stream, checked as a bound of the windowed age."""
    u = stream.prefix(window)
    fac = all_factors(u, len(w))
    if not w or w in fac or w[:-1] not in fac or w[1:] not in fac:
        raise PreconditionError(f"{show(w)} is not a word bound of the window")
    ell = l_value(stream, window)
    if ell is None:
        raise PreconditionError("l(mu) is unbounded")
    if len(w) <= ell + 7:
        raise PreconditionError(f"|w| = {len(w)} <= l(mu) + 7 = {ell + 7}")
    lead = next((a for a in "01" if a + w[:-1] in fac), None)
    if lead is None:
        raise PreconditionError(f"no letter a with a{w[:-1]} a factor of the window")
    g = graph_from_word(lead + w)
    return g, is_bound(g, stream, window)


# --------------------------------------------------------------------------
# embedding diagnostics

def _rigid(f: dict, n: int) -> str | None:
    """Why the embedding ``f`` of G_w (|w| = n) is not rigid, or None."""
    tail = [f[k] for k in range(1, n)]
    if any(b != a + 1 for a, b in zip(tail, tail[1:])):
        return "vertices 1..n-1 not sent increasingly onto an interval"
    if not (f[-1] < f[1] and f[0] < f[1]):
        return "f(-1) or f(0) not below f(1)"
    if f[1] - 1 not in (f[-1], f[0]):
        return "neither f(-1) nor f(0) is adjacent to the interval"
    return None


def embedding_rigidity_check(stream: WordStream, w: str, window: int,
                             budget: int = NODE_BUDGET) -> Verdict:
    """Every embedding of G_w into the window graph is increasing onto an
    interval on 1..n-1 and reads w_2...w_{n-1} there."""
    ell = l_value(stream, window)
    if ell is None:
        return Verdict("vacuous", None, "l(mu) unbounded in the window; rigidity does not apply")
    n = len(w)
    if n <= ell + 7:
        return Verdict("precondition", None, f"|w| = {n} <= l(mu) + 7 = {ell + 7}")
    u = stream.prefix(window)
    maps = all_embeddings(graph_from_word(w), window_graph(stream, window), budget)
    for f in maps:
        why = _rigid(f, n)
        if why is None and any(u[f[k]] != w[k] for k in range(2, n)):
            why = "letters under the image differ from w"
        if why:
            return Verdict("fail", f, why, data={"embeddings": len(maps)})
    return Verdict("pass", None, f"{len(maps)} embeddings checked", data={"embeddings": len(maps)})


def prefix_embedding_necessity_check(stream: WordStream, w: str, window: int,
                                     budget: int = NODE_BUDGET) -> Verdict:
    """If G_{1111w} embeds then 1w is a factor; if G_{0000w} embeds then 0w is."""
    u = stream.prefix(window)
    data = {}
    for a in "10":
        embedded = word_graph_embedding(graph_from_word(a * 4 + w), u, budget) is not None
        factor = is_factor(a + w, u)
        data[a] = {"embeds": embedded, "factor": factor}
        if embedded and not factor:
            return Verdict("fail", a * 4 + w, f"G_{a * 4 + w} embeds but {a + w} is not a factor",
                           data=data)
    return Verdict("pass", None, "", data=data)


# --------------------------------------------------------------------------
# word-level diagnostics

@dataclass
class JonssonReport:
    level_sizes: list[int]
    witnesses: dict[int, int | None]

    def to_dict(self) -> dict:
        return {
            "level_sizes": self.level_sizes,
            "witnesses": {str(n): ("unknown" if m is None else m) for n, m in self.witnesses.items()},
        }


def jonsson_levels(stream: WordStream, max_height: int, window: int) -> JonssonReport:
    """Factor counts per length and, for each n, the least m such that every
    length-m factor contains all length-n factors."""
    if not 1 <= max_height <= window:
        raise UsageError("need 1 <= max_height <= window")
    sizes = level_sizes(stream, max_height, window)
    wit = {n: recurrence_function(stream, n, window) for n in range(1, max_height + 1)}
    return JonssonReport(sizes, wit)


def factor_inclusion_check(s1: WordStream, s2: WordStream, max_len: int, window: int,
                           max_prefix: int = 12, budget: int = NODE_BUDGET) -> Verdict:
    """Factor non-inclusion at ``max_len`` must show up as age non-inclusion.

    ``holds``: every factor of s1 up to ``max_len`` is a factor of s2.
    ``pass``: some factor u of s1 is missing from s2 and a prime G_{vu}
    (v of length >= 4 preceding u in s1) lies in the age of G_{s1} but does not
    embed into the s2 window graph.  ``unknown``: no such witness was found.
    """
    f1 = set(factor_set(s1, max_len, window))
    f2 = set(factor_set(s2, max_len, window))
    missing = shortlex(f1 - f2)
    if not missing:
        return Verdict("holds", None, f"factors up to length {max_len} included")
    u1 = s1.prefix(window)
    u2 = s2.prefix(window)
    for u in missing:
        for length in range(4, max_prefix + 1):
            if length + len(u) + 1 > 20:
                break
            tried = set()
            start = u1.find(u, length)
            while start != -1:
                v = u1[start - length:start]
                if v not in tried:
                    tried.add(v)
                    g = graph_from_word(v + u)
                    if is_prime(g) and word_graph_embedding(g, u2, budget) is None:
                        return Verdict("pass", v + u,
                                       f"G_{v + u} is in the age of G_{s1} but not of G_{s2} (window {window})",
                                       data={"factor": u, "prefix": v})
                start = u1.find(u, start + 1)
    return Verdict("unknown", missing[0], "no separating graph found")
