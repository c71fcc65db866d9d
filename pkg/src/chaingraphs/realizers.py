"""Two-dimensional realizers of G_w, permutations, and comparability tests.

Linear orders are lists of labels from least to greatest.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import BudgetExceeded, UsageError
from .graphs import Graph, complement
from .verdict import Verdict
from .words import check_word

ORIENT_BUDGET = 64
ORIENT_NODES = 200_000


@dataclass(frozen=True)
class Realizer:
    L: tuple[int, ...]
    M: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.L) != sorted(self.M) or len(set(self.L)) != len(self.L):
            raise UsageError("L and M must be permutations of the same labels")

    def to_text(self) -> str:
        return "L: " + " ".join(map(str, self.L)) + "\nM: " + " ".join(map(str, self.M)) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Realizer":
        parts = {}
        for line in text.splitlines():
            head, _, rest = line.partition(":")
            if head.strip() in ("L", "M"):
                try:
                    parts[head.strip()] = tuple(int(x) for x in rest.split())
                except ValueError:
                    raise UsageError(f"bad realizer line {line!r}") from None
        if set(parts) != {"L", "M"}:
            raise UsageError("realizer text needs 'L:' and 'M:' lines")
        return cls(parts["L"], parts["M"])

    def less(self, u: int, v: int) -> bool:
        """u < v in the intersection order."""
        return _pos(self.L)[u] < _pos(self.L)[v] and _pos(self.M)[u] < _pos(self.M)[v]

    def is_extremal(self, v: int) -> bool:
        return v in (self.L[0], self.L[-1], self.M[0], self.M[-1])


def _pos(order) -> dict[int, int]:
    return {v: i for i, v in enumerate(order)}


@dataclass(frozen=True)
class Poset:
    """Strict order relation as a set of pairs (u, v) meaning u < v."""

    labels: tuple[int, ...]
    less: frozenset

    def is_valid(self) -> bool:
        for u, v in self.less:
            if (v, u) in self.less or u == v:
                return False
        for u, v in self.less:
            for x, y in self.less:
                if v == x and (u, y) not in self.less:
                    return False
        return True

    def dual(self) -> "Poset":
        return Poset(self.labels, frozenset((v, u) for u, v in self.less))

    def comparability_graph(self) -> Graph:
        return Graph.from_edges(self.labels, self.less)


def intersection_order(R: Realizer) -> Poset:
    pl, pm = _pos(R.L), _pos(R.M)
    return Poset(
        tuple(sorted(R.L)),
        frozenset((u, v) for u in R.L for v in R.L if pl[u] < pl[v] and pm[u] < pm[v]),
    )


# --------------------------------------------------------------------------
# incremental construction

def build_realizer(w: str) -> Realizer:
    """Realizer (L, M) of a transitive orientation of G_w in which the last
    vertex is extremal, built one letter at a time.

    At each step the previous last vertex x is brought to the top of L by
    reversing both orders (dual) and/or exchanging them; the new vertex goes
    immediately below x in L and at the bottom (letter 1) or top (letter 0)
    of M; then the normalisation is undone.
    """
    check_word(w)
    if not w:
        raise UsageError("realizer construction needs |w| >= 1")
    L = [-1, 0]
    M = [-1, 0] if w[0] == "1" else [0, -1]
    for k in range(1, len(w)):
        x = k - 1
        dual = x not in (L[-1], M[-1])
        if dual:
            L.reverse()
            M.reverse()
        swapped = L[-1] != x
        if swapped:
            L, M = M, L
        L.insert(len(L) - 1, k)
        if w[k] == "1":
            M.insert(0, k)
        else:
            M.append(k)
        if swapped:
            L, M = M, L
        if dual:
            L.reverse()
            M.reverse()
    return Realizer(tuple(L), tuple(M))


def verify_realizer(g: Graph, R: Realizer) -> bool:
    """Comparability graph of L ∩ M equals ``g``."""
    if sorted(R.L) != sorted(g.labels):
        return False
    pl, pm = _pos(R.L), _pos(R.M)
    for u, v in combinations(g.labels, 2):
        comparable = (pl[u] < pl[v]) == (pm[u] < pm[v])
        if comparable != g.adjacent(u, v):
            return False
    return True


def permutation_from_realizer(R: Realizer, g: Graph) -> tuple[int, ...]:
    """sigma(i) = position (1-based) in the reverse of M of the i-th vertex of L."""
    if not verify_realizer(g, R):
        raise UsageError("realizer does not realize the graph")
    rev = _pos(tuple(reversed(R.M)))
    return tuple(rev[v] + 1 for v in R.L)


def inversion_graph(sigma, labels=None) -> Graph:
    """Vertices are positions (or ``labels`` in position order); i ~ j iff the
    pair is an inversion of sigma."""
    n = len(sigma)
    labels = tuple(range(1, n + 1)) if labels is None else tuple(labels)
    edges = [(labels[i], labels[j]) for i, j in combinations(range(n), 2) if sigma[i] > sigma[j]]
    return Graph.from_edges(labels, edges)


def interval_confinement_check(w: str, R: Realizer) -> Verdict:
    """For 0 <= k <= |w|-3, vertices k+2..|w|-1 avoid the least L-interval and
    the least M-interval containing -1..k."""
    n = len(check_word(w))
    if n < 3:
        raise UsageError("interval check needs |w| >= 3")
    for name, order in (("L", R.L), ("M", R.M)):
        pos = _pos(order)
        for k in range(n - 2):
            span = [pos[v] for v in range(-1, k + 1)]
            lo, hi = min(span), max(span)
            for v in range(k + 2, n):
                if lo <= pos[v] <= hi:
                    return Verdict("fail", (k, v), f"vertex {v} inside the {name}-interval of -1..{k}")
    return Verdict("pass")


# --------------------------------------------------------------------------
# transitive orientation search

def is_comparability(g: Graph, budget: int = ORIENT_BUDGET, nodes: int = ORIENT_NODES) -> Poset | None:
    """A transitive orientation of ``g`` or ``None``.

    Orienting a -> b forces a -> c for every c adjacent to a but not b, and
    c -> b for every c adjacent to b but not a; transitivity with arcs already
    present is propagated as well.  Branching only happens on edges left free.
    """
    n = g.order
    if n > budget:
        raise BudgetExceeded(f"orientation search over {n} vertices exceeds budget {budget}")
    adj = [[bool((g.rows[i] >> j) & 1) for j in range(n)] for i in range(n)]
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if adj[i][j]]
    count = 0

    def propagate(arc: list[list[bool]], queue: list[tuple[int, int]]) -> bool:
        while queue:
            a, b = queue.pop()
            if arc[a][b]:
                continue
            if arc[b][a]:
                return False
            arc[a][b] = True
            for c in range(n):
                if c == a or c == b:
                    continue
                if adj[a][c] and not adj[b][c]:
                    queue.append((a, c))
                if adj[b][c] and not adj[a][c]:
                    queue.append((c, b))
                if arc[b][c]:
                    if not adj[a][c]:
                        return False
                    queue.append((a, c))
                if arc[c][a]:
                    if not adj[c][b]:
                        return False
                    queue.append((c, b))
        return True

    def solve(arc) -> list[list[bool]] | None:
        nonlocal count
        count += 1
        if count > nodes:
            raise BudgetExceeded(f"orientation search exceeded {nodes} nodes")
        free = next(((i, j) for i, j in edges if not arc[i][j] and not arc[j][i]), None)
        if free is None:
            return arc
        i, j = free
        for a, b in ((i, j), (j, i)):
            trial = [row[:] for row in arc]
            if propagate(trial, [(a, b)]):
                done = solve(trial)
                if done is not None:
                    return done
        return None

    arc = solve([[False] * n for _ in range(n)])
    if arc is None:
        return None
    P = Poset(g.labels, frozenset(
        (g.labels[i], g.labels[j]) for i in range(n) for j in range(n) if arc[i][j]
    ))
    return P if P.is_valid() else None


def is_permutation_graph(g: Graph, budget: int = ORIENT_BUDGET) -> bool:
    return is_comparability(g, budget) is not None and is_comparability(complement(g), budget) is not None
