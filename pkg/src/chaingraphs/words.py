"""Finite 0-1 words, infinite word generators and factor combinatorics.

Words are plain ``str`` values over ``{"0", "1"}``; the empty word is ``""``
(printed as ``-``).  Infinite words are described by :class:`WordStream`
and are only ever inspected through finite prefix windows.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import groupby
from math import floor

from .errors import UsageError
from .verdict import Verdict

Word = str

EMPTY_DISPLAY = "-"
_BITS = re.compile(r"[01]*")


def check_word(w: str) -> str:
    if not isinstance(w, str) or not _BITS.fullmatch(w):
        raise UsageError(f"not a 0-1 word: {w!r}")
    return w


def shortlex(words) -> list[str]:
    """Sort words by length, then lexicographically."""
    return sorted(words, key=lambda u: (len(u), u))


def show(w: str) -> str:
    return w if w else EMPTY_DISPLAY


def complement_word(w: str) -> str:
    return check_word(w).translate(str.maketrans("01", "10"))


@dataclass(frozen=True)
class RunStats:
    max_zero_run: int
    max_one_run: int

    @property
    def l_value(self) -> int:
        return max(self.max_zero_run, self.max_one_run)

    def __iter__(self):
        yield self.max_zero_run
        yield self.max_one_run
        yield self.l_value


def run_stats(w: str) -> RunStats:
    runs = {"0": 0, "1": 0}
    for letter, grp in groupby(check_word(w)):
        runs[letter] = max(runs[letter], sum(1 for _ in grp))
    return RunStats(runs["0"], runs["1"])


# --------------------------------------------------------------------------
# streams

_KINDS = ("finite", "periodic", "fibonacci", "thue_morse", "sturmian")


@dataclass(frozen=True)
class WordStream:
    """Deterministic description of a (usually infinite) 0-1 word.

    ``word`` holds the seed of a periodic stream or the whole finite word;
    ``directive`` holds the partial quotients of a Sturmian stream, which
    are repeated cyclically.
    """

    kind: str
    word: str = ""
    directive: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise UsageError(f"unknown stream kind {self.kind!r}")
        check_word(self.word)
        if self.kind == "periodic" and not self.word:
            raise UsageError("periodic seed must be nonempty")
        if self.kind == "sturmian":
            if not self.directive or any(a < 1 for a in self.directive):
                raise UsageError("sturmian directive must be a nonempty list of positive integers")

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    def prefix(self, n: int) -> str:
        """The first ``n`` letters; finite streams are truncated at their end."""
        if n < 0:
            raise UsageError("prefix length must be >= 0")
        return _prefix(self, n)

    def letter(self, i: int) -> str:
        p = self.prefix(i + 1)
        if i >= len(p):
            raise UsageError(f"position {i} beyond finite word of length {len(p)}")
        return p[i]

    def __str__(self) -> str:
        if self.kind in ("finite", "periodic"):
            return f"{self.kind}:{self.word}"
        if self.kind == "sturmian":
            return "sturmian:" + ",".join(map(str, self.directive))
        return self.kind.replace("_", "-")


def parse_stream(spec: str) -> WordStream:
    """Parse ``finite:<bits>``, ``periodic:<bits>``, ``fibonacci``,
    ``thue-morse`` or ``sturmian:<a1,a2,...>``."""
    head, _, arg = spec.strip().partition(":")
    head = head.replace("-", "_").lower()
    if head in ("finite", "periodic"):
        return WordStream(head, check_word(arg))
    if head in ("fibonacci", "thue_morse") and not arg:
        return WordStream(head)
    if head == "sturmian":
        try:
            directive = tuple(int(a) for a in arg.split(","))
        except ValueError:
            raise UsageError(f"bad sturmian directive {arg!r}") from None
        return WordStream("sturmian", directive=directive)
    raise UsageError(f"bad word spec {spec!r}")


def _grow(n: int, step, start: str) -> str:
    w = start
    while len(w) < n:
        w = step(w)
    return w


def fibonacci_prefix(n: int) -> str:
    """Prefix of the fixed point of the morphism 0 -> 01, 1 -> 0."""
    table = {"0": "01", "1": "0"}
    return _grow(n, lambda w: "".join(table[c] for c in w), "0")[:n]


def thue_morse_prefix(n: int) -> str:
    return "".join("1" if bin(i).count("1") & 1 else "0" for i in range(n))


def sturmian_prefix(directive: tuple[int, ...], n: int) -> str:
    """Standard-word recursion s_{k+1} = s_k^{a_{k+1}} s_{k-1}, s_{-1}=1, s_0=0.

    Each standard word s_k (k >= 1) is a prefix of the characteristic word,
    so a long enough one yields the requested prefix exactly.
    """
    prev, cur = "1", "0"
    k = 0
    while len(cur) < n or k < 1:
        a = directive[k % len(directive)]
        prev, cur = cur, cur * a + prev
        k += 1
    return cur[:n]


def sturmian_slope(directive: tuple[int, ...], depth: int) -> Fraction:
    """Convergent of the slope [0; 1+a_1, a_2, a_3, ...] using ``depth`` quotients."""
    quotients = [directive[i % len(directive)] for i in range(depth)]
    quotients[0] += 1
    x = Fraction(quotients[-1])
    for q in reversed(quotients[:-1]):
        x = q + 1 / x
    return 1 / x


def mechanical_word(alpha: Fraction, n: int) -> str:
    """Characteristic word c(i) = floor((i+2)a) - floor((i+1)a), exact arithmetic."""
    return "".join(str(floor((i + 2) * alpha) - floor((i + 1) * alpha)) for i in range(n))


@lru_cache(maxsize=256)
def _prefix(stream: WordStream, n: int) -> str:
    kind = stream.kind
    if kind == "finite":
        return stream.word[:n]
    if kind == "periodic":
        seed = stream.word
        return (seed * (n // len(seed) + 1))[:n]
    if kind == "fibonacci":
        return fibonacci_prefix(n)
    if kind == "thue_morse":
        return thue_morse_prefix(n)
    return sturmian_prefix(stream.directive, n)


def l_value(stream: WordStream, window: int) -> int | None:
    """Longest run of equal letters among factors of the stream.

    Exact for finite and periodic streams; a windowed estimate otherwise.
    ``None`` means unbounded (constant infinite streams).
    """
    if stream.kind == "finite":
        return run_stats(stream.word).l_value
    if stream.kind == "periodic":
        if len(set(stream.word)) == 1:
            return None
        return run_stats(stream.word * 2).l_value
    w = stream.prefix(window)
    if len(set(w)) <= 1:
        return None
    return run_stats(w).l_value


# --------------------------------------------------------------------------
# factors

def factors(w: str, n: int) -> list[str]:
    """Distinct length-``n`` factors of ``w`` in lexicographic order."""
    check_word(w)
    if not 0 <= n <= len(w):
        raise UsageError(f"factor length {n} out of range 0..{len(w)}")
    return sorted({w[i:i + n] for i in range(len(w) - n + 1)})


def all_factors(w: str, max_len: int) -> set[str]:
    out = {""}
    for n in range(1, min(max_len, len(w)) + 1):
        out.update(w[i:i + n] for i in range(len(w) - n + 1))
    return out


def factor_set(stream: WordStream, max_len: int, window: int) -> list[str]:
    """Factors of length <= ``max_len`` of the length-``window`` prefix, shortlex."""
    if not 0 <= max_len <= window:
        raise UsageError("need 0 <= max_len <= window")
    return shortlex(all_factors(stream.prefix(window), max_len))


def is_factor(v: str, w: str) -> bool:
    return v in w


def word_bounds(stream: WordStream, max_len: int, window: int) -> list[str]:
    """Minimal non-factors of length <= ``max_len``: words outside the windowed
    factor set whose two maximal proper factors (drop first / drop last letter)
    both lie inside it."""
    if not 0 <= max_len <= window:
        raise UsageError("need 0 <= max_len <= window")
    fac = all_factors(stream.prefix(window), max_len)
    out = []
    for v in fac:
        if len(v) >= max_len:
            continue
        for a in "01":
            cand = v + a
            if cand not in fac and cand[1:] in fac:
                out.append(cand)
    return shortlex(out)


def detect_period(w: str) -> int | None:
    check_word(w)
    if not w:
        raise UsageError("period of the empty word is undefined")
    for p in range(1, len(w)):
        if w[p:] == w[:-p]:
            return p
    return None


def _occurrences(text: str, v: str) -> list[int]:
    out, i = [], text.find(v)
    while i != -1:
        out.append(i)
        i = text.find(v, i + 1)
    return out


def recurrence_function(stream: WordStream, n: int, horizon: int) -> int | None:
    """Least m such that every length-m window of the length-``horizon``
    prefix contains every length-``n`` factor of that prefix."""
    if not 0 <= n <= horizon:
        raise UsageError("need 0 <= n <= horizon")
    w = stream.prefix(horizon)
    size = len(w)
    if n == 0:
        return 0
    if n > size:
        return None
    worst = 0
    for u in factors(w, n):
        occ = _occurrences(w, u)
        # longest window avoiding u: before the first occurrence, between
        # consecutive ones, after the last
        free = occ[0] + n - 1
        for a, b in zip(occ, occ[1:]):
            free = max(free, b - a + n - 2)
        free = max(free, size - 1 - occ[-1])
        worst = max(worst, free + 1)
    return worst if worst <= size else None


def is_inexhaustible_window(stream: WordStream, max_len: int, window: int) -> Verdict:
    """Check that every factor v (|v| <= max_len) recurs as v w v in the prefix."""
    if max_len < 0 or window < 3 * max_len:
        raise UsageError("need window >= 3 * max_len")
    w = stream.prefix(window)
    complete = stream.is_finite and window >= len(stream.word)
    undecided = None
    for v in shortlex(all_factors(w, max_len)):
        if not v:
            continue
        occ = _occurrences(w, v)
        if occ[-1] - occ[0] >= len(v):
            continue
        if complete:
            return Verdict("fails", v, "factor occurs without a disjoint repeat")
        if undecided is None:
            undecided = v
    if undecided is not None:
        return Verdict("unknown", undecided, "window exhausted before a repeat")
    return Verdict("holds")


def level_sizes(stream: WordStream, max_len: int, window: int) -> list[int]:
    w = stream.prefix(window)
    return [len({w[i:i + n] for i in range(len(w) - n + 1)}) for n in range(1, max_len + 1)]

