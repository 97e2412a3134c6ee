"""Words over {1..k} and their ascent/descent statistics.

Every reported index set is 1-based, so ``sum(indices)`` is the major-index
style statistic directly.  Orders are always passed explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Word:
    symbols: tuple[int, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        if self.k < 1:
            raise ValueError("alphabet size must be >= 1")
        for i, x in enumerate(self.symbols, start=1):
            if not 1 <= x <= self.k:
                raise ValueError(f"symbol {x} at position {i} outside 1..{self.k}")

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]

    def __str__(self):
        return format_word(self.symbols, self.k)

    @classmethod
    def parse(cls, text: str, k: int) -> "Word":
        return cls(parse_symbols(text), k)

    def counts(self) -> tuple[int, ...]:
        c = [0] * self.k
        for x in self.symbols:
            c[x - 1] += 1
        return tuple(c)


def format_word(symbols: Sequence[int], k: int) -> str:
    if k <= 9:
        return "".join(map(str, symbols))
    return ",".join(map(str, symbols))


def parse_symbols(text: str) -> tuple[int, ...]:
    s = text.strip()
    if "," in s:
        toks = s.split(",")
    else:
        toks = list(s)
    out = []
    for pos, t in enumerate(toks, start=1):
        t = t.strip()
        if not t.isdigit():
            raise ValueError(f"bad symbol {t!r} at position {pos}")
        out.append(int(t))
    return tuple(out)


def in_W(w: Word) -> bool:
    """Words ending in a single top letter."""
    s = w.symbols
    return bool(s) and s[-1] == w.k and (len(s) == 1 or s[-2] != w.k)


def in_W_circ(w: Word) -> bool:
    """Words starting with the top letter and not ending in it (unless length 1)."""
    s = w.symbols
    return bool(s) and s[0] == w.k and (len(s) == 1 or s[-1] != w.k)


def in_W_plus(w: Word) -> bool:
    """Words in W with no strict descent among letters below the top one."""
    if not in_W(w):
        return False
    top = w.k
    return not any(x > y and x < top for x, y in zip(w.symbols, w.symbols[1:]))


@dataclass(frozen=True)
class OrderSpec:
    """A total order on {1..k}; ``rank[x-1]`` is the position of ``x`` (0 smallest).

    The ``s`` largest letters under this order are the s-large ones.
    """

    rank: tuple[int, ...]
    s: int = 0

    def __post_init__(self):
        k = len(self.rank)
        if sorted(self.rank) != list(range(k)):
            raise ValueError(f"rank {self.rank} is not a permutation of 0..{k - 1}")
        if not 0 <= self.s <= k:
            raise ValueError(f"s={self.s} outside 0..{k}")

    @property
    def k(self) -> int:
        return len(self.rank)

    @classmethod
    def natural(cls, k: int, s: int = 0) -> "OrderSpec":
        return cls(tuple(range(k)), s)

    @classmethod
    def reverse(cls, k: int, s: int = 0) -> "OrderSpec":
        return cls(tuple(range(k - 1, -1, -1)), s)

    def key(self, x: int) -> int:
        return self.rank[x - 1]

    def is_large(self, x: int) -> bool:
        return self.rank[x - 1] >= self.k - self.s

    def with_s(self, s: int) -> "OrderSpec":
        return OrderSpec(self.rank, s)


def _syms(w) -> Sequence[int]:
    return w.symbols if isinstance(w, Word) else w


def inversions(w, order: OrderSpec) -> int:
    r = [order.key(x) for x in _syms(w)]
    # count by tallying letters seen so far
    seen = [0] * order.k
    inv = 0
    for x in r:
        inv += sum(seen[x + 1 :])
        seen[x] += 1
    return inv


def descent_set(w, order: OrderSpec) -> tuple[int, ...]:
    s = _syms(w)
    return tuple(
        i for i in range(1, len(s)) if order.key(s[i]) < order.key(s[i - 1])
    )


def maj(w, order: OrderSpec) -> int:
    return sum(descent_set(w, order))


def s_descent_set(w, order: OrderSpec) -> tuple[int, ...]:
    s = _syms(w)
    n = len(s)
    out = []
    for i in range(1, n):
        a, b = order.key(s[i - 1]), order.key(s[i])
        if b < a or (a == b and order.is_large(s[i - 1])):
            out.append(i)
    if n and order.is_large(s[-1]):
        out.append(n)
    return tuple(out)


def des_s(w, order: OrderSpec) -> int:
    return len(s_descent_set(w, order))


def maj_s(w, order: OrderSpec) -> int:
    return sum(s_descent_set(w, order))


def ascent_set(w) -> tuple[int, ...]:
    s = _syms(w)
    return tuple(i for i in range(1, len(s)) if s[i - 1] < s[i])


def aasc(w) -> int:
    return len(ascent_set(w))


def amaj(w) -> int:
    return sum(ascent_set(w))


def beta_ascent_set(w: Word) -> tuple[int, ...]:
    """Ascents, plus plateaus on any letter other than the top letter ``w.k``."""
    s, top = w.symbols, w.k
    return tuple(
        i
        for i in range(1, len(s))
        if s[i - 1] < s[i] or (s[i - 1] == s[i] and s[i] < top)
    )


def basc(w: Word) -> int:
    return len(beta_ascent_set(w))


def bmaj(w: Word) -> int:
    return sum(beta_ascent_set(w))


def beta_weight(w: Word) -> int:
    """``k*bmaj(w) - sum_i (k-i)*b_i`` for ``w`` over {1..k+1}; the size of its β-preimage."""
    k = w.k - 1
    counts = w.counts()
    return k * bmaj(w) - sum((k - i) * counts[i - 1] for i in range(1, k + 1))


def words_of_length(n: int, k: int) -> Iterable[tuple[int, ...]]:
    return product(range(1, k + 1), repeat=n)


def rearrangements(counts: Sequence[int]) -> Iterable[tuple[int, ...]]:
    """All distinct words with ``counts[i]`` copies of letter ``i+1``, in lex order."""
    counts = list(counts)
    total = sum(counts)
    word: list[int] = []

    def rec():
        if len(word) == total:
            yield tuple(word)
            return
        for i, c in enumerate(counts):
            if c:
                counts[i] -= 1
                word.append(i + 1)
                yield from rec()
                word.pop()
                counts[i] += 1

    yield from rec()
