"""Partitions, frequency lists, cluster scans, k-measure and hook geometry.

A partition is a tuple of weakly decreasing positive integers.  A frequency
list is a tuple ``f`` with ``f[i-1]`` the multiplicity of the part ``i``;
trailing zeros are never stored, so ``()`` is the empty partition.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

Partition = tuple[int, ...]
FreqList = tuple[int, ...]

DEFAULT_ENUM_CAP = 60
ORACLE_SUBSET_LIMIT = 10**6


def check_partition(parts: Sequence[int]) -> Partition:
    parts = tuple(parts)
    for i, p in enumerate(parts):
        if not isinstance(p, int) or p < 1:
            raise ValueError(f"part {p!r} at position {i + 1} is not a positive integer")
        if i and p > parts[i - 1]:
            raise ValueError(f"parts not weakly decreasing at position {i + 1}: {parts}")
    return parts


def normalize(f: Sequence[int]) -> FreqList:
    n = len(f)
    while n and f[n - 1] == 0:
        n -= 1
    return tuple(f[:n])


def from_parts(parts: Sequence[int]) -> FreqList:
    parts = check_partition(parts)
    if not parts:
        return ()
    f = [0] * parts[0]
    for p in parts:
        f[p - 1] += 1
    return tuple(f)


def to_parts(f: Sequence[int]) -> Partition:
    out: list[int] = []
    for i in range(len(f), 0, -1):
        if f[i - 1] < 0:
            raise ValueError(f"negative multiplicity at index {i}")
        out.extend([i] * f[i - 1])
    return tuple(out)


def size(f: Sequence[int]) -> int:
    return sum(i * m for i, m in enumerate(f, start=1))


def length(f: Sequence[int]) -> int:
    return sum(f)


def residue_counts(parts: Sequence[int], m: int) -> tuple[int, ...]:
    """Counts ``(c_1, ..., c_m)`` of parts congruent to ``i`` mod ``m``.

    Residue 0 is reported in slot ``m``.
    """
    c = [0] * m
    for p in parts:
        c[(p - 1) % m] += 1
    return tuple(c)


def forward_clusters(f: Sequence[int], k: int) -> tuple[int, ...]:
    """Left ends of the greedy left-to-right k-windows starting at nonzero entries."""
    if k < 1:
        raise ValueError("k must be >= 1")
    out = []
    i, n = 1, len(f)
    while i <= n:
        if f[i - 1] > 0:
            out.append(i)
            i += k
        else:
            i += 1
    return tuple(out)


def backward_clusters(f: Sequence[int], k: int) -> tuple[int, ...]:
    """Right ends of the greedy right-to-left k-windows, returned ascending."""
    if k < 1:
        raise ValueError("k must be >= 1")
    out = []
    i = len(f)
    while i >= 1:
        if f[i - 1] > 0:
            out.append(i)
            i -= k
        else:
            i -= 1
    out.reverse()
    return tuple(out)


def k_measure(f: Sequence[int], k: int) -> int:
    return len(forward_clusters(f, k))


def k_measure_oracle(f: Sequence[int], k: int) -> int:
    """Longest k-distinct subpartition, by exhaustive search over part values."""
    values = [i for i, m in enumerate(f, start=1) if m > 0]
    if 2 ** len(values) > ORACLE_SUBSET_LIMIT:
        raise ValueError(f"{len(values)} distinct parts exceed the exhaustive-search guard")
    for r in range(len(values), 0, -1):
        for sub in combinations(values, r):
            if all(b - a >= k for a, b in zip(sub, sub[1:])):
                return r
    return 0


def durfee_side(parts: Sequence[int]) -> int:
    d = 0
    while d < len(parts) and parts[d] >= d + 1:
        d += 1
    return d


def conjugate(parts: Sequence[int]) -> Partition:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > j) for j in range(parts[0]))


@dataclass(frozen=True)
class Frobenius:
    arms: tuple[int, ...]
    legs: tuple[int, ...]

    def __post_init__(self):
        if len(self.arms) != len(self.legs):
            raise ValueError("arms and legs must have equal length")
        for seq in (self.arms, self.legs):
            if any(x < 0 for x in seq) or any(a <= b for a, b in zip(seq, seq[1:])):
                raise ValueError(f"not strictly decreasing nonnegative: {seq}")

    @property
    def depth(self) -> int:
        return len(self.arms)

    def __str__(self):
        return f"({','.join(map(str, self.arms))}|{','.join(map(str, self.legs))})"


def to_frobenius(parts: Sequence[int]) -> Frobenius:
    parts = check_partition(parts)
    d = durfee_side(parts)
    conj = conjugate(parts)
    return Frobenius(
        tuple(parts[i] - i - 1 for i in range(d)),
        tuple(conj[i] - i - 1 for i in range(d)),
    )


def from_frobenius(fr: Frobenius) -> Partition:
    d = fr.depth
    rows = [fr.arms[i] + i + 1 for i in range(d)]
    cols = [fr.legs[i] + i + 1 for i in range(d)]
    # rows below the Durfee square are read off the column lengths
    tail = []
    j = d + 1
    while True:
        r = sum(1 for c in cols if c >= j)
        if r == 0:
            break
        tail.append(r)
        j += 1
    return tuple(rows + tail)


def hook_lengths(parts: Sequence[int]) -> tuple[int, ...]:
    fr = to_frobenius(parts)
    return tuple(a + b + 1 for a, b in zip(fr.arms, fr.legs))


def enumerate_partitions(
    n: int, distinct: bool = False, cap: int = DEFAULT_ENUM_CAP
) -> Iterator[Partition]:
    """Partitions of ``n`` in lexicographically decreasing order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > cap:
        raise ValueError(f"n={n} exceeds enumeration cap {cap}")

    def rec(rest: int, bound: int) -> Iterator[Partition]:
        if rest == 0:
            yield ()
            return
        for p in range(min(rest, bound), 0, -1):
            nxt = p - 1 if distinct else p
            for tail in rec(rest - p, nxt):
                yield (p,) + tail

    yield from rec(n, n)


def partitions_up_to(nmax: int, distinct: bool = False, cap: int = DEFAULT_ENUM_CAP):
    for n in range(nmax + 1):
        yield from enumerate_partitions(n, distinct, cap)


def parse_partition(text: str) -> Partition:
    """Parse ``6,5,3,3,1`` or a frequency list ``f:3,0,2,0,1``."""
    s = text.strip()
    if s.startswith("f:"):
        body = s[2:].strip()
        items = _parse_ints(body)
        if any(x < 0 for x in items):
            raise ValueError("frequency list entries must be nonnegative")
        return to_parts(items)
    if s in ("", "()", "0"):
        return ()
    return check_partition(_parse_ints(s.strip("()")))


def _parse_ints(body: str) -> list[int]:
    if not body:
        return []
    out = []
    for pos, tok in enumerate(body.split(","), start=1):
        try:
            out.append(int(tok.strip()))
        except ValueError:
            raise ValueError(f"bad integer {tok!r} at item {pos}") from None
    return out


def format_partition(parts: Sequence[int]) -> str:
    return ",".join(map(str, parts)) if parts else "()"


def format_freq(f: Sequence[int]) -> str:
    return "f:" + ",".join(map(str, f))
