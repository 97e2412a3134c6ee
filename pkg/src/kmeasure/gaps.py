"""Gap-condition partition classes and the word maps that relate them.

Covers k-distinct classes with strict residues, their permuted variants,
the Schur and generalized Schur word bijections, the two permutation
actions (on distinct-part partitions and on weakly increasing block words),
and k-modular diagrams.

Permutations are one-line tuples over ``1..k``: ``pi[r-1]`` is the image of ``r``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Sequence

from .codecs import beta_decode, beta_encode
from .partitions import (
    Partition,
    enumerate_partitions,
    from_parts,
    k_measure,
    to_parts,
)
from .words import Word, in_W, in_W_plus


def _residue(p: int, k: int) -> int:
    """Residue of ``p`` mod ``k`` in ``1..k``."""
    r = p % k
    return r if r else k


def check_perm(pi: Sequence[int], k: int) -> tuple[int, ...]:
    pi = tuple(pi)
    if sorted(pi) != list(range(1, k + 1)):
        raise ValueError(f"{pi} is not a permutation of 1..{k}")
    return pi


def perm_inverse(pi: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(pi)
    for i, x in enumerate(pi, start=1):
        inv[x - 1] = i
    return tuple(inv)


def parse_perm(text: str) -> tuple[int, ...]:
    s = text.strip()
    toks = s.split(",") if "," in s else list(s)
    return tuple(int(t) for t in toks)


def all_perms(k: int):
    return [tuple(p) for p in permutations(range(1, k + 1))]


@dataclass(frozen=True)
class GapClassSpec:
    """Membership rules for a gap class.

    Without ``pi`` this is the class of k-distinct partitions whose parts in
    the residues ``J`` must differ from the next part by more than ``k``.
    With ``pi`` the allowed differences follow the permuted gap sets.
    With ``(M, a, b)`` it is the restricted side of the generalized Schur
    identity (``k`` is then ignored in favour of ``M``).
    """

    k: int
    J: frozenset[int] = field(default_factory=frozenset)
    pi: tuple[int, ...] | None = None
    M: int | None = None
    a: int | None = None
    b: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "J", frozenset(self.J))
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if not self.J <= set(range(1, self.k + 1)):
            raise ValueError(f"J={sorted(self.J)} is not a subset of 1..{self.k}")
        if self.pi is not None:
            object.__setattr__(self, "pi", check_perm(self.pi, self.k))
        if self.M is not None:
            check_genschur(self.M, self.a, self.b)

    @classmethod
    def from_json(cls, obj: dict) -> "GapClassSpec":
        return cls(
            k=int(obj["k"]),
            J=frozenset(obj.get("J", ())),
            pi=tuple(obj["pi"]) if obj.get("pi") else None,
            M=obj.get("M"),
            a=obj.get("a"),
            b=obj.get("b"),
        )


def gap_set(pi: Sequence[int], r: int, k: int) -> tuple[frozenset[int], int]:
    """Finite part and threshold of the allowed differences after a part ``≡ pi(r)``."""
    finite = frozenset(pi[r - 1] + k - pi[j - 1] for j in range(1, r + 1))
    return finite, pi[r - 1] + k


def _in_gap_set(d: int, gs: tuple[frozenset[int], int]) -> bool:
    return d in gs[0] or d >= gs[1]


def in_gap_class(parts: Sequence[int], spec: GapClassSpec) -> bool:
    if spec.M is not None:
        return in_genschur_T(parts, spec.M, spec.a, spec.b)
    k = spec.k
    if any(p < 1 for p in parts):
        return False
    if spec.pi is None:
        for x, y in zip(parts, parts[1:]):
            d = x - y
            if d < k or (d == k and _residue(x, k) in spec.J):
                return False
        return True
    pi = spec.pi
    inv = perm_inverse(pi)
    strict = {pi[j - 1] for j in spec.J}
    for x, y in zip(parts, parts[1:]):
        d = x - y
        v = _residue(x, k)
        if not _in_gap_set(d, gap_set(pi, inv[v - 1], k)):
            return False
        if d == k and v in strict:
            return False
    return True


def word_gap_predicate(w: Word, k: int, J) -> bool:
    """Block-increasing word over ``1..k+1`` with no doubled letter from ``J``."""
    if w.k != k + 1:
        raise ValueError(f"expected a word over 1..{k + 1}, got alphabet {w.k}")
    if not in_W_plus(w):
        return False
    J = set(J)
    return not any(x == y and x in J for x, y in zip(w.symbols, w.symbols[1:]))


# -- Schur and generalized Schur ---------------------------------------------


def check_genschur(M, a, b):
    if M is None or a is None or b is None:
        raise ValueError("M, a and b must all be given")
    if M < 3 or not 0 < a < b < M:
        raise ValueError(f"need M >= 3 and 0 < a < b < M, got M={M}, a={a}, b={b}")


def in_genschur_S(parts: Sequence[int], M: int, a: int, b: int) -> bool:
    return len(set(parts)) == len(parts) and all(p % M in (a % M, b % M) for p in parts)


def in_genschur_T(parts: Sequence[int], M: int, a: int, b: int) -> bool:
    ab = (a + b) % M
    if len(set(parts)) != len(parts):
        return False
    if any(p % M not in (a, b, ab) or p < a for p in parts):
        return False
    for x, y in zip(parts, parts[1:]):
        d = x - y
        if d < M or (d == M and x % M == ab and y % M == ab):
            return False
    return True


def _letters(M, a, b):
    """Letter standing for the residue ``a+b`` in the restricted-side words."""
    return a + b if a + b <= M else a + b - M


def in_genschur_S_word(w: Word, M: int, a: int, b: int) -> bool:
    check_genschur(M, a, b)
    return w.k == M + 1 and in_W(w) and set(w.symbols) <= {a, b, M + 1}


def in_genschur_T_word(w: Word, M: int, a: int, b: int) -> bool:
    check_genschur(M, a, b)
    c = _letters(M, a, b)
    if w.k != M + 1 or not in_W_plus(w) or not set(w.symbols) <= {a, b, c, M + 1}:
        return False
    s = w.symbols
    if any(x == y == c for x, y in zip(s, s[1:])):
        return False
    if a + b > M and s[0] == c:
        return False
    return True


def genschur_map(w: Word, M: int, a: int, b: int) -> Word:
    """Restricted-side word to the plain side (``T -> S``)."""
    if not in_genschur_T_word(w, M, a, b):
        raise ValueError(f"{w} is not a restricted-side word for M={M}, a={a}, b={b}")
    top, s = M + 1, w.symbols
    out: list[int] = []
    if a + b <= M:
        ab, i = a + b, 0
        while i < len(s):
            if s[i] == ab:
                # the next letter is forced to be the top letter
                out += [b, a] if i + 2 < len(s) else [b, a, top]
                i += 2
            else:
                out.append(s[i])
                i += 1
    else:
        c, i = a + b - M, 0
        while i < len(s):
            if s[i] == top and i + 1 < len(s) and s[i + 1] == c:
                out += [b, a]
                i += 2
            else:
                out.append(s[i])
                i += 1
    return Word(tuple(out), top)


def genschur_inverse(w: Word, M: int, a: int, b: int) -> Word:
    """Plain-side word to the restricted side (``S -> T``)."""
    if not in_genschur_S_word(w, M, a, b):
        raise ValueError(f"{w} is not a plain-side word for M={M}, a={a}, b={b}")
    top, s = M + 1, w.symbols
    pair = [a + b, top] if a + b <= M else [top, a + b - M]
    out: list[int] = []
    i = 0
    while i < len(s):
        if i + 1 < len(s) and s[i] == b and s[i + 1] == a:
            out += pair
            # a terminal "b a top" collapses to a single pair when a+b <= M
            i += 3 if a + b <= M and i + 3 == len(s) else 2
        else:
            out.append(s[i])
            i += 1
    return Word(tuple(out), top)


def schur_map(w: Word) -> Word:
    return genschur_map(w, 3, 1, 2)


def schur_inverse(w: Word) -> Word:
    return genschur_inverse(w, 3, 1, 2)


def schur_S(parts: Sequence[int]) -> bool:
    return in_genschur_S(parts, 3, 1, 2)


def schur_T(parts: Sequence[int]) -> bool:
    return in_gap_class(parts, GapClassSpec(3, frozenset({3})))


def schur_counts(n: int, cap: int = 60) -> tuple[int, int]:
    s = t = 0
    for lam in enumerate_partitions(n, distinct=True, cap=cap):
        s += schur_S(lam)
        t += schur_T(lam)
    return s, t


def genschur_counts(n: int, M: int, a: int, b: int, cap: int = 60) -> tuple[int, int]:
    check_genschur(M, a, b)
    s = t = 0
    for lam in enumerate_partitions(n, distinct=True, cap=cap):
        s += in_genschur_S(lam, M, a, b)
        t += in_genschur_T(lam, M, a, b)
    return s, t


def genschur_table(nmax: int, M: int, a: int, b: int, cap: int = 60):
    """``{(n, mu_M): (count on S, count on T)}`` by enumeration of distinct partitions."""
    check_genschur(M, a, b)
    table: dict[tuple[int, int], list[int]] = {}
    for n in range(nmax + 1):
        for lam in enumerate_partitions(n, distinct=True, cap=cap):
            sides = (in_genschur_S(lam, M, a, b), in_genschur_T(lam, M, a, b))
            if any(sides):
                key = (n, k_measure(from_parts(lam), M))
                row = table.setdefault(key, [0, 0])
                row[0] += sides[0]
                row[1] += sides[1]
    return {key: tuple(v) for key, v in sorted(table.items())}


# -- permutation actions -----------------------------------------------------


def pi_act_partition(parts: Sequence[int], k: int, pi: Sequence[int]) -> Partition:
    pi = check_perm(pi, k)
    if len(set(parts)) != len(parts):
        raise ValueError(f"parts must be distinct: {tuple(parts)}")
    out = []
    for p in parts:
        r = _residue(p, k)
        out.append(p - r + pi[r - 1])
    return tuple(sorted(out, reverse=True))


def word_blocks(w: Word) -> list[tuple[tuple[int, ...], int]]:
    """Split a block-increasing word into ``(letter counts, top-letter run)`` pairs."""
    if not in_W_plus(w):
        raise ValueError(f"{w} is not block-increasing")
    top = w.k
    blocks = []
    counts = [0] * (top - 1)
    m = 0
    for x in w.symbols:
        if x == top:
            m += 1
            continue
        if m:
            blocks.append((tuple(counts), m))
            counts, m = [0] * (top - 1), 0
        counts[x - 1] += 1
    blocks.append((tuple(counts), m))
    return blocks


def pi_act_word(w: Word, k: int, pi: Sequence[int]) -> Word:
    pi = check_perm(pi, k)
    if w.k != k + 1:
        raise ValueError(f"expected alphabet {k + 1}, got {w.k}")
    out: list[int] = []
    for counts, m in word_blocks(w):
        for i in range(1, k + 1):
            out += [i] * counts[pi[i - 1] - 1]
        out += [k + 1] * m
    return Word(tuple(out), k + 1)


def pi_composite(parts: Sequence[int], k: int, pi: Sequence[int]) -> Partition:
    w = beta_encode(from_parts(parts), k)
    nu = to_parts(beta_decode(pi_act_word(w, k, pi)))
    return pi_act_partition(nu, k, pi)


# -- k-modular diagrams ------------------------------------------------------


@dataclass(frozen=True)
class ModularDiagram:
    k: int
    rows: tuple[tuple[int, int], ...]  # (cell count, end entry) per part

    @classmethod
    def of(cls, parts: Sequence[int], k: int) -> "ModularDiagram":
        rows = []
        for p in parts:
            cells = -(-p // k)
            rows.append((cells, p - k * (cells - 1)))
        return cls(k, tuple(rows))

    def readoff(self) -> tuple[int, ...]:
        """Bottom entry of each column, or ``k+1`` when that cell is blank."""
        width = self.rows[0][0] if self.rows else 0
        out = []
        for col in range(1, width + 1):
            cells, entry = [r for r in self.rows if r[0] >= col][-1]
            out.append(entry if cells == col else self.k + 1)
        return tuple(out)

    def code(self) -> Word:
        return Word(self.readoff() + (self.k + 1,), self.k + 1)

    def render(self) -> str:
        lines = []
        for cells, entry in self.rows:
            lines.append("[ ]" * (cells - 1) + f"[{entry}]")
        return "\n".join(lines)


def render_modular_diagram(parts: Sequence[int], k: int) -> str:
    return ModularDiagram.of(parts, k).render()
