"""Partition <-> word encodings.

Four families, all built the same way: a set of injective "growth" maps whose
images partition the domain, and a peeling map that undoes whichever one
produced its argument.  Peeling until the empty list and recording which
class each intermediate value fell in gives the code word.

* ``alpha``: all partitions -> words over {1..k} ending in a single k.
* ``beta``:  distinct-part partitions -> words over {1..k+1} ending in a single k+1.
* ``delta``: all partitions -> words over {1..k} starting with k, not ending in k.
* ``theta``: hook-building maps on Frobenius symbols, binary words only.

Frequency lists are 1-based tuples without trailing zeros (see ``partitions``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .partitions import (
    FreqList,
    Frobenius,
    backward_clusters,
    forward_clusters,
    from_frobenius,
    from_parts,
    normalize,
    to_frobenius,
    to_parts,
)
from .words import OrderSpec, Word, in_W, in_W_circ


def _need_k(k: int, least: int):
    if k < least:
        raise ValueError(f"k must be >= {least}, got {k}")


def _bump(g: list[int], idx: int, by: int = 1):
    """Add ``by`` at 1-based ``idx``; indices <= 0 are ignored."""
    if idx < 1:
        return
    if idx > len(g):
        g.extend([0] * (idx - len(g)))
    g[idx - 1] += by


# --------------------------------------------------------------------- alpha


def _alpha_top(f: Sequence[int], k: int) -> list[int]:
    g = list(f)
    for i in forward_clusters(f, k):
        g[i - 1] -= 1
        _bump(g, i + k - 1)
    return g


def alpha_apply(f: Sequence[int], k: int, j: int) -> FreqList:
    _need_k(k, 2)
    if not 1 <= j <= k:
        raise ValueError(f"class index {j} outside 1..{k}")
    if j == k:
        return normalize(_alpha_top(f, k))
    head = list(f[:j]) + [0] * max(0, j - len(f))
    head[j - 1] += 1
    return normalize(head + _alpha_top(f[j:], k))


def alpha_class(f: Sequence[int], k: int, clusters: tuple[int, ...] | None = None) -> int:
    b = backward_clusters(f, k) if clusters is None else clusters
    return b[0] if b and b[0] < k else k


def alpha_peel(f: Sequence[int], k: int, clusters: tuple[int, ...] | None = None) -> FreqList:
    g = list(f)
    for i in backward_clusters(f, k) if clusters is None else clusters:
        g[i - 1] -= 1
        if i > k - 1:
            g[i - k] += 1
    return normalize(g)


def alpha_unapply(f: Sequence[int], k: int) -> tuple[FreqList, int]:
    _need_k(k, 2)
    return alpha_peel(f, k), alpha_class(f, k)


def alpha_encode(f: Sequence[int], k: int) -> Word:
    _need_k(k, 2)
    g = normalize(f)
    out = []
    while g:
        b = backward_clusters(g, k)
        out.append(alpha_class(g, k, b))
        g = alpha_peel(g, k, b)
    out.append(k)
    return Word(tuple(out), k)


def alpha_decode(w: Word) -> FreqList:
    _need_k(w.k, 2)
    if not in_W(w):
        raise ValueError(f"{w} does not end in a single {w.k}")
    f: FreqList = ()
    for j in reversed(w.symbols):
        f = alpha_apply(f, w.k, j)
    return f


# ---------------------------------------------------------------------- beta


def _check_binary(f: Sequence[int]):
    if any(x not in (0, 1) for x in f):
        raise ValueError(f"frequency list {tuple(f)} is not binary (repeated parts)")


def _beta_top(f: Sequence[int], k: int) -> list[int]:
    g = list(f)
    for i in forward_clusters(f, k):
        g[i - 1] -= 1
        _bump(g, i + k)
    return g


def beta_apply(f: Sequence[int], k: int, j: int) -> FreqList:
    _need_k(k, 1)
    _check_binary(f)
    if not 1 <= j <= k + 1:
        raise ValueError(f"class index {j} outside 1..{k + 1}")
    if j == k + 1:
        return normalize(_beta_top(f, k))
    head = list(f[: j - 1]) + [0] * max(0, j - 1 - len(f))
    tail = _beta_top(f[j - 1 :], k) or [0]
    tail[0] += 1
    return normalize(head + tail)


def beta_class(f: Sequence[int], k: int) -> int:
    b = backward_clusters(f, k)
    return b[0] if b and b[0] <= k else k + 1


def beta_peel(f: Sequence[int], k: int) -> FreqList:
    g = list(f)
    for i in backward_clusters(f, k):
        g[i - 1] -= 1
        _bump(g, i - k)
    return normalize(g)


def beta_unapply(f: Sequence[int], k: int) -> tuple[FreqList, int]:
    _need_k(k, 1)
    _check_binary(f)
    return beta_peel(f, k), beta_class(f, k)


def beta_encode(f: Sequence[int], k: int) -> Word:
    _need_k(k, 1)
    _check_binary(f)
    g = normalize(f)
    out = []
    while g:
        out.append(beta_class(g, k))
        g = beta_peel(g, k)
    out.append(k + 1)
    return Word(tuple(out), k + 1)


def beta_decode(w: Word) -> FreqList:
    k = w.k - 1
    _need_k(k, 1)
    if not in_W(w):
        raise ValueError(f"{w} does not end in a single {w.k}")
    f: FreqList = ()
    for j in reversed(w.symbols):
        f = beta_apply(f, k, j)
    return f


# --------------------------------------------------------------------- delta


def _shift_classes(f: Sequence[int], k: int, upto: int, right: bool) -> list[int]:
    """Shift the entries at indices congruent to 1..upto (mod k-1) by k-1 places."""
    return _shift(f, k, {r % (k - 1) for r in range(1, upto + 1)}, right)


def selective_shift(f: Sequence[int], k: int, i: int, right: bool = True) -> FreqList:
    """Move the entries at indices congruent to ``i`` (mod k-1) by k-1 places."""
    _need_k(k, 2)
    if not 1 <= i < k:
        raise ValueError(f"shift class {i} outside 1..{k - 1}")
    return normalize(_shift(f, k, {i % (k - 1)}, right))


def _shift(f: Sequence[int], k: int, moved: set[int], right: bool) -> list[int]:
    m = k - 1
    n = len(f) + (m if right else 0)
    g = list(f) + [0] * (n - len(f))
    for j in range(1, n + 1):
        if j % m in moved:
            src = j - m if right else j + m
            g[j - 1] = f[src - 1] if 1 <= src <= len(f) else 0
    return g


def delta_apply(f: Sequence[int], k: int, j: int) -> FreqList:
    _need_k(k, 2)
    if not 1 <= j <= k:
        raise ValueError(f"class index {j} outside 1..{k}")
    if j == k:
        return normalize(_shift_classes(f, k, k - 1, right=True))
    g = _shift_classes(f, k, j - 1, right=True) if j > 1 else list(f)
    _bump(g, j)
    return normalize(g)


def delta_class(f: Sequence[int], k: int) -> int:
    for i, x in enumerate(f[: k - 1], start=1):
        if x:
            return i
    return k


def delta_peel(f: Sequence[int], k: int) -> FreqList:
    j = delta_class(f, k)
    if j == k:
        return normalize(_shift_classes(f, k, k - 1, right=False))
    g = list(f)
    g[j - 1] -= 1
    if j > 1:
        g = _shift_classes(g, k, j - 1, right=False)
    return normalize(g)


def delta_unapply(f: Sequence[int], k: int) -> tuple[FreqList, int]:
    _need_k(k, 2)
    return delta_peel(f, k), delta_class(f, k)


def delta_encode(f: Sequence[int], k: int) -> Word:
    _need_k(k, 2)
    g = normalize(f)
    out = [k]
    while g:
        out.append(delta_class(g, k))
        g = delta_peel(g, k)
    return Word(tuple(out), k)


def delta_decode(w: Word) -> FreqList:
    _need_k(w.k, 2)
    if not in_W_circ(w):
        raise ValueError(f"{w} must start with {w.k} and not end with it")
    f: FreqList = ()
    for j in reversed(w.symbols[1:]):
        f = delta_apply(f, w.k, j)
    return f


# --------------------------------------------------------------------- theta


def theta_apply(fr: Frobenius, j: int) -> Frobenius:
    a, b = fr.arms, fr.legs
    if j == 1:
        legs = tuple(x + 1 for x in b)
        if not a or a[-1] > 0:
            return Frobenius(a + (0,), legs + (0,))
        return Frobenius(a, legs)
    if j == 2:
        return Frobenius(tuple(x + 1 for x in a), b)
    raise ValueError(f"theta class must be 1 or 2, got {j}")


def theta_unapply(fr: Frobenius) -> tuple[Frobenius, int]:
    a, b = fr.arms, fr.legs
    if not a:
        return fr, 2
    if a[-1] >= 1:
        return Frobenius(tuple(x - 1 for x in a), b), 2
    if b[-1] == 0:
        return Frobenius(a[:-1], tuple(x - 1 for x in b[:-1])), 1
    return Frobenius(a, tuple(x - 1 for x in b)), 1


def theta_encode(parts: Sequence[int]) -> Word:
    fr = to_frobenius(parts)
    out = []
    while fr.depth:
        fr, j = theta_unapply(fr)
        out.append(j)
    out.append(2)
    return Word(tuple(out), 2)


def theta_decode(w: Word) -> tuple[int, ...]:
    if w.k != 2 or not in_W(w):
        raise ValueError(f"{w} is not a binary word ending in a single 2")
    fr = Frobenius((), ())
    for j in reversed(w.symbols):
        fr = theta_apply(fr, j)
    return from_frobenius(fr)


# --------------------------------------------------------------------- Foata


def foata_phi(w: Word, order: OrderSpec) -> Word:
    """Second fundamental transformation: ``inv(phi(w)) == maj(w)`` under ``order``."""
    rank = order.rank
    letter = {r: x for x, r in enumerate(rank, start=1)}
    u: list[int] = []  # ranks, not letters
    for x in w.symbols:
        kx = rank[x - 1]
        if u:
            # cut after every letter on the same side of x as the current last letter
            if u[-1] > kx:
                cuts = [i for i, y in enumerate(u) if y > kx]
            else:
                cuts = [i for i, y in enumerate(u) if y <= kx]
            new: list[int] = []
            start = 0
            for i in cuts:
                new.append(u[i])
                new.extend(u[start:i])
                start = i + 1
            u = new
        u.append(kx)
    return Word(tuple(letter[r] for r in u), w.k)


def foata_F(w: Word) -> Word:
    """Reverse of phi under the reversed alphabet order; maps W_k onto W°_k."""
    if not in_W(w):
        raise ValueError(f"{w} does not end in a single {w.k}")
    v = foata_phi(w, OrderSpec.reverse(w.k))
    return Word(tuple(reversed(v.symbols)), w.k)


def sagan_F(w: Word) -> Word:
    """Closed form of ``foata_F`` on binary words, run-length based."""
    if w.k != 2 or not in_W(w):
        raise ValueError(f"{w} is not a binary word ending in a single 2")
    body = w.symbols[:-1]
    if not body:
        return w
    # body = 2^m0 1^n0 2^m1 1^n1 ... 2^mr 1^nr with m0 >= 0, the rest positive
    runs: list[list[int]] = []
    for x in body:
        if runs and runs[-1][0] == x:
            runs[-1][1] += 1
        else:
            runs.append([x, 1])
    if runs[0][0] == 1:
        runs.insert(0, [2, 0])
    ms = [c for x, c in runs[0::2]]
    ns = [c for x, c in runs[1::2]]
    r = len(ns) - 1
    out: list[int] = []
    for i in range(r, -1, -1):
        out += [2] + [1] * (ns[i] - 1)
    out += [2] * ms[0]
    for i in range(1, r + 1):
        out += [1] + [2] * (ms[i] - 1)
    out.append(1)
    return Word(tuple(out), 2)


def burge_composite(parts: Sequence[int], k: int) -> tuple[int, ...]:
    """Size-preserving bijection: alpha code, then Foata's F, then delta decode."""
    w = alpha_encode(from_parts(parts), k)
    return to_parts(delta_decode(foata_F(w)))


# ------------------------------------------------------------------- schemes


@dataclass(frozen=True)
class Scheme:
    name: str
    encode: Callable[[tuple[int, ...], int], Word]
    decode: Callable[[Word], tuple[int, ...]]
    alphabet: Callable[[int], int]
    min_k: int
    distinct: bool = False


def _theta_enc(parts, k):
    if k != 2:
        raise ValueError("theta scheme only supports k=2")
    return theta_encode(parts)


SCHEMES = {
    "alpha": Scheme(
        "alpha",
        lambda p, k: alpha_encode(from_parts(p), k),
        lambda w: to_parts(alpha_decode(w)),
        lambda k: k,
        2,
    ),
    "beta": Scheme(
        "beta",
        lambda p, k: beta_encode(from_parts(p), k),
        lambda w: to_parts(beta_decode(w)),
        lambda k: k + 1,
        1,
        distinct=True,
    ),
    "delta": Scheme(
        "delta",
        lambda p, k: delta_encode(from_parts(p), k),
        lambda w: to_parts(delta_decode(w)),
        lambda k: k,
        2,
    ),
    "theta": Scheme("theta", _theta_enc, theta_decode, lambda k: 2, 2),
}


def get_scheme(name: str, k: int) -> Scheme:
    try:
        sch = SCHEMES[name]
    except KeyError:
        raise ValueError(f"unknown scheme {name!r}; choose from {sorted(SCHEMES)}") from None
    if k < sch.min_k:
        raise ValueError(f"scheme {name} needs k >= {sch.min_k}")
    if name == "theta" and k != 2:
        raise ValueError("theta scheme only supports k=2")
    return sch


# -------------------------------------------------------------------- traces


@dataclass(frozen=True)
class TraceRow:
    i: int
    state: str
    clusters: tuple[int, ...] | None
    symbol: int | None


def trace(scheme: str, parts: Sequence[int], k: int) -> list[TraceRow]:
    """Step table of the peeling process, one row per intermediate value."""
    get_scheme(scheme, k)
    rows: list[TraceRow] = []
    if scheme == "theta":
        fr = to_frobenius(parts)
        i = 1
        while fr.depth:
            nxt, j = theta_unapply(fr)
            rows.append(TraceRow(i, str(fr), None, j))
            fr, i = nxt, i + 1
        rows.append(TraceRow(i, str(fr), None, 2))
        return rows
    f = from_parts(parts)
    peel, cls, top, ck = {
        "alpha": (alpha_peel, alpha_class, k, k),
        "beta": (beta_peel, beta_class, k + 1, k),
        "delta": (delta_peel, delta_class, None, None),
    }[scheme]
    if scheme == "beta":
        _check_binary(f)
    i = 1
    while f:
        cl = backward_clusters(f, ck) if ck else None
        rows.append(TraceRow(i, _fmt_state(f), cl, cls(f, k)))
        f, i = peel(f, k), i + 1
    rows.append(TraceRow(i, "(0)", () if ck else None, top))
    return rows


def _fmt_state(f: Sequence[int]) -> str:
    return "(" + ",".join(map(str, f)) + ")"


def format_trace(rows: list[TraceRow]) -> str:
    lines = []
    for r in rows:
        cols = [str(r.i), r.state]
        if r.clusters is not None:
            cols.append("{" + ",".join(map(str, r.clusters)) + "}" if r.clusters else "")
        cols.append("" if r.symbol is None else str(r.symbol))
        lines.append(" | ".join(cols).rstrip())
    return "\n".join(lines)
