"""Both sides of the generating-function identities, as truncated series.

Right-hand sides are built from Pochhammer products; left-hand sides come
from brute-force enumeration of partitions or words.  Cap choices:

* ``q`` is capped at ``N`` (the primary cap).
* ``z`` is capped at the largest ``m`` whose minimal k-measure-``m``
  partition still has size at most ``N``.
* residue-tracking ``y`` variables are capped at ``N``.
"""

from __future__ import annotations

from math import comb
from typing import Sequence

from .partitions import (
    durfee_side,
    enumerate_partitions,
    from_parts,
    k_measure,
    residue_counts,
)
from .series import (
    PochSpec,
    Ring,
    TruncatedSeries,
    pochhammer,
    pochhammer_inverse,
    q_binomial,
    q_multinomial,
    qq,
)
from .words import OrderSpec, des_s, inversions, maj_s, rearrangements


def z_cap(k: int, N: int) -> int:
    """Largest ``m`` with ``m + k*m*(m-1)/2 <= N``."""
    m = 0
    while (m + 1) + k * (m + 1) * m // 2 <= N:
        m += 1
    return m


def yvars(count: int) -> list[str]:
    return [f"y{i}" for i in range(1, count + 1)]


def ring_main1(k: int, N: int) -> Ring:
    caps = {"q": N, "z": z_cap(k, N)}
    caps.update({v: N for v in yvars(k - 1)})
    return Ring.of(**caps)


def ring_main2(k: int, N: int) -> Ring:
    caps = {"q": N, "z": z_cap(k, N)}
    caps.update({v: N for v in yvars(k)})
    return Ring.of(**caps)


def ring_acz(k: int, N: int) -> Ring:
    return Ring.of(q=N, z=z_cap(k, N), y=N)


def _check_k(k: int):
    if k < 2:
        raise ValueError("k must be >= 2")


def _n_range(ring: Ring, N: int):
    # summands with z^n past the z-cap vanish; the extra margin costs nothing
    zc = ring.caps[ring.index("z")]
    return range(zc + N + 1)


def _z_power(ring: Ring, n: int) -> TruncatedSeries:
    return ring.mono(z=n)


def rhs_main1(k: int, N: int, inclusive: bool = False) -> TruncatedSeries:
    _check_k(k)
    R = ring_main1(k, N)
    s = k - 1
    total = R.zero()
    for n in _n_range(R, N):
        zn = _z_power(R, n)
        if not zn.coeffs:
            continue
        term = zn * pochhammer_inverse(qq(n, step=s), R, inclusive)
        for i, y in enumerate(yvars(k - 1), start=1):
            term = term * pochhammer_inverse(PochSpec({y: 1, "q": i}, {"q": s}, n), R, inclusive)
        total = total + term
    return pochhammer(PochSpec({"z": 1}, {"q": s}, None), R, inclusive) * total


def rhs_main2(k: int, N: int, inclusive: bool = False) -> TruncatedSeries:
    _check_k(k)
    R = ring_main2(k, N)
    total = R.zero()
    for n in _n_range(R, N):
        zn = _z_power(R, n)
        if not zn.coeffs:
            continue
        term = zn * pochhammer_inverse(qq(n, step=k), R, inclusive)
        for i, y in enumerate(yvars(k), start=1):
            term = term * pochhammer(PochSpec({y: 1, "q": i}, {"q": k}, n, coef=-1), R, inclusive)
        total = total + term
    return pochhammer(PochSpec({"z": 1}, {"q": k}, None), R, inclusive) * total


def rhs_acz1(k: int, N: int, inclusive: bool = False) -> TruncatedSeries:
    _check_k(k)
    R = ring_acz(k, N)
    s = k - 1
    total = R.zero()
    for n in _n_range(R, N):
        zn = _z_power(R, n)
        if not zn.coeffs:
            continue
        total = total + (
            zn
            * pochhammer_inverse(qq(n, step=s), R, inclusive)
            * pochhammer_inverse(PochSpec({"y": 1, "q": 1}, {"q": 1}, s * n), R, inclusive)
        )
    return pochhammer(PochSpec({"z": 1}, {"q": s}, None), R, inclusive) * total


def rhs_acz2(k: int, N: int, inclusive: bool = False) -> TruncatedSeries:
    _check_k(k)
    R = ring_acz(k, N)
    total = R.zero()
    for n in _n_range(R, N):
        zn = _z_power(R, n)
        if not zn.coeffs:
            continue
        total = total + (
            zn
            * pochhammer_inverse(qq(n, step=k), R, inclusive)
            * pochhammer(PochSpec({"y": 1, "q": 1}, {"q": 1}, k * n, coef=-1), R, inclusive)
        )
    return pochhammer(PochSpec({"z": 1}, {"q": k}, None), R, inclusive) * total


def _lhs_partitions(k: int, N: int, R: Ring, distinct: bool, modulus: int) -> TruncatedSeries:
    acc: dict[tuple[int, ...], int] = {}
    for n in range(N + 1):
        for lam in enumerate_partitions(n, distinct=distinct, cap=max(N, 1)):
            e = (n, k_measure(from_parts(lam), k)) + residue_counts(lam, modulus)
            acc[e] = acc.get(e, 0) + 1
    return TruncatedSeries(R, acc)


def lhs_main1(k: int, N: int) -> TruncatedSeries:
    _check_k(k)
    return _lhs_partitions(k, N, ring_main1(k, N), False, k - 1)


def lhs_main2(k: int, N: int) -> TruncatedSeries:
    _check_k(k)
    return _lhs_partitions(k, N, ring_main2(k, N), True, k)


def collapse_y(series: TruncatedSeries, k: int) -> TruncatedSeries:
    """Set every ``y_i`` equal to a single ``y``."""
    names = [v for v in series.ring.variables if v.startswith("y")]
    return series.substitute({v: (1, {"y": 1}) for v in names}, ring_acz(k, series.ring.caps[0]))


def lhs_acz1(k: int, N: int) -> TruncatedSeries:
    return collapse_y(lhs_main1(k, N), k)


def lhs_acz2(k: int, N: int) -> TruncatedSeries:
    return collapse_y(lhs_main2(k, N), k)


def lhs_abd(N: int) -> TruncatedSeries:
    """``sum z^{mu_2} q^{|lambda|}`` by enumeration."""
    R = Ring.of(q=N, z=N)
    acc: dict[tuple[int, int], int] = {}
    for n in range(N + 1):
        for lam in enumerate_partitions(n, cap=max(N, 1)):
            e = (n, k_measure(from_parts(lam), 2))
            acc[e] = acc.get(e, 0) + 1
    return TruncatedSeries(R, acc)


def rhs_abd(N: int) -> TruncatedSeries:
    """``sum z^{durfee} q^{|lambda|}`` by enumeration of the other side."""
    R = Ring.of(q=N, z=N)
    acc: dict[tuple[int, int], int] = {}
    for n in range(N + 1):
        for lam in enumerate_partitions(n, cap=max(N, 1)):
            e = (n, durfee_side(lam))
            acc[e] = acc.get(e, 0) + 1
    return TruncatedSeries(R, acc)


# -- rearrangement classes --------------------------------------------------


def word_ring(a: Sequence[int], s: int = 0) -> Ring:
    """Caps that hold every (maj_s, des_s) pair on R(a) exactly."""
    n = sum(a)
    return Ring.of(q=n * (n + 1) // 2, z=n)


def lhs_distribution(a: Sequence[int], stat: str = "maj") -> TruncatedSeries:
    n = sum(a)
    R = Ring.of(q=max(n * (n - 1) // 2, 0))
    order = OrderSpec.natural(len(a))
    fn = maj_s if stat == "maj" else inversions
    acc: dict[tuple[int], int] = {}
    for w in rearrangements(a):
        e = (fn(w, order),)
        acc[e] = acc.get(e, 0) + 1
    return TruncatedSeries(R, acc)


def rhs_distribution(a: Sequence[int]) -> TruncatedSeries:
    n = sum(a)
    return q_multinomial(a, Ring.of(q=max(n * (n - 1) // 2, 0)))


def lhs_clarke_foata(a: Sequence[int], s: int = 0) -> TruncatedSeries:
    R = word_ring(a, s)
    order = OrderSpec.natural(len(a), s)
    acc: dict[tuple[int, int], int] = {}
    for w in rearrangements(a):
        e = (maj_s(w, order), des_s(w, order))
        acc[e] = acc.get(e, 0) + 1
    return TruncatedSeries(R, acc)


def rhs_clarke_foata(a: Sequence[int], s: int = 0, inclusive: bool = False) -> TruncatedSeries:
    r = len(a)
    if not 0 <= s <= r:
        raise ValueError(f"s={s} outside 0..{r}")
    R = word_ring(a, s)
    n = sum(a)
    total = R.zero()
    zc = R.caps[1]
    for m in range(zc + 1):
        term = R.mono(z=m)
        for i in range(r - s):
            term = term * q_binomial(a[i] + m, a[i], R)
        for j in range(r - s, r):
            term = term * R.mono(q=comb(a[j] + 1, 2)) * q_binomial(m, a[j], R)
        total = total + term
    return pochhammer(PochSpec({"z": 1}, {"q": 1}, n + 1), R, inclusive) * total


def rhs_macmahon(a: Sequence[int], inclusive: bool = False) -> TruncatedSeries:
    return rhs_clarke_foata(a, 0, inclusive)


def lhs_macmahon(a: Sequence[int]) -> TruncatedSeries:
    return lhs_clarke_foata(a, 0)


def foata_generating_rhs(r: int, s: int, ring: Ring, shifted: bool = False) -> TruncatedSeries:
    """The ``u``-generating form summed over every composition, in ``ring``.

    ``ring`` carries ``q``, ``z`` and ``u1..ur``.  The denominators are
    ``(u_i; q)_{n+1}``, which is what makes the ``u^a`` coefficient equal to
    the class sum divided by ``(z; q)_{|a|+1}``.  ``shifted=True`` uses
    ``(q u_i; q)_{n+1}`` instead; that multiplies each ``u^a`` coefficient by
    ``q^(a_1 + ... + a_{r-s})``.
    """
    total = ring.zero()
    free_base = {"q": 1} if shifted else {}
    for n in range(ring.caps[ring.index("z")] + 1):
        term = ring.mono(z=n)
        for j in range(r - s + 1, r + 1):
            term = term * pochhammer(PochSpec({f"u{j}": 1, "q": 1}, {"q": 1}, n, coef=-1), ring)
        for i in range(1, r - s + 1):
            base = {f"u{i}": 1, **free_base}
            term = term * pochhammer_inverse(PochSpec(base, {"q": 1}, n + 1), ring)
        total = total + term
    return total


def cor_ring(r: int, Q: int) -> Ring:
    d = 0
    while (d + 1) * (d + 2) // 2 <= Q:
        d += 1
    caps = {"q": Q, "z": d}
    caps.update({f"u{i}": Q for i in range(2, r + 1)})
    return Ring.of(**caps)


def rhs_cor_foata(r: int, s: int, Q: int, inclusive: bool = False) -> TruncatedSeries:
    if not 0 <= s < r:
        raise ValueError(f"need 0 <= s < r, got s={s}, r={r}")
    R = cor_ring(r, Q)
    total = R.zero()
    for n in range(R.caps[1] + Q + 1):
        zn = R.mono(z=n)
        if not zn.coeffs:
            continue
        term = zn * pochhammer_inverse(qq(n), R, inclusive)
        for j in range(r - s + 1, r + 1):
            term = term * pochhammer(PochSpec({f"u{j}": 1, "q": 1}, {"q": 1}, n, coef=-1), R, inclusive)
        for i in range(2, r - s + 1):
            term = term * pochhammer_inverse(PochSpec({f"u{i}": 1, "q": 1}, {"q": 1}, n), R, inclusive)
        total = total + term
    return pochhammer(PochSpec({"z": 1}, {"q": 1}, None), R, inclusive) * total


def lhs_cor_foata(r: int, s: int, Q: int) -> TruncatedSeries:
    """Words over 1..r (natural order) ending in a single 1, with ``maj_s <= Q``."""
    R = cor_ring(r, Q)
    order = OrderSpec.natural(r, s)
    large = [order.is_large(x) for x in range(1, r + 1)]
    acc: dict[tuple[int, ...], int] = {}
    word: list[int] = []

    def record():
        # word = prefix + [1]; prefix is nonempty and ends in a letter other than 1
        full = word + [1]
        e = (maj_s(full, order), des_s(full, order)) + tuple(full.count(x) for x in range(2, r + 1))
        acc[e] = acc.get(e, 0) + 1

    def dfs(partial: int):
        # partial = sum of s-descent positions among adjacent pairs fixed so far
        t = len(word)
        if word and word[-1] != 1 and partial + t <= Q:
            # closing with a single 1 makes position t a descent (1 < word[-1])
            record()
        if t + 1 > Q + 1:
            return
        for x in range(1, r + 1):
            add = 0
            if word:
                p = word[-1]
                if x < p or (x == p and large[p - 1]):
                    add = t
            if partial + add <= Q:
                word.append(x)
                dfs(partial + add)
                word.pop()

    acc[(0, 0) + (0,) * (r - 1)] = 1  # the word "1" itself; x_1 is never s-large here
    dfs(0)
    return TruncatedSeries(R, acc)


def main_from_cor(k: int, N: int, which: str = "main1") -> TruncatedSeries:
    """Push the corollary series through the substitution that yields main1/main2."""
    if which == "main1":
        r, s, scale = k, 0, k - 1
        target = ring_main1(k, N)
        images = {f"u{k + 1 - i}": (1, {f"y{i}": 1, "q": -(k - 1 - i)}) for i in range(1, k)}
    elif which == "main2":
        r, s, scale = k + 1, k, k
        target = ring_main2(k, N)
        images = {f"u{k + 2 - i}": (1, {f"y{i}": 1, "q": -(k - i)}) for i in range(1, k + 1)}
    else:
        raise ValueError(f"unknown target {which!r}")
    src = rhs_cor_foata(r, s, N)
    images["q"] = (1, {"q": scale})
    images["z"] = (1, {"z": 1})
    # the corollary labels letters in increasing order; x_1 is the largest symbol here
    return src.substitute(images, target)
