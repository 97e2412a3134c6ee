"""Acceptance criteria, one PASS/FAIL line each.

Run under pytest (lines appear in the terminal summary) or directly with
``python3 tests/test_acceptance.py``.  A criterion passes only when every
check is exact and it finishes inside its time budget.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass, field
from itertools import combinations, product
from pathlib import Path

import pytest

from kmeasure import gf
from kmeasure.codecs import (
    alpha_apply,
    alpha_decode,
    alpha_encode,
    alpha_unapply,
    beta_apply,
    beta_decode,
    beta_encode,
    beta_unapply,
    burge_composite,
    delta_apply,
    delta_decode,
    delta_encode,
    delta_unapply,
    foata_F,
    format_trace,
    sagan_F,
    selective_shift,
    theta_apply,
    theta_decode,
    theta_encode,
    trace,
)
from kmeasure.gaps import (
    GapClassSpec,
    ModularDiagram,
    all_perms,
    gap_set,
    in_gap_class,
    perm_inverse,
    pi_act_partition,
    pi_act_word,
    pi_composite,
    schur_counts,
    schur_map,
)
from kmeasure.partitions import (
    Frobenius,
    backward_clusters,
    durfee_side,
    enumerate_partitions,
    forward_clusters,
    from_frobenius,
    from_parts,
    hook_lengths,
    k_measure,
    normalize,
    residue_counts,
    to_frobenius,
    to_parts,
)
from kmeasure.verify import IdentityParams, verify_identity
from kmeasure.words import (
    OrderSpec,
    Word,
    aasc,
    amaj,
    ascent_set,
    basc,
    beta_ascent_set,
    beta_weight,
    bmaj,
    in_W_circ,
    inversions,
    maj_s,
    s_descent_set,
)


@dataclass
class Outcome:
    number: int
    title: str
    budget_s: float
    failures: list[str] = field(default_factory=list)
    checks: int = 0
    seconds: float = 0.0

    def check(self, ok: bool, label: str):
        self.checks += 1
        if not ok:
            self.failures.append(label)

    @property
    def passed(self) -> bool:
        return not self.failures and self.seconds < self.budget_s

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} [{self.number}] {self.title}: {self.checks} checks, {self.seconds:.1f}s (budget {self.budget_s:.0f}s)"
        if self.seconds >= self.budget_s:
            text += " -- over budget"
        if self.failures:
            shown = "; ".join(self.failures[:6])
            more = f" (+{len(self.failures) - 6} more)" if len(self.failures) > 6 else ""
            text += f" -- {len(self.failures)} failed: {shown}{more}"
        return text


RESULTS: dict[int, Outcome] = {}


def criterion(number: int, title: str, budget_s: float):
    def wrap(fn):
        def run() -> Outcome:
            out = Outcome(number, title, budget_s)
            t0 = time.perf_counter()
            fn(out)
            out.seconds = time.perf_counter() - t0
            RESULTS[number] = out
            return out

        run.__name__ = fn.__name__
        run.number = number
        return run

    return wrap


# ---------------------------------------------------------------- 1 and 2

ROUND_TRIP_N = 30


@criterion(1, "encode/decode round trips for every partition up to size 30", 60)
def round_trips(out: Outcome):
    for n in range(ROUND_TRIP_N + 1):
        for lam in enumerate_partitions(n):
            f = from_parts(lam)
            for k in (2, 3, 4, 5):
                out.check(alpha_decode(alpha_encode(f, k)) == f, f"alpha k={k} {lam}")
            for k in (2, 3, 4):
                out.check(delta_decode(delta_encode(f, k)) == f, f"delta k={k} {lam}")
            out.check(theta_decode(theta_encode(lam)) == lam, f"theta {lam}")
        for lam in enumerate_partitions(n, distinct=True):
            f = from_parts(lam)
            for k in (1, 2, 3, 4):
                out.check(beta_decode(beta_encode(f, k)) == f, f"beta k={k} {lam}")


@criterion(2, "size, measure and residue counts transported by the codes", 60)
def statistic_transport(out: Outcome):
    for n in range(ROUND_TRIP_N + 1):
        for lam in enumerate_partitions(n):
            f = from_parts(lam)
            for k in (2, 3, 4, 5):
                w = alpha_encode(f, k)
                a = w.counts()
                ok = (
                    residue_counts(lam, k - 1) == a[: k - 1]
                    and n == (k - 1) * amaj(w) - sum((k - 1 - i) * a[i - 1] for i in range(1, k - 1))
                    and k_measure(f, k) == aasc(w)
                )
                out.check(ok, f"alpha k={k} {lam}")
            for k in (2, 3, 4):
                w = delta_encode(f, k)
                a = w.counts()
                ok = (
                    residue_counts(lam, k - 1) == a[: k - 1]
                    and len(lam) == sum(a[: k - 1])
                    and n == (k - 1) * inversions(w, OrderSpec.natural(k))
                    - sum((k - 1 - i) * a[i - 1] for i in range(1, k))
                )
                out.check(ok, f"delta k={k} {lam}")
            w = theta_encode(lam)
            ok = amaj(w) == n and aasc(w) == durfee_side(lam) and w.counts()[0] == len(lam)
            out.check(ok, f"theta {lam}")
        for lam in enumerate_partitions(n, distinct=True):
            f = from_parts(lam)
            for k in (1, 2, 3, 4):
                w = beta_encode(f, k)
                ok = (
                    residue_counts(lam, k) == w.counts()[:k]
                    and n == beta_weight(w)
                    and k_measure(f, k) == basc(w)
                )
                out.check(ok, f"beta k={k} {lam}")


# ---------------------------------------------------------------- 3

BETA_OPS_INPUT = (1, 0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0, 1)


def _alpha_trace_rows():
    """The printed left-hand table, with frequency lists compared without trailing zeros."""
    printed = [
        ("(1,2,1,0,0,1,0,0,0,0,1)", "{3,6,11}", 3),
        ("(2,2,0,1,0,0,0,0,1)", "{1,4,9}", 1),
        ("(1,3,0,0,0,0,1)", "{2,7}", 2),
        ("(1,2,0,0,1)", "{2,5}", 2),
        ("(1,1,1)", "{3}", 3),
        ("(2,1,0)", "{2}", 2),
        ("(2)", "{1}", 1),
        ("(1)", "{1}", 1),
        ("(0)", "", 3),
    ]
    lines = []
    for i, (state, cl, sym) in enumerate(printed, start=1):
        body = state.strip("()").split(",")
        f = normalize(tuple(int(x) for x in body)) if state != "(0)" else ()
        shown = "(" + ",".join(map(str, f)) + ")" if f else "(0)"
        lines.append(f"{i} | {shown} | {cl} | {sym}")
    return "\n".join(lines)


BETA_TRACE = [
    ("(0,1,0,0,1,0,0,0,1,0,1,0,1,1,0,1,0,1,0,0,0,1)", (2, 5, 11, 14, 18, 22), 2),
    ("(0,1,0,0,0,0,0,1,1,0,1,0,1,0,1,1,0,0,1)", (2, 9, 13, 16, 19), 2),
    ("(0,0,0,0,0,1,0,1,0,1,1,0,1,0,1,1)", (6, 10, 13, 16), 4),
    ("(0,0,1,0,0,0,1,1,0,1,1,0,1,0,1)", (3, 8, 11, 15), 3),
    ("(0,0,0,0,1,0,1,1,0,1,0,1,1)", (7, 10, 13), 4),
    ("(0,0,0,1,1,0,1,1,0,1,0,1)", (5, 8, 12), 4),
    ("(0,1,0,1,1,0,1,0,1,1)", (4, 7, 10), 4),
    ("(1,1,0,1,1,0,1,0,1)", (2, 5, 9), 2),
    ("(1,1,0,1,0,1,1)", (1, 4, 7), 1),
    ("(1,1,0,1,0,1)", (2, 6), 2),
    ("(1,0,1,1)", (1, 4), 1),
    ("(1,0,1)", (3,), 3),
    ("(1)", (1,), 1),
    ("(0)", (), 4),
]

DELTA_TRACES = {
    2: ["(1,2,0,0,3)", "(0,2,0,0,3)", "(2,0,0,3)", "(1,0,0,3)", "(0,0,0,3)", "(0,0,3)", "(0,3)",
        "(3)", "(2)", "(1)", "(0)"],
    3: ["(1,2,0,0,3)", "(0,2,0,0,3)", "(0,1,3)", "(3)", "(2)", "(1)", "(0)"],
}

PARTITIONS_OF_5 = [
    ((5,), "424", 2, (0, 1, 0)),
    ((4, 1), "4114", 3, (2, 0, 0)),
    ((3, 2), "324", 2, (0, 1, 1)),
    ((3, 1, 1), "3114", 3, (2, 0, 1)),
    ((2, 2, 1), "2214", 3, (1, 2, 0)),
    ((2, 1, 1, 1), "21114", 4, (3, 1, 0)),
    ((1, 1, 1, 1, 1), "111114", 5, (5, 0, 0)),
]

DISTINCT_NINE = [
    ((9,), "5515", 1, 3),
    ((8, 1), "145", 2, 3),
    ((7, 2), "235", 2, 3),
    ((6, 3), "5325", 1, 3),
    ((6, 2, 1), "2215", 2, 4),
    ((5, 4), "5425", 1, 3),
    ((5, 3, 1), "1315", 2, 4),
    ((4, 3, 2), "4325", 1, 3),
]


def printed_goldens():
    """(label, expected, computed) triples for every printed example."""
    W = Word.parse
    freq12 = (2, 2, 0, 3, 1, 0, 0, 4, 0, 2, 1, 1)
    alpha_ops_input = (2, 2, 1, 3, 1, 0, 0, 4, 0, 2, 0, 1)
    alpha_input = (1, 2, 1, 0, 0, 1, 0, 0, 0, 0, 1)
    ten = from_parts((12, 10, 8, 8, 7, 5, 3, 2, 2, 1))
    beta_peel_input = from_parts((20, 19, 16, 12, 10, 8, 7, 5, 3, 2))
    beta_input = (22, 18, 16, 14, 13, 11, 9, 5, 2)
    modular = (28, 25, 21, 17, 14, 6, 1)
    g = [
        ("frequency list of (5,3,3,1,1,1)", (3, 0, 2, 0, 1), from_parts((5, 3, 3, 1, 1, 1))),
        ("parts of (3,0,2,0,1)", (5, 3, 3, 1, 1, 1), to_parts((3, 0, 2, 0, 1))),
        ("forward clusters k=3", (1, 4, 8, 11), forward_clusters(freq12, 3)),
        ("forward clusters k=4", (1, 5, 10), forward_clusters(freq12, 4)),
        ("backward clusters k=3", (2, 5, 8, 12), backward_clusters(freq12, 3)),
        ("backward clusters k=4", (4, 8, 12), backward_clusters(freq12, 4)),
        ("measure table k=1,2,3", (8, 6, 4), tuple(k_measure(ten, k) for k in (1, 2, 3))),
        ("Durfee (6,5,3,3,1)", 3, durfee_side((6, 5, 3, 3, 1))),
        ("Durfee (5,5,5,2,2,1)", 3, durfee_side((5, 5, 5, 2, 2, 1))),
        ("hooks (5,5,5,2,2,1)", (10, 7, 3), hook_lengths((5, 5, 5, 2, 2, 1))),
        ("hooks (4,3,3,3,1)", (8, 4, 2), hook_lengths((4, 3, 3, 3, 1))),
        ("Frobenius (5,5,5,2,2,1)", "(4,3,2|5,3,0)", str(to_frobenius((5, 5, 5, 2, 2, 1)))),
        ("Frobenius (4,3,3,3,1)", "(3,1,0|4,2,1)", str(to_frobenius((4, 3, 3, 3, 1)))),
        ("partitions of 5", [p for p, *_ in PARTITIONS_OF_5], list(enumerate_partitions(5))),
        ("distinct partitions of 9", [p for p, *_ in DISTINCT_NINE], list(enumerate_partitions(9, distinct=True))),
        ("inv 21211222111", 20, inversions(W("21211222111", 2), OrderSpec.natural(2))),
        ("ascents 322441314", ((3, 6, 8), 3, 17),
         (ascent_set(W("322441314", 4)), aasc(W("322441314", 4)), amaj(W("322441314", 4)))),
        ("ascents 312232113", ((2, 4, 8), 14), (ascent_set(W("312232113", 3)), amaj(W("312232113", 3)))),
        ("beta ascents 322441314", ((2, 3, 6, 8), 4, 19),
         (beta_ascent_set(W("322441314", 4)), basc(W("322441314", 4)), bmaj(W("322441314", 4)))),
        ("beta ascents 22434442121314", (6, 40), (basc(W("22434442121314", 4)), bmaj(W("22434442121314", 4)))),
        ("2-descents 5441324", ((1, 2, 3, 5, 7), 18),
         (s_descent_set(W("5441324", 5), OrderSpec.natural(5, 2)), maj_s(W("5441324", 5), OrderSpec.natural(5, 2)))),
        ("0-descents 5441324", ((1, 3, 5), 9),
         (s_descent_set(W("5441324", 5), OrderSpec.natural(5)), maj_s(W("5441324", 5), OrderSpec.natural(5)))),
        ("weight 22434442121314", 110, beta_weight(W("22434442121314", 4))),
        ("weight 5515", 9, beta_weight(W("5515", 5))),
        ("alpha_3 on a 12-entry list", (1, 2, 2, 2, 1, 1, 0, 3, 0, 3, 0, 0, 0, 1), alpha_apply(alpha_ops_input, 3, 3)),
        ("alpha_1 on a 12-entry list", (3, 1, 1, 4, 0, 0, 1, 3, 0, 3, 0, 0, 0, 1), alpha_apply(alpha_ops_input, 3, 1)),
        ("alpha peel on a 12-entry list", ((2, 1, 2, 3, 0, 1, 0, 3, 0, 3), 2), alpha_unapply(alpha_ops_input, 3)),
        ("alpha code k=3", "312232113", str(alpha_encode(alpha_input, 3))),
        ("alpha code k=4", "2313224", str(alpha_encode(alpha_input, 4))),
        ("alpha decode 131223", (1, 0, 1, 1, 0, 0, 0, 1), alpha_decode(W("131223", 3))),
        ("alpha trace k=3", _alpha_trace_rows(), format_trace(trace("alpha", to_parts(alpha_input), 3))),
        ("beta_4 of (20,19,...)", (22, 20, 19, 15, 11, 10, 8, 7, 5, 3), to_parts(beta_apply(beta_peel_input, 3, 4))),
        ("beta peel of (20,19,...)", (19, 17, 13, 10, 9, 7, 5, 3, 2), to_parts(beta_unapply(beta_peel_input, 3)[0])),
        ("18-entry list beta_4", (0, 0, 1, 1, 0, 1, 1, 0, 0, 1, 0, 1, 0, 0, 1, 1, 0, 1, 1), beta_apply(BETA_OPS_INPUT, 3, 4)),
        ("18-entry list beta_1", (1, 0, 1, 1, 0, 1, 1, 0, 0, 1, 0, 1, 0, 0, 1, 1, 0, 1, 1), beta_apply(BETA_OPS_INPUT, 3, 1)),
        ("18-entry list beta_2", (1, 1, 0, 1, 0, 1, 0, 0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 1), beta_apply(BETA_OPS_INPUT, 3, 2)),
        ("18-entry list beta_3", (1, 0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 1), beta_apply(BETA_OPS_INPUT, 3, 3)),
        ("18-entry list peel", ((1, 0, 1, 1, 0, 0, 1, 0, 1, 0, 0, 1, 1, 0, 1, 1), 3), beta_unapply(BETA_OPS_INPUT, 3)),
        ("beta code of (22,18,...)", "22434442121314", str(beta_encode(from_parts(beta_input), 3))),
        ("beta trace of (22,18,...)", BETA_TRACE,
         [(r.state, r.clusters, r.symbol) for r in trace("beta", beta_input, 3)]),
        ("delta_2", (0, 1, 3, 1, 0, 1, 2, 2, 4), delta_apply((1, 0, 3, 2, 0, 1, 0, 2, 4), 4, 2)),
        ("delta peel", (1, 0, 4, 2, 0, 1, 0, 1), delta_unapply((0, 0, 0, 1, 0, 4, 2, 0, 1, 0, 1), 4)[0]),
        ("selective shift", (1, 0, 3, 4, 2, 6, 0, 5), selective_shift((1, 2, 3, 4, 5, 6), 4, 2)),
        ("delta code k=2", "21211222111", str(delta_encode((1, 2, 0, 0, 3), 2))),
        ("delta code k=3", "3122111", str(delta_encode((1, 2, 0, 0, 3), 3))),
        ("delta code k=4", "41224222", str(delta_encode((1, 2, 0, 0, 3), 4))),
    ]
    for k, states in DELTA_TRACES.items():
        g.append((f"delta trace k={k}", states, [r.state for r in trace("delta", to_parts((1, 2, 0, 0, 3)), k)]))
    for lam, code, am, a in PARTITIONS_OF_5:
        w = alpha_encode(from_parts(lam), 4)
        g.append((f"table of 5 row {lam}", (code, am, a), (str(w), amaj(w), w.counts()[:3])))
    for lam, code, bas, bm in DISTINCT_NINE:
        w = beta_encode(from_parts(lam), 4)
        g.append((f"table of 9 row {lam}", (code, bas, bm), (str(w), basc(w), bmaj(w))))
    foata_input = W("22121112112", 2)
    foata_partition = to_parts(alpha_decode(foata_input))
    g += [
        ("Foata F of 22121112112", "21211222111", str(foata_F(foata_input))),
        ("amaj of 22121112112", 20, amaj(foata_input)),
        ("composite of 22121112112's partition", (5, 5, 5, 2, 2, 1), burge_composite(foata_partition, 2)),
    ]
    fr, chain = Frobenius((), ()), []
    for j in (1, 1, 2, 2, 1, 2, 1, 1):
        fr = theta_apply(fr, j)
        chain.append(from_frobenius(fr))
    g += [
        ("theta chain 11221211", [(1,), (1, 1), (2, 1), (3, 1), (3, 2, 1), (4, 3, 1), (4, 3, 3, 1), (4, 3, 3, 3, 1)], chain),
        ("theta code of (4,3,3,3,1)", "1212212", str(theta_encode((4, 3, 3, 3, 1)))),
        ("gap sets for 132", [({3}, 4), ({5, 3}, 6), ({4, 2, 3}, 5)],
         [(set(a), b) for a, b in (gap_set((1, 3, 2), r, 3) for r in (1, 2, 3))]),
        ("modular example in class J={3}", True, in_gap_class(modular, GapClassSpec(3, {3}))),
        ("modular read-off", "1344223411", "".join(map(str, ModularDiagram.of(modular, 3).readoff()))),
        ("Schur map", "412221121414214", str(schur_map(W("41223413414434", 4)))),
        ("pi on partition", (30, 27, 20, 16, 13, 5, 3), pi_act_partition(modular, 3, (3, 1, 2))),
        ("pi on word", "41124412222334", str(pi_act_word(W("41334411112234", 4), 3, (3, 1, 2)))),
        ("pi composite of (29,24,...)", (29, 23, 20, 16, 15, 4, 3), pi_composite((29, 24, 20, 17, 13, 6, 1), 3, (3, 1, 2))),
    ]
    return g


@criterion(3, "printed worked examples reproduce exactly", 30)
def goldens(out: Outcome):
    for label, expected, got in printed_goldens():
        out.check(expected == got, f"{label}: printed {expected}, computed {got}")


# ---------------------------------------------------------------- 4 and 10

IDENTITY_RUNS = [(ident, k) for ident in ("main1", "main2", "acz1", "acz2") for k in (2, 3, 4)]


@criterion(4, "main and specialized identities to q^25, all coefficients", 300)
def main_identities(out: Outcome):
    for ident, k in IDENTITY_RUNS:
        r = verify_identity(ident, IdentityParams(k=k, qmax=25))
        out.check(r.verified, f"{ident} k={k} {r.mismatch}")


@criterion(10, "corrupted coefficient and shifted product bound are both caught", 600)
def mutations(out: Outcome):
    for mutation in ("coefficient", "pochhammer"):
        for ident, k in IDENTITY_RUNS:
            r = verify_identity(ident, IdentityParams(k=k, qmax=25, mutate=mutation))
            out.check(r.status == "counterexample" and r.mismatch is not None, f"{mutation} {ident} k={k}")


# ---------------------------------------------------------------- 5


def compositions(r, total_max):
    return [a for a in product(range(total_max + 1), repeat=r) if sum(a) <= total_max]


@criterion(5, "rearrangement-class identities and the single-x1 corollary", 120)
def word_identities(out: Outcome):
    for r in (1, 2, 3):
        for a in compositions(r, 7):
            out.check(gf.lhs_distribution(a, "maj") == gf.rhs_distribution(a), f"maj {a}")
            out.check(gf.lhs_distribution(a, "inv") == gf.rhs_distribution(a), f"inv {a}")
            for s in range(r + 1):
                lhs, rhs = gf.lhs_clarke_foata(a, s), gf.rhs_clarke_foata(a, s)
                out.check(lhs.first_mismatch(rhs) is None, f"foata a={a} s={s}")
        for s in sorted({0, r - 1}):
            r_ = verify_identity("cor-foata", IdentityParams(r=r, s=s, qmax=12))
            out.check(r_.verified, f"corollary r={r} s={s} {r_.mismatch}")


# ---------------------------------------------------------------- 6


@criterion(6, "2-measure and Durfee side equidistributed; composite realizes it", 120)
def durfee(out: Outcome):
    r = verify_identity("abd-durfee", IdentityParams(qmax=40))
    out.check(r.verified, f"distribution {r.mismatch}")
    for n in range(41):
        seen = set()
        for lam in enumerate_partitions(n):
            nu = burge_composite(lam, 2)
            ok = sum(nu) == n and len(nu) == len(lam) and durfee_side(nu) == k_measure(from_parts(lam), 2)
            out.check(ok, f"composite {lam} -> {nu}")
            seen.add(nu)
        out.check(len(seen) == sum(1 for _ in enumerate_partitions(n)), f"composite not injective at n={n}")


# ---------------------------------------------------------------- 7


@criterion(7, "Schur to n=60 and generalized Schur to n=40 with measure tracked", 180)
def schur(out: Outcome):
    for n in range(61):
        s, t = schur_counts(n)
        out.check(s == t, f"s_{n}={s} t_{n}={t}")
    r = verify_identity("schur", IdentityParams(qmax=60))
    out.check(r.verified, f"refined Schur {r.mismatch}")
    for M, a, b in [(3, 1, 2), (4, 1, 3), (5, 2, 4), (5, 1, 4)]:
        r = verify_identity("genschur", IdentityParams(qmax=40, M=M, a=a, b=b))
        out.check(r.verified, f"M={M} a={a} b={b} {r.mismatch}")


# ---------------------------------------------------------------- 8


@criterion(8, "permuted-residue composite is a bijection between gap classes", 180)
def permuted_classes(out: Outcome):
    k, nmax = 3, 35
    distinct = {n: list(enumerate_partitions(n, distinct=True)) for n in range(nmax + 1)}
    d3 = GapClassSpec(k)
    subsets = [frozenset(c) for m in range(k + 1) for c in combinations(range(1, k + 1), m)]
    for pi in all_perms(k):
        inv = perm_inverse(pi)
        images = {}
        for n, lams in distinct.items():
            for lam in lams:
                if in_gap_class(lam, d3):
                    nu = pi_composite(lam, k, pi)
                    images[lam] = nu
                    ok = sum(nu) == n and residue_counts(nu, k) == residue_counts(lam, k)
                    out.check(ok, f"pi={pi} {lam} -> {nu}")
        for J in subsets:
            src, dst = GapClassSpec(k, J), GapClassSpec(k, {inv[j - 1] for j in J}, pi=pi)
            for n, lams in distinct.items():
                dom = [lam for lam in lams if in_gap_class(lam, src)]
                img = {images[lam] for lam in dom}
                cod = {nu for nu in lams if in_gap_class(nu, dst)}
                out.check(img == cod and len(img) == len(dom), f"pi={pi} J={sorted(J)} n={n}")


# ---------------------------------------------------------------- 9


@criterion(9, "Foata map: inv(F(w)) = amaj(w), bijective, closed form for k=2", 60)
def foata(out: Outcome):
    for k in (1, 2, 3):
        for n in range(1, 13):
            images = set()
            for body in product(range(1, k), repeat=n - 1):
                w = Word(body + (k,), k)
                v = foata_F(w)
                ok = in_W_circ(v) and inversions(v, OrderSpec.natural(k)) == amaj(w)
                out.check(ok, f"k={k} {w}")
                images.add(v.symbols)
            expected = {(k,) + body for body in product(range(1, k), repeat=n - 1)}
            out.check(images == expected, f"k={k} n={n} image is not all of W-circ")
    for n in range(1, 15):
        for body in product((1,), repeat=0) if n == 1 else product((1, 2), repeat=n - 1):
            if body and body[-1] == 2:
                continue
            w = Word(tuple(body) + (2,), 2)
            out.check(sagan_F(w) == foata_F(w), f"closed form {w}")


ALL = [round_trips, statistic_transport, goldens, main_identities, word_identities, durfee, schur,
       permuted_classes, foata, mutations]


@pytest.mark.parametrize("run", ALL, ids=lambda f: f"criterion_{f.number}_{f.__name__}")
def test_criterion(run):
    out = run()
    print(out.line())
    assert out.passed, out.line()


def main() -> int:
    failed = 0
    for run in ALL:
        out = run()
        print(out.line(), flush=True)
        failed += not out.passed
    return 1 if failed else 0


if __name__ == "__main__":
    sys.path.insert(0, str(Path(__file__).parent))
    sys.exit(main())
