"""Identity checks: build both sides as truncated series and compare every coefficient."""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field

from . import gf
from .gaps import (
    check_genschur,
    in_genschur_S,
    in_genschur_T,
    schur_S,
    schur_T,
)
from .partitions import enumerate_partitions, from_parts, k_measure
from .series import Ring, TruncatedSeries

SCHEMA_VERSION = 1
MUTATIONS = ("none", "coefficient", "pochhammer")


@dataclass(frozen=True)
class IdentityParams:
    k: int = 2
    qmax: int = 12
    comp: tuple[int, ...] = (2, 1, 1)
    s: int = 0
    r: int = 2
    M: int = 3
    a: int = 1
    b: int = 2
    mutate: str = "none"


@dataclass
class IdentityReport:
    identity: str
    parameters: dict
    caps: dict
    status: str
    mismatch: dict | None = None
    wall_time_s: float = 0.0
    schema: int = SCHEMA_VERSION
    terms: int = field(default=0)

    @property
    def verified(self) -> bool:
        return self.status == "verified"

    def to_json(self, timing: bool = False) -> dict:
        d = asdict(self)
        if not timing:
            d.pop("wall_time_s")
        return d

    def to_text(self, timing: bool = False) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.parameters.items())
        caps = " ".join(f"{v}<={c}" for v, c in self.caps.items())
        lines = [f"{self.identity}: {self.status}", f"  parameters: {params}", f"  caps: {caps}",
                 f"  terms compared: {self.terms}"]
        if self.mismatch:
            m = self.mismatch
            lines.append(f"  first mismatch at {m['exponents']}: lhs={m['lhs']} rhs={m['rhs']}")
        if timing:
            lines.append(f"  wall time: {self.wall_time_s:.3f}s")
        return "\n".join(lines)


def _series_counts(nmax: int, k: int, predicate) -> TruncatedSeries:
    """``sum q^{|lambda|} z^{mu_k}`` over distinct partitions passing ``predicate``."""
    ring = Ring.of(q=nmax, z=nmax)
    acc: dict[tuple[int, int], int] = {}
    for n in range(nmax + 1):
        for lam in enumerate_partitions(n, distinct=True, cap=max(nmax, 1)):
            if predicate(lam):
                e = (n, k_measure(from_parts(lam), k))
                acc[e] = acc.get(e, 0) + 1
    return TruncatedSeries(ring, acc)


def _sides(identity: str, p: IdentityParams) -> tuple[TruncatedSeries, TruncatedSeries, dict]:
    inc = p.mutate == "pochhammer"
    if identity in ("main1", "main2", "acz1", "acz2"):
        lhs = getattr(gf, f"lhs_{identity}")(p.k, p.qmax)
        rhs = getattr(gf, f"rhs_{identity}")(p.k, p.qmax, inclusive=inc)
        return lhs, rhs, {"k": p.k, "qmax": p.qmax}
    if identity == "macmahon":
        return gf.lhs_macmahon(p.comp), gf.rhs_macmahon(p.comp, inclusive=inc), {"comp": list(p.comp)}
    if identity == "clarke-foata":
        lhs = gf.lhs_clarke_foata(p.comp, p.s)
        rhs = gf.rhs_clarke_foata(p.comp, p.s, inclusive=inc)
        return lhs, rhs, {"comp": list(p.comp), "s": p.s}
    if identity == "cor-foata":
        lhs = gf.lhs_cor_foata(p.r, p.s, p.qmax)
        rhs = gf.rhs_cor_foata(p.r, p.s, p.qmax, inclusive=inc)
        return lhs, rhs, {"r": p.r, "s": p.s, "qmax": p.qmax}
    if inc:
        raise ValueError(f"identity {identity!r} has no product side to mutate")
    if identity == "schur":
        lhs = _series_counts(p.qmax, 3, schur_S)
        rhs = _series_counts(p.qmax, 3, schur_T)
        return lhs, rhs, {"qmax": p.qmax}
    if identity == "genschur":
        check_genschur(p.M, p.a, p.b)
        lhs = _series_counts(p.qmax, p.M, lambda lam: in_genschur_S(lam, p.M, p.a, p.b))
        rhs = _series_counts(p.qmax, p.M, lambda lam: in_genschur_T(lam, p.M, p.a, p.b))
        return lhs, rhs, {"M": p.M, "a": p.a, "b": p.b, "qmax": p.qmax}
    if identity == "abd-durfee":
        return gf.lhs_abd(p.qmax), gf.rhs_abd(p.qmax), {"qmax": p.qmax}
    raise ValueError(f"unknown identity {identity!r}; choose from {', '.join(IDENTITIES)}")


IDENTITIES = (
    "main1", "main2", "acz1", "acz2", "macmahon", "clarke-foata",
    "cor-foata", "schur", "genschur", "abd-durfee",
)


def corrupt(series: TruncatedSeries) -> TruncatedSeries:
    """Add one to the coefficient of the largest stored exponent tuple."""
    coeffs = dict(series.coeffs)
    e = max(coeffs) if coeffs else (0,) * len(series.ring.variables)
    coeffs[e] = coeffs.get(e, 0) + 1
    return TruncatedSeries(series.ring, coeffs)


def verify_identity(identity: str, params: IdentityParams | None = None) -> IdentityReport:
    p = params or IdentityParams()
    if p.mutate not in MUTATIONS:
        raise ValueError(f"mutation must be one of {MUTATIONS}")
    t0 = time.perf_counter()
    lhs, rhs, shown = _sides(identity, p)
    if p.mutate == "coefficient":
        rhs = corrupt(rhs)
    if p.mutate != "none":
        shown["mutate"] = p.mutate
    miss = lhs.first_mismatch(rhs)
    caps = dict(zip(lhs.ring.variables, lhs.ring.caps))
    report = IdentityReport(
        identity=identity,
        parameters=shown,
        caps=caps,
        status="verified" if miss is None else "counterexample",
        terms=len(set(lhs.coeffs) | set(rhs.coeffs)),
    )
    if miss is not None:
        e, a, b = miss
        report.mismatch = {"exponents": list(e), "lhs": a, "rhs": b}
    report.wall_time_s = time.perf_counter() - t0
    return report

