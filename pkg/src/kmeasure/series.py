"""Exact multivariate power series truncated per variable.

A ``Ring`` fixes the variable names and a maximum exponent for each; a
``TruncatedSeries`` is a sparse ``{exponent tuple: int}`` map over a ring.
Every product drops terms above any cap, which is a ring homomorphism onto
the quotient, so coefficients inside the caps are always exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping


@dataclass(frozen=True)
class Ring:
    variables: tuple[str, ...]
    caps: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "caps", tuple(self.caps))
        if len(self.variables) != len(self.caps):
            raise ValueError("one cap per variable")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable names in {self.variables}")
        if any(c < 0 for c in self.caps):
            raise ValueError("caps must be nonnegative")

    @classmethod
    def of(cls, **caps: int) -> "Ring":
        return cls(tuple(caps), tuple(caps.values()))

    def index(self, var: str) -> int:
        try:
            return self.variables.index(var)
        except ValueError:
            raise KeyError(f"variable {var!r} not in {self.variables}") from None

    def exps(self, mono: Mapping[str, int]) -> tuple[int, ...]:
        e = [0] * len(self.variables)
        for v, x in mono.items():
            e[self.index(v)] += x
        return tuple(e)

    def fits(self, e: tuple[int, ...]) -> bool:
        return all(0 <= x <= c for x, c in zip(e, self.caps))

    def zero(self) -> "TruncatedSeries":
        return TruncatedSeries(self, {})

    def one(self) -> "TruncatedSeries":
        return self.mono()

    def mono(self, coef: int = 1, **exps: int) -> "TruncatedSeries":
        e = self.exps(exps)
        return TruncatedSeries(self, {e: coef} if coef and self.fits(e) else {})

    def geometric(self, coef: int = 1, **exps: int) -> "TruncatedSeries":
        """``1 / (1 - coef * x)`` for a monomial ``x`` with positive degree."""
        step = self.exps(exps)
        if not any(step):
            raise ValueError("geometric series needs a non-constant monomial")
        out = {}
        e, c = (0,) * len(step), 1
        while self.fits(e):
            out[e] = c
            e = tuple(a + b for a, b in zip(e, step))
            c *= coef
        return TruncatedSeries(self, out)


@dataclass
class TruncatedSeries:
    ring: Ring
    coeffs: dict[tuple[int, ...], int] = field(default_factory=dict)

    def __post_init__(self):
        self.coeffs = {e: c for e, c in self.coeffs.items() if c and self.ring.fits(e)}

    # -- access ---------------------------------------------------------

    def coefficient(self, exps=None, **named: int) -> int:
        if exps is None:
            exps = self.ring.exps(named)
        elif isinstance(exps, Mapping):
            exps = self.ring.exps(exps)
        return self.coeffs.get(tuple(exps), 0)

    def __len__(self):
        return len(self.coeffs)

    def items(self):
        return sorted(self.coeffs.items())

    # -- arithmetic -----------------------------------------------------

    def _check(self, other: "TruncatedSeries"):
        if other.ring != self.ring:
            raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.mono(other)
        self._check(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return TruncatedSeries(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.ring, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries(self.ring, {e: c * other for e, c in self.coeffs.items()})
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        caps = self.ring.caps
        nv = len(caps)
        out: dict[tuple[int, ...], int] = {}
        get = out.get
        bitems = list(b.items())
        for ea, ca in a.items():
            room = [c - x for c, x in zip(caps, ea)]
            for eb, cb in bitems:
                ok = True
                for i in range(nv):
                    if eb[i] > room[i]:
                        ok = False
                        break
                if ok:
                    e = tuple(x + y for x, y in zip(ea, eb))
                    out[e] = get(e, 0) + ca * cb
        return TruncatedSeries(self.ring, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    # -- structure changes ----------------------------------------------

    def truncate(self, ring: Ring) -> "TruncatedSeries":
        """Reinterpret in ``ring`` (same variables, possibly smaller caps)."""
        if ring.variables != self.ring.variables:
            raise ValueError("truncate keeps the variable list; use substitute to rename")
        return TruncatedSeries(ring, dict(self.coeffs))

    def substitute(
        self, images: Mapping[str, tuple[int, Mapping[str, int]]], ring: Ring
    ) -> "TruncatedSeries":
        """Replace each variable by ``coef * monomial`` in the target ring.

        Monomials may carry negative exponents (Laurent); a nonzero result
        coefficient at a negative exponent raises.  Variables missing from
        ``images`` map to the same-named target variable.
        """
        src = self.ring.variables
        coefs, rows = [], []
        for v in src:
            coef, mono = images.get(v, (1, {v: 1}))
            coefs.append(coef)
            rows.append(ring.exps(mono) if mono else (0,) * len(ring.variables))
        out: dict[tuple[int, ...], int] = {}
        for e, c in self.coeffs.items():
            t = [0] * len(ring.variables)
            for x, row, k in zip(e, rows, coefs):
                if x:
                    c *= k**x
                    for j, y in enumerate(row):
                        t[j] += x * y
            key = tuple(t)
            out[key] = out.get(key, 0) + c
        neg = [e for e, c in out.items() if c and any(x < 0 for x in e)]
        if neg:
            raise ValueError(f"substitution left negative exponents, e.g. {min(neg)}")
        return TruncatedSeries(ring, out)

    def first_mismatch(self, other: "TruncatedSeries"):
        """Smallest exponent tuple where coefficients differ, with both values."""
        self._check(other)
        diff = [e for e in set(self.coeffs) | set(other.coeffs)
                if self.coeffs.get(e, 0) != other.coeffs.get(e, 0)]
        if not diff:
            return None
        e = min(diff)
        return e, self.coeffs.get(e, 0), other.coeffs.get(e, 0)

    # -- serialization --------------------------------------------------

    def to_text(self) -> str:
        head = "# " + " ".join(f"{v}<={c}" for v, c in zip(self.ring.variables, self.ring.caps))
        lines = [head]
        for e, c in self.items():
            lines.append(f"({', '.join(map(str, e))}): {c}")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "variables": list(self.ring.variables),
            "caps": list(self.ring.caps),
            "terms": [[list(e), c] for e, c in self.items()],
        }

    @classmethod
    def from_json(cls, data) -> "TruncatedSeries":
        if isinstance(data, str):
            data = json.loads(data)
        ring = Ring(tuple(data["variables"]), tuple(data["caps"]))
        return cls(ring, {tuple(e): c for e, c in data["terms"]})


def product(factors: Iterable[TruncatedSeries], ring: Ring) -> TruncatedSeries:
    out = ring.one()
    for f in factors:
        out = out * f
    return out


@dataclass(frozen=True)
class PochSpec:
    """``(a; s)_n`` with ``a = coef * base`` and step monomial ``s``; ``n=None`` is infinite."""

    base: Mapping[str, int]
    step: Mapping[str, int]
    n: int | None
    coef: int = 1

    def __post_init__(self):
        if not any(x > 0 for x in self.step.values()):
            raise ValueError("step monomial must have positive degree")
        if self.n is not None and self.n < 0:
            raise ValueError("order must be nonnegative")


def _poch_terms(spec: PochSpec, ring: Ring, inclusive: bool):
    """Exponent vectors of ``a * s^i`` for each factor index that survives the caps."""
    base, step = ring.exps(spec.base), ring.exps(spec.step)
    stop = spec.n + (1 if inclusive else 0) if spec.n is not None else None
    i = 0
    while stop is None or i < stop:
        e = tuple(b + i * s for b, s in zip(base, step))
        if not ring.fits(e):
            # every later factor also exceeds a cap; those factors are 1 mod the caps
            if all(x >= 0 for x in e):
                break
        else:
            yield e
        i += 1


def pochhammer(spec: PochSpec, ring: Ring, inclusive: bool = False) -> TruncatedSeries:
    """``prod_{i=0}^{n-1} (1 - a s^i)``; ``inclusive`` runs to ``i = n`` instead."""
    out = ring.one()
    for e in _poch_terms(spec, ring, inclusive):
        out = out * TruncatedSeries(ring, {(0,) * len(e): 1, e: -spec.coef})
    return out


def pochhammer_inverse(spec: PochSpec, ring: Ring, inclusive: bool = False) -> TruncatedSeries:
    out = ring.one()
    for e in _poch_terms(spec, ring, inclusive):
        named = dict(zip(ring.variables, e))
        out = out * ring.geometric(spec.coef, **named)
    return out


def qq(n: int | None, var: str = "q", step: int = 1) -> PochSpec:
    """``(q^step; q^step)_n``."""
    return PochSpec({var: step}, {var: step}, n)


def q_binomial(c: int, d: int, ring: Ring, var: str = "q") -> TruncatedSeries:
    if not c >= d >= 0:
        return ring.zero()
    return (
        pochhammer(qq(c, var), ring)
        * pochhammer_inverse(qq(d, var), ring)
        * pochhammer_inverse(qq(c - d, var), ring)
    )


def q_multinomial(parts, ring: Ring, var: str = "q") -> TruncatedSeries:
    out = pochhammer(qq(sum(parts), var), ring)
    for a in parts:
        out = out * pochhammer_inverse(qq(a, var), ring)
    return out
