"""Quasimodular polynomials, exact fitting and h -> 0 asymptotics.

Generators at step s are E2(q^s), E2(q^{2s}) and E4(q^{2s}); the
default s = 1 gives the ring Q[E2(q), E2(q^2), E4(q^2)].
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

import mpmath

from .qseries import (RationalSeries, divisor_sigma, eisenstein_at,
                      eisenstein_value, format_fraction)

def monomials(max_weight: int) -> list[tuple[int, int, int]]:
    """Exponent triples of weight ≤ max_weight, ordered by weight."""
    out = []
    for a, b, c in product(range(max_weight // 2 + 1), repeat=3):
        w = 2 * a + 2 * b + 4 * c
        if w <= max_weight:
            out.append((w, a, b, c))
    out.sort()
    return [m[1:] for m in out]


def weight_of(mono) -> int:
    a, b, c = mono
    return 2 * a + 2 * b + 4 * c


@dataclass(frozen=True)
class QuasimodularPoly:
    """Σ coeff · E2(q^s)^a E2(q^{2s})^b E4(q^{2s})^c."""

    terms: dict
    step: int = 1

    def __post_init__(self):
        clean = {tuple(k): Fraction(v) for k, v in self.terms.items() if v}
        object.__setattr__(self, "terms", clean)

    @property
    def max_weight(self) -> int:
        return max((weight_of(m) for m in self.terms), default=0)

    def to_series(self, order: int) -> RationalSeries:
        s = self.step
        gens = (eisenstein_at(2, s, order), eisenstein_at(2, 2 * s, order),
                eisenstein_at(4, 2 * s, order))
        total = RationalSeries.constant(0, order)
        for (a, b, c), coeff in self.terms.items():
            term = RationalSeries.constant(coeff, order)
            for g, e in zip(gens, (a, b, c)):
                if e:
                    term = term * g ** e
            total = total + term
        return total

    def value(self, h, dps: int = 40):
        """Numeric value at q = e^{-h}, generators summed to convergence."""
        s = self.step
        with mpmath.workdps(dps):
            g = (eisenstein_value(2, s * h, dps), eisenstein_value(2, 2 * s * h, dps),
                 eisenstein_value(4, 2 * s * h, dps))
            total = mpmath.mpf(0)
            for (a, b, c), coeff in self.terms.items():
                total += mpmath.mpf(coeff.numerator) / coeff.denominator * \
                    g[0] ** a * g[1] ** b * g[2] ** c
            return +total

    def __str__(self):
        s = self.step
        names = (f"E2(q^{s})", f"E2(q^{2 * s})", f"E4(q^{2 * s})")
        parts = []
        for mono in sorted(self.terms, key=lambda m: (-weight_of(m), m)):
            factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, mono) if e]
            c = self.terms[mono]
            if factors and c in (1, -1):
                parts.append(("-" if c < 0 else "") + "*".join(factors))
            else:
                parts.append("*".join([format_fraction(c)] + factors))
        return " + ".join(parts) or "0"

    def to_json(self) -> dict:
        return {"step": self.step,
                "terms": {",".join(map(str, m)): format_fraction(c)
                          for m, c in sorted(self.terms.items())}}


@dataclass(frozen=True)
class FitFailure:
    """No fit exists; residual_index is the first coefficient that breaks it."""

    residual_index: int
    step: int
    max_weight: int

    def __bool__(self):
        return False


class InsufficientOrder(ValueError):
    pass


def _fit_step(s: RationalSeries, max_weight: int, step: int):
    monos = monomials(max_weight)
    usable = s.order // step
    if usable < 2 * len(monos):
        raise InsufficientOrder(
            f"order {s.order} too small: need {2 * len(monos) * step} "
            f"for {len(monos)} monomials at step {step}")
    order = s.order
    cols = [QuasimodularPoly({m: 1}, step).to_series(order).coeffs for m in monos]
    nvar = len(monos)
    pivots: list[tuple[int, list]] = []   # (pivot column, reduced row incl. rhs)
    for n in range(order + 1):
        row = [cols[j][n] for j in range(nvar)] + [s.coeffs[n]]
        for pc, prow in pivots:
            if row[pc]:
                f = row[pc]
                row = [x - f * y for x, y in zip(row, prow)]
        lead = next((j for j in range(nvar) if row[j]), None)
        if lead is None:
            if row[-1]:
                return FitFailure(n, step, max_weight)
            continue
        inv = 1 / row[lead]
        row = [x * inv for x in row]
        reduced = []
        for pc, prow in pivots:
            if prow[lead]:
                f = prow[lead]
                prow = [x - f * y for x, y in zip(prow, row)]
            reduced.append((pc, prow))
        pivots = reduced + [(lead, row)]
    sol = {monos[pc]: prow[-1] for pc, prow in pivots}
    poly = QuasimodularPoly(sol, step)
    if not poly.to_series(order).agrees_with(s):
        raise ArithmeticError("fit does not reproduce the input")
    return poly


def quasimodular_fit(s: RationalSeries, max_weight: int, step: int | None = None):
    """Exact fit of s by a quasimodular polynomial of weight ≤ max_weight.

    With step=None the ring at step 1 is tried first; series supported on
    even powers that do not fit there are retried in the variable q^2.
    Returns a QuasimodularPoly or a FitFailure.
    """
    if max_weight < 0 or max_weight % 2:
        raise ValueError("max_weight must be a non-negative even integer")
    if step is not None:
        return _fit_step(s, max_weight, step)
    first = _fit_step(s, max_weight, 1)
    if first or not s.is_even():
        return first
    try:
        second = _fit_step(s, max_weight, 2)
    except InsufficientOrder:
        return first
    return second if second else first


# ---------------------------------------------------------------- asymptotics

@dataclass(frozen=True)
class PiPolynomial:
    """Σ c_j π^{2j} with rational c_j."""

    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "coeffs",
                           {int(j): Fraction(c) for j, c in self.coeffs.items() if c})

    def __add__(self, other):
        out = dict(self.coeffs)
        for j, c in other.coeffs.items():
            out[j] = out.get(j, 0) + c
        return PiPolynomial(out)

    def __mul__(self, other):
        if not isinstance(other, PiPolynomial):
            return PiPolynomial({j: c * Fraction(other) for j, c in self.coeffs.items()})
        out: dict = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                out[i + j] = out.get(i + j, 0) + a * b
        return PiPolynomial(out)

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __bool__(self):
        return bool(self.coeffs)

    def value(self, dps: int = 40):
        with mpmath.workdps(dps):
            return +sum((mpmath.mpf(c.numerator) / c.denominator * mpmath.pi ** (2 * j)
                         for j, c in self.coeffs.items()), mpmath.mpf(0))

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for j in sorted(self.coeffs, reverse=True):
            c = self.coeffs[j]
            pi = "" if j == 0 else ("π^2" if j == 1 else f"π^{2 * j}")
            if not pi:
                parts.append(format_fraction(c))
            elif c == 1:
                parts.append(pi)
            else:
                parts.append(f"{format_fraction(c)}·{pi}")
        return " + ".join(parts)

    def to_json(self):
        return {str(2 * j): format_fraction(c) for j, c in sorted(self.coeffs.items())}


@dataclass(frozen=True)
class LaurentAsymptotics:
    """Σ_e P_e(π²) h^{-e}, modulo exponentially small terms."""

    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms",
                           {int(e): p for e, p in self.terms.items() if p})

    @classmethod
    def constant(cls, c) -> "LaurentAsymptotics":
        return cls({0: PiPolynomial({0: c})})

    def __add__(self, other):
        out = dict(self.terms)
        for e, p in other.terms.items():
            out[e] = out[e] + p if e in out else p
        return LaurentAsymptotics(out)

    def __mul__(self, other):
        if not isinstance(other, LaurentAsymptotics):
            return LaurentAsymptotics({e: p * other for e, p in self.terms.items()})
        out: dict = {}
        for e1, p1 in self.terms.items():
            for e2, p2 in other.terms.items():
                out[e1 + e2] = out[e1 + e2] + p1 * p2 if e1 + e2 in out else p1 * p2
        return LaurentAsymptotics(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = LaurentAsymptotics.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def leading(self) -> tuple[int, PiPolynomial]:
        """Most singular term (exponent e of h^{-e}, coefficient)."""
        if not self.terms:
            return 0, PiPolynomial()
        e = max(self.terms)
        return e, self.terms[e]

    def coefficient(self, e: int) -> PiPolynomial:
        return self.terms.get(e, PiPolynomial())

    def value(self, h, dps: int = 40):
        with mpmath.workdps(dps):
            h = mpmath.mpf(h)
            return +sum((p.value(dps) * h ** (-e) for e, p in self.terms.items()),
                        mpmath.mpf(0))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            p = self.terms[e]
            scale = "" if e == 0 else (f"/h^{e}" if e > 0 else f"·h^{-e}")
            parts.append(f"({p}){scale}" if scale else f"({p})")
        return " + ".join(parts)

    def to_json(self):
        return {str(e): p.to_json() for e, p in sorted(self.terms.items())}


def eisenstein_law(weight: int, m: int) -> LaurentAsymptotics:
    """Expansion of E_weight(e^{-m h}) for weight 2 or 4, modulo e.s.t."""
    if weight == 2:
        return LaurentAsymptotics({2: PiPolynomial({1: Fraction(1, 6 * m * m)}),
                                   1: PiPolynomial({0: Fraction(-1, 2 * m)})})
    if weight == 4:
        return LaurentAsymptotics({4: PiPolynomial({2: Fraction(1, 15 * m ** 4)})})
    raise ValueError("only weights 2 and 4 are needed")


def asymptotics(p: QuasimodularPoly) -> LaurentAsymptotics:
    s = p.step
    laws = (eisenstein_law(2, s), eisenstein_law(2, 2 * s), eisenstein_law(4, 2 * s))
    total = LaurentAsymptotics()
    for mono, coeff in p.terms.items():
        term = LaurentAsymptotics.constant(coeff)
        for law, e in zip(laws, mono):
            term = term * law ** e
        total = total + term
    return total


def eisenstein_correction(weight: int, t, dps: int = 40):
    """E_weight(e^{-t}) minus its Laurent law: the exponentially small part."""
    with mpmath.workdps(dps):
        t = mpmath.mpf(t)
        tp = 4 * mpmath.pi ** 2 / t
        if weight == 2:
            s = sum(mpmath.mpf(divisor_sigma(n, 1)) * mpmath.exp(-tp * n) for n in range(1, 60))
            return -4 * mpmath.pi ** 2 / t ** 2 * s
        if weight == 4:
            s = sum(mpmath.mpf(divisor_sigma(n, 3)) * mpmath.exp(-tp * n) for n in range(1, 60))
            return 16 * mpmath.pi ** 4 / t ** 4 * s
    raise ValueError("only weights 2 and 4 are supported")

