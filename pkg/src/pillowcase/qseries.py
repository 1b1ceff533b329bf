"""Truncated q-series, Eisenstein series, eta and theta expansions.

Quasimodular fitting and h-asymptotics live in ``quasimodular``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import mpmath

from .shifted import zeta_negative


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def format_fraction(x) -> str:
    """num/den, or a plain integer when the denominator is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(text: str) -> Fraction:
    return Fraction(text.strip())


class RationalSeries:
    """c_0 + c_1 q + ... + c_N q^N with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        self.coeffs = tuple(_frac(c) for c in coeffs)
        if not self.coeffs:
            raise ValueError("a series needs at least one coefficient")

    # construction -----------------------------------------------------
    @classmethod
    def constant(cls, value, order: int) -> "RationalSeries":
        return cls([value] + [0] * order)

    @classmethod
    def monomial(cls, power: int, order: int, coeff=1) -> "RationalSeries":
        c = [0] * (order + 1)
        if power <= order:
            c[power] = coeff
        return cls(c)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def truncate(self, order: int) -> "RationalSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return RationalSeries(self.coeffs[:order + 1])

    # arithmetic -------------------------------------------------------
    def _align(self, other):
        if isinstance(other, RationalSeries):
            n = min(self.order, other.order)
            return self.coeffs[:n + 1], other.coeffs[:n + 1]
        return None

    def __add__(self, other):
        pair = self._align(other)
        if pair is None:
            c = list(self.coeffs)
            c[0] += _frac(other)
            return RationalSeries(c)
        return RationalSeries(a + b for a, b in zip(*pair))

    __radd__ = __add__

    def __neg__(self):
        return RationalSeries(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        pair = self._align(other)
        if pair is None:
            k = _frac(other)
            return RationalSeries(k * c for c in self.coeffs)
        a, b = pair
        n = len(a)
        nz = [(j, y) for j, y in enumerate(b) if y]
        out = [Fraction(0)] * n
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in nz:
                if i + j >= n:
                    break
                out[i + j] += x * y
        return RationalSeries(out)

    __rmul__ = __mul__

    def inverse(self) -> "RationalSeries":
        c0 = self.coeffs[0]
        if c0 == 0:
            raise ZeroDivisionError("series with zero constant term")
        n = len(self.coeffs)
        inv = [Fraction(0)] * n
        inv[0] = 1 / c0
        for i in range(1, n):
            s = sum(self.coeffs[j] * inv[i - j] for j in range(1, i + 1)
                    if self.coeffs[j])
            inv[i] = -s / c0
        return RationalSeries(inv)

    def __truediv__(self, other):
        if isinstance(other, RationalSeries):
            n = min(self.order, other.order)
            return self.truncate(n) * other.truncate(n).inverse()
        return self * (1 / _frac(other))

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = RationalSeries.constant(1, self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, RationalSeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def agrees_with(self, other: "RationalSeries") -> bool:
        n = min(self.order, other.order)
        return self.coeffs[:n + 1] == other.coeffs[:n + 1]

    def substitute_power(self, m: int, order: int | None = None) -> "RationalSeries":
        """f(q^m), truncated at the given order (default m·order)."""
        if order is None:
            order = self.order * m
        if order > self.order * m + m - 1:
            raise ValueError("not enough coefficients for q^m substitution")
        out = [Fraction(0)] * (order + 1)
        for i, c in enumerate(self.coeffs):
            if i * m > order:
                break
            out[i * m] = c
        return RationalSeries(out)

    def derivative(self) -> "RationalSeries":
        """D = q d/dq."""
        return RationalSeries(n * c for n, c in enumerate(self.coeffs))

    def is_even(self) -> bool:
        return all(c == 0 for c in self.coeffs[1::2])

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    # io -----------------------------------------------------------
    def to_json(self) -> dict:
        return {"order": self.order,
                "coeffs": [format_fraction(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "RationalSeries":
        coeffs = [parse_fraction(c) for c in data["coeffs"]]
        if len(coeffs) != data.get("order", len(coeffs) - 1) + 1:
            raise ValueError("order does not match the coefficient count")
        return cls(coeffs)

    def __repr__(self):
        terms = [f"{format_fraction(c)}*q^{i}" for i, c in enumerate(self.coeffs) if c]
        return f"RationalSeries({' + '.join(terms) or '0'} + O(q^{self.order + 1}))"


def product_series(factors: Sequence[tuple[int, Fraction]], order: int) -> RationalSeries:
    """Π_i (1 - q^i)^{e_i} for the (i, e_i) pairs, via logarithmic derivatives.

    Uses n a_n = Σ_k b_k a_{n-k} where b_k = -Σ_{i | k} i e_i.
    """
    b = [Fraction(0)] * (order + 1)
    for i, e in factors:
        e = _frac(e)
        for k in range(i, order + 1, i):
            b[k] -= i * e
    a = [Fraction(0)] * (order + 1)
    a[0] = Fraction(1)
    for n in range(1, order + 1):
        a[n] = sum(b[k] * a[n - k] for k in range(1, n + 1) if b[k]) / n
    return RationalSeries(a)


# ---------------------------------------------------------------- Eisenstein

def divisor_sigma(n: int, k: int) -> int:
    total, d = 0, 1
    while d * d <= n:
        if n % d == 0:
            total += d ** k
            e = n // d
            if e != d:
                total += e ** k
        d += 1
    return total


@lru_cache(maxsize=None)
def eisenstein(weight: int, order: int) -> RationalSeries:
    """E_{2k}(q) = ζ(1-2k)/2 + Σ σ_{2k-1}(n) q^n."""
    if weight < 2 or weight % 2:
        raise ValueError("weight must be a positive even integer")
    const = zeta_negative(weight - 1) / 2
    return RationalSeries([const] + [divisor_sigma(n, weight - 1)
                                     for n in range(1, order + 1)])


def eisenstein_at(weight: int, m: int, order: int) -> RationalSeries:
    """E_weight(q^m) truncated at q^order."""
    base = eisenstein(weight, order // m)
    out = [Fraction(0)] * (order + 1)
    for i, c in enumerate(base.coeffs):
        out[i * m] = c
    return RationalSeries(out)


# ---------------------------------------------------------------- half series

@dataclass(frozen=True)
class HalfSeries:
    """Σ_k c_k q^{offset + k/2}, k = 0..len-1 (exponents stored doubled)."""

    offset: Fraction
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "offset", _frac(self.offset))
        object.__setattr__(self, "coeffs", tuple(_frac(c) for c in self.coeffs))

    @property
    def order2(self) -> int:
        """Largest stored doubled step."""
        return len(self.coeffs) - 1

    @classmethod
    def from_series(cls, s: RationalSeries, offset=0) -> "HalfSeries":
        c = []
        for x in s.coeffs:
            c += [x, Fraction(0)]
        return cls(offset, c[:-1])

    def terms(self) -> dict:
        """Exponent -> coefficient for the non-zero terms."""
        return {self.offset + Fraction(k, 2): c
                for k, c in enumerate(self.coeffs) if c}

    def __mul__(self, other):
        if not isinstance(other, HalfSeries):
            return HalfSeries(self.offset, [c * _frac(other) for c in self.coeffs])
        n = min(len(self.coeffs), len(other.coeffs))
        out = [Fraction(0)] * n
        for i, x in enumerate(self.coeffs[:n]):
            if x:
                for j, y in enumerate(other.coeffs[:n - i]):
                    out[i + j] += x * y
        return HalfSeries(self.offset + other.offset, out)

    def __neg__(self):
        return HalfSeries(self.offset, [-c for c in self.coeffs])

    def coefficient(self, exponent) -> Fraction:
        k = (_frac(exponent) - self.offset) * 2
        if k.denominator != 1 or k < 0 or k >= len(self.coeffs):
            return Fraction(0)
        return self.coeffs[int(k)]


def dedekind_eta(order: int) -> HalfSeries:
    """η(q) = q^{1/24} Π (1 - q^n), up to q^{1/24 + order}."""
    return HalfSeries.from_series(product_series([(i, 1) for i in range(1, order + 1)],
                                                 order), Fraction(1, 24))


def theta_expansion(window: range | Iterable[int], order: int) -> dict:
    """ϑ(x,q) = (x^{1/2} - x^{-1/2}) Π (1-q^m x)(1-q^m/x)/(1-q^m)^2.

    Returns doubled x-exponent -> HalfSeries in q (integer powers up to
    q^order) for every doubled exponent in window.
    """
    # poly: x-exponent -> list of q-coefficients
    poly = {0: [Fraction(1)] + [Fraction(0)] * order}
    for m in range(1, order + 1):
        for shift in (1, -1):
            new = {e: list(c) for e, c in poly.items()}
            for e, c in poly.items():
                tgt = new.setdefault(e + shift, [Fraction(0)] * (order + 1))
                for i in range(order + 1 - m):
                    if c[i]:
                        tgt[i + m] -= c[i]
            poly = new
    denom = product_series([(i, 2) for i in range(1, order + 1)], order).inverse()
    out = {}
    for e2 in window:
        if e2 % 2 == 0:
            raise ValueError("doubled x-exponents must be odd")
        # x^{e2/2} arises as x^{1/2}·x^j, j = (e2-1)/2, and as x^{-1/2}·x^{j+1}
        zero = [0] * (order + 1)
        plus = poly.get((e2 - 1) // 2, zero)
        minus = poly.get((e2 + 1) // 2, zero)
        c = [Fraction(plus[i] - minus[i]) for i in range(order + 1)]
        out[e2] = HalfSeries.from_series(RationalSeries(c) * denom)
    return out


def triple_product_sides(window: Iterable[int], order: int) -> tuple[dict, dict]:
    """Both sides of η^3 ϑ = Σ (-1)^n q^{(n+1/2)^2/2} x^{n+1/2}."""
    eta3 = HalfSeries.from_series(
        product_series([(i, 3) for i in range(1, order + 1)], order), Fraction(1, 8))
    theta = theta_expansion(window, order)
    lhs = {e2: eta3 * theta[e2] for e2 in theta}
    rhs = {}
    for e2 in theta:
        n = (e2 - 1) // 2                       # x^{n + 1/2}
        expo = Fraction((2 * n + 1) ** 2, 8)
        c = [Fraction(0)] * len(lhs[e2].coeffs)
        k = (expo - Fraction(1, 8)) * 2
        if k < len(c):
            c[int(k)] = Fraction((-1) ** (n % 2))
        rhs[e2] = HalfSeries(Fraction(1, 8), c)
    return lhs, rhs


# ---------------------------------------------------------------- numerics

@dataclass(frozen=True)
class Estimate:
    value: float
    error: float

    def __str__(self):
        return f"{self.value:.15g} ± {self.error:.2g}"

    def to_json(self):
        return {"value": self.value, "error": self.error}


class TailBoundError(ArithmeticError):
    pass


def eval_at_h(s: RationalSeries, h, growth: float = 2.565, tol: float | None = None,
              dps: int = 40) -> Estimate:
    """Σ c_n e^{-hn} with a tail bound under |c_n| ≤ A e^{c√n}.

    A is the smallest constant consistent with the known coefficients
    c_1..c_N (so a constant series has zero tail); the
    default growth constant c is π√(2/3), the partition-count rate.
    """
    if h <= 0:
        raise ValueError("h must be positive")
    with mpmath.workdps(dps):
        h = mpmath.mpf(h)
        c = mpmath.mpf(growth)
        total = mpmath.mpf(0)
        amp = mpmath.mpf(0)
        for n, a in enumerate(s.coeffs):
            if a:
                av = mpmath.mpf(a.numerator) / a.denominator
                total += av * mpmath.exp(-h * n)
                if n:
                    amp = max(amp, abs(av) * mpmath.exp(-c * mpmath.sqrt(n)))
        n1 = s.order + 1
        if amp == 0:
            tail = mpmath.mpf(0)
        else:
            ratio = mpmath.exp(c / (2 * mpmath.sqrt(n1)) - h)
            if ratio >= 1:
                raise TailBoundError("series too short for a tail bound at this h")
            tail = amp * mpmath.exp(c * mpmath.sqrt(n1) - h * n1) / (1 - ratio)
        value, err = float(total), float(tail)
    if tol is not None and err > tol:
        raise TailBoundError(f"tail bound {err:.3g} exceeds tolerance {tol:.3g}")
    return Estimate(value, err)


def eisenstein_value(weight: int, t, dps: int = 40):
    """E_weight(e^{-t}) summed until the terms drop below 10^{-dps}."""
    with mpmath.workdps(dps):
        t = mpmath.mpf(t)
        total = mpmath.mpf(zeta_negative(weight - 1).numerator) / \
            zeta_negative(weight - 1).denominator / 2
        n = 1
        while True:
            term = divisor_sigma(n, weight - 1) * mpmath.exp(-t * n)
            total += term
            if term < mpmath.mpf(10) ** (-dps) and n > 5:
                break
            n += 1
        return +total
