"""Pillowcase weights, g_ν, expectations and the asymptotic diagnostics."""

from __future__ import annotations

import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

import mpmath

from .characters import (centralizer, character, class_data, f_eta, pad)
from .observables import (Poly, evaluate_monomial, expand,
                          parse_observable)
from .partitions import (Partition, balanced_partitions_of, dimension,
                         hook_multiset, is_balanced, partition_count,
                         partitions_of, two_quotient, unit_slopes, sigma)
from .qseries import Estimate, RationalSeries, product_series
from .shifted import falling_factorial, shifted_schur

# ---------------------------------------------------------------- weights


def weight_def(lam) -> Fraction:
    """(dim λ/|λ|!)^2 f_{(2,...,2)}(λ)^4."""
    lam = Partition.coerce(lam)
    n = lam.size
    if n % 2:
        return Fraction(0)
    f = f_eta(pad((), n, 2), lam)
    return (Fraction(dimension(lam), factorial(n))) ** 2 * f ** 4


def weight_hooks(lam) -> Fraction:
    """(Π odd hooks / Π even hooks)^2 on balanced λ, zero otherwise."""
    hooks = hook_multiset(lam)
    odd = [h for h in hooks if h % 2]
    even = [h for h in hooks if h % 2 == 0]
    if len(odd) != len(even):
        return Fraction(0)
    return Fraction(math.prod(odd), math.prod(even)) ** 2


@dataclass(frozen=True)
class PillowcaseWeight:
    value: Fraction
    partition: Partition


def pillowcase_weight(lam) -> PillowcaseWeight:
    lam = Partition.coerce(lam)
    return PillowcaseWeight(weight_hooks(lam), lam)


# ---------------------------------------------------------------- g_ν

def _check_nu(nu: Partition):
    if nu.size % 2 or any(p % 2 == 0 for p in nu):
        raise ValueError(f"ν must have even size and odd parts: {nu}")


def _check_g_args(nu, lam):
    nu, lam = Partition.coerce(nu), Partition.coerce(lam)
    _check_nu(nu)
    if lam.size % 2 or nu.size > lam.size:
        raise ValueError("need |λ| even and |ν| ≤ |λ|")
    if not is_balanced(lam):
        raise ZeroDivisionError("zero denominator: λ is unbalanced")
    return nu, lam


def g_nu_direct(nu, lam) -> Fraction:
    """f_{(ν,2,...,2)}(λ) / f_{(2,...,2)}(λ)."""
    nu, lam = _check_g_args(nu, lam)
    n = lam.size
    full = pad(nu, n, 2)
    twos = pad((), n, 2)
    num = class_data(full).class_size * character(lam, full)
    den = class_data(twos).class_size * character(lam, twos)
    return Fraction(num, den)


def g_nu_formula(nu, lam) -> Fraction:
    """(2^{|ν|/2}/z(ν)) Σ_μ σ_μ χ^μ(ν) s*_a(α) s*_b(β) over balanced μ ⊆ λ."""
    nu, lam = _check_g_args(nu, lam)
    tq = two_quotient(lam)
    total = Fraction(0)
    for mu in balanced_partitions_of(nu.size):
        if not lam.contains(mu):
            continue
        chi = character(mu, nu)
        if not chi:
            continue
        sub = two_quotient(mu)
        total += sigma(mu) * chi * shifted_schur(sub.alpha, tq.alpha) * \
            shifted_schur(sub.beta, tq.beta)
    return Fraction(2 ** (nu.size // 2), centralizer(nu)) * total


# ---------------------------------------------------------------- measures

MEASURES = ("pillowcase", "uniform")


class BudgetExceeded(ValueError):
    pass


def measure_size_count(measure: str, n: int) -> int:
    """Number of partitions the enumeration visits at size n."""
    if measure == "uniform":
        return partition_count(n)
    if n % 2:
        return 0
    half = n // 2
    return sum(partition_count(k) * partition_count(half - k) for k in range(half + 1))


def _check_budget(measure: str, top: int, budget: int):
    if top > budget:
        est = sum(measure_size_count(measure, k) for k in range(top + 1))
        raise BudgetExceeded(
            f"size {top} exceeds the enumeration budget {budget} "
            f"(about {est} partitions would be visited)")


@lru_cache(maxsize=None)
def measure_support(measure: str, n: int) -> tuple:
    """(λ, weight) pairs at size n with non-zero weight."""
    if measure == "uniform":
        return tuple((lam, Fraction(1)) for lam in partitions_of(n))
    if measure == "pillowcase":
        return tuple((lam, weight_hooks(lam)) for lam in balanced_partitions_of(n))
    raise ValueError(f"unknown measure {measure!r}")


@lru_cache(maxsize=None)
def normalizer_series(measure: str, order: int) -> RationalSeries:
    """Z(q) = Π(1-q^{2i})^{-1/2} or Π(1-q^i)^{-1}, from the product."""
    if measure == "pillowcase":
        return product_series([(2 * i, Fraction(-1, 2))
                               for i in range(1, order // 2 + 1)], order)
    if measure == "uniform":
        return product_series([(i, -1) for i in range(1, order + 1)], order)
    raise ValueError(f"unknown measure {measure!r}")


def _sums_at(args) -> list:
    measure, n, monos = args
    out = [Fraction(0)] * len(monos)
    for lam, w in measure_support(measure, n):
        for i, m in enumerate(monos):
            out[i] += w * evaluate_monomial(m, lam)
    return out


def _size_sums(measure: str, n: int, monos, norm_n: Fraction) -> list:
    lam = Partition((n,)) if n else Partition()
    return [norm_n * evaluate_monomial(m, lam) for m in monos]


@dataclass(frozen=True)
class ExpectationQuery:
    observable: str
    measure: str = "pillowcase"
    mode: str = "qseries"          # 'qseries' or 'fixed_n'
    size: int = 30                 # N for qseries, n for fixed_n
    threads: int = 1
    budget: int | None = None


DEFAULT_QSERIES_BUDGET = 30
DEFAULT_FIXED_BUDGET = 40


def expectation(query: ExpectationQuery):
    """Exact expectation: a Fraction (fixed_n) or a RationalSeries (qseries)."""
    if query.measure not in MEASURES:
        raise ValueError(f"unknown measure {query.measure!r}")
    if query.mode not in ("qseries", "fixed_n"):
        raise ValueError(f"unknown mode {query.mode!r}")
    node = query.observable
    if isinstance(node, str):
        node = parse_observable(node)
    engine = _Engine(query)
    return engine.mean(expand(node, engine.mean))


class _Engine:
    def __init__(self, q: ExpectationQuery):
        self.q = q
        if q.mode == "qseries":
            self.sizes = list(range(q.size + 1))
            self.budget = q.budget if q.budget is not None else DEFAULT_QSERIES_BUDGET
            self.norm = normalizer_series(q.measure, q.size)
        else:
            self.sizes = [q.size]
            self.budget = q.budget if q.budget is not None else DEFAULT_FIXED_BUDGET
            if q.measure == "pillowcase":
                z = normalizer_series("pillowcase", q.size)[q.size]
            else:
                z = Fraction(partition_count(q.size))
            if z == 0:
                raise ValueError(f"the {q.measure} measure has no mass at n = {q.size}")
            self.z = z

    def _sums(self, monos) -> dict:
        """size -> list of Σ_λ w(λ) m(λ), one entry per monomial."""
        q = self.q
        if all(a.size_only() for m in monos for a, _ in m):
            if q.mode == "qseries":
                return {n: _size_sums(q.measure, n, monos, self.norm[n])
                        for n in self.sizes}
            return {q.size: _size_sums(q.measure, q.size, monos, self.z)}
        _check_budget(q.measure, max(self.sizes), self.budget)
        jobs = [(q.measure, n, monos) for n in self.sizes]
        if q.threads > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(max_workers=q.threads) as pool:
                results = list(pool.map(_sums_at, jobs))
        else:
            results = [_sums_at(j) for j in jobs]
        return dict(zip(self.sizes, results))

    def mean(self, poly: Poly):
        monos = list(poly.terms)
        sums = self._sums(monos)
        q = self.q
        if q.mode == "fixed_n":
            total = Fraction(0)
            for i, m in enumerate(monos):
                total += poly.terms[m] * sums[q.size][i] / self.z
            return total
        total = RationalSeries.constant(0, q.size)
        for i, m in enumerate(monos):
            s = RationalSeries([sums[n][i] for n in self.sizes]) / self.norm
            total = total + s * poly.terms[m]
        return total


def expect(observable: str, measure: str = "pillowcase", order: int | None = None,
           n: int | None = None, **kw):
    """Shorthand: expect('p1^2', order=30) or expect('p2', n=2)."""
    if (order is None) == (n is None):
        raise ValueError("give exactly one of order and n")
    if order is not None:
        return expectation(ExpectationQuery(observable, measure, "qseries", order, **kw))
    return expectation(ExpectationQuery(observable, measure, "fixed_n", n, **kw))


# ---------------------------------------------------------------- Z(q)

def z_series_product(order: int) -> RationalSeries:
    return normalizer_series("pillowcase", order)


def z_series_enumeration(order: int) -> RationalSeries:
    return RationalSeries(sum((w for _, w in measure_support("pillowcase", n)), Fraction(0))
                          for n in range(order + 1))


def z_series(order: int, check_up_to: int | None = 20) -> RationalSeries:
    """Z(q) from the product; the enumeration must agree up to check_up_to."""
    s = z_series_product(order)
    if check_up_to:
        top = min(order, check_up_to)
        if not z_series_enumeration(top).agrees_with(s):
            raise ArithmeticError("enumeration and product disagree")
    return s


def z_n(n: int) -> Fraction:
    return z_series(n, check_up_to=None)[n]


@lru_cache(maxsize=None)
def _z_half_coeffs(m: int) -> tuple:
    """Coefficients of Π(1-Q^i)^{-1/2} up to Q^m, exact."""
    return product_series([(i, Fraction(-1, 2)) for i in range(1, m + 1)], m).coeffs


def meinardus_ratio(n: int, dps: int = 30):
    """Z_n n^{7/8} e^{-π√(n/6)} 2^{1/8} 3^{3/8} with Z_n from the product."""
    if n < 2 or n % 2:
        raise ValueError("n must be even and at least 2")
    zn = _z_half_coeffs(n // 2)[n // 2]
    with mpmath.workdps(dps):
        x = mpmath.mpf(n)
        val = mpmath.mpf(zn.numerator) / zn.denominator
        val *= x ** (mpmath.mpf(7) / 8) * mpmath.exp(-mpmath.pi * mpmath.sqrt(x / 6))
        val *= mpmath.mpf(2) ** (mpmath.mpf(1) / 8) * mpmath.mpf(3) ** (mpmath.mpf(3) / 8)
        return float(val)


def partition_ratio(n: int) -> float:
    """p(n) · 4n√3 · e^{-π√(2n/3)}."""
    with mpmath.workdps(30):
        return float(partition_count(n) * 4 * n * mpmath.sqrt(3)
                     * mpmath.exp(-mpmath.pi * mpmath.sqrt(mpmath.mpf(2 * n) / 3)))


# ---------------------------------------------------------------- Sobolev norm

def _G(x: int):
    if x == 0:
        return mpmath.mpf(0)
    x = mpmath.mpf(x)
    return x * x * mpmath.log(abs(x)) / 2 - 3 * x * x / 4


@lru_cache(maxsize=None)
def _kernel(m: int) -> float:
    """I(m) = G(m+1) - 2G(m) + G(m-1), the slope-slope interaction."""
    with mpmath.workdps(40):
        return float(_G(m + 1) - 2 * _G(m) + _G(m - 1))


def slope_difference(lam) -> dict:
    """Unit-scale slopes of L_α - L_β on the intervals [k, k+1]."""
    tq = two_quotient(lam)
    sa, sb = unit_slopes(tq.alpha), unit_slopes(tq.beta)
    out = {}
    for k in set(sa) | set(sb):
        va = sa.get(k, -1 if k < 0 else 1)
        vb = sb.get(k, -1 if k < 0 else 1)
        if va != vb:
            out[k] = va - vb
    return out


def sobolev_unit(lam) -> Estimate:
    """‖L_α - L_β‖² with unit-scale contours.

    On a grid of unit intervals with slopes d_k the double integral equals
    -2 Σ d_i d_j I(i - j), each rectangle integrated in closed form.
    """
    lam = Partition.coerce(lam)
    if not is_balanced(lam):
        raise ValueError("unbalanced partition")
    d = sorted(slope_difference(lam).items())
    terms = [di * dj * _kernel(i - j) for i, di in d for j, dj in d]
    value = -2 * math.fsum(terms)
    mag = 2 * math.fsum(abs(t) for t in terms)
    return Estimate(value, mag * 1e-15)


def sobolev_norm_sq(lam, scale=None) -> Estimate:
    """‖Δ‖² for Δ = L_α - L_β with contours rescaled by 1/√|λ| (or by scale)."""
    lam = Partition.coerce(lam)
    base = sobolev_unit(lam)
    if not lam:
        return base
    r2 = (1 / lam.size) if scale is None else float(scale) ** 2
    return Estimate(base.value * r2, base.error * r2)


def sobolev_quadrature(lam, scale=1) -> float:
    """Independent check: direct numerical double integral (slow)."""
    lam = Partition.coerce(lam)
    d = slope_difference(lam)
    if not d:
        return 0.0
    lo, hi = min(d), max(d) + 1

    def f(x):
        # Δ(x) = Σ_k d_k · clamp(x - k, 0, 1)
        return sum(dk * min(max(x - k, 0), 1) for k, dk in d.items())

    pts = list(range(lo, hi + 1))
    inner = lambda s: mpmath.quad(lambda t: ((f(s) - f(t)) / (s - t)) ** 2 if s != t else
                                  mpmath.mpf(sum(dk for k, dk in d.items()
                                                 if k <= s < k + 1)) ** 2, pts)
    core = mpmath.quad(inner, pts)
    # outside [lo, hi] Δ vanishes: add 2∫ f(s)^2 (1/(s-lo) + 1/(hi-s)) ds
    tail = 2 * mpmath.quad(lambda s: f(s) ** 2 * (1 / (s - lo) + 1 / (hi - s)), pts)
    return float((core + tail) * scale ** 2)


def c_remainder(x, tol: float = 1e-12) -> Estimate:
    """½ Σ_{k≥1} 1/(k(k+1)(2k+1) x^{2k}) with a tail bound."""
    if x < 1:
        raise ValueError("x must be at least 1")
    y = 1.0 / (x * x)
    total, k, yk = 0.0, 1, y
    while True:
        total += yk / (k * (k + 1) * (2 * k + 1))
        # later terms are ≤ y^j/(2j^3) with j > k: bound by min(geometric, integral)
        geo = yk * y / (2 * k ** 3 * (1 - y)) if y < 1 else math.inf
        tail = min(geo, 1 / (4 * k * k))
        if tail / 2 < tol:
            return Estimate(total / 2, tail / 2 + 1e-16 * total)
        k += 1
        yk *= y


def c_remainder_closed(x) -> float:
    """Closed form of c(x) via log and artanh, for cross-checks."""
    y = mpmath.mpf(1) / (mpmath.mpf(x) ** 2)
    if y == 1:
        return float((3 - 4 * mpmath.log(2)) / 2)
    s = mpmath.sqrt(y)
    a = -mpmath.log(1 - y)
    b = (a - y) / y
    c = mpmath.atanh(s) / s - 1
    return float((a + b - 4 * c) / 2)


# ---------------------------------------------------------------- concentration

def concentration_stat(n: int, eps, budget: int = DEFAULT_FIXED_BUDGET) -> Fraction:
    """Pillowcase mass at size n of {λ : ‖Δ‖ > ε}, normalized by Z_n."""
    if n % 2:
        raise ValueError("n must be even")
    _check_budget("pillowcase", n, budget)
    eps2 = float(eps) ** 2
    mass = Fraction(0)
    total = Fraction(0)
    for lam, w in measure_support("pillowcase", n):
        total += w
        if not slope_difference(lam):
            continue
        if eps2 == 0 or sobolev_norm_sq(lam).value > eps2:
            mass += w
    return mass / total


def random_balanced_partition(n: int, rng: random.Random) -> Partition:
    """Uniform sample among balanced partitions of n via their 2-quotients."""
    from .partitions import TwoQuotient, from_two_quotient
    if n % 2:
        raise ValueError("n must be even")
    half = n // 2
    weights = [partition_count(k) * partition_count(half - k) for k in range(half + 1)]
    k = rng.choices(range(half + 1), weights=weights)[0]
    a = rng.choice(partitions_of(k))
    b = rng.choice(partitions_of(half - k))
    return from_two_quotient(TwoQuotient(a, b, 0))


# ---------------------------------------------------------------- first and next terms

def vanishing_sum(nu) -> Fraction:
    """Σ_μ σ_μ χ^μ(ν) (dim a/|a|!)(dim b/|b|!) over balanced μ of size |ν|."""
    nu = Partition.coerce(nu)
    _check_nu(nu)
    total = Fraction(0)
    for mu in balanced_partitions_of(nu.size):
        chi = character(mu, nu)
        if chi:
            tq = two_quotient(mu)
            total += sigma(mu) * chi * Fraction(dimension(tq.alpha), factorial(tq.alpha.size)) \
                * Fraction(dimension(tq.beta), factorial(tq.beta.size))
    return total


def v(lam) -> Fraction:
    """[dim λ/(|λ|-2)!] [s*_(2)(λ) - s*_(1,1)(λ)] / |λ|!, zero when |λ| < 2."""
    lam = Partition.coerce(lam)
    n = lam.size
    if n < 2:
        return Fraction(0)
    diff = shifted_schur((2,), lam) - shifted_schur((1, 1), lam)
    return Fraction(dimension(lam), factorial(n - 2)) * diff / factorial(n)


def transposition_character(lam) -> Fraction:
    """χ^λ(2,1,...,1) = dim λ (s*_(2) - s*_(1,1))(λ) / (|λ|↓2)."""
    lam = Partition.coerce(lam)
    n = lam.size
    if n < 2:
        raise ValueError("|λ| must be at least 2")
    diff = shifted_schur((2,), lam) - shifted_schur((1, 1), lam)
    return dimension(lam) * diff / falling_factorial(n, 2)


def next_term_sum(nu) -> Fraction:
    """Σ_μ σ_μ χ^μ(ν) v(a) v(b) over balanced μ of size |ν|."""
    nu = Partition.coerce(nu)
    _check_nu(nu)
    total = Fraction(0)
    for mu in balanced_partitions_of(nu.size):
        chi = character(mu, nu)
        if chi:
            tq = two_quotient(mu)
            total += sigma(mu) * chi * v(tq.alpha) * v(tq.beta)
    return total


def next_term_prefactor(nu, order: int = 30) -> RationalSeries:
    """2 K^{|ν|-2} ⟨p2⟩ / z(ν) with K = √2 ⟨p1(α)⟩, as a series.

    |ν| is even, so K^{|ν|-2} = 2^{(|ν|-2)/2} ⟨p1(α)⟩^{|ν|-2} is rational.
    """
    nu = Partition.coerce(nu)
    _check_nu(nu)
    m = nu.size - 2
    k_part = expect("p1(alpha)", order=order) ** m * Fraction(2) ** (m // 2) \
        if m > 0 else RationalSeries.constant(1, order)
    p2 = expect("p2", order=order)
    return k_part * p2 * Fraction(2, centralizer(nu))


def valid_nus(max_size: int) -> list[Partition]:
    """All ν with even size ≤ max_size and odd parts."""
    out = []
    for s in range(2, max_size + 1, 2):
        out += [p for p in partitions_of(s) if all(x % 2 for x in p)]
    return out


# ---------------------------------------------------------------- limit shape

_C = math.pi / math.sqrt(6)


def limit_shape_curve(x) -> float:
    """y with e^{-πx/√6} + e^{-πy/√6} = 1."""
    if x < 0:
        raise ValueError("x must be non-negative")
    if x == 0:
        return math.inf
    return -math.log(-math.expm1(-_C * x)) / _C


def limit_shape_area() -> float:
    return float(mpmath.quad(lambda x: -mpmath.log(-mpmath.expm1(-_C * x)) / _C,
                             [0, 1, mpmath.inf]))
