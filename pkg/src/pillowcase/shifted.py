"""Shifted Schur functions and the shifted power sums p_k, p̄_k."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .partitions import Partition


def falling_factorial(x, k: int):
    """(x↓k) = x(x-1)...(x-k+1)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    out = 1 if isinstance(x, int) else Fraction(1)
    for i in range(k):
        out *= x - i
    return out


def determinant(rows) -> Fraction:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = [list(r) for r in rows]
    n = len(a)
    integral = all(isinstance(v, int) for r in a for v in r)
    div = (lambda x, y: x // y) if integral else (lambda x, y: x / y)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if pivot is None:
                return Fraction(0)
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev)
        prev = a[k][k]
    return Fraction(sign * a[n - 1][n - 1]) if n else Fraction(1)


def shifted_schur(mu, lam, n: int | None = None) -> Fraction:
    """s*_μ(λ) as a ratio of two n×n determinants.

    n defaults to max(ℓ(λ), ℓ(μ)) + 1.
    """
    mu, lam = Partition.coerce(mu), Partition.coerce(lam)
    if n is None:
        n = max(len(lam), len(mu)) + 1
    if n < max(len(lam), len(mu)):
        raise ValueError("too few variables")
    x = list(lam) + [0] * (n - len(lam))
    m = list(mu) + [0] * (n - len(mu))
    shifted = [x[i] + n - 1 - i for i in range(n)]
    num = determinant([[falling_factorial(s, m[j] + n - 1 - j) for j in range(n)]
                       for s in shifted])
    # the denominator is a Vandermonde in the falling-factorial basis
    den = 1
    for i in range(n):
        for j in range(i + 1, n):
            den *= shifted[i] - shifted[j]
    return Fraction(num) / den


# ---------------------------------------------------------------- constants

@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Bernoulli numbers with B_1 = -1/2."""
    if n == 0:
        return Fraction(1)
    return -sum(comb(n + 1, k) * bernoulli(k) for k in range(n)) / (n + 1)


def zeta_negative(k: int) -> Fraction:
    """ζ(-k) = -B_{k+1}/(k+1) for k ≥ 1."""
    if k < 1:
        raise ValueError("k must be positive")
    return -bernoulli(k + 1) / (k + 1)


def p_constant(k: int) -> Fraction:
    """Vacuum value (1 - 2^{-k}) ζ(-k) of p_k."""
    return (1 - Fraction(1, 2 ** k)) * zeta_negative(k)


@lru_cache(maxsize=None)
def _sech_half_coeffs(n: int) -> tuple[Fraction, ...]:
    """Taylor coefficients of 1/(e^{z/2} + e^{-z/2}) up to z^n."""
    # denominator 2 cosh(z/2) = Σ 2 (z/2)^{2j}/(2j)!
    den = [Fraction(0)] * (n + 1)
    for j in range(0, n + 1, 2):
        den[j] = Fraction(2, 2 ** j * factorial(j))
    inv = [Fraction(0)] * (n + 1)
    inv[0] = 1 / den[0]
    for i in range(1, n + 1):
        inv[i] = -sum(den[j] * inv[i - j] for j in range(1, i + 1)) / den[0]
    return tuple(inv)


def p_bar_constant(k: int) -> Fraction:
    """c_k with Σ c_k z^k/k! = 1/(e^{z/2} + e^{-z/2})."""
    return _sech_half_coeffs(k)[k] * factorial(k)


# ---------------------------------------------------------------- power sums

def p_k(lam, k: int) -> Fraction:
    """Σ_i [(λ_i - i + 1/2)^k - (-i + 1/2)^k] + (1 - 2^{-k}) ζ(-k)."""
    if k < 1:
        raise ValueError("k must be positive")
    lam = Partition.coerce(lam)
    half = Fraction(1, 2)
    total = sum(((p - i + half) ** k - (half - i) ** k
                 for i, p in enumerate(lam, 1)), Fraction(0))
    return total + p_constant(k)


def p_bar_k(lam, k: int) -> Fraction:
    """Twisted sum Σ_i [(-1)^{λ_i-i+1} ξ_i^k - (-1)^{-i+1} (-i+1/2)^k] + c_k."""
    if k < 1:
        raise ValueError("k must be positive")
    lam = Partition.coerce(lam)
    half = Fraction(1, 2)
    total = Fraction(0)
    for i, p in enumerate(lam, 1):
        s_new = 1 if (p - i + 1) % 2 == 0 else -1
        s_old = 1 if (-i + 1) % 2 == 0 else -1
        total += s_new * (p - i + half) ** k - s_old * (half - i) ** k
    return total + p_bar_constant(k)
