"""Symmetric-group characters via the Murnaghan-Nakayama rule."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod

from .partitions import (Partition, dimension, is_balanced, partitions_of,
                         two_quotient)


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition

    def __post_init__(self):
        object.__setattr__(self, "outer", Partition.coerce(self.outer))
        object.__setattr__(self, "inner", Partition.coerce(self.inner))
        if not self.outer.contains(self.inner):
            raise ValueError(f"{self.inner} is not contained in {self.outer}")

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size


def _rim_hook_removals(lam: tuple, r: int):
    """Yield (sign, shape) for every r-rim hook removable from lam."""
    n = len(lam)
    beta = [lam[i] + n - 1 - i for i in range(n)]
    bset = set(beta)
    for b in beta:
        t = b - r
        if t < 0 or t in bset:
            continue
        height = sum(1 for c in beta if t < c < b)
        new = sorted((t if c == b else c for c in beta), reverse=True)
        shape = tuple(v for v in (new[i] - (n - 1 - i) for i in range(n)) if v)
        yield (-1) ** height, shape


@lru_cache(maxsize=None)
def _mn(lam: tuple, mu: tuple) -> int:
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], mu[1:]
    return sum(s * _mn(shape, rest) for s, shape in _rim_hook_removals(lam, r))


def character(lam, mu) -> int:
    """χ^λ(μ); strips of the largest part of μ are removed first."""
    lam, mu = Partition.coerce(lam), Partition.coerce(mu)
    if lam.size != mu.size:
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    return _mn(tuple(lam), tuple(mu))


def _contains(outer: tuple, inner: tuple) -> bool:
    return len(inner) <= len(outer) and all(a >= b for a, b in zip(outer, inner))


@lru_cache(maxsize=None)
def _skew_mn(lam: tuple, inner: tuple, mu: tuple) -> int:
    if not mu:
        return 1 if lam == inner else 0
    r, rest = mu[0], mu[1:]
    return sum(s * _skew_mn(shape, inner, rest)
               for s, shape in _rim_hook_removals(lam, r)
               if _contains(shape, inner))


def skew_character(shape: SkewShape, eta) -> int:
    """Signed count of η-strip decompositions of outer/inner."""
    if not isinstance(shape, SkewShape):
        shape = SkewShape(*shape)
    eta = Partition.coerce(eta)
    if eta.size != shape.size:
        raise ValueError(f"size mismatch: |{eta}| != {shape.size}")
    return _skew_mn(tuple(shape.outer), tuple(shape.inner), tuple(eta))


def skew_dimension(outer, inner) -> int:
    """Standard tableaux of outer/inner; zero when inner is not contained."""
    outer, inner = Partition.coerce(outer), Partition.coerce(inner)
    if not outer.contains(inner):
        return 0
    k = outer.size - inner.size
    return _skew_mn(tuple(outer), tuple(inner), (1,) * k)


# ---------------------------------------------------------------- classes

@dataclass(frozen=True)
class ClassData:
    cycle_type: Partition
    centralizer_size: int
    class_size: int


def centralizer(rho) -> int:
    """z(ρ) = Π i^{m_i} m_i!."""
    rho = Partition.coerce(rho)
    return prod(i ** m * factorial(m) for i, m in rho.multiplicities().items())


def class_data(rho) -> ClassData:
    rho = Partition.coerce(rho)
    z = centralizer(rho)
    return ClassData(rho, z, factorial(rho.size) // z)


def pad(eta, n: int, part: int = 1) -> Partition:
    """Pad η with copies of part up to size n."""
    eta = Partition.coerce(eta)
    gap = n - eta.size
    if gap < 0 or gap % part:
        raise ValueError(f"cannot pad {eta} to size {n} with parts {part}")
    return Partition(sorted(list(eta) + [part] * (gap // part), reverse=True))


def f_eta(eta, lam) -> Fraction:
    """|C_η| χ^λ(η) / dim λ, with η padded by 1's to |λ|."""
    lam = Partition.coerce(lam)
    eta = Partition.coerce(eta)
    if eta.size > lam.size:
        raise ValueError(f"|{eta}| exceeds |{lam}|")
    full = pad(eta, lam.size)
    return Fraction(class_data(full).class_size * character(lam, full),
                    dimension(lam))


# ---------------------------------------------------------------- domino formulas

def _odd_parts(lam) -> int:
    return sum(1 for p in lam if p % 2)


def char_involution(lam) -> int:
    """χ^λ(2,...,2) from the 2-quotient."""
    lam = Partition.coerce(lam)
    if lam.size % 2:
        raise ValueError("|λ| must be even")
    tq = two_quotient(lam)
    if tq.core_size:
        return 0
    sign = -1 if (_odd_parts(lam) // 2) % 2 else 1
    a, b = tq.alpha, tq.beta
    return sign * comb(lam.size // 2, a.size) * dimension(a) * dimension(b)


def skew_char_involution(shape: SkewShape) -> int:
    """χ^{λ/μ}(2,...,2) from the 2-quotients of λ and μ."""
    if not isinstance(shape, SkewShape):
        shape = SkewShape(*shape)
    if shape.size % 2:
        raise ValueError("skew size must be even")
    big, small = two_quotient(shape.outer), two_quotient(shape.inner)
    if big.core_size != small.core_size:
        return 0
    # for balanced shapes this is σ_λ σ_μ; the difference form also
    # covers equal non-empty cores
    parity = (_odd_parts(shape.outer) - _odd_parts(shape.inner)) // 2
    sign = -1 if parity % 2 else 1
    da = skew_dimension(big.alpha, small.alpha)
    db = skew_dimension(big.beta, small.beta)
    k = big.alpha.size - small.alpha.size
    return sign * comb(shape.size // 2, k) * da * db if da and db else 0


# ---------------------------------------------------------------- LR coefficients

def lr_coefficient(a, b, eta) -> int:
    """c^η_{ab} from the character inner product."""
    a, b, eta = map(Partition.coerce, (a, b, eta))
    if eta.size != a.size + b.size:
        raise ValueError("|η| must equal |a| + |b|")
    total = Fraction(0)
    for rho in partitions_of(a.size):
        xa = character(a, rho)
        if not xa:
            continue
        for tau in partitions_of(b.size):
            xb = character(b, tau)
            if not xb:
                continue
            joint = Partition(sorted(rho + tau, reverse=True))
            total += Fraction(xa * xb * character(eta, joint),
                              centralizer(rho) * centralizer(tau))
    if total.denominator != 1 or total < 0:
        raise ArithmeticError(f"non-integral LR coefficient {total}")
    return int(total)


def is_balanced_shape(shape: SkewShape) -> bool:
    return is_balanced(shape.outer) and is_balanced(shape.inner)
