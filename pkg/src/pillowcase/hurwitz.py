"""Hurwitz numbers: character sums, a monodromy oracle and the cover series."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import factorial

from .characters import f_eta, pad
from .partitions import Partition, balanced_partitions_of, dimension, partitions_of
from .qseries import RationalSeries

BRUTE_FORCE_LIMIT = 6


@dataclass(frozen=True)
class HurwitzQuery:
    degree: int
    profiles: tuple

    def __post_init__(self):
        profiles = tuple(Partition.coerce(p) for p in self.profiles)
        object.__setattr__(self, "profiles", profiles)
        if self.degree < 1:
            raise ValueError("degree must be positive")
        for p in profiles:
            if p.size != self.degree:
                raise ValueError(f"profile {p} does not have size {self.degree}")


def hurwitz_number(q: HurwitzQuery) -> Fraction:
    """Σ_{|λ|=d} (dim λ/d!)^2 Π_i f_{η^i}(λ)."""
    d = q.degree
    total = Fraction(0)
    for lam in partitions_of(d):
        term = Fraction(dimension(lam), factorial(d)) ** 2
        for eta in q.profiles:
            term *= f_eta(eta, lam)
            if not term:
                break
        total += term
    return total


def cycle_type(perm: tuple) -> Partition:
    seen = [False] * len(perm)
    lengths = []
    for i in range(len(perm)):
        if not seen[i]:
            k, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                k += 1
            lengths.append(k)
    return Partition(sorted(lengths, reverse=True))


@lru_cache(maxsize=None)
def _classes(d: int) -> dict:
    out: dict = {}
    for perm in permutations(range(d)):
        out.setdefault(cycle_type(perm), []).append(perm)
    return {k: tuple(v) for k, v in out.items()}


def _compose(p: tuple, r: tuple) -> tuple:
    return tuple(p[r[i]] for i in range(len(r)))


def hurwitz_brute_force(q: HurwitzQuery) -> Fraction:
    """|{(s_1..s_k) : type(s_i) = η^i, s_1⋯s_k = 1}| / d!."""
    d = q.degree
    if d > BRUTE_FORCE_LIMIT:
        raise ValueError(f"degree {d} exceeds the brute-force limit {BRUTE_FORCE_LIMIT}")
    classes = _classes(d)
    profiles = q.profiles
    if len(profiles) == 1:
        count = 1 if profiles[0] == Partition([1] * d) else 0
        return Fraction(count, factorial(d))
    last = profiles[-1]
    count = 0
    for first in classes[profiles[0]]:
        for middle in product(*(classes[p] for p in profiles[1:-1])):
            acc = first
            for s in middle:
                acc = _compose(acc, s)
            # s_k must be the inverse of acc; inverses share the cycle type
            if cycle_type(acc) == last:
                count += 1
    return Fraction(count, factorial(d))


def profile_grid(d: int) -> list[Partition]:
    """(d), (2,1^{d-2}), (1^d), (2,2,1^{d-4}) where they exist."""
    grid = [Partition([d]), Partition([1] * d)]
    if d >= 2:
        grid.append(Partition([2] + [1] * (d - 2)))
    if d >= 4:
        grid.append(Partition([2, 2] + [1] * (d - 4)))
    return list(dict.fromkeys(grid))


def parity_vanishes(q: HurwitzQuery) -> bool:
    """Odd total ramification forces H_d = 0."""
    return sum(p.size - len(p) for p in q.profiles) % 2 == 1


def pillowcase_cover_series(nu, mu=(), order: int = 10) -> RationalSeries:
    """Σ_λ q^{|λ|/2} (dim λ/|λ|!)^2 f_{(ν∪μ,2,...)}(λ) f_{(2,...)}(λ)^3."""
    nu, mu = Partition.coerce(nu), Partition.coerce(mu)
    if nu.size % 2 or any(p % 2 == 0 for p in nu):
        raise ValueError(f"ν must have even size and odd parts: {nu}")
    merged = Partition(sorted(nu + mu, reverse=True))
    if merged.size % 2:
        raise ValueError("|ν| + |μ| must be even to pad with 2's")
    coeffs = []
    for d in range(order + 1):
        n = 2 * d
        total = Fraction(0)
        if merged.size <= n:
            head = pad(merged, n, 2)
            twos = pad((), n, 2)
            for lam in balanced_partitions_of(n):
                total += Fraction(dimension(lam), factorial(n)) ** 2 * \
                    f_eta(head, lam) * f_eta(twos, lam) ** 3
        coeffs.append(total)
    return RationalSeries(coeffs)
