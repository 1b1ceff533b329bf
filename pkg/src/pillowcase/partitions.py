"""Partitions, Maya diagrams, hooks, 2-quotients and contour functions.

Half-integers are stored doubled throughout this module: the site
x in Z + 1/2 is kept as the odd integer 2x.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 1:
            raise ValueError(f"parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def coerce(cls, obj) -> "Partition":
        if isinstance(obj, Partition):
            return obj
        if isinstance(obj, str):
            return parse_partition(obj)
        return cls(obj)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def contains(self, other) -> bool:
        """Diagram containment other ⊆ self."""
        other = Partition.coerce(other)
        if len(other) > len(self):
            return False
        return all(a >= b for a, b in zip(self, other))

    def multiplicities(self) -> dict[int, int]:
        m: dict[int, int] = {}
        for p in self:
            m[p] = m.get(p, 0) + 1
        return m

    def to_json(self) -> dict:
        return {"parts": list(self), "size": self.size}

    def __str__(self) -> str:
        return ",".join(map(str, self)) if self else "-"

    def __repr__(self) -> str:
        return f"Partition({list(self)})"


EMPTY = Partition()

_TOKEN = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


def parse_partition(text: str) -> Partition:
    """Parse '5,4,4,2', '3^2,1^5', '-' or '' into a Partition."""
    text = text.strip()
    if text in ("", "-", "∅"):
        return EMPTY
    parts: list[int] = []
    for tok in text.split(","):
        m = _TOKEN.match(tok)
        if not m:
            raise ValueError(f"bad partition token {tok!r}")
        parts.extend([int(m.group(1))] * int(m.group(2) or 1))
    return Partition(parts)


# ---------------------------------------------------------------- enumeration

def _partitions(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n in reverse lexicographic order."""
    if n < 0:
        return ()
    return tuple(Partition(p) for p in _partitions(n, n))


def partitions_up_to(n: int) -> Iterator[Partition]:
    for k in range(n + 1):
        yield from partitions_of(k)


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """p(n) via Euler's pentagonal recurrence."""
    if n < 0:
        return 0
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total, k = 0, 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


@lru_cache(maxsize=None)
def balanced_partitions_of(n: int) -> tuple[Partition, ...]:
    """Balanced partitions of n, built from their 2-quotients."""
    if n % 2:
        return ()
    half = n // 2
    out = []
    for k in range(half + 1):
        for a in partitions_of(k):
            for b in partitions_of(half - k):
                out.append(from_two_quotient(TwoQuotient(a, b, 0)))
    out.sort(reverse=True)
    return tuple(out)


# ---------------------------------------------------------------- hooks

def hook_lengths(lam) -> list[list[int]]:
    """Hook lengths, row by row."""
    lam = Partition.coerce(lam)
    conj = lam.conjugate()
    return [[lam[i] - j + conj[j] - i - 1 for j in range(lam[i])]
            for i in range(len(lam))]


def hook_multiset(lam) -> list[int]:
    return sorted((h for row in hook_lengths(lam) for h in row), reverse=True)


def dimension(lam) -> int:
    """Number of standard Young tableaux, by the hook length formula."""
    lam = Partition.coerce(lam)
    return factorial(lam.size) // prod(hook_multiset(lam))


def dimension_det(lam) -> int:
    """Dimension from the shifted parts l_i = λ_i + n - i.

    dim λ = |λ|! Π_{i<j}(l_i - l_j) / Π l_i!
    """
    lam = Partition.coerce(lam)
    n = len(lam)
    ls = [lam[i] + n - 1 - i for i in range(n)]
    num = factorial(lam.size) * prod(ls[i] - ls[j] for i in range(n)
                                     for j in range(i + 1, n))
    return num // prod(factorial(x) for x in ls)


# ---------------------------------------------------------------- Maya diagrams

@dataclass(frozen=True)
class MayaDiagram:
    """Charge-zero Maya diagram; entries are doubled half-integers."""

    particles: frozenset
    holes: frozenset

    def __post_init__(self):
        if len(self.particles) != len(self.holes):
            raise ValueError("Maya diagram must have charge zero")
        if any(x <= 0 or x % 2 == 0 for x in self.particles):
            raise ValueError("particles must be positive half-integers")
        if any(x >= 0 or x % 2 == 0 for x in self.holes):
            raise ValueError("holes must be negative half-integers")

    def particle_values(self) -> list[Fraction]:
        return sorted((Fraction(x, 2) for x in self.particles), reverse=True)

    def hole_values(self) -> list[Fraction]:
        return sorted((Fraction(x, 2) for x in self.holes), reverse=True)

    def occupied(self, site2: int) -> bool:
        """Whether the doubled site site2 carries a pebble."""
        if site2 > 0:
            return site2 in self.particles
        return site2 not in self.holes

    def to_partition(self) -> Partition:
        low = min(self.holes, default=-1)
        seq = sorted(self.particles, reverse=True)
        # below the lowest hole every site is occupied and gives a zero part
        seq += [x for x in range(-1, low - 1, -2) if x not in self.holes]
        parts = ((x - 1) // 2 + i for i, x in enumerate(seq, 1))
        return Partition(v for v in parts if v > 0)


def beta_doubled(lam) -> list[int]:
    """Doubled ξ_i = λ_i - i + 1/2 for i = 1..ℓ(λ)."""
    return [2 * p - 2 * i + 1 for i, p in enumerate(lam, 1)]


def maya(lam) -> MayaDiagram:
    lam = Partition.coerce(lam)
    xs = beta_doubled(lam)
    occupied = set(xs)
    particles = frozenset(x for x in xs if x > 0)
    lowest = -2 * len(lam) + 1   # ξ below this are all occupied
    holes = frozenset(x for x in range(-1, lowest - 1, -2) if x not in occupied)
    return MayaDiagram(particles, holes)


# ---------------------------------------------------------------- 2-quotients

@dataclass(frozen=True)
class TwoQuotient:
    alpha: Partition
    beta: Partition
    core_size: int

    def __post_init__(self):
        object.__setattr__(self, "alpha", Partition.coerce(self.alpha))
        object.__setattr__(self, "beta", Partition.coerce(self.beta))
        if self.core_size < 0:
            raise ValueError("core size must be non-negative")

    @property
    def size(self) -> int:
        c = self.core_size
        return 2 * (self.alpha.size + self.beta.size) + c * (c + 1) // 2


def _charge_from_core(c: int) -> int:
    # charge of the alpha sublattice; the staircase of size c has
    # c(c+1)/2 = q(2q-1) cells with q this charge
    return (c + 1) // 2 if c % 2 else -c // 2


def _core_from_charge(q: int) -> int:
    return 2 * q - 1 if q > 0 else -2 * q


def _read_sublattice(ms: list[int]) -> tuple[Partition, int]:
    """Partition and charge of a sublattice given its occupied doubled sites.

    ms holds the occupied doubled half-integers down to some depth below
    which every site is occupied.
    """
    ms = sorted(ms, reverse=True)
    low = ms[-1] if ms else -1
    occ = set(ms)
    charge = sum(1 for m in ms if m > 0) - sum(
        1 for m in range(-1, low, -2) if m not in occ)
    parts = []
    for i, m in enumerate(ms, 1):
        # m/2 = μ_i - i + 1/2 + charge
        v = (m - 1) // 2 + i - charge
        if v <= 0:
            break
        parts.append(v)
    return Partition(parts), charge


def two_quotient(lam) -> TwoQuotient:
    """Split the Maya diagram into the sites 2n+1/2 (alpha) and 2n-1/2 (beta)."""
    lam = Partition.coerce(lam)
    xs = beta_doubled(lam)
    floor = -2 * len(lam) - 7   # pad with a few forced pebbles below
    xs += list(range(-2 * len(lam) - 1, floor - 1, -2))
    a_sites = [(x + 1) // 2 for x in xs if x % 4 == 1]
    b_sites = [(x - 1) // 2 for x in xs if x % 4 == 3]
    alpha, qa = _read_sublattice(a_sites)
    beta, qb = _read_sublattice(b_sites)
    assert qa + qb == 0
    return TwoQuotient(alpha, beta, _core_from_charge(qa))


def from_two_quotient(tq: TwoQuotient) -> Partition:
    qa = _charge_from_core(tq.core_size)
    depth = max(len(tq.alpha), len(tq.beta)) + abs(qa) + 2
    sites = []
    for parts, q, shift in ((tq.alpha, qa, -1), (tq.beta, -qa, 1)):
        padded = list(parts) + [0] * (depth - len(parts))
        for i, p in enumerate(padded, 1):
            m = 2 * (p - i + q) + 1          # doubled site in the sublattice
            sites.append(2 * m + shift)      # back to the doubled λ-site
    sites.sort(reverse=True)
    # only the sites above both truncation floors are reliable
    cutoff = max(min(s for s in sites if s % 4 == 1),
                 min(s for s in sites if s % 4 == 3))
    parts = [(x - 1) // 2 + i for i, x in enumerate(sites, 1) if x >= cutoff]
    return Partition(p for p in parts if p > 0)


def core_size(lam) -> int:
    return two_quotient(lam).core_size


def is_balanced(lam) -> bool:
    return two_quotient(lam).core_size == 0


def sigma(lam) -> int:
    """(-1)^(o/2) with o the number of odd parts; balanced λ only."""
    lam = Partition.coerce(lam)
    if not is_balanced(lam):
        raise ValueError("unbalanced partition")
    odd = sum(1 for p in lam if p % 2)
    return -1 if (odd // 2) % 2 else 1


# ---------------------------------------------------------------- contours

@dataclass(frozen=True)
class ContourFunction:
    """Piecewise-linear L with slopes ±1 and tails |x - x0| + c0."""

    breakpoints: tuple
    scale: Fraction = Fraction(1)
    x0: Fraction = Fraction(0)
    c0: Fraction = Fraction(0)

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        bp = self.breakpoints
        if not bp or x <= bp[0][0] or x >= bp[-1][0]:
            return abs(x - self.x0) + self.c0
        for (xa, ya), (xb, yb) in zip(bp, bp[1:]):
            if xa <= x <= xb:
                return ya + (yb - ya) * (x - xa) / (xb - xa)
        raise AssertionError("unreachable")

    def area(self) -> Fraction:
        """Area between L and |x - x0| + c0."""
        bp = self.breakpoints
        if not bp:
            return Fraction(0)
        pts = sorted({x for x, _ in bp} | {self.x0})
        total = Fraction(0)
        for xa, xb in zip(pts, pts[1:]):
            fa = self(xa) - abs(xa - self.x0) - self.c0
            fb = self(xb) - abs(xb - self.x0) - self.c0
            total += (fa + fb) * (xb - xa) / 2
        return total


def unit_slopes(lam) -> dict[int, int]:
    """Slope of the unit-scale contour on [k, k+1], for k where it is not |x|'s.

    The slope is -1 on intervals centred at occupied sites and +1 elsewhere.
    """
    lam = Partition.coerce(lam)
    occ = set(beta_doubled(lam))
    out = {}
    for k in range(-len(lam), lam[0] if lam else 0):
        s = -1 if (2 * k + 1) in occ else 1
        vacuum = -1 if k < 0 else 1
        if s != vacuum:
            out[k] = s
    return out


def contour(lam, scale=1) -> ContourFunction:
    lam = Partition.coerce(lam)
    scale = Fraction(scale)
    if scale <= 0:
        raise ValueError("scale must be positive")
    if not lam:
        return ContourFunction(((Fraction(0), Fraction(0)),), scale)
    occ = set(beta_doubled(lam))
    lo, hi = -len(lam), lam[0]
    corners = [(lo, -lo)]
    value, prev = -lo, None
    for k in range(lo, hi):
        s = -1 if (2 * k + 1) in occ else 1
        if prev is not None and s != prev:
            corners.append((k, value))
        value += s
        prev = s
    corners.append((hi, value))
    bp = tuple((Fraction(x) * scale, Fraction(y) * scale) for x, y in corners)
    return ContourFunction(bp, scale)
