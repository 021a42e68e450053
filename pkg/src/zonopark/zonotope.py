"""Membership and exact lattice-point enumeration for the shifted zonotope

    Z(m, n, tau) = tau*(1,...,1) + sum_i [0, e_i]
                   + sum_{i < j} [0, (m/2)(e_i - e_j)] + [0, (m/2)(e_j - e_i)].

The body is invariant under coordinate permutations, so its supporting
half-spaces come in n families: for k = 1..n the sum of any k coordinates is
pinched between ``tau*k - m*k*(n-k)/2`` and ``tau*k + m*k*(n-k)/2 + k``, and
for a fixed k the extreme subset sums of a point are its top-k and bottom-k
sorted sums.  Everything below works in exact arithmetic on those 2n
constraints; the shift tau may carry an infinitesimal component.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .orbits import normalize_partition, orbit_of, orbit_size
from .scalars import EpsRational, as_eps_rational


class Location(Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


class NotAdmissibleError(ValueError):
    """The shift parameter puts lattice points on the boundary."""


@dataclass(frozen=True)
class ZonotopeSpec:
    """The triple (m, n, tau) defining the shifted zonotope."""

    m: int
    n: int
    tau: EpsRational

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError("m and n must be positive integers")
        object.__setattr__(self, "tau", as_eps_rational(self.tau))

    def is_admissible(self) -> bool:
        return is_admissible(self.m, self.n, self.tau)


@dataclass(frozen=True)
class SupportBounds:
    """Exact bounds on the sum of any k coordinates of a member point."""

    k: int
    lower: EpsRational
    upper: EpsRational


def support_bounds(spec: ZonotopeSpec, k: int) -> SupportBounds:
    """Support values in direction of a 0/1 vector with k ones.

    upper = tau*k + m*k*(n-k)/2 + k,  lower = tau*k - m*k*(n-k)/2.
    """
    if not 1 <= k <= spec.n:
        raise ValueError(f"k must be in 1..{spec.n}, got {k}")
    half_width = Fraction(spec.m * k * (spec.n - k), 2)
    upper = spec.tau * k + (half_width + k)
    lower = spec.tau * k - half_width
    return SupportBounds(k=k, lower=lower, upper=upper)


def is_admissible(m: int, n: int, tau) -> bool:
    """True iff no integer point can lie on the boundary of Z(m, n, tau).

    A rational tau is admissible iff tau - m(n-1)/2 has denominator > n in
    lowest terms; a tau with an infinitesimal component always is.
    """
    tau = as_eps_rational(tau)
    if tau.eps_coeff != 0:
        return True
    return (tau.base - Fraction(m * (n - 1), 2)).denominator > n


@lru_cache(maxsize=None)
def _integer_bounds(spec: ZonotopeSpec):
    """Per-k integer thresholds for membership of integer points.

    For an integer sum T:  T > upper  iff  T > floor(upper), and
    T == upper is only possible when upper is itself an integer; dually for
    the lower bounds.  Returns (lo_ceil, lo_tight, up_floor, up_tight),
    each indexed by k (index 0 unused).
    """
    n = spec.n
    lo_ceil = [0] * (n + 1)
    up_floor = [0] * (n + 1)
    lo_tight = [False] * (n + 1)
    up_tight = [False] * (n + 1)
    for k in range(1, n + 1):
        bounds = support_bounds(spec, k)
        lo_ceil[k] = math.ceil(bounds.lower)
        up_floor[k] = math.floor(bounds.upper)
        lo_tight[k] = bounds.lower.is_integer()
        up_tight[k] = bounds.upper.is_integer()
    return lo_ceil, lo_tight, up_floor, up_tight


def contains(spec: ZonotopeSpec, x) -> Location:
    """Classify an integer point as interior, boundary or outside."""
    x = tuple(x)
    if len(x) != spec.n:
        raise ValueError(f"expected a point of length {spec.n}, got {len(x)}")
    lo_ceil, lo_tight, up_floor, up_tight = _integer_bounds(spec)
    ascending = sorted(x)
    n = spec.n
    top = 0
    bottom = 0
    tight = False
    for k in range(1, n + 1):
        top += ascending[n - k]
        bottom += ascending[k - 1]
        if top > up_floor[k] or bottom < lo_ceil[k]:
            return Location.OUTSIDE
        if (up_tight[k] and top == up_floor[k]) or (lo_tight[k] and bottom == lo_ceil[k]):
            tight = True
    return Location.BOUNDARY if tight else Location.INTERIOR


def scan_window(spec: ZonotopeSpec) -> tuple[int, int]:
    """Integer range [lo, hi] certain to contain every coordinate of a member."""
    bounds = support_bounds(spec, 1)
    return math.floor(bounds.lower), math.ceil(bounds.upper)


@lru_cache(maxsize=None)
def _decreasing_members(spec: ZonotopeSpec) -> tuple[tuple[int, ...], ...]:
    """All weakly decreasing member tuples (boundary included), in lex order.

    Since membership depends only on the sorted coordinate multiset, these
    are exactly the sorted representatives of all member points; the scan
    covers the full window coordinate-by-coordinate, pruned by the partial
    top-sum and total-sum constraints.
    """
    n = spec.n
    lo1, hi1 = scan_window(spec)
    lo_ceil, _, up_floor, _ = _integer_bounds(spec)
    out: list[tuple[int, ...]] = []
    prefix: list[int] = []

    def admissible_leaf() -> bool:
        bottom = 0
        for k in range(1, n + 1):
            bottom += prefix[n - k]
            if bottom < lo_ceil[k]:
                return False
        return True

    def scan(depth: int, prefix_sum: int, last: int):
        if depth == n:
            if admissible_leaf():
                out.append(tuple(prefix))
            return
        remaining = n - depth - 1
        for value in range(lo1, last + 1):
            total = prefix_sum + value
            # entries are weakly decreasing, so the prefix is the top-k sum
            if total > up_floor[depth + 1]:
                break
            if total + remaining * value < lo_ceil[n]:
                continue
            if total + remaining * lo1 > up_floor[n]:
                break
            prefix.append(value)
            scan(depth + 1, total, value)
            prefix.pop()

    scan(0, 0, hi1)
    return tuple(out)


def dominant_points(spec: ZonotopeSpec) -> list[tuple[int, ...]]:
    """The weakly decreasing member points, in lexicographic order."""
    return list(_decreasing_members(spec))


def enumerate_lattice_points(spec: ZonotopeSpec) -> list[tuple[int, ...]]:
    """All integer points of the zonotope (boundary included), lex order."""
    points: list[tuple[int, ...]] = []
    for rep in _decreasing_members(spec):
        points.extend(orbit_of(rep))
    points.sort()
    return points


def count_lattice_points(spec: ZonotopeSpec) -> int:
    """|Z ∩ Z^n| via orbit sizes of the sorted representatives."""
    return sum(orbit_size(rep) for rep in _decreasing_members(spec))


def has_boundary_lattice_point(spec: ZonotopeSpec) -> bool:
    """True iff some integer point lies exactly on the boundary."""
    return any(
        contains(spec, rep) is Location.BOUNDARY for rep in _decreasing_members(spec)
    )


def count_invariant_points(spec: ZonotopeSpec, partition) -> int:
    """Number of member points constant on every block of the partition."""
    blocks = normalize_partition(partition, spec.n)
    if len(blocks) == spec.n:
        return count_lattice_points(spec)
    lo1, hi1 = scan_window(spec)
    sizes = [len(b) for b in blocks]
    count = 0
    values = range(lo1, hi1 + 1)

    # membership depends only on the coordinate multiset, so one value per
    # block (with the block's multiplicity) determines the classification
    def assign(idx: int, multiset: list[int]):
        nonlocal count
        if idx == len(blocks):
            if contains(spec, multiset) is not Location.OUTSIDE:
                count += 1
            return
        for v in values:
            assign(idx + 1, multiset + [v] * sizes[idx])

    assign(0, [])
    return count
