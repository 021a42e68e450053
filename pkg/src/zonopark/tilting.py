"""Tilting-weight tables and their color decomposition.

For a shift parameter t = -p/k the table lists the dominant (weakly
decreasing) integer weights xi such that xi + staircase is a strictly
decreasing lattice point of the zonotope.  The table size is always the
Fuss-Catalan number, and grouping by color (coordinate sum) splits it into
exactly n consecutive blocks.

Shift convention: the frozen window places tau just below t + m(n-1)/2,
i.e. tau = t + m(n-1)/2 - eps.  An alternative "high" window with
tau = t + m(n-1) + eps is kept selectable for comparison; it produces a
valid table of the same size from a different admissibility window.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .scalars import EpsRational
from .zonotope import ZonotopeSpec, dominant_points

WINDOWS = ("low", "high")


def staircase(n: int) -> tuple[int, ...]:
    """(n-1, n-2, ..., 1, 0)."""
    if n < 1:
        raise ValueError("n must be positive")
    return tuple(range(n - 1, -1, -1))


def t_grid(n: int) -> list[Fraction]:
    """Distinct values -p/k for 1 <= k <= n, 0 <= p < k, sorted decreasing."""
    if n < 1:
        raise ValueError("n must be positive")
    values = {Fraction(-p, k) for k in range(1, n + 1) for p in range(k)}
    return sorted(values, reverse=True)


def tau_for_t(m: int, n: int, t, window: str = "low") -> EpsRational:
    """Admissible shift for a grid value t.

    "low":  t + m(n-1)/2 - eps   (the frozen table convention)
    "high": t + m(n-1) + eps     (opt-in alternative window)
    """
    t = Fraction(t)
    if window == "low":
        return EpsRational(t + Fraction(m * (n - 1), 2), -1)
    if window == "high":
        return EpsRational(t + m * (n - 1), +1)
    raise ValueError(f"window must be one of {WINDOWS}, got {window!r}")


def weight_color(xi) -> int:
    """The color of a weight: its coordinate sum."""
    return sum(xi)


def _weight_sort_key(xi):
    # color ascending, then lexicographically descending weight
    return (weight_color(xi), tuple(-c for c in xi))


def dominant_weights(m: int, n: int, tau) -> tuple[tuple[int, ...], ...]:
    """Weights xi with xi + staircase a strictly decreasing member point."""
    spec = ZonotopeSpec(m, n, tau)
    steps = staircase(n)
    weights = [
        tuple(value - step for value, step in zip(point, steps))
        for point in dominant_points(spec)
        if all(a > b for a, b in zip(point, point[1:]))
    ]
    weights.sort(key=_weight_sort_key)
    return tuple(weights)


@dataclass(frozen=True)
class WeightTable:
    """One table row: the weights for a single grid value t."""

    m: int
    n: int
    t: Fraction
    tau: EpsRational
    weights: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ColorBlock:
    color: int
    weights: tuple[tuple[int, ...], ...]


def tilting_weights(m: int, n: int, t, window: str = "low") -> WeightTable:
    """The weight table for grid value t (raises if t is not on the grid)."""
    t = Fraction(t)
    if t not in t_grid(n):
        raise ValueError(f"t = {t} is not on the grid for n = {n}")
    tau = tau_for_t(m, n, t, window)
    return WeightTable(m=m, n=n, t=t, tau=tau, weights=dominant_weights(m, n, tau))


def color_window_start(m: int, n: int, t, window: str = "low") -> int:
    """Smallest possible color: ceil(n*tau) - n(n-1)/2."""
    tau = tau_for_t(m, n, t, window)
    return math.ceil(tau * n) - n * (n - 1) // 2


def color_blocks(table: WeightTable) -> list[ColorBlock]:
    """Group table weights by color, ascending."""
    grouped: dict[int, list[tuple[int, ...]]] = {}
    for xi in table.weights:
        grouped.setdefault(weight_color(xi), []).append(xi)
    return [
        ColorBlock(color=c, weights=tuple(grouped[c])) for c in sorted(grouped)
    ]
