"""Frozen golden weight tables for m = 2, n = 2, 3, 4 over the full t-grid.

Keys are (m, n, t); weights are compared as sets since only the content of
a table row is pinned, not its presentation order.
"""

from fractions import Fraction

GOLDEN_TABLES = {
    (2, 2, Fraction(0)): [
        (1, 0), (1, 1),
    ],
    (2, 2, Fraction(-1, 2)): [
        (0, 0), (1, 0),
    ],
    (2, 3, Fraction(0)): [
        (1, 1, 1), (2, 1, 0), (2, 1, 1), (2, 2, 0), (2, 2, 1),
    ],
    (2, 3, Fraction(-1, 3)): [
        (1, 1, 0), (1, 1, 1), (2, 1, 0), (2, 1, 1), (2, 2, 0),
    ],
    (2, 3, Fraction(-1, 2)): [
        (1, 1, 0), (2, 0, 0), (1, 1, 1), (2, 1, 0), (2, 1, 1),
    ],
    (2, 3, Fraction(-2, 3)): [
        (1, 0, 0), (1, 1, 0), (2, 0, 0), (1, 1, 1), (2, 1, 0),
    ],
    (2, 4, Fraction(0)): [
        (3, 1, 1, 1), (2, 2, 1, 1), (3, 2, 1, 0), (2, 2, 2, 0), (3, 2, 1, 1),
        (2, 2, 2, 1), (3, 3, 1, 0), (3, 2, 2, 0), (3, 3, 1, 1), (3, 2, 2, 1),
        (2, 2, 2, 2), (3, 3, 2, 0), (3, 3, 2, 1), (3, 2, 2, 2),
    ],
    (2, 4, Fraction(-1, 4)): [
        (2, 1, 1, 1), (2, 2, 1, 0), (3, 1, 1, 1), (2, 2, 1, 1), (3, 2, 1, 0),
        (2, 2, 2, 0), (3, 2, 1, 1), (2, 2, 2, 1), (3, 3, 1, 0), (3, 2, 2, 0),
        (3, 3, 1, 1), (3, 2, 2, 1), (2, 2, 2, 2), (3, 3, 2, 0),
    ],
    (2, 4, Fraction(-1, 3)): [
        (2, 1, 1, 1), (3, 1, 1, 0), (2, 2, 1, 0), (3, 1, 1, 1), (2, 2, 1, 1),
        (3, 2, 1, 0), (2, 2, 2, 0), (3, 2, 1, 1), (2, 2, 2, 1), (3, 3, 1, 0),
        (3, 2, 2, 0), (3, 3, 1, 1), (3, 2, 2, 1), (2, 2, 2, 2),
    ],
    (2, 4, Fraction(-1, 2)): [
        (1, 1, 1, 1), (2, 1, 1, 0), (2, 2, 0, 0), (2, 1, 1, 1), (3, 1, 1, 0),
        (2, 2, 1, 0), (3, 2, 0, 0), (3, 1, 1, 1), (2, 2, 1, 1), (3, 2, 1, 0),
        (2, 2, 2, 0), (3, 2, 1, 1), (2, 2, 2, 1), (3, 2, 2, 0),
    ],
    (2, 4, Fraction(-2, 3)): [
        (1, 1, 1, 1), (2, 1, 1, 0), (3, 1, 0, 0), (2, 2, 0, 0), (2, 1, 1, 1),
        (3, 1, 1, 0), (2, 2, 1, 0), (3, 2, 0, 0), (3, 1, 1, 1), (2, 2, 1, 1),
        (3, 2, 1, 0), (2, 2, 2, 0), (3, 2, 1, 1), (2, 2, 2, 1),
    ],
    (2, 4, Fraction(-3, 4)): [
        (1, 1, 1, 0), (2, 1, 0, 0), (1, 1, 1, 1), (2, 1, 1, 0), (3, 1, 0, 0),
        (2, 2, 0, 0), (2, 1, 1, 1), (3, 1, 1, 0), (2, 2, 1, 0), (3, 2, 0, 0),
        (3, 1, 1, 1), (2, 2, 1, 1), (3, 2, 1, 0), (2, 2, 2, 0),
    ],
}
