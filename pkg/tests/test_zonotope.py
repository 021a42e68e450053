from fractions import Fraction
from itertools import permutations

import pytest

from zonopark.scalars import EpsRational, parse_scalar
from zonopark.verify import admissible_taus, inadmissible_taus, sample_taus
from zonopark.zonotope import (
    Location,
    ZonotopeSpec,
    contains,
    count_invariant_points,
    count_lattice_points,
    dominant_points,
    enumerate_lattice_points,
    has_boundary_lattice_point,
    is_admissible,
    scan_window,
    support_bounds,
)

import oracles


def spec_of(m, n, tau_text):
    return ZonotopeSpec(m, n, parse_scalar(tau_text))


# -- support bounds ----------------------------------------------------------


def test_support_bounds_examples():
    tau = EpsRational(Fraction(5, 7), -1)
    b = support_bounds(ZonotopeSpec(2, 3, tau), 2)
    assert b.upper == tau * 2 + 4 and b.lower == tau * 2 - 2

    b = support_bounds(ZonotopeSpec(2, 2, tau), 1)
    assert b.upper == tau + 2 and b.lower == tau - 1

    for m, n in [(1, 1), (2, 4), (3, 5)]:
        b = support_bounds(ZonotopeSpec(m, n, tau), n)
        assert b.upper == tau * n + n and b.lower == tau * n


@pytest.mark.parametrize("m,n", [(1, 1), (1, 4), (2, 3), (3, 5)])
def test_support_width(m, n):
    spec = ZonotopeSpec(m, n, EpsRational(Fraction(1, 7)))
    for k in range(1, n + 1):
        b = support_bounds(spec, k)
        assert b.upper - b.lower == m * k * (n - k) + k


def test_support_bounds_bad_k():
    spec = spec_of(2, 3, "1-eps")
    for k in (0, 4, -1):
        with pytest.raises(ValueError):
            support_bounds(spec, k)


def test_spec_validation():
    with pytest.raises(ValueError):
        ZonotopeSpec(0, 2, EpsRational(1))
    with pytest.raises(ValueError):
        ZonotopeSpec(2, 0, EpsRational(1))


# -- membership --------------------------------------------------------------


def test_contains_examples():
    spec = spec_of(2, 2, "1-eps")
    assert contains(spec, (2, 1)) is Location.INTERIOR
    assert contains(spec, (3, 0)) is Location.OUTSIDE

    # at tau = 3/2 the boundary lattice points are (2,1),(1,2),(3,2),(2,3);
    # (3,1) satisfies every subset constraint strictly
    spec = spec_of(2, 2, "3/2")
    assert contains(spec, (3, 1)) is Location.INTERIOR
    for x in [(2, 1), (1, 2), (3, 2), (2, 3)]:
        assert contains(spec, x) is Location.BOUNDARY


def test_contains_matches_hull_oracle_n2():
    for m in (1, 2, 3):
        for tau_text in ["1-eps", "3/2", "5/4", "2+eps", "-1/3", "0"]:
            spec = spec_of(m, 2, tau_text)
            lo, hi = scan_window(spec)
            for x in [(a, b) for a in range(lo - 1, hi + 2) for b in range(lo - 1, hi + 2)]:
                got = contains(spec, x).value
                want = oracles.hull_location_2d(m, spec.tau, x)
                assert got == want, (m, tau_text, x, got, want)


@pytest.mark.parametrize("m,n", [(1, 3), (2, 3), (3, 3), (2, 4)])
def test_contains_matches_subset_oracle(m, n):
    taus = sample_taus(m, n, 2) + inadmissible_taus(m, n, 2)
    for tau in taus:
        spec = ZonotopeSpec(m, n, tau)
        lo, hi = scan_window(spec)
        for rep in dominant_points(spec):
            assert contains(spec, rep).value == oracles.subset_location(m, n, tau, rep)
        # spot-check points outside as well
        corner = (hi + 1,) + (lo,) * (n - 1)
        assert contains(spec, corner).value == oracles.subset_location(m, n, tau, corner)


def test_contains_dimension_mismatch():
    with pytest.raises(ValueError):
        contains(spec_of(2, 2, "1-eps"), (1, 2, 3))


# -- admissibility -----------------------------------------------------------


def test_is_admissible_examples():
    assert not is_admissible(2, 2, Fraction(3, 2))
    assert is_admissible(2, 3, Fraction(8, 5))
    assert is_admissible(2, 2, EpsRational(1, -1))


def test_admissibility_boundary_dichotomy_small():
    for m in (1, 2):
        for n in (1, 2, 3):
            for tau in admissible_taus(m, n, 3):
                assert not has_boundary_lattice_point(ZonotopeSpec(m, n, tau))
            for tau in inadmissible_taus(m, n, 3):
                assert has_boundary_lattice_point(ZonotopeSpec(m, n, tau))


# -- enumeration -------------------------------------------------------------


def test_enumerate_examples():
    spec = spec_of(2, 2, "1-eps")
    assert enumerate_lattice_points(spec) == [(0, 2), (1, 1), (1, 2), (2, 0), (2, 1)]
    assert count_lattice_points(spec) == 5 == (2 * 2 + 1) ** (2 - 1)

    spec = spec_of(2, 3, "11/6")
    assert count_lattice_points(spec) == 49


def test_scan_window_example():
    # tau = 1-eps, m = n = 2: lower(1) = -eps, upper(1) = 3-eps
    assert scan_window(spec_of(2, 2, "1-eps")) == (-1, 3)


@pytest.mark.parametrize(
    "m,n,tau_text",
    [(1, 2, "7/4"), (2, 2, "1-eps"), (2, 3, "11/6"), (3, 2, "3/2"), (2, 2, "3/2")],
)
def test_enumerate_matches_grid_oracle(m, n, tau_text):
    spec = spec_of(m, n, tau_text)
    expected = oracles.grid_points(m, n, spec.tau, scan_window(spec))
    got = enumerate_lattice_points(spec)
    assert got == sorted(expected)
    assert got == sorted(set(got))
    assert count_lattice_points(spec) == len(expected)


def test_enumeration_is_permutation_closed_and_translates():
    for m, n in [(1, 3), (2, 3), (3, 2)]:
        tau = sample_taus(m, n, 1)[0]
        spec = ZonotopeSpec(m, n, tau)
        points = set(enumerate_lattice_points(spec))
        for p in points:
            for q in permutations(p):
                assert q in points
        shifted = enumerate_lattice_points(ZonotopeSpec(m, n, tau + 1))
        assert shifted == sorted(tuple(c + 1 for c in p) for p in points)


def test_count_matches_enumeration_on_grid():
    for m in (1, 2, 3):
        for n in (1, 2, 3, 4):
            for tau in sample_taus(m, n, 2):
                spec = ZonotopeSpec(m, n, tau)
                assert count_lattice_points(spec) == len(enumerate_lattice_points(spec))


def test_degenerate_n1():
    spec = ZonotopeSpec(3, 1, EpsRational(Fraction(1, 2)))
    assert enumerate_lattice_points(spec) == [(1,)]
    assert count_lattice_points(spec) == 1
    b = support_bounds(spec, 1)
    assert b.lower == spec.tau and b.upper == spec.tau + 1
    # integer tau is the only inadmissible case and puts both endpoints on Z
    assert not is_admissible(3, 1, 2)
    assert has_boundary_lattice_point(ZonotopeSpec(3, 1, EpsRational(2)))


# -- invariant point counts --------------------------------------------------


def test_count_invariant_points_examples():
    spec = spec_of(2, 2, "1-eps")
    assert count_invariant_points(spec, [[1, 2]]) == 1  # only (1, 1)
    assert count_invariant_points(spec, [[1], [2]]) == 5

    spec = spec_of(2, 3, "11/6")
    assert count_invariant_points(spec, [[1, 2, 3]]) == 1  # only (2, 2, 2)


def test_count_invariant_points_matches_filter():
    for m, n in [(2, 3), (3, 3), (2, 4)]:
        tau = sample_taus(m, n, 1)[0]
        spec = ZonotopeSpec(m, n, tau)
        points = enumerate_lattice_points(spec)
        from zonopark.treecount import enumerate_partitions

        for blocks in enumerate_partitions(n):
            expected = sum(
                1
                for p in points
                if all(len({p[i - 1] for i in block}) == 1 for block in blocks)
            )
            assert count_invariant_points(spec, blocks) == expected


def test_count_invariant_points_bad_partition():
    spec = spec_of(2, 3, "11/6")
    with pytest.raises(ValueError):
        count_invariant_points(spec, [[1, 2]])
    with pytest.raises(ValueError):
        count_invariant_points(spec, [[1, 2], [2, 3]])
