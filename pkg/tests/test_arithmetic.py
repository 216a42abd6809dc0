from fractions import Fraction
from math import gcd, lcm

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bfree_toeplitz import (
    DensityReport,
    Progression,
    count_in_interval,
    intersect_progressions,
    multiples_density,
    solve_congruence,
)
from oracles import congruence_scan, multiples_count_scan, progression_members

nonzero_small = st.integers(-64, 64).filter(lambda x: x != 0)


class TestProgression:
    def test_normalizes_residue(self):
        assert Progression(6, -4).residue == 2
        assert Progression(6, 14).residue == 2

    def test_rejects_bad_modulus(self):
        with pytest.raises(ValueError):
            Progression(0, 1)

    def test_membership(self):
        p = Progression(6, 2)
        assert 8 in p and -4 in p and 7 not in p


class TestSolveCongruence:
    @pytest.mark.parametrize(
        "a,b,m,expected",
        [(3, 2, 5, 4), (4, 2, 6, 2), (4, 3, 6, None), (1, 0, 7, 0), (1, 0, 1, 0)],
    )
    def test_examples(self, a, b, m, expected):
        assert solve_congruence(a, b, m) == expected

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            solve_congruence(0, 1, 5)
        with pytest.raises(ValueError):
            solve_congruence(1, 1, 0)

    @settings(max_examples=300, derandomize=True)
    @given(a=nonzero_small, b=st.integers(-100, 100), m=nonzero_small)
    def test_matches_exhaustive_scan(self, a, b, m):
        got = solve_congruence(a, b, m)
        want = congruence_scan(a, b, m)
        assert got == want
        if got is not None:
            assert (a * got - b) % abs(m) == 0
            assert 0 <= got < abs(m) // gcd(a, m)


class TestIntersect:
    def test_example(self):
        assert intersect_progressions(Progression(6, 2), 4) == Progression(12, 8)

    def test_empty(self):
        assert intersect_progressions(Progression(6, 1), 4) is None

    @pytest.mark.parametrize("a", [1, 2, 3, 7, 12])
    def test_self_intersection(self, a):
        assert intersect_progressions(Progression(a, 0), a) == Progression(a, 0)

    @settings(max_examples=200, derandomize=True)
    @given(a=st.integers(1, 40), r=st.integers(-40, 40), b=st.integers(1, 40))
    def test_bidirectional_scan(self, a, r, b):
        result = intersect_progressions(Progression(a, r), b)
        horizon = 10 * lcm(a, b)
        want = progression_members(a, r, 0, horizon) & progression_members(b, 0, 0, horizon)
        if result is None:
            assert not want
        else:
            got = progression_members(result.modulus, result.residue, 0, horizon)
            assert got == want


class TestCountInInterval:
    def test_multiple_of_period_law(self):
        assert count_in_interval(Progression(4, 1), 0, 20) == 5
        assert count_in_interval(Progression(1, 0), 0, 7) == 7

    def test_general_interval(self):
        # members of 6Z + 2 in [0, 13) are exactly {2, 8}
        assert count_in_interval(Progression(6, 2), 0, 13) == 2

    def test_empty_interval(self):
        assert count_in_interval(Progression(5, 3), 7, 7) == 0

    @settings(max_examples=200, derandomize=True)
    @given(a=st.integers(1, 30), r=st.integers(-30, 30), m=st.integers(1, 20))
    def test_period_law(self, a, r, m):
        assert count_in_interval(Progression(a, r), 0, m * a) == m

    @settings(max_examples=200, derandomize=True)
    @given(
        a=st.integers(1, 20),
        r=st.integers(0, 19),
        lo=st.integers(-50, 50),
        width1=st.integers(0, 40),
        width2=st.integers(0, 40),
    )
    def test_additive_over_concatenation(self, a, r, lo, width1, width2):
        p = Progression(a, r)
        mid, hi = lo + width1, lo + width1 + width2
        assert count_in_interval(p, lo, hi) == count_in_interval(p, lo, mid) + count_in_interval(p, mid, hi)

    @settings(max_examples=200, derandomize=True)
    @given(a=st.integers(1, 20), r=st.integers(0, 19), lo=st.integers(-60, 60), width=st.integers(0, 60))
    def test_matches_scan(self, a, r, lo, width):
        assert count_in_interval(Progression(a, r), lo, lo + width) == len(
            progression_members(a, r, lo, lo + width)
        )


class TestMultiplesDensity:
    def test_example_357(self):
        report = multiples_density([6, 20, 56])
        assert (report.period, report.multiples_in_period) == (840, 176)
        assert report.density == Fraction(176, 840)

    def test_example_two_divisors(self):
        assert multiples_density([6, 20]).density == Fraction(1, 5)

    def test_single_divisor(self):
        assert multiples_density([2]).density == Fraction(1, 2)

    def test_rejects_small_divisors(self):
        with pytest.raises(ValueError):
            multiples_density([6, 1])
        with pytest.raises(ValueError):
            multiples_density([])

    def test_report_invariant_enforced(self):
        with pytest.raises(ValueError):
            DensityReport((2,), 2, 1, Fraction(1, 3))

    @settings(max_examples=100, derandomize=True)
    @given(divs=st.lists(st.integers(2, 24), min_size=1, max_size=4))
    def test_matches_residue_scan(self, divs):
        if lcm(*divs) > 10**6:
            return
        report = multiples_density(divs)
        count, period = multiples_count_scan(divs)
        assert report.period == period
        assert report.multiples_in_period == count
        assert report.density == Fraction(count, period)
