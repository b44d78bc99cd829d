import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toricreg import (GeneratorSet, InvalidInstanceError, OutOfDomainError,
                      ResourceLimitError, hilbert_function, homogenize,
                      naive_sumset, step_equality_holds, step_threshold)
from toricreg.lattice import SimplexSlice, naive_slice_points, norm, unit


class TestSimplexSlice:
    @pytest.mark.parametrize("d,D,s,e", [
        (1, 4, 3, 1), (2, 4, 2, 1), (2, 4, 2, 2), (2, 6, 3, 2),
        (3, 3, 2, 1), (3, 6, 1, 3), (4, 5, 1, 5),
    ])
    def test_rank_is_a_bijection(self, d, D, s, e):
        sl = SimplexSlice(d, D, s, e)
        expected = naive_slice_points(d, s * D, e)
        assert sl.size == len(expected)
        seen = set()
        for p in expected:
            r = sl.rank(p)
            assert 0 <= r < sl.size
            assert sl.unrank(r) == p
            seen.add(r)
        assert len(seen) == sl.size

    def test_rank_embeds_colex_order(self):
        sl = SimplexSlice(2, 3, 2, 1)
        pts = [sl.unrank(i) for i in range(sl.size)]
        # colex: last coordinate most significant
        assert pts == sorted(pts, key=lambda p: p[::-1])

    def test_points_array_sorted_by_rank(self):
        sl = SimplexSlice(3, 4, 2, 2)
        arr = sl.points_array()
        assert arr.shape == (sl.size, 3)
        ranks = sl.rank_array(arr)
        assert list(ranks) == list(range(sl.size))

    def test_out_of_domain(self):
        sl = SimplexSlice(2, 4, 1, 2)
        with pytest.raises(OutOfDomainError):
            sl.rank((1, 0))  # odd norm
        with pytest.raises(OutOfDomainError):
            sl.rank((5, 0))  # norm 5 > 4
        with pytest.raises(OutOfDomainError):
            sl.unrank(sl.size)

    def test_size_cap(self):
        with pytest.raises(ResourceLimitError):
            SimplexSlice(2, 10, 10, 1, max_size=100)

    @given(st.integers(1, 4), st.integers(2, 6), st.integers(0, 3),
           st.data())
    @settings(max_examples=60, deadline=None)
    def test_unrank_rank_roundtrip(self, d, D, s, data):
        e = data.draw(st.sampled_from(
            [x for x in range(1, D + 1) if D % x == 0]))
        sl = SimplexSlice(d, D, s, e)
        i = data.draw(st.integers(0, sl.size - 1))
        assert sl.rank(sl.unrank(i)) == i


class TestGeneratorSet:
    def test_validation(self):
        with pytest.raises(InvalidInstanceError):
            GeneratorSet(2, [(0, 0), (4, 0)])  # missing 4*e_2
        with pytest.raises(InvalidInstanceError):
            GeneratorSet(2, [(4, 0), (0, 4)])  # missing origin
        with pytest.raises(InvalidInstanceError):
            GeneratorSet(2, [(0, 0), (4, 0), (0, 4), (-1, 2)])
        with pytest.raises(InvalidInstanceError):
            GeneratorSet(2, [(0, 0), (4, 0), (0, 4), (4, 0)])
        with pytest.raises(InvalidInstanceError):
            GeneratorSet(1, [(0,), (1,)])  # D = 1

    def test_derived_parameters(self, quartic):
        assert (quartic.d, quartic.D, quartic.e) == (2, 4, 2)
        assert quartic.n_plus_1 == 7

    def test_homogenize(self, quartic):
        B = homogenize(quartic)
        assert all(norm(b) == 4 for b in B.points)
        assert (0, 3, 1) in B.points  # lift of (3,1)

    def test_levels_match_naive_sumsets(self, quartic):
        for s in range(5):
            assert quartic.level(s).point_set() == naive_sumset(
                quartic.points, s)

    def test_level_zero_and_one(self):
        A = GeneratorSet(2, [(0, 0), (3, 0), (0, 3), (1, 1)])
        assert A.level(0).point_set() == {(0, 0)}
        assert A.level(1).point_set() == set(A.points)

    def test_hilbert_function(self, quartic):
        assert hilbert_function(quartic, 4) == [1, 7, 24, 48, 80]

    def test_random_sets_match_naive(self):
        rng = random.Random(7)
        for _ in range(10):
            d = rng.randint(1, 3)
            D = rng.randint(2, 5)
            pts = {(0,) * d} | {unit(d, i, D) for i in range(d)}
            pool = sorted(naive_slice_points(d, D))
            pts |= set(rng.sample(pool, min(4, len(pool))))
            A = GeneratorSet(d, pts)
            for s in range(4):
                assert A.level(s).point_set() == naive_sumset(A.points, s)


class TestStepProperty:
    @pytest.mark.parametrize("d,D,e,expected", [
        (2, 4, 2, 2), (2, 6, 2, 2), (3, 6, 2, 3), (1, 3, 1, 1),
        (2, 2, 2, 1), (6, 2, 2, 3),
    ])
    def test_threshold_formula(self, d, D, e, expected):
        assert step_threshold(d, D, e) == expected

    def test_threshold_is_sharp_small(self):
        for d in (1, 2, 3):
            for D in (2, 3, 4):
                for e in (x for x in range(1, D + 1) if D % x == 0):
                    thr = step_threshold(d, D, e)
                    assert step_equality_holds(d, D, e, thr)
                    if thr > 0:
                        assert not step_equality_holds(d, D, e, thr - 1)

    def test_direct_set_computation_agrees_with_naive(self):
        d, D, e, s = 2, 4, 2, 1
        lo = naive_slice_points(d, s * D, e)
        hi = naive_slice_points(d, (s + 1) * D, e)
        shifts = {(0,) * d} | {unit(d, i, D) for i in range(d)}
        summed = {tuple(a + b for a, b in zip(p, v))
                  for p in lo for v in shifts}
        assert step_equality_holds(d, D, e, s) == (summed == hi)
