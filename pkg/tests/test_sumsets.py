import pytest

from toricreg import (CertificationError, GeneratorSet,
                      UnsupportedInstanceError, classify, compute_holes,
                      sigma, sigma_bounds, verify_sigma_bounds)
from toricreg.families import (minimal_smooth, one_singular_base,
                               one_singular_random, veronese)
from toricreg.lattice import naive_slice_points
from toricreg.sumsets import normalize_singular_vertex

import random


class TestHoles:
    def test_quartic_hole_set(self, quartic):
        holes = compute_holes(quartic)
        assert holes.points == frozenset({(1, 1)})
        assert holes.enclosing_level == 1

    def test_even_sextic_has_no_holes(self, even_sextic):
        assert compute_holes(even_sextic).points == frozenset()

    def test_smooth_instances_have_no_holes(self):
        assert compute_holes(veronese(2, 3)).points == frozenset()
        assert compute_holes(minimal_smooth(2, 4)).points == frozenset()

    def test_unsupported(self):
        A = GeneratorSet(2, [(0, 0), (3, 0), (0, 3), (1, 1)])
        with pytest.raises(UnsupportedInstanceError):
            compute_holes(A)


class TestSigma:
    def test_quartic(self, quartic):
        result = sigma(quartic)
        assert result.sigma == 2
        assert result.bounds.lower == 2
        assert result.bounds.upper == 4
        # from sigma on, the sumsets equal the slice minus the hole
        for s in range(2, 9):
            expected = naive_slice_points(2, 4 * s, 2) - {(1, 1)}
            assert quartic.level(s).point_set() == expected

    def test_even_sextic(self, even_sextic):
        # level 2 misses (3,9) even though the hole set is empty, so the
        # first stable level is 3
        assert (3, 9) not in even_sextic.level(2).point_set()
        result = sigma(even_sextic)
        assert result.sigma == 3
        assert even_sextic.level(3).point_set() == naive_slice_points(
            2, 18, 2)

    def test_veronese_closed_form(self):
        for d, D in [(1, 3), (2, 3), (2, 4), (3, 3)]:
            assert sigma(veronese(d, D)).sigma == d - d // D

    def test_minimal_smooth_closed_form(self):
        for d, D in [(1, 4), (2, 3), (2, 4), (2, 5)]:
            assert sigma(minimal_smooth(d, D)).sigma == d * (D - 2)

    def test_window_certificate(self, quartic):
        result = sigma(quartic)
        lo, hi = result.window_verified
        assert lo <= result.sigma <= hi
        assert result.step_verified_at == result.sigma

    def test_bounds_hold_on_random_singular(self):
        rng = random.Random(3)
        for d, D, e in [(2, 4, 2), (2, 6, 3), (3, 4, 2)]:
            A = one_singular_random(d, D, e, rng)
            out = verify_sigma_bounds(A)
            assert out["lower_holds"] and out["upper_holds"]

    def test_bounds_object(self, quartic):
        b = sigma_bounds(quartic)
        assert (b.t0, b.s0) == (2, 4)
        assert not b.smooth


class TestVertexNormalization:
    def test_singular_vertex_moved_to_zero(self):
        # swap homogenized coordinates of the base family so the singular
        # vertex lands on coordinate 1 instead of 0
        A = one_singular_base(2, 4, 2)
        swapped = [(4 - sum(p), p[1]) for p in A.points]
        A2 = GeneratorSet(2, swapped)
        report2 = classify(A2)
        assert report2.singular_vertex == 1
        A3, report3 = normalize_singular_vertex(A2, report2)
        assert report3.singular_vertex == 0
        assert sigma(A3).sigma == sigma(A).sigma

    def test_sigma_transparent_for_shifted_vertex(self):
        A = one_singular_base(2, 6, 2)
        swapped = [(6 - sum(p), p[1]) for p in A.points]
        A2 = GeneratorSet(2, swapped)
        assert sigma(A2).sigma == sigma(A).sigma
