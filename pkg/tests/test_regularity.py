import random
from fractions import Fraction
from math import comb

import pytest

from toricreg import (GeneratorSet, UnsupportedInstanceError, classify,
                      degree, eg_check, eg_inequality_suite,
                      herzog_hibi_bound, one_singular_bound, reg, sigma,
                      sizeA_bound)
from toricreg.families import (minimal_smooth, one_singular_base,
                               one_singular_random, smooth_random_superset,
                               veronese)


class TestDegree:
    def test_quartic(self, quartic):
        result = degree(quartic)
        assert (result.theta, result.degree, result.codim) == (8, 8, 4)

    def test_even_sextic(self, even_sextic):
        result = degree(even_sextic)
        # one-singular with e = 2: degree = D^d / e = 36 / 2
        assert result.degree == 18

    def test_veronese(self):
        for d, D in [(1, 3), (2, 3), (2, 4)]:
            assert degree(veronese(d, D)).degree == D ** d

    def test_codim(self, quartic):
        assert degree(quartic).codim == len(quartic.points) - 3


class TestReg:
    def test_quartic(self, quartic):
        result = reg(quartic)
        assert result.reg == 2
        assert result.sigma == 2
        assert result.method_tag == "briales-enumeration"

    def test_even_sextic_gap(self, even_sextic):
        result = reg(even_sextic)
        assert result.reg == 3
        assert result.sigma == 3

    def test_smooth_reg_equals_sigma(self):
        for A in [veronese(1, 4), veronese(2, 3), minimal_smooth(2, 3),
                  minimal_smooth(2, 4)]:
            result = reg(A)
            assert result.reg == result.sigma == sigma(A).sigma
            assert result.method_tag == "smooth"

    def test_witness_is_deterministic(self, quartic):
        a = reg(quartic)
        b = reg(quartic)
        assert (a.witness_y, a.witness_i) == (b.witness_y, b.witness_i)

    def test_fields_agree(self, quartic, even_sextic):
        for A in (quartic, even_sextic):
            assert reg(A, field=2).reg == reg(A, field=32003).reg \
                == reg(A).reg

    def test_e_equals_D_reduction(self):
        A = one_singular_base(2, 4, 4)
        result = reg(A)
        assert result.method_tag == "e=D-reduction"
        # reduced instance is one-dimensional and smooth
        red = classify(A).reduced
        assert result.reg == reg(red).reg

    def test_other_requires_cutoff(self):
        A = GeneratorSet(2, [(0, 0), (3, 0), (0, 3), (1, 1)])
        with pytest.raises(UnsupportedInstanceError):
            reg(A)
        result = reg(A, cutoff=4)
        assert result.method_tag == "lower-bound"
        assert result.reg >= 0

    def test_cutoff_safety(self, quartic):
        base = reg(quartic)
        wider = reg(quartic, extra_levels=2)
        assert wider.reg == base.reg
        assert wider.witness_y == base.witness_y


class TestBounds:
    def test_herzog_hibi(self):
        out = herzog_hibi_bound(veronese(2, 3))
        assert out["holds"]
        assert out["bound"] == 2
        out = herzog_hibi_bound(minimal_smooth(2, 4))
        assert out["slack"] == 0  # the family is extremal

    def test_one_singular(self, quartic):
        out = one_singular_bound(quartic)
        assert out["holds"]
        assert out["bound"] == 5

    def test_eg(self, quartic):
        out = eg_check(quartic)
        assert out == {"reg": 2, "degree": 8, "codim": 4, "bound": 4,
                       "holds": True}

    def test_eg_random_singular(self):
        rng = random.Random(11)
        for _ in range(3):
            A = one_singular_random(2, 4, 2, rng)
            assert eg_check(A)["reg"] <= eg_check(A)["bound"]

    def test_wrong_family_rejected(self, quartic):
        with pytest.raises(UnsupportedInstanceError):
            herzog_hibi_bound(quartic)
        with pytest.raises(UnsupportedInstanceError):
            one_singular_bound(veronese(2, 3))


class TestInequalities:
    def test_sizeA_bound_formula(self):
        assert sizeA_bound(2, 6, 2) == Fraction(5, 8) * comb(8, 2)

    def test_sizeA_bound_counts_points(self):
        import itertools
        for d, D, e in [(2, 4, 2), (3, 6, 2), (3, 6, 3), (2, 9, 3)]:
            count = sum(1 for p in itertools.product(range(D + 1), repeat=d)
                        if sum(p) <= D and sum(p) % e == 0)
            assert count <= sizeA_bound(d, D, e)

    def test_suite_holds(self):
        for d in (3, 4):
            for D in (3, 4, 6):
                for e in (x for x in range(1, D + 1) if D % x == 0):
                    assert eg_inequality_suite(d, D, e)["holds"]

    def test_suite_domain(self):
        with pytest.raises(UnsupportedInstanceError):
            eg_inequality_suite(2, 4, 2)
        with pytest.raises(UnsupportedInstanceError):
            eg_inequality_suite(3, 4, 3)


class TestSmoothRandom:
    def test_reg_equals_sigma_on_random_supersets(self):
        rng = random.Random(5)
        for _ in range(3):
            A = smooth_random_superset(2, 4, rng)
            result = reg(A)
            assert result.reg == result.sigma
