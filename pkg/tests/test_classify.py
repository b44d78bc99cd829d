import pytest

from toricreg import (CertificationError, GeneratorSet, InvalidInstanceError,
                      ONE_SINGULAR, OTHER, SMOOTH, classify,
                      is_chart_smooth, reduce_e_equals_D)
from toricreg.classify import AffineChart
from toricreg.families import (minimal_smooth, one_singular_base, veronese)


class TestVerdicts:
    def test_veronese_is_smooth(self):
        for d, D in [(1, 3), (2, 2), (2, 3), (3, 4)]:
            report = classify(veronese(d, D))
            assert report.verdict == SMOOTH

    def test_minimal_smooth_family(self):
        for d, D in [(1, 3), (2, 4), (3, 5)]:
            assert classify(minimal_smooth(d, D)).verdict == SMOOTH

    def test_quartic_is_one_singular(self, quartic):
        report = classify(quartic)
        assert report.verdict == ONE_SINGULAR
        assert report.e == 2
        assert report.singular_vertex == 0

    def test_even_sextic_is_one_singular(self, even_sextic):
        report = classify(even_sextic)
        assert (report.verdict, report.e) == (ONE_SINGULAR, 2)

    def test_one_singular_base_family(self):
        for d, D, e in [(2, 4, 2), (2, 6, 3), (3, 6, 2), (2, 6, 6)]:
            report = classify(one_singular_base(d, D, e))
            assert (report.verdict, report.e) == (ONE_SINGULAR, e)

    def test_other(self):
        A = GeneratorSet(2, [(0, 0), (3, 0), (0, 3), (1, 1)])
        assert classify(A).verdict == OTHER

    def test_imprimitive_rejected(self):
        # every homogenized coordinate is even: (2,0),(0,2) with D=2... use
        # a set where the lift is uniformly divisible
        A = GeneratorSet(1, [(0,), (2,)])
        with pytest.raises(InvalidInstanceError, match="divide"):
            classify(A)


class TestCharts:
    def test_sextic_chart_zero_is_singular(self, sextic):
        chart = AffineChart(sextic, 0)
        gens = set(chart.minimal_generators())
        assert gens == {(0, 4), (0, 6), (1, 1), (4, 0), (6, 0)}
        assert not is_chart_smooth(chart)
        assert is_chart_smooth(AffineChart(sextic, 1))
        assert is_chart_smooth(AffineChart(sextic, 2))

    def test_sextic_verdict(self, sextic):
        report = classify(sextic)
        assert report.verdict == ONE_SINGULAR
        assert report.singular_vertex == 0
        assert report.e == 2

    def test_veronese_charts_all_smooth(self):
        A = veronese(2, 3)
        for i in range(3):
            assert is_chart_smooth(AffineChart(A, i))

    def test_minimal_generators_are_irredundant(self, quartic):
        chart = AffineChart(quartic, 0)
        gens = chart.minimal_generators()
        assert len(set(gens)) == len(gens)
        for g in gens:
            others = AffineChart(quartic, 0)
            others.generators = tuple(h for h in gens if h != g)
            others._member_cache = {(0,) * quartic.d: True}
            assert not others._member(g)


class TestEEqualsDReduction:
    def test_reduction_drops_a_dimension(self):
        A = one_singular_base(2, 4, 4)
        report = classify(A)
        assert report.e == A.D == 4
        assert report.reduced is not None
        assert report.reduced.d == 1
        assert classify(report.reduced).verdict == SMOOTH

    def test_d1_reduces_to_none(self):
        # a one-dimensional set with e = D is always imprimitive, so it
        # never reaches classify(); the reduction helper still handles it
        A = GeneratorSet(1, [(0,), (3,)])
        with pytest.raises(InvalidInstanceError):
            classify(A)
        assert reduce_e_equals_D(A, 0) is None

    def test_reduction_precondition(self, quartic):
        with pytest.raises(CertificationError):
            reduce_e_equals_D(quartic, 0)
