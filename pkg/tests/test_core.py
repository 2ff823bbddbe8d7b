import math
from fractions import Fraction

import pytest

from hyperion import CTRIV, K, P, QTRIV, S, T, TC, Phase, Polar, catalog, lookup
from hyperion import valueset as vs
from hyperion.errors import CarrierMismatch, EmptyHypersum, FamilyMismatch, InverseOfZero
from hyperion.valueset import Arc, Disk, DownRay, Point

from oracles import finite_union, krasner_sum, sign_sum

PI = math.pi


def pts(S):
    return sorted(r.value for r in S.regions)


class TestFiniteTables:
    @pytest.mark.parametrize("a", [0, 1])
    @pytest.mark.parametrize("b", [0, 1])
    def test_krasner(self, a, b):
        assert set(pts(K.hyperadd(a, b))) == krasner_sum(a, b)

    @pytest.mark.parametrize("a", [-1, 0, 1])
    @pytest.mark.parametrize("b", [-1, 0, 1])
    def test_sign(self, a, b):
        assert set(pts(S.hyperadd(a, b))) == sign_sum(a, b)

    def test_sign_multiplication_and_negation(self):
        assert S.mul(-1, -1) == 1
        assert S.neg(1) == -1
        assert S.inv(-1) == -1

    def test_exhaustive_subset_sums(self):
        from itertools import combinations

        for H, table in ((K, krasner_sum), (S, sign_sum)):
            els = H.elements()
            subsets = [c for k in range(1, len(els) + 1) for c in combinations(els, k)]
            for A in subsets:
                for B in subsets:
                    got = H.set_hyperadd(vs.make("finite", map(Point, A)), vs.make("finite", map(Point, B)))
                    assert set(pts(got)) == finite_union(table, A, B)

    def test_hypersum_matches_fold(self):
        assert pts(S.hypersum([1, 1, -1])) == [-1, 0, 1]
        assert pts(S.hypersum([1, 1, 1])) == [1]
        assert pts(K.hypersum([1, 0, 0])) == [1]


class TestTropical:
    def test_distinct_values_take_the_max(self):
        assert T.hyperadd(1.0, 2.0) == vs.make("trop", [Point(2.0)])

    def test_equal_values_give_a_ray(self):
        assert T.hyperadd(1.0, 1.0) == vs.make("trop", [DownRay(1.0)])

    def test_zero_is_minus_infinity(self):
        assert T.hyperadd(-math.inf, 3.0) == T.singleton(3.0)
        assert T.contains(T.hyperadd(0.5, 0.5), -math.inf)

    def test_multiplication_is_addition(self):
        assert T.mul(1.5, 2.0) == 3.5
        assert T.neg(4.0) == 4.0
        assert T.inv(4.0) == -4.0

    def test_set_sum_with_rays(self):
        A = vs.make("trop", [DownRay(0.0)])
        B = vs.make("trop", [Point(-2.0)])
        assert T.set_hyperadd(A, B) == A


class TestPhase:
    def test_antipodal_pair(self):
        got = P.hyperadd(Phase(0.0), Phase(PI))
        assert pts_phase(got) == [None, 0.0, PI]

    def test_equal_phases(self):
        assert P.hyperadd(Phase(1.0), Phase(1.0)) == P.singleton(Phase(1.0))

    def test_generic_pair_is_open_short_arc(self):
        got = P.hyperadd(Phase(0.0), Phase(1.0))
        assert got == vs.make("phase", [Arc(0.0, 1.0, True, True)])
        assert P.contains(got, Phase(0.5))
        assert not P.contains(got, Phase(0.0))
        assert not P.contains(got, Phase(2.0))

    def test_short_arc_wraps_across_zero(self):
        got = P.hyperadd(Phase(6.0), Phase(0.5))
        assert P.contains(got, Phase(0.1))
        assert not P.contains(got, Phase(PI))


def pts_phase(S):
    return sorted((r.value.angle for r in S.regions), key=lambda a: -1 if a is None else a)


class TestTropicalComplex:
    def test_larger_magnitude_wins(self):
        assert TC.hyperadd(Polar(1.0, 0.3), Polar(0.0, 2.0)) == TC.singleton(Polar(1.0, 0.3))

    def test_antipodal_equal_magnitudes_fill_the_disk(self):
        got = TC.hyperadd(Polar(0.0, 0.0), Polar(0.0, PI))
        assert got == vs.make("complex", [Disk(0.0)])
        assert TC.contains(got, Polar(-5.0, 1.234))
        assert TC.contains(got, TC.zero)
        assert not TC.contains(got, Polar(0.1, 0.0))

    def test_equal_magnitudes_give_closed_arc(self):
        got = TC.hyperadd(Polar(0.0, 0.5), Polar(0.0, 1.0))
        assert got == vs.make("complex", [Arc(0.5, 0.5, False, False, 0.0)])
        assert TC.contains(got, Polar(0.0, 0.5))
        assert not TC.contains(got, Polar(-1.0, 0.7))

    def test_pair_sum_disk_example(self):
        got = TC.hyperadd(Polar(1.0, PI / 6), Polar(1.0, 7 * PI / 6))
        assert got == vs.make("complex", [Disk(1.0)])

    def test_multiplication(self):
        z = TC.mul(Polar(1.0, PI), Polar(2.0, PI / 2))
        assert TC.eq(z, Polar(3.0, 3 * PI / 2))
        assert TC.is_zero(TC.mul(TC.zero, Polar(1.0, 0.0)))
        assert TC.eq(TC.neg(Polar(0.0, 0.0)), Polar(0.0, PI))


class TestRational:
    def test_field_sum_is_a_point(self):
        assert QTRIV.hyperadd(Fraction(1, 2), Fraction(1, 3)) == QTRIV.singleton(Fraction(5, 6))

    def test_ctriv_is_registered_but_not_in_the_catalog(self):
        assert lookup("Ctriv") is CTRIV
        assert CTRIV not in catalog()


class TestErrors:
    def test_carrier_mismatch(self):
        with pytest.raises(CarrierMismatch):
            S.hyperadd(2, 1)
        with pytest.raises(CarrierMismatch):
            TC.hyperadd(1.0, Polar(0.0, 0.0))

    def test_family_mismatch(self):
        with pytest.raises(FamilyMismatch):
            T.set_hyperadd(S.singleton(1), T.singleton(0.0))

    def test_empty_hypersum(self):
        with pytest.raises(EmptyHypersum):
            K.hypersum([])

    @pytest.mark.parametrize("H", [K, S, T, P, TC, QTRIV], ids=lambda h: h.name)
    def test_inverse_of_zero(self, H):
        with pytest.raises(InverseOfZero):
            H.inv(H.zero)

    def test_valuesets_are_immutable(self):
        s = T.singleton(0.0)
        with pytest.raises(AttributeError):
            s.family = "phase"

    def test_lookup_unknown(self):
        with pytest.raises(KeyError):
            lookup("nope")


SAMPLE_SETS = [
    vs.make("finite", [Point(-1), Point(1)]),
    vs.make("trop", [Point(-math.inf), DownRay(2.5), Point(4.0)]),
    vs.make("phase", [Point(Phase(None)), Arc(0.25, 1.0, True, False)]),
    vs.make("complex", [Disk(0.5), Arc(1.0, 2.0, False, True, 1.0), Point(Polar(2.0, 0.1))]),
]


@pytest.mark.parametrize("S_", SAMPLE_SETS, ids=lambda s: s.family)
def test_valueset_json_round_trip(S_):
    assert vs.from_json(vs.to_json(S_)) == S_


def test_canonical_form_merges_nested_regions():
    merged = vs.make("complex", [Disk(1.0), Disk(0.0), Point(Polar(0.5, 2.0))])
    assert merged == vs.make("complex", [Disk(1.0)])
    merged = vs.make("trop", [DownRay(0.0), Point(-1.0), Point(1.0)])
    assert merged == vs.make("trop", [DownRay(0.0), Point(1.0)])
