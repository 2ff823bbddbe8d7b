import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from hyperion import ETA, K, P, QTRIV, S, SGN, T, TC, Phase, Polar, Polynomial, to_krasner
from hyperion import evaluate, pushforward, restrict_to_line
from hyperion import valueset as vs
from hyperion.errors import CarrierMismatch, DegeneratePolynomial, DimensionMismatch, DotProductCollision
from hyperion.lifting import forward_inclusion_check, forward_inclusion_exhaustive
from hyperion.textio import parse_polynomial

from strategies import lattice_tc_polynomials, polynomials


class TestConstruction:
    def test_zero_terms_are_dropped(self):
        p = Polynomial(T, {(2,): 0.0, (1,): -math.inf, (0,): 1.0})
        assert p.support == ((2,), (0,))

    def test_all_zero_is_degenerate(self):
        with pytest.raises(DegeneratePolynomial):
            Polynomial(S, {(1,): 0})

    def test_mixed_lengths(self):
        with pytest.raises(DimensionMismatch):
            Polynomial(S, {(1,): 1, (0, 1): 1})

    def test_negative_exponent(self):
        with pytest.raises(ValueError):
            Polynomial(S, {(-1,): 1})

    def test_dense_coefficients(self):
        p = Polynomial.from_coeffs(K, [1, 0, 1])
        assert p.coeffs() == [1, 0, 1]
        assert p.degree == 2


class TestEvaluate:
    def test_krasner_example(self):
        p = Polynomial.from_coeffs(K, [1, 1, 1])
        r = evaluate(p, 1)
        assert r.is_root
        assert sorted(x.value for x in r.value.regions) == [0, 1]

    def test_sign_roots(self):
        p = Polynomial.from_coeffs(S, [-1, 0, 1])
        assert evaluate(p, 1).is_root and evaluate(p, -1).is_root
        assert not evaluate(p, 0).is_root

    def test_tropical_tie(self):
        p = parse_polynomial("0 X^2 + 0 X", T)
        assert evaluate(p, 0.0).is_root
        assert evaluate(p, -math.inf).is_root
        assert not evaluate(p, 1.0).is_root

    def test_bivariate(self):
        p = parse_polynomial("0 X1 + 0 X2 + 0", T)
        assert evaluate(p, (0.0, 0.0)).is_root
        assert evaluate(p, (1.0, 1.0)).is_root
        assert not evaluate(p, (1.0, 0.0)).is_root

    def test_wrong_dimension(self):
        p = parse_polynomial("0 X1 + 0 X2", T)
        with pytest.raises(DimensionMismatch):
            evaluate(p, (0.0,))

    def test_rational_root(self):
        p = Polynomial.from_coeffs(QTRIV, [Fraction(-1, 4), Fraction(0), Fraction(1)])
        assert evaluate(p, Fraction(1, 2)).is_root
        assert not evaluate(p, Fraction(1, 3)).is_root


class TestPushforward:
    def test_sign_of_rational(self):
        p = Polynomial.from_coeffs(QTRIV, [Fraction(1), Fraction(-1), Fraction(1)])
        assert pushforward(SGN, p) == Polynomial.from_coeffs(S, [1, -1, 1])

    def test_eta_of_worked_example(self):
        p = parse_polynomial("mag1@0 X^2 + mag1@120 X + mag1@-60", TC)
        q = pushforward(ETA, p)
        assert q == Polynomial.from_coeffs(T, [0.0, 0.0, 0.0])

    def test_domain_mismatch(self):
        with pytest.raises(CarrierMismatch):
            pushforward(ETA, Polynomial.from_coeffs(S, [1, 1]))

    @settings(max_examples=60, deadline=None)
    @given(lattice_tc_polynomials(max_vars=2))
    def test_eta_pushforward_keeps_support(self, p):
        q = pushforward(ETA, p)
        assert q.support == p.support
        for e, c in p.items():
            assert q.coeff(e) == c.logmag


class TestRestrict:
    def test_line_substitution(self):
        p = parse_polynomial("1 X1 X2 + -1 X1 + 1", S)
        q, offset = restrict_to_line(p, (1, -1), (1, 2))
        assert offset == 0
        assert q == Polynomial(S, {(3,): -1, (1,): -1, (0,): 1})

    def test_offset(self):
        p = parse_polynomial("0 X1^2 X2 + 0 X1 X2", T)
        q, offset = restrict_to_line(p, (0.0, 0.0), (1, 1))
        assert offset == 2
        assert q.support == ((1,), (0,))

    def test_collision(self):
        p = parse_polynomial("1 X1 + 1 X2", K)
        with pytest.raises(DotProductCollision):
            restrict_to_line(p, (1, 1), (1, 1))

    @settings(max_examples=80, deadline=None)
    @given(polynomials("S", max_vars=2, max_degree=3, max_terms=5))
    def test_restriction_commutes_with_evaluation(self, p):
        """q(t) == p(lam * t^D) up to the monomial shift."""
        direction = (1, 4)[: p.nvars]
        for lam in ((1, 1), (1, -1), (-1, 1))[: 3 if p.nvars == 2 else 1]:
            lam = lam[: p.nvars]
            q, offset = restrict_to_line(p, lam, direction)
            for t in (1, -1):
                pt = tuple(S.mul(l, S.pow(t, d)) for l, d in zip(lam, direction))
                assert evaluate(q, t).value == S.scale(evaluate(p, pt).value, S.pow(t, -offset))


class TestForwardInclusion:
    @pytest.mark.parametrize("H", [K, S], ids=lambda h: h.name)
    def test_univariate_exhaustive(self, H):
        rep = forward_inclusion_exhaustive(to_krasner(H), degree_max=3)
        assert rep["passed"] and rep["checked"] > 0

    @pytest.mark.parametrize("H", [K, S], ids=lambda h: h.name)
    def test_bivariate_exhaustive(self, H):
        rep = forward_inclusion_exhaustive(to_krasner(H), degree_max=2, nvars=2)
        assert rep["passed"] and rep["checked"] > 0

    def test_sign_of_rational_roots(self):
        rng = random.Random(11)
        for _ in range(50):
            a, b = Fraction(rng.randint(-5, 5)), Fraction(rng.randint(-5, 5))
            p = Polynomial.from_coeffs(QTRIV, [a * b, -(a + b), Fraction(1)])
            rep = forward_inclusion_check(SGN, p, [a, b])
            assert rep["passed"] and rep["checked"] == 2

    def test_eta_of_complex_roots(self):
        p = parse_polynomial("mag1@0 X^2 + mag1@0 X + mag1@0", TC)
        w = Polar(0.0, 2 * math.pi / 3)
        rep = forward_inclusion_check(ETA, p, [w, Polar(0.0, -2 * math.pi / 3)])
        assert rep["passed"] and rep["checked"] == 2

    def test_non_roots_are_reported_not_checked(self):
        p = Polynomial.from_coeffs(S, [1, 1])
        rep = forward_inclusion_check(to_krasner(S), p, [1, -1])
        assert rep["checked"] == 1 and len(rep["not_roots"]) == 1


def test_phase_polynomial_evaluation():
    p = Polynomial.from_coeffs(P, [Phase(0.0), Phase(0.0), Phase(0.0)])
    assert evaluate(p, Phase(3 * math.pi / 4)).is_root
    assert not evaluate(p, Phase(math.pi / 2)).is_root
    assert not evaluate(p, Phase(0.0)).is_root
    assert isinstance(evaluate(p, Phase(0.0)).value, vs.ValueSet)
