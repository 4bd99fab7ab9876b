# tests/algebra/test_factored.py
import random
from fractions import Fraction

import pytest

from hecke_spectra.algebra.factored import (ONE, AlgebraicConstant, FactoredFunction, NonConstant,
                                            RationalMonomial, compose_transports, ratio_class)
from hecke_spectra.algebra.units import CycloFactor, TorusPoint, Unit, canonicalize
from hecke_spectra.errors import LatticeMismatch, PoleAtPoint, ZeroDenominator, ZeroFactor

F = Fraction

# --- Test Fixtures / Mock Data ---

@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


def random_raw_factor(rng: random.Random, rank: int):
    while True:
        phase = F(rng.randrange(12), 12)
        vexp = F(rng.randrange(-4, 5), rng.choice([1, 2, 3]))
        x = tuple(rng.randrange(-2, 3) for _ in range(rank))
        if any(x) or vexp != 0 or phase != 0:
            return phase, vexp, x, rng.choice([-2, -1, 1, 2])


def random_point(rng: random.Random, rank: int, denominators=(13, 17)) -> TorusPoint:
    # Coordinates with distinct prime denominators never pair to a small-denominator exponent.
    y = tuple(F(rng.choice([-1, 1]) * rng.randrange(1, p), p) for p in denominators[:rank])
    return TorusPoint(tuple(F(rng.randrange(7), 7) for _ in range(rank)), y)


def random_unimodular(rng: random.Random) -> tuple:
    a, b = rng.randrange(-2, 3), rng.randrange(-2, 3)
    lower = ((1, 0), (a, 1))
    upper = ((1, b), (0, 1))
    return tuple(tuple(sum(lower[i][k] * upper[k][j] for k in range(2)) for j in range(2)) for i in range(2))


def direct_numeric(raw, v0: float) -> complex:
    import cmath
    value = 1 + 0j
    for phase, vexp, _x, mult in raw:
        value *= (1 - cmath.exp(2j * cmath.pi * float(phase)) * v0 ** float(vexp)) ** mult
    return value


class TestCanonicalize:
    def test_flip_of_negative_character(self):
        pieces, compensator = canonicalize(0, -2, (-1,))
        assert pieces == [CycloFactor((1,), F(2), F(0))]
        assert compensator == Unit(F(1), F(1, 2), F(-2), (-1,))

    def test_split_of_non_primitive_character(self):
        pieces, compensator = canonicalize(0, 0, (2,))
        assert sorted(pieces) == [CycloFactor((1,), F(0), F(0)), CycloFactor((1,), F(0), F(1, 2))]
        assert compensator.is_identity()

    def test_zero_factor_is_rejected(self):
        with pytest.raises(ZeroFactor):
            canonicalize(0, 0, (0,))

    def test_zero_factor_allowed_on_request(self):
        assert canonicalize(0, 0, (0, 0), allow_zero=True) == ([], Unit.one(2))

    def test_negative_v_power_is_flipped_and_split(self):
        pieces, compensator = canonicalize(0, -2, ())
        assert compensator == Unit(F(1), F(1, 2), F(-2), ())
        assert sorted(pieces) == [CycloFactor((), F(1), F(0)), CycloFactor((), F(1), F(1, 2))]


class TestFactoredFunctionArithmetic:
    def test_inverse_cancels(self):
        f = FactoredFunction.from_factors([(F(1, 3), 2, (1, -1), 1), (0, -1, (0, 1), -2)], 2,
                                          Unit(F(5, 2), F(1, 2), F(3), (1, 0)))
        assert f * f.inverse() == FactoredFunction.one(2)

    def test_splitting_identity(self):
        lhs = FactoredFunction.factor(0, 0, (1,)) * FactoredFunction.factor(F(1, 2), 0, (1,))
        assert lhs / FactoredFunction.factor(0, 0, (2,)) == FactoredFunction.one(1)

    def test_v_factors_merge_to_lowest_level(self):
        lhs = FactoredFunction.factor(0, F(1, 2), ()) * FactoredFunction.factor(F(1, 2), F(1, 2), ())
        assert lhs == FactoredFunction.factor(0, 1, ())

    def test_normal_form_independent_of_order(self, rng):
        for _ in range(200):
            raw = [random_raw_factor(rng, 2) for _ in range(50)]
            forward = FactoredFunction.one(2)
            for item in raw:
                forward = forward * FactoredFunction.from_factors([item], 2)
            shuffled = list(raw)
            rng.shuffle(shuffled)
            backward = FactoredFunction.one(2)
            for item in shuffled:
                backward = FactoredFunction.from_factors([item], 2) * backward
            assert forward == backward

    def test_zero_absorbs(self):
        f = FactoredFunction.factor(0, 1, (1,))
        assert (f * FactoredFunction.zero(1)).is_zero
        with pytest.raises(ZeroDenominator):
            f / FactoredFunction.zero(1)

    def test_rank_zero_broadcasts(self):
        f = FactoredFunction.factor(0, 1, (1, 0))
        assert (f * FactoredFunction.scalar(3)).rank == 2
        with pytest.raises(LatticeMismatch):
            f * FactoredFunction.factor(0, 1, (1,))

    def test_magnitude_drops_sign(self):
        assert FactoredFunction.scalar(-3).magnitude() == FactoredFunction.scalar(3)
        one_minus_v = FactoredFunction.factor(0, 1, ())
        assert one_minus_v.magnitude() == one_minus_v * FactoredFunction.scalar(-1)
        assert one_minus_v.magnitude().numeric(2.0).real > 0
        assert FactoredFunction.zero().magnitude().is_zero

    def test_magnitude_rejects_torus_functions(self):
        with pytest.raises(ValueError):
            FactoredFunction.factor(0, 1, (1,)).magnitude()

    def test_magnitude_rejects_non_real_values(self):
        i = FactoredFunction.build(0, Unit(F(1), F(1, 4), F(0), ()))
        with pytest.raises(ValueError):
            i.magnitude()
        assert (i * i).magnitude() == FactoredFunction.scalar(1)

    def test_substitute_v(self):
        assert FactoredFunction.factor(0, 1, ()).substitute_v(2) == FactoredFunction.factor(0, 2, ())
        assert FactoredFunction.v_power(3).substitute_v(F(1, 3)) == FactoredFunction.v_power(1)


class TestRatioClass:
    def test_equal_functions(self):
        f = FactoredFunction.factor(0, 2, (1,), -1)
        assert ratio_class(f, f) == RationalMonomial(F(1), F(0))

    def test_signed_monomial(self):
        b = FactoredFunction.factor(0, 2, (1,), -1)
        a = FactoredFunction.scalar(-3) * FactoredFunction.v_power(5) * b
        assert ratio_class(a, b) == RationalMonomial(F(-3), F(5))

    def test_character_left_over(self):
        b = FactoredFunction.factor(0, 2, (1,), -1)
        assert isinstance(ratio_class(FactoredFunction.factor(0, 0, (1,)) * b, b), NonConstant)

    def test_full_galois_orbit_is_rational(self):
        a = FactoredFunction.factor(F(1, 3), 0, ()) * FactoredFunction.factor(F(2, 3), 0, ())
        assert ratio_class(a, ONE) == RationalMonomial(F(3), F(0))
        assert ratio_class(FactoredFunction.factor(F(1, 2), 0, ()), ONE) == RationalMonomial(F(2), F(0))

    def test_partial_orbit_is_algebraic(self):
        assert isinstance(ratio_class(FactoredFunction.factor(F(1, 4), 0, ()), ONE), AlgebraicConstant)

    def test_rational_power_of_irrational_constant(self):
        assert ratio_class(FactoredFunction.factor(F(1, 4), 0, (), 4), ONE) == RationalMonomial(F(-4), F(0))

    def test_zero_cases(self):
        with pytest.raises(ZeroDenominator):
            ratio_class(ONE, FactoredFunction.zero())
        assert isinstance(ratio_class(FactoredFunction.zero(), ONE), NonConstant)


class TestEvaluationAndPullback:
    def test_eval_to_zero(self):
        f = FactoredFunction.factor(0, -2, (1,))
        assert f.eval(TorusPoint((F(0),), (F(2),))).is_zero

    def test_eval_keeps_constants_symbolic(self):
        f = FactoredFunction.factor(0, 0, (1,))
        assert f.eval(TorusPoint((F(1, 2),), (F(0),))) == FactoredFunction.factor(F(1, 2), 0, ())

    def test_eval_pole(self):
        f = FactoredFunction.factor(0, -2, (1,), -1)
        with pytest.raises(PoleAtPoint):
            f.eval(TorusPoint((F(0),), (F(2),)))

    def test_regularized_restriction_reports_order(self):
        f = FactoredFunction.factor(0, -2, (1,), -1) * FactoredFunction.factor(0, 1, (1,))
        value, order = f.regularized_restriction((), TorusPoint((F(0),), (F(2),)))
        assert order == 1
        assert value == FactoredFunction.factor(0, 3, ())

    def test_identity_pullback(self, rng):
        f = FactoredFunction.from_factors([random_raw_factor(rng, 2) for _ in range(10)], 2)
        assert f.pullback(((1, 0), (0, 1)), TorusPoint.trivial(2)) == f

    def test_pullback_to_a_point_is_evaluation(self, rng):
        f = FactoredFunction.from_factors([random_raw_factor(rng, 2) for _ in range(10)], 2)
        p = random_point(rng, 2)
        assert f.pullback((), p) == f.eval(p)

    def test_pullback_functoriality(self, rng):
        for _ in range(50):
            f = FactoredFunction.from_factors([random_raw_factor(rng, 2) for _ in range(8)], 2)
            inner, outer = random_unimodular(rng), random_unimodular(rng)
            inner_base, outer_base = random_point(rng, 2), random_point(rng, 2)
            matrix, base = compose_transports(inner, inner_base, outer, outer_base)
            assert f.pullback(inner, inner_base).pullback(outer, outer_base) == f.pullback(matrix, base)

    def test_eval_after_pullback(self, rng):
        for _ in range(50):
            f = FactoredFunction.from_factors([random_raw_factor(rng, 2) for _ in range(8)], 2)
            matrix, base = random_unimodular(rng), random_point(rng, 2)
            p = random_point(rng, 2, denominators=(101, 103))
            _, image = compose_transports(matrix, base, (), p)
            assert f.pullback(matrix, base).eval(p) == f.eval(image)


class TestNumeric:
    def test_simple_values(self):
        assert FactoredFunction.factor(0, -4, ()).numeric(2) == pytest.approx(0.9375)
        assert FactoredFunction.monomial(Unit(F(1, 2), F(0), F(3), ())).numeric(2) == pytest.approx(4.0)

    def test_canonical_form_agrees_with_raw_product(self, rng):
        for _ in range(100):
            raw = [random_raw_factor(rng, 0) for _ in range(6)]
            f = FactoredFunction.from_factors(raw, 0)
            for _ in range(10):
                v0 = rng.uniform(1.5, 3.0)
                expected = direct_numeric(raw, v0)
                assert abs(f.numeric(v0) - expected) <= 1e-9 * abs(expected)

    def test_numeric_needs_v_only(self):
        with pytest.raises(LatticeMismatch):
            FactoredFunction.factor(0, 1, (1,)).numeric(2)
