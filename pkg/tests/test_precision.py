"""Tests for the configurable-precision arithmetic layer."""

import math
from fractions import Fraction

import pytest
from scipy.integrate import quad

from deltaritz.errors import GammaPoleError
from deltaritz.precision import (
    HalfInteger,
    PrecisionContext,
    gamma_half_integer,
    gamma_real,
    gaussian_moment,
)

CTX = PrecisionContext()


class TestPrecisionContext:
    def test_default_digits(self):
        assert CTX.digits == 50

    def test_eps_scale(self):
        assert CTX.eps == CTX.mp.mpf(10) ** -50

    @pytest.mark.parametrize("bad", [15, 0, -3, 201, 2.5, True])
    def test_rejects_invalid_digits(self, bad):
        with pytest.raises(ValueError):
            PrecisionContext(bad)

    def test_contexts_are_independent(self):
        lo = PrecisionContext(16)
        hi = PrecisionContext(120)
        assert lo.mp.dps < hi.mp.dps
        # creating hi must not have disturbed lo
        assert lo.digits == 16

    def test_mpf_conversions_exact(self):
        assert CTX.mpf(0.5) == CTX.mp.mpf(1) / 2
        assert CTX.mpf(Fraction(1, 3)) == CTX.mp.mpf(1) / 3
        assert CTX.mpf("0.1") == CTX.mp.mpf(1) / 10


class TestHalfInteger:
    def test_exact_value(self):
        assert HalfInteger(7).value == Fraction(7, 2)
        assert HalfInteger.from_int(3).value == 3

    def test_add_integer(self):
        assert (HalfInteger(1) + 1).twice_value == 3

    def test_rejects_non_integer(self):
        with pytest.raises(ValueError):
            HalfInteger(1.5)


class TestGammaHalfInteger:
    def test_seed_half(self):
        # Gamma(1/2) = sqrt(pi)
        assert gamma_half_integer(HalfInteger(1), CTX) == CTX.mp.sqrt(CTX.mp.pi)

    def test_seed_one(self):
        assert gamma_half_integer(HalfInteger(2), CTX) == 1

    def test_factorial_identity(self):
        # Gamma(3) = 2!
        assert gamma_half_integer(HalfInteger(6), CTX) == 2

    def test_rejects_nonpositive(self):
        for tv in (0, -1, -4):
            with pytest.raises(ValueError):
                gamma_half_integer(HalfInteger(tv), CTX)

    @pytest.mark.parametrize("tv", range(1, 60))
    def test_recurrence_consistency(self, tv):
        # Gamma(z+1) = z Gamma(z) for all half-integers in (0, 30]
        z = HalfInteger(tv)
        lhs = gamma_half_integer(z + 1, CTX)
        rhs = CTX.mpf(Fraction(tv, 2)) * gamma_half_integer(z, CTX)
        assert abs(lhs - rhs) <= 4 * CTX.eps * abs(lhs)


class TestGammaReal:
    def test_three_quarters(self):
        # cross-checked through the reflection product G(3/4) G(1/4) = pi sqrt(2)
        g34 = gamma_real(0.75)
        g14 = gamma_real(0.25)
        assert abs(g34 * g14 - math.pi * math.sqrt(2)) <= 1e-13 * math.pi
        assert abs(g34 - 1.2254167024651776) <= 1e-13

    def test_factorial(self):
        assert gamma_real(5) == 24.0

    def test_negative_half(self):
        assert abs(gamma_real(-0.5) + 2 * math.sqrt(math.pi)) <= 1e-13

    @pytest.mark.parametrize("pole", [0, -1, -2, -7])
    def test_pole_error_carries_location(self, pole):
        with pytest.raises(GammaPoleError) as err:
            gamma_real(float(pole))
        assert err.value.pole == pole

    @pytest.mark.parametrize("tv", range(1, 41))
    def test_agrees_with_half_integer_ladder(self, tv):
        # double-precision route vs exact recurrence at every n/2 in (0, 20]
        exact = gamma_half_integer(HalfInteger(tv), CTX)
        approx = gamma_real(tv / 2)
        assert abs(approx - float(exact)) <= 1e-13 * float(exact)


class TestGaussianMoment:
    def test_zeroth_moment(self):
        # half of the full-line Gaussian integral
        assert gaussian_moment(0, 1, CTX) == CTX.mp.sqrt(CTX.mp.pi) / 2

    def test_first_moment(self):
        assert gaussian_moment(1, 1, CTX) == CTX.mpf(0.5)

    def test_fourth_moment_against_quadrature(self):
        # independent oracle: adaptive quadrature of x^4 exp(-2 x^2)
        oracle, bound = quad(lambda x: x**4 * math.exp(-2 * x * x), 0, math.inf)
        value = gaussian_moment(4, 2, CTX)
        assert abs(float(value) - oracle) <= max(1e-12, 10 * bound)
        # closed form of the same number
        closed = 3 * CTX.mp.sqrt(CTX.mp.pi / 2) / 32
        assert abs(value - closed) <= 4 * CTX.eps * closed

    @pytest.mark.parametrize("alpha", [Fraction(1, 2), 1, 2, 4])
    @pytest.mark.parametrize("s", range(0, 61))
    def test_moment_recurrence(self, s, alpha):
        # M(s+2, a) = ((s+1)/(2a)) M(s, a)
        lhs = gaussian_moment(s + 2, alpha, CTX)
        rhs = CTX.mpf(s + 1) / (2 * CTX.mpf(alpha)) * gaussian_moment(s, alpha, CTX)
        assert abs(lhs - rhs) <= 4 * CTX.eps * abs(lhs)

    @pytest.mark.parametrize("a", [1, 2])
    @pytest.mark.parametrize("s", range(0, 41))
    def test_half_width_parametrization(self, s, a):
        # M(s, a/2) must equal 2^((s-1)/2) a^(-(s+1)/2) Gamma((s+1)/2)
        lhs = gaussian_moment(s, Fraction(a, 2), CTX)
        mp = CTX.mp
        rhs = (
            mp.power(2, mp.mpf(s - 1) / 2)
            * mp.power(a, -mp.mpf(s + 1) / 2)
            * gamma_half_integer(HalfInteger(s + 1), CTX)
        )
        assert abs(lhs - rhs) <= 8 * CTX.eps * abs(lhs)

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            gaussian_moment(-1, 1, CTX)
        with pytest.raises(ValueError):
            gaussian_moment(2, 0, CTX)
        with pytest.raises(ValueError):
            gaussian_moment(2, -1.5, CTX)
