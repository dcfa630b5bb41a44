import math
import random
from fractions import Fraction

import pytest

from twistsum.bernoulli_euler import SingularTwistError
from twistsum.euler_maclaurin import (
    SmoothFunction,
    check_derivative_consistency,
    cyc_root_embed,
    em_sum_scaled,
    em_sum_unit,
    quad_remainder,
)

F = Fraction


class TestSmoothFunction:
    def test_polynomial_derivatives(self):
        f = SmoothFunction.from_poly_coeffs([1, -2, 3])  # 3x^2 - 2x + 1
        assert f(2.0) == pytest.approx(9.0)
        assert f.deriv(1)(2.0) == pytest.approx(10.0)
        assert f.deriv(2)(2.0) == pytest.approx(6.0)
        assert f.deriv(3)(5.0) == 0.0  # one past the degree

    def test_exponential(self):
        g = SmoothFunction.exponential(0.5)
        assert g.deriv(2)(1.0) == pytest.approx(0.25 * math.exp(0.5))

    def test_rescaled(self):
        g = SmoothFunction.from_poly_coeffs([0, 0, 1])
        f = g.rescaled(3)
        assert f(2.0) == pytest.approx(36.0)
        assert f.deriv(1)(2.0) == pytest.approx(3 * 2 * 6.0)

    def test_consistency_check_flags_wrong_derivative(self):
        good = SmoothFunction.from_poly_coeffs([0, 1, 1])
        assert check_derivative_consistency(good, [0.2, 1.5])
        bad = SmoothFunction((lambda x: x * x, lambda x: 3 * x))
        assert not check_derivative_consistency(bad, [0.5, 2.0])


class TestQuadRemainder:
    def test_constant_integrand_over_full_periods(self):
        value = quad_remainder(2, 2, 1, lambda x: 1.0, 0.0, 3.0)
        assert abs(value) < 1e-12

    def test_linear_hand_integral(self):
        # integral of C~_{1,2}(x;1) * 2x over [0,1] is -1/8 + 3/8 = 1/4
        value = quad_remainder(1, 2, 1, lambda x: 2 * x, 0.0, 1.0)
        assert value == pytest.approx(0.25, abs=1e-12)

    def test_empty_range(self):
        assert quad_remainder(1, 2, 1, lambda x: 1.0, 2.0, 2.0) == 0

    def test_reversed_range_rejected(self):
        with pytest.raises(ValueError):
            quad_remainder(1, 2, 1, lambda x: 1.0, 1.0, 0.0)


class TestUnitForm:
    def test_hand_checked_quadratic(self):
        f = SmoothFunction.from_poly_coeffs([0, 0, 1])
        res = em_sum_unit(f, 0, 1, 2, 1, 2)
        assert res.direct == pytest.approx(0.75)
        assert res.main_terms == pytest.approx(0.75)
        assert abs(res.remainder) < 1e-12
        assert res.abs_error < 1e-12

    def test_constant_function_cancels(self):
        one = SmoothFunction.from_poly_coeffs([1])
        for k in (2, 3, 4):
            res = em_sum_unit(one, -1, 2, k, 1, 1)
            assert abs(res.direct) < 1e-12
            assert abs(res.total) < 1e-12

    def test_linear_k3(self):
        f = SmoothFunction.from_poly_coeffs([0, 1])
        res = em_sum_unit(f, 0, 2, 3, 1, 1)
        assert res.abs_error < 1e-12

    def test_polynomial_exactness_spot(self):
        rng = random.Random(9)
        for degree in (2, 4, 6):
            coeffs = [rng.randint(-3, 3) for _ in range(degree)] + [1]
            f = SmoothFunction.from_poly_coeffs(coeffs)
            for k, a in ((2, 1), (3, 2), (4, 3)):
                res = em_sum_unit(f, -3, 5, k, a, degree + 1)
                assert res.abs_error < 1e-10, (degree, k, a, res.abs_error)

    def test_q_stability_smooth(self):
        g = SmoothFunction.exponential(0.4)
        totals = [em_sum_unit(g, 0, 3, 2, 1, q).total for q in range(1, 7)]
        for t in totals[1:]:
            assert abs(t - totals[0]) < 1e-9

    def test_direct_convention_three_quarters_of_lattice(self):
        # the r = m..n-1 outer range covers exactly the points (m, n] step 1/k
        f = SmoothFunction.from_poly_coeffs([0, 1])
        res = em_sum_unit(f, 0, 2, 2, 1, 1)
        expected = sum(
            cyc_root_embed(2, l) * (r + l / 2) for r in (0, 1) for l in (1, 2)
        )
        assert res.direct == pytest.approx(expected)

    def test_validation(self):
        f = SmoothFunction.from_poly_coeffs([0, 1])
        with pytest.raises(ValueError):
            em_sum_unit(f, 1, 1, 2, 1, 1)
        with pytest.raises(ValueError):
            em_sum_unit(f, 0, 1, 2, 1, 0)
        with pytest.raises(ValueError):
            em_sum_unit(f, 0, 1, 2, 1, 5)  # beyond available derivatives
        with pytest.raises(SingularTwistError):
            em_sum_unit(f, 0, 1, 2, 2, 1)


class TestScaledForm:
    def test_hand_linear(self):
        res = em_sum_scaled(SmoothFunction.from_poly_coeffs([0, 1]), 0, 1, 2, 1, 2)
        assert res.direct == pytest.approx(1.0)  # -1 + 2
        assert res.abs_error < 1e-12

    def test_constant_cancels(self):
        res = em_sum_scaled(SmoothFunction.from_poly_coeffs([1]), 0, 2, 3, 1, 1)
        assert abs(res.direct) < 1e-12

    def test_quadratic_k3(self):
        res = em_sum_scaled(SmoothFunction.from_poly_coeffs([0, 0, 1]), 0, 2, 3, 2, 3)
        assert res.abs_error < 1e-10

    def test_reduction_to_unit_form(self):
        g = SmoothFunction.from_poly_coeffs([1, 2, -1, 1])
        for k in (2, 3, 4):
            scaled = em_sum_scaled(g, -1, 2, k, 1, 4)
            unit = em_sum_unit(g.rescaled(k), -1, 2, k, 1, 4)
            assert scaled.total == pytest.approx(unit.total, abs=1e-10)
            assert scaled.direct == pytest.approx(unit.direct, abs=1e-10)
