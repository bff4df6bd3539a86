import math

import mpmath
import numpy as np
import pytest

from jcphase.numerics import (
    QuadratureRule,
    RuleKind,
    bessel_i0,
    integrate_plane,
    laguerre2d,
    laguerre2d_table,
    laguerre_std,
    plane_points,
    plane_rule,
    sphere_rule,
)


def laguerre2d_reference(n, m, beta, dps=50):
    """Independent arbitrary-precision evaluation of the defining sum."""
    with mpmath.workdps(dps):
        b = mpmath.mpc(beta.real, beta.imag)
        total = mpmath.mpc(0)
        for j in range(min(n, m) + 1):
            c = (
                mpmath.factorial(n)
                * mpmath.factorial(m)
                / (mpmath.factorial(j) * mpmath.factorial(n - j) * mpmath.factorial(m - j))
            )
            total += (-1) ** j * c * b ** (n - j) * mpmath.conj(b) ** (m - j)
        return complex(total)


class TestLaguerre2d:
    def test_empty_sum_case(self):
        assert laguerre2d(0, 0, 1 + 1j) == 1.0 + 0.0j

    def test_hand_expansion(self):
        # beta * conj(beta) - 1 at beta = 2
        assert laguerre2d(1, 1, 2.0) == pytest.approx(3.0)

    def test_diagonal_cross_check(self):
        value = laguerre2d(2, 2, 1.0)
        assert value == pytest.approx(-1.0)
        assert value == pytest.approx((-1) ** 2 * 2 * laguerre_std(2, 1.0))

    def test_rejects_negative_indices(self):
        with pytest.raises(ValueError):
            laguerre2d(-1, 0, 1.0)

    def test_overflow_is_loud(self):
        with pytest.raises(OverflowError):
            laguerre2d(200, 200, 1.0)

    def test_high_order_off_diagonal(self):
        # pure power branch stays exact at order 200
        assert laguerre2d(200, 0, 0.9) == pytest.approx(0.9**200, rel=1e-12)
        val = laguerre2d(150, 148, 0.3 + 0.2j)
        ref = laguerre2d_reference(150, 148, 0.3 + 0.2j)
        assert val == pytest.approx(ref, rel=1e-10)

    def test_diagonal_identity_property(self, rng):
        # L_{r,r}(beta, beta*) = (-1)^r r! L_r(|beta|^2); the alternating sum
        # is catastrophically conditioned here, which is exactly what the
        # adaptive-precision accumulation must survive.
        for r in range(31):
            for _ in range(4):
                beta = complex(rng.uniform(-4, 4), rng.uniform(-4, 4))
                if abs(beta) > 4:
                    beta *= 4 / abs(beta)
                lhs = laguerre2d(r, r, beta)
                rhs = (-1.0) ** r * math.factorial(r) * laguerre_std(r, abs(beta) ** 2)
                assert lhs.imag == pytest.approx(0.0, abs=1e-9 * max(1.0, abs(rhs)))
                assert lhs.real == pytest.approx(rhs, rel=1e-9, abs=1e-9)

    def test_conjugation_symmetry(self, rng):
        for _ in range(20):
            n, m = int(rng.integers(0, 12)), int(rng.integers(0, 12))
            beta = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
            assert laguerre2d(n, m, beta) == pytest.approx(
                np.conj(laguerre2d(m, n, beta)), rel=1e-12, abs=1e-12
            )

    def test_table_matches_scalar(self, rng):
        beta = rng.uniform(-2, 2, size=5) + 1j * rng.uniform(-2, 2, size=5)
        table = laguerre2d_table(6, 6, beta)
        for n in range(7):
            for m in range(7):
                for k, b in enumerate(beta):
                    assert table[n, m, k] == pytest.approx(
                        laguerre2d(n, m, b), rel=1e-10, abs=1e-10
                    )


class TestLaguerreStd:
    def test_degree_zero(self):
        assert laguerre_std(0, 7.3) == 1.0

    def test_degree_one(self):
        assert laguerre_std(1, 2.0) == pytest.approx(-1.0)

    def test_degree_three(self):
        # 1 - 3 + 3/2 - 1/6
        assert laguerre_std(3, 1.0) == pytest.approx(-2.0 / 3.0, abs=1e-12)

    def test_rejects_negative_degree(self):
        with pytest.raises(ValueError):
            laguerre_std(-1, 0.5)


def i0_series_oracle(x, terms=200):
    """Partial sums of sum_k (x/2)^(2k) / (k!)^2; all terms positive."""
    total = term = 1.0
    for k in range(1, terms):
        term *= (x * x / 4.0) / (k * k)
        total += term
    return total


class TestBesselI0:
    def test_at_zero(self):
        assert bessel_i0(0.0) == 1.0

    def test_reference_values(self):
        assert bessel_i0(1.0) == pytest.approx(1.266065877752008, abs=1e-12)
        assert bessel_i0(2.0) == pytest.approx(2.279585302336067, abs=1e-12)

    def test_asymptotic_branch_against_series(self):
        for x in (16.0, 20.0, 30.0, 40.0):
            assert bessel_i0(x) == pytest.approx(i0_series_oracle(x), rel=1e-12)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            bessel_i0(-0.1)


class TestSphereRule:
    def test_below_minimum_rejected(self):
        with pytest.raises(ValueError):
            sphere_rule(1, 8)
        with pytest.raises(ValueError):
            sphere_rule(4, 3)

    def test_two_point_legendre(self):
        cos_rule, _ = sphere_rule(2, 4)
        assert cos_rule.nodes == pytest.approx([-1 / math.sqrt(3), 1 / math.sqrt(3)])
        assert cos_rule.weights == pytest.approx([1.0, 1.0])

    def test_total_measure_is_qubit_dimension(self):
        cos_rule, phi_rule = sphere_rule(16, 32)
        total = cos_rule.weights.sum() * phi_rule.weights.sum() / (2 * math.pi)
        assert total == pytest.approx(2.0, abs=1e-12)


class TestPlaneRule:
    def test_gaussian_normalization(self):
        rule = plane_rule(6.0, 0.05)
        beta = plane_points(rule)
        values = (2 / math.pi) * np.exp(-2 * np.abs(beta) ** 2)
        assert integrate_plane(values, rule) == pytest.approx(1.0, abs=1e-8)

    def test_zero_function(self):
        rule = plane_rule(3.0, 0.1)
        assert integrate_plane(np.zeros(len(rule.nodes) ** 2), rule) == 0.0

    def test_vacuum_purity(self):
        rule = plane_rule(6.0, 0.05)
        beta = plane_points(rule)
        values = ((2 / math.pi) * np.exp(-2 * np.abs(beta) ** 2)) ** 2
        assert math.pi * integrate_plane(values, rule) == pytest.approx(1.0, abs=1e-8)

    def test_input_validation(self):
        with pytest.raises(ValueError):
            plane_rule(1.0, 0.2)  # step > radius / 10
        with pytest.raises(ValueError):
            plane_rule(-1.0, 0.05)
        with pytest.raises(ValueError):
            plane_rule(float("nan"), 0.05)


class TestQuadratureRuleInvariants:
    def test_positive_weights_enforced(self):
        with pytest.raises(ValueError):
            QuadratureRule(np.array([0.0, 1.0]), np.array([1.0, -1.0]), RuleKind.UNIFORM_ON_PHI)

    def test_increasing_nodes_enforced(self):
        with pytest.raises(ValueError):
            QuadratureRule(np.array([1.0, 0.0]), np.array([1.0, 1.0]), RuleKind.UNIFORM_ON_PHI)

    def test_legendre_weight_sum_enforced(self):
        with pytest.raises(ValueError):
            QuadratureRule(
                np.array([-0.5, 0.5]), np.array([0.7, 0.7]), RuleKind.LEGENDRE_ON_COSTHETA
            )


class TestOrthogonalityRelation:
    def test_pairwise_orthogonality(self):
        # (1/pi) int e^{-|b|^2} L_{m,l} L_{k,n} d^2b = m! l! delta_{m,n} delta_{l,k}
        rule = plane_rule(8.0, 0.05)
        beta = plane_points(rule)
        cell = float(rule.weights[0]) ** 2
        table = laguerre2d_table(6, 6, beta)
        weight = np.exp(-np.abs(beta) ** 2) * (cell / math.pi)
        weighted = table * weight
        gram = np.einsum("mlp,knp->mlkn", weighted, table)
        worst = 0.0
        for m in range(7):
            for l in range(7):
                for k in range(7):
                    for n in range(7):
                        expected = (
                            math.factorial(m) * math.factorial(l) if (m == n and l == k) else 0.0
                        )
                        worst = max(worst, abs(gram[m, l, k, n] - expected))
        assert worst < 1e-7


class TestWeightedIntegralIdentity:
    @pytest.mark.parametrize("r", [-0.5, 0.0, 0.5])
    def test_diagonal_weighted_integral(self, r):
        # int e^{(r-1)|b|^2/2} L_{n,n}(b, b*) d^2b
        #     = 2 pi / (1-r) * n! * ((1+r)/(1-r))^n.
        # The identity holds without a 1/pi prefactor on the left side
        # (checked analytically at n = 0, where the integral is a plain
        # Gaussian); the slowest decay e^{-|b|^2/4} at r = 1/2 needs the
        # larger radius.
        rule = plane_rule(14.0, 0.05)
        beta = plane_points(rule)
        cell = float(rule.weights[0]) ** 2
        table = laguerre2d_table(5, 5, beta)
        weight = np.exp(0.5 * (r - 1.0) * np.abs(beta) ** 2) * cell
        for n in range(6):
            got = np.sum(weight * table[n, n]).real
            expected = 2 * math.pi / (1 - r) * math.factorial(n) * ((1 + r) / (1 - r)) ** n
            assert got == pytest.approx(expected, rel=1e-6)
