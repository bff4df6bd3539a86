import math
import warnings

import numpy as np
import pytest

from conftest import random_hermitian
from jcphase.hilbert import FockCutoff, tensor
from jcphase.jc import coherent_coeffs
from jcphase.kernels import (
    PhasePoint,
    SQRT3,
    boson_parity,
    displacement_matrix,
    field_kernel,
    hybrid_kernel,
    kernel_cutoff_for,
    qubit_kernel,
    qubit_parity,
    su2_rotation,
    sw_transform,
)
from jcphase.numerics import default_sphere_rule, laguerre_std


class TestPhasePoint:
    def test_range_validation(self):
        with pytest.raises(ValueError):
            PhasePoint(-0.1, 0.0, 0.0)
        with pytest.raises(ValueError):
            PhasePoint(0.5, 7.0, 0.0)
        with pytest.raises(ValueError):
            PhasePoint(0.5, 0.0, complex("inf"))


class TestQubitKernel:
    def test_north_pole(self):
        assert np.allclose(qubit_kernel(0.0, 0.3), 0.5 * np.diag([1 + SQRT3, 1 - SQRT3]))

    def test_equator(self):
        k = qubit_kernel(math.pi / 2, 0.0)
        assert np.allclose(k, 0.5 * np.array([[1, SQRT3], [SQRT3, 1]]))

    def test_unit_trace_everywhere(self, rng):
        for _ in range(20):
            k = qubit_kernel(rng.uniform(0, math.pi), rng.uniform(0, 2 * math.pi))
            assert np.trace(k) == pytest.approx(1.0)
            assert np.abs(k - k.conj().T).max() < 1e-15


class TestSu2Rotation:
    def test_identity_at_zero_angles(self):
        assert np.allclose(su2_rotation(0.0, 0.0, 0.0), np.eye(2))

    def test_unitarity(self, rng):
        for _ in range(20):
            u = su2_rotation(*rng.uniform(0, 2 * math.pi, size=3))
            assert np.abs(u.conj().T @ u - np.eye(2)).max() < 1e-14

    def test_parity_conjugation_generates_kernel_family(self, rng):
        # Conjugating the parity by the Euler rotation reproduces the kernel
        # matrix with mirrored azimuth: (1/2) U(phi,.) Pi U^dag equals
        # qubit_kernel(theta, -phi). The kernel matrix is pinned with the
        # opposite azimuth sign from the rotation generated family; both
        # parametrize the same kernel set.
        for _ in range(20):
            theta = rng.uniform(0, math.pi)
            phi = rng.uniform(0, 2 * math.pi)
            big_phi = rng.uniform(0, 4 * math.pi)
            u = su2_rotation(phi, theta, big_phi)
            conjugated = 0.5 * u @ qubit_parity() @ u.conj().T
            assert np.abs(conjugated - qubit_kernel(theta, -phi)).max() < 1e-13

    def test_kernel_independent_of_third_euler_angle(self, rng):
        theta, phi = 1.1, 0.7
        ref = 0.5 * su2_rotation(phi, theta, 0.0) @ qubit_parity() @ su2_rotation(phi, theta, 0.0).conj().T
        for big_phi in rng.uniform(0, 4 * math.pi, size=5):
            u = su2_rotation(phi, theta, big_phi)
            assert np.abs(0.5 * u @ qubit_parity() @ u.conj().T - ref).max() < 1e-13


class TestDisplacement:
    def test_zero_displacement(self):
        assert np.allclose(displacement_matrix(0.0, FockCutoff(6)), np.eye(7))

    def test_first_column_is_coherent_state(self):
        alpha = 0.8 + 0.4j
        cutoff = FockCutoff(24)
        d = displacement_matrix(alpha, cutoff)
        assert np.abs(d[:, 0] - coherent_coeffs(alpha, cutoff)).max() < 1e-12

    def test_unitarity_defect_on_interior(self):
        for alpha in (0.5, 1.5 + 0.5j, 2.0):
            n_max = math.ceil(abs(alpha) ** 2 + 8 * abs(alpha) + 12)
            cutoff = FockCutoff(n_max)
            with warnings.catch_warnings():
                warnings.simplefilter("error")
                d = displacement_matrix(alpha, cutoff)
            keep = n_max + 1 - math.ceil(3 * math.sqrt(n_max))
            block = d[:, :keep]
            assert np.abs(block.conj().T @ block - np.eye(keep)).max() < 1e-8


class TestBosonParity:
    def test_two_level(self):
        assert np.allclose(boson_parity(FockCutoff(1)), np.diag([1.0, -1.0]))

    def test_squares_to_identity(self):
        p = boson_parity(FockCutoff(9))
        assert np.allclose(p @ p, np.eye(10))

    def test_anticommutes_with_ladder(self):
        c = FockCutoff(9)
        p = boson_parity(c)
        from jcphase.hilbert import annihilation

        a = annihilation(c)
        assert np.allclose(p @ a @ p, -a)


class TestFieldKernel:
    def test_zero_point_is_scaled_parity(self):
        c = FockCutoff(8)
        assert np.allclose(field_kernel(0.0, c), (2 / math.pi) * boson_parity(c))

    def test_vacuum_symbol(self):
        beta = 0.5 + 0.3j
        cutoff = kernel_cutoff_for(beta, 0)
        kern = field_kernel(beta, cutoff)
        expected = (2 / math.pi) * math.exp(-2 * abs(beta) ** 2)
        assert kern[0, 0].real == pytest.approx(expected, abs=1e-9)
        assert abs(kern[0, 0].imag) < 1e-12

    def test_hermiticity(self, rng):
        c = FockCutoff(12)
        for _ in range(5):
            beta = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
            kern = field_kernel(beta, c)
            assert np.abs(kern - kern.conj().T).max() < 1e-12


class TestSwTransform:
    def test_identity_against_factorized_trace(self, rng):
        cutoff = FockCutoff(10)
        point = PhasePoint(0.9, 1.2, 0.4 - 0.2j)
        op = np.eye(cutoff.dim_hybrid, dtype=complex)
        value = sw_transform(op, point)
        # independent path: the trace of the hybrid kernel factorizes
        expected = np.trace(qubit_kernel(point.theta, point.phi)) * np.trace(
            field_kernel(point.beta, cutoff)
        )
        assert value == pytest.approx(expected.real, abs=1e-12)

    def test_excited_fock_projector_symbol(self, rng):
        r = 2
        beta = 0.4 + 0.2j
        cutoff = kernel_cutoff_for(beta, r + 2)
        theta, phi = 0.8, 2.1
        op = np.zeros((cutoff.dim_hybrid, cutoff.dim_hybrid), dtype=complex)
        op[r, r] = 1.0  # |e, r><e, r| in the qubit-major ordering
        value = sw_transform(op, PhasePoint(theta, phi, beta))
        expected = (
            (1 / math.pi)
            * (1 + SQRT3 * math.cos(theta))
            * math.exp(-2 * abs(beta) ** 2)
            * (-1) ** r
            * laguerre_std(r, 4 * abs(beta) ** 2)
        )
        assert value == pytest.approx(expected, abs=1e-9)

    def test_zero_operator(self):
        cutoff = FockCutoff(4)
        op = np.zeros((cutoff.dim_hybrid, cutoff.dim_hybrid))
        assert sw_transform(op, PhasePoint(1.0, 1.0, 0.5)) == 0.0

    def test_non_hermitian_flagged(self):
        cutoff = FockCutoff(2)
        op = np.zeros((6, 6), dtype=complex)
        op[0, 1] = 1.0
        with pytest.warns(UserWarning, match="non-Hermitian"):
            value = sw_transform(op, PhasePoint(1.0, 0.5, 0.1))
        assert isinstance(value, complex)

    def test_realness_on_hermitian_inputs(self, rng):
        cutoff = FockCutoff(6)
        for _ in range(10):
            op = random_hermitian(rng, cutoff.dim_hybrid) / cutoff.dim_hybrid
            point = PhasePoint(
                rng.uniform(0, math.pi),
                rng.uniform(0, 2 * math.pi),
                complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
            )
            kern = hybrid_kernel(point, cutoff)
            value = complex(np.einsum("ij,ji->", op.astype(complex), kern))
            assert abs(value.imag) < 1e-12


class TestKernelPostulates:
    def test_qubit_standardization(self):
        cos_rule, phi_rule = default_sphere_rule()
        total = np.zeros((2, 2), dtype=complex)
        for u, wu in zip(cos_rule.nodes, cos_rule.weights):
            for p, wp in zip(phi_rule.nodes, phi_rule.weights):
                total += wu * wp * qubit_kernel(math.acos(u), p)
        assert np.abs(total / (2 * math.pi) - np.eye(2)).max() < 1e-10

    def test_qubit_traciality(self, rng):
        cos_rule, phi_rule = default_sphere_rule()
        for _ in range(10):
            a, b = random_hermitian(rng, 2), random_hermitian(rng, 2)
            acc = 0.0
            for u, wu in zip(cos_rule.nodes, cos_rule.weights):
                theta = math.acos(u)
                for p, wp in zip(phi_rule.nodes, phi_rule.weights):
                    kern = qubit_kernel(theta, p)
                    acc += wu * wp * np.real(np.trace(a @ kern)) * np.real(np.trace(b @ kern))
            assert acc / (2 * math.pi) == pytest.approx(np.real(np.trace(a @ b)), abs=1e-10)

    def test_covariance_under_qubit_rotations(self, rng):
        # conjugating the state and reading the rotated kernel point off the
        # conjugated kernel leaves the symbol invariant
        cutoff = FockCutoff(5)
        for _ in range(10):
            theta = rng.uniform(0, math.pi)
            phi = rng.uniform(0, 2 * math.pi)
            beta = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
            rot = su2_rotation(rng.uniform(0, 2 * math.pi), rng.uniform(0, math.pi), 0.0)
            psi_q = su2_rotation(*rng.uniform(0, 2, size=3)) @ np.array([1, 0], dtype=complex)
            rho_f = np.zeros((6, 6), dtype=complex)
            rho_f[1, 1] = 0.5
            rho_f[2, 2] = 0.5
            rho = tensor(np.outer(psi_q, psi_q.conj()), rho_f)
            rotated = tensor(rot, np.eye(6)) @ rho @ tensor(rot.conj().T, np.eye(6))
            conj_kernel = rot @ qubit_kernel(theta, phi) @ rot.conj().T
            az = (conj_kernel[0, 0] - conj_kernel[1, 1]).real / SQRT3
            off = 2.0 * conj_kernel[0, 1] / SQRT3
            new_theta = math.acos(max(-1.0, min(1.0, az)))
            new_phi = math.atan2(off.imag, off.real) % (2 * math.pi)
            w0 = sw_transform(rho, PhasePoint(theta, phi, beta))
            w1 = sw_transform(rotated, PhasePoint(new_theta, new_phi, beta))
            assert w0 == pytest.approx(w1, abs=1e-10)
