import math

import mpmath
import numpy as np
import pytest

from jcphase.hilbert import cutoff_for_coherent, matrix_purity, partial_trace_qubit
from jcphase.jc import JcParams
from jcphase.numerics import plane_rule
from jcphase.observables import (
    TimeSeries,
    atomic_inversion,
    detect_revival_peak,
    p_excited,
    p_ground,
    projector_route_probabilities,
    purity_asymptote,
    purity_paper_series,
    purity_phase_space,
    revival_times,
)
from jcphase.oracle import jc_state


class TestOccupationProbabilities:
    def test_initial_values(self, params):
        cutoff = cutoff_for_coherent(1.0)
        assert p_excited(0.0, 1.0, params, cutoff) == pytest.approx(1.0)
        assert p_ground(0.0, 1.0, params, cutoff) == pytest.approx(0.0)
        assert atomic_inversion(0.0, 1.0, params, cutoff) == pytest.approx(1.0)

    def test_single_mode_rabi(self, params, rng):
        cutoff = cutoff_for_coherent(0.0)
        for r in (0, 2, 5):
            for t in rng.uniform(0, 8, size=4):
                x = t * params.g * math.sqrt(r + 1)
                assert p_excited(t, 0.0, params, cutoff, fock=r) == pytest.approx(
                    math.cos(x) ** 2, abs=1e-12
                )
                assert p_ground(t, 0.0, params, cutoff, fock=r) == pytest.approx(
                    math.sin(x) ** 2, abs=1e-12
                )
                assert atomic_inversion(t, 0.0, params, cutoff, fock=r) == pytest.approx(
                    math.cos(2 * x), abs=1e-12
                )

    def test_against_oracle_projector_expectation(self, params):
        alpha = 1.0
        cutoff = cutoff_for_coherent(alpha)
        t = math.pi / params.g
        psi = jc_state(t, alpha, params, cutoff)
        nf = cutoff.dim_field
        pe_oracle = float(np.sum(np.abs(psi[:nf]) ** 2))
        assert p_excited(t, alpha, params, cutoff) == pytest.approx(pe_oracle, abs=1e-10)

    def test_complement_identity(self, params, rng):
        cutoff = cutoff_for_coherent(1.5)
        for t in rng.uniform(0, 50, size=20):
            pe = p_excited(t, 1.5, params, cutoff)
            pg = p_ground(t, 1.5, params, cutoff)
            assert pe + pg == pytest.approx(1.0, abs=1e-12)
            assert 0.0 <= pe <= 1.0 and 0.0 <= pg <= 1.0
            assert atomic_inversion(t, 1.5, params, cutoff) == pytest.approx(
                pe - pg, abs=1e-12
            )


class TestRevival:
    def test_first_revival_time(self, params):
        assert revival_times(1, 2.0, params) == pytest.approx(4 * math.pi)

    def test_linear_in_order(self, params):
        assert revival_times(2, 2.0, params) == pytest.approx(2 * revival_times(1, 2.0, params))

    def test_vacuum_rejected(self, params):
        with pytest.raises(ValueError):
            revival_times(1, 0.0, params)
        with pytest.raises(ValueError):
            revival_times(0, 1.0, params)

    def test_detected_peak_sanity(self, params):
        # detector sanity: a strong envelope maximum inside the search window
        cutoff = cutoff_for_coherent(2.0)
        t_peak, height = detect_revival_peak(2.0, params, cutoff)
        t_rev = revival_times(1, 2.0, params)
        assert 0.7 * t_rev <= t_peak <= 1.3 * t_rev
        assert height > 0.3


class TestPurityPaperSeries:
    def test_initial_value(self, params):
        cutoff = cutoff_for_coherent(1.3)
        assert purity_paper_series(0.0, 1.3, params, cutoff) == pytest.approx(1.0, abs=1e-12)

    def test_vacuum_is_identically_one(self, params):
        cutoff = cutoff_for_coherent(0.0)
        for t in np.linspace(0, 8, 17):
            assert purity_paper_series(t, 0.0, params, cutoff) == pytest.approx(1.0, abs=1e-12)

    def test_matches_direct_double_loop(self, params):
        # the vectorized series against a literal double-loop transcription
        cutoff = cutoff_for_coherent(1.0)
        from jcphase.jc import coherent_coeffs

        coeffs = coherent_coeffs(1.0, cutoff)
        t, g, n_top = 0.9, params.g, cutoff.n_max
        diag = 0.0
        for n in range(n_top + 1):
            for m in range(n_top + 1):
                diag += (
                    abs(coeffs[n]) ** 2
                    * abs(coeffs[m]) ** 2
                    * math.cos(2 * g * t * (math.sqrt(n + 1) - math.sqrt(m + 1)))
                )
        inter = 0.0
        for n in range(1, n_top + 1):
            for m in range(1, n_top + 1):
                inter += 2 * np.real(
                    coeffs[n]
                    * np.conj(coeffs[n - 1])
                    * np.conj(coeffs[m])
                    * coeffs[m - 1]
                    * math.cos(g * t * math.sqrt(n + 1))
                    * math.cos(g * t * math.sqrt(m + 1))
                    * math.sin(g * t * math.sqrt(n))
                    * math.sin(g * t * math.sqrt(m))
                )
        expected = 0.5 + 0.5 * diag + inter
        got = purity_paper_series(0.9, 1.0, params, cutoff)
        assert got == pytest.approx(expected, abs=1e-14)
        assert got == pytest.approx(0.846149372666091, abs=1e-12)


class TestPurityPhaseSpace:
    def test_initial_purity_is_one(self, params):
        for alpha in (0.0, 1.0, 1.7):
            cutoff = cutoff_for_coherent(alpha)
            assert purity_phase_space(0.0, alpha, params, cutoff) == pytest.approx(
                1.0, abs=1e-6
            )

    def test_vacuum_closed_form(self, params):
        cutoff = cutoff_for_coherent(0.0)
        for gt in (0.4, 1.3, 2.2):
            expected = 0.75 + 0.25 * math.cos(4 * params.g * gt)
            assert purity_phase_space(gt, 0.0, params, cutoff) == pytest.approx(
                expected, abs=1e-6
            )

    def test_against_matrix_purity(self, params):
        alpha, t = 1.0, 5.0
        cutoff = cutoff_for_coherent(alpha)
        psi = jc_state(t, alpha, params, cutoff)
        expected = matrix_purity(partial_trace_qubit(np.outer(psi, psi.conj())))
        assert purity_phase_space(t, alpha, params, cutoff) == pytest.approx(
            expected, abs=1e-6
        )

    def test_rejects_undersized_rule(self, params):
        cutoff = cutoff_for_coherent(1.0)
        with pytest.raises(ValueError, match="support"):
            purity_phase_space(1.0, 1.0, params, cutoff, rule=plane_rule(4.0, 0.05))


class TestPurityAsymptote:
    def test_vacuum_limit(self):
        assert purity_asymptote(0.0) == pytest.approx(1.0)

    def test_large_amplitude_value(self):
        x = mpmath.mpf(32)
        expected = float(0.5 + 0.5 * mpmath.exp(-x) * mpmath.besseli(0, x))
        assert purity_asymptote(4.0) == pytest.approx(expected, rel=1e-12)

    def test_monotone_decreasing(self):
        values = [purity_asymptote(a) for a in np.linspace(0, 4, 33)]
        assert all(b < a + 1e-15 for a, b in zip(values, values[1:]))


class TestProjectorRoute:
    def test_route_equals_series(self, params):
        alpha = 1.0
        cutoff = cutoff_for_coherent(alpha)
        times = np.array([0.0, 0.6, 1.7, 4.2, 9.9])
        pe_route, pg_route = projector_route_probabilities(times, alpha, params, cutoff)
        assert np.abs(pe_route - p_excited(times, alpha, params, cutoff)).max() < 1e-6
        assert np.abs(pg_route - p_ground(times, alpha, params, cutoff)).max() < 1e-6

    def test_route_fock_case(self, params):
        r = 2
        times = np.linspace(0, 6, 40)
        pe, pg = projector_route_probabilities(
            times, 0.0, params, cutoff_for_coherent(0.0), fock=r
        )
        x = times * params.g * math.sqrt(r + 1)
        assert np.abs(pe - np.cos(x) ** 2).max() < 1e-6
        assert np.abs((pe - pg) - np.cos(2 * x)).max() < 1e-6


class TestTimeSeries:
    def test_validation(self):
        with pytest.raises(ValueError):
            TimeSeries(np.array([0.0, 1.0]), np.array([1.0]), "x")
        with pytest.raises(ValueError):
            TimeSeries(np.array([1.0, 0.5]), np.array([1.0, 2.0]), "x")

    def test_csv_format(self):
        ts = TimeSeries(np.array([0.0, 0.5]), np.array([1.0, 0.25]), "Z")
        lines = ts.to_csv().strip().split("\n")
        assert lines[0] == "t,Z"
        assert lines[1].startswith("0,")
