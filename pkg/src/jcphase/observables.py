"""Physical observables in phase space.

Two purity routes live side by side on purpose:

* :func:`purity_phase_space` integrates pi |W_f|^2 over the plane and is the
  package's authoritative purity; it agrees with tr(rho_f^2) from the
  matrix-mechanics oracle to better than 1e-6.
* :func:`purity_paper_series` is a verbatim transcription of the published
  closed-form series. It is a transcription-fidelity surface, not a
  physical ground truth: in the vacuum case it returns 1 identically while
  the exact purity oscillates as 3/4 + cos(4 g t)/4. The validation
  campaign records this divergence as an expected-divergence check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .hilbert import FockCutoff
from .jc import JcParams, _as_alpha, _rabi_factors, coherent_coeffs
from .numerics import (
    QuadratureRule,
    bessel_i0,
    default_plane_rule,
    default_sphere_rule,
    plane_points,
)
from .wigner import (
    displaced_parity_partial_trace,
    phi_profile_dots,
    reduced_field_wigner_grid,
)

__all__ = [
    "TimeSeries",
    "atomic_inversion",
    "detect_revival_peak",
    "p_excited",
    "p_ground",
    "projector_route_probabilities",
    "purity_asymptote",
    "purity_paper_series",
    "purity_phase_space",
    "revival_times",
]


@dataclass(frozen=True, eq=False)
class TimeSeries:
    """Sampled observable curve with its parameter snapshot."""

    times: np.ndarray
    values: np.ndarray
    label: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        times = np.asarray(self.times, dtype=float)
        values = np.asarray(self.values, dtype=float)
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "values", values)
        if times.shape != values.shape or times.ndim != 1:
            raise ValueError("times and values must be 1D arrays of equal length")
        if times.size > 1 and np.any(np.diff(times) <= 0):
            raise ValueError("times must be strictly increasing")

    def to_csv(self, fmt: str = ".17g") -> str:
        lines = [f"t,{self.label}"]
        for t, v in zip(self.times, self.values):
            lines.append(f"{format(t, fmt)},{format(v, fmt)}")
        return "\n".join(lines) + "\n"


def _occupation_weights(alpha, cutoff: FockCutoff, fock: int | None) -> np.ndarray:
    if fock is not None:
        if fock < 0:
            raise ValueError(f"Fock level must be nonnegative, got {fock}")
        n_top = max(fock, cutoff.n_max if cutoff else fock)
        w = np.zeros(n_top + 1)
        w[fock] = 1.0
        return w
    return np.abs(coherent_coeffs(alpha, cutoff)) ** 2


def p_excited(t, alpha, params: JcParams, cutoff: FockCutoff, fock: int | None = None):
    """Probability of the excited state: sum_n |C_n|^2 cos^2(t g sqrt(n+1))."""
    params.require_resonant()
    w = _occupation_weights(alpha, cutoff, fock)
    tt = np.asarray(t, dtype=float)
    arg = params.g * np.multiply.outer(tt, np.sqrt(np.arange(1.0, w.size + 1)))
    out = np.cos(arg) ** 2 @ w
    return float(out) if np.isscalar(t) else out


def p_ground(t, alpha, params: JcParams, cutoff: FockCutoff, fock: int | None = None):
    """Ground-state probability, the sin^2 mirror of p_excited."""
    params.require_resonant()
    w = _occupation_weights(alpha, cutoff, fock)
    tt = np.asarray(t, dtype=float)
    arg = params.g * np.multiply.outer(tt, np.sqrt(np.arange(1.0, w.size + 1)))
    out = np.sin(arg) ** 2 @ w
    return float(out) if np.isscalar(t) else out


def atomic_inversion(t, alpha, params: JcParams, cutoff: FockCutoff, fock: int | None = None):
    """Atomic inversion Z = P_e - P_g = sum_n |C_n|^2 cos(2 t g sqrt(n+1))."""
    params.require_resonant()
    w = _occupation_weights(alpha, cutoff, fock)
    tt = np.asarray(t, dtype=float)
    arg = 2.0 * params.g * np.multiply.outer(tt, np.sqrt(np.arange(1.0, w.size + 1)))
    out = np.cos(arg) @ w
    return float(out) if np.isscalar(t) else out


def revival_times(k: int, alpha, params: JcParams) -> float:
    """Approximate revival times 2 pi k sqrt(<N>) / g with <N> = |alpha|^2."""
    if k < 1:
        raise ValueError(f"revival order k must be >= 1, got {k}")
    a = abs(_as_alpha(alpha))
    if a == 0:
        raise ValueError("revival time undefined for the vacuum (|alpha| = 0)")
    return 2.0 * math.pi * k * a / params.g


def detect_revival_peak(
    alpha,
    params: JcParams,
    cutoff: FockCutoff,
    k: int = 1,
    window: tuple[float, float] = (0.7, 1.3),
    samples_per_period: int = 40,
):
    """Locate the revival as the maximum of the |Z(t)| envelope.

    Searches [window[0], window[1]] * T_rev(k). The envelope is the sliding
    local maximum of |Z| over windows of one Rabi period at the mean
    excitation number, 2 pi / (2 g sqrt(<N> + 1)). Returns (t_peak, height).
    """
    t_rev = revival_times(k, alpha, params)
    n_mean = abs(_as_alpha(alpha)) ** 2
    period = 2.0 * math.pi / (2.0 * params.g * math.sqrt(n_mean + 1.0))
    lo, hi = window[0] * t_rev, window[1] * t_rev
    dt = period / samples_per_period
    times = np.arange(lo, hi + dt, dt)
    absz = np.abs(atomic_inversion(times, alpha, params, cutoff))
    half = max(1, int(round(period / (2 * dt))))
    padded = np.concatenate([np.zeros(half), absz, np.zeros(half)])
    windows = np.lib.stride_tricks.sliding_window_view(padded, 2 * half + 1)
    envelope = windows.max(axis=1)
    i = int(np.argmax(envelope))
    return float(times[i]), float(envelope[i])


def purity_paper_series(t: float, alpha, params: JcParams, cutoff: FockCutoff) -> float:
    """Verbatim closed-form purity series (transcription surface).

    1/2 + (1/2) sum |C_n|^2 |C_m|^2 cos(2 g t (sqrt(n+1) - sqrt(m+1)))
        + sum 2 Re[C_n C*_{n-1} C*_m C_{m-1}
                   cos(g t sqrt(n+1)) cos(g t sqrt(m+1))
                   sin(g t sqrt(n)) sin(g t sqrt(m))].
    """
    params.require_resonant()
    coeffs = coherent_coeffs(alpha, cutoff)
    w = np.abs(coeffs) ** 2
    n = np.arange(coeffs.size)
    g = params.g
    sq_up = np.sqrt(n + 1.0)
    diag = 0.5 + 0.5 * float(w @ np.cos(2.0 * g * t * (sq_up[:, None] - sq_up[None, :])) @ w)
    pair = coeffs[1:] * np.conj(coeffs[:-1])  # C_n C*_{n-1}, n >= 1
    mixed = pair * np.cos(g * t * sq_up[1:]) * np.sin(g * t * np.sqrt(n[1:]))
    interference = 2.0 * float(np.real(np.sum(mixed) * np.conj(np.sum(mixed))))
    return diag + interference


def purity_phase_space(
    t: float,
    alpha,
    params: JcParams,
    cutoff: FockCutoff,
    rule: QuadratureRule | None = None,
) -> float:
    """Purity of the reduced field state: pi * int |W_f|^2 d^2 beta."""
    a = abs(_as_alpha(alpha))
    required = a + math.sqrt(cutoff.n_max) + 5.0
    if rule is None:
        rule = default_plane_rule(a, cutoff.n_max)
    elif float(rule.nodes[-1]) + float(rule.weights[-1]) / 2 < required - 1e-9:
        raise ValueError(
            f"plane rule radius {rule.nodes[-1]:.2f} below the support rule "
            f"{required:.2f} for |alpha| = {a:.2f}, cutoff {cutoff.n_max}"
        )
    beta = plane_points(rule)
    wf = reduced_field_wigner_grid(beta, t, alpha, params, cutoff)
    cell = float(rule.weights[0]) ** 2
    return float(math.pi * np.sum(wf**2) * cell)


def purity_asymptote(alpha) -> float:
    """Long-time purity limit 1/2 + (1/2) e^{-2|alpha|^2} I0(2|alpha|^2)."""
    x = 2.0 * abs(_as_alpha(alpha)) ** 2
    return 0.5 + 0.5 * math.exp(-x) * bessel_i0(x)


# ---------------------------------------------------------------------------
# phase-space projector route
# ---------------------------------------------------------------------------

def _angular_moments(sphere=None):
    """Pairing moments of the angular basis (1, cos t, e^{+-i phi} sin t).

    Computed with the sphere rule so the projector route is quadrature end
    to end; the rule is exact for these degree-2 integrands.
    """
    cos_rule, phi_rule = sphere or default_sphere_rule()
    u = cos_rule.nodes
    wu = cos_rule.weights
    wphi = phi_rule.weights
    norm = 1.0 / (2.0 * math.pi)
    m_const = norm * float(wu.sum() * wphi.sum())
    m_cos2 = norm * float((wu * u**2).sum() * wphi.sum())
    m_cos = norm * float((wu * u).sum() * wphi.sum())
    phases = np.exp(-1j * phi_rule.nodes)
    m_cross = norm * float(np.real((wu * (1 - u**2)).sum() * (wphi * phases * np.conj(phases)).sum()))
    return m_const, m_cos, m_cos2, m_cross


def projector_route_probabilities(
    times,
    alpha,
    params: JcParams,
    cutoff: FockCutoff,
    fock: int | None = None,
    plane: QuadratureRule | None = None,
    sphere=None,
):
    """P_e and P_g through the phase-space pairing, fully by quadrature.

    Pairs the symbols of the qubit projectors |e><e| (x) 1 and |g><g| (x) 1
    against the state's Wigner function with the sector-constant pairing
    pi * (1/2 pi) int W_P W_rho sin(theta) dtheta dphi d^2 beta. Both
    symbols decompose over the angular basis {1, cos, e^{+-i phi} sin}
    with displaced-parity field profiles, so the sphere rule contracts the
    angular factors exactly and the plane rule integrates per-element field
    products once; the time loop is then pure coefficient algebra.

    Returns (P_e array, P_g array) over `times`.
    """
    params.require_resonant()
    if fock is not None:
        coeffs = np.zeros(cutoff.n_max + 1, dtype=complex)
        if fock > cutoff.n_max:
            raise ValueError(f"Fock level {fock} above cutoff {cutoff.n_max}")
        coeffs[fock] = 1.0
        a_abs = math.sqrt(fock)
    else:
        coeffs = coherent_coeffs(alpha, cutoff)
        a_abs = abs(_as_alpha(alpha))
    if plane is None:
        plane = default_plane_rule(a_abs, cutoff.n_max)
    m_const, m_cos, m_cos2, m_cross = _angular_moments(sphere)

    k_max = cutoff.n_max + 1
    k1 = k_max + 1
    beta = plane_points(plane)
    cell = float(plane.weights[0]) ** 2

    # Projector field profile: S(beta) = (2/pi) sum_{n<=N} phi[n, n](beta),
    # through the stable diagonal recurrence (unit weights on every level).
    s_proj = (2.0 / math.pi) * displaced_parity_partial_trace(beta, cutoff.n_max)

    # Field pair integrals against every phi element: D[m, n] = int S phi[m, n].
    dots = phi_profile_dots(beta, np.conj(s_proj) * cell, k_max)

    nf = cutoff.n_max + 1
    n = np.arange(nf)
    sq_up = np.sqrt(n + 1.0)
    times = np.atleast_1d(np.asarray(times, dtype=float))
    pe = np.empty(times.size)
    pg = np.empty(times.size)
    two_pi = 2.0 / math.pi
    for i, t in enumerate(times):
        cos_up = np.cos(params.g * t * sq_up)
        sin_up = np.sin(params.g * t * sq_up)
        phase = np.exp(-1j * params.omega * t * n)
        weighted = coeffs * phase
        base = np.outer(weighted, np.conj(weighted))
        t_ee = two_pi * np.sum((base * np.outer(cos_up, cos_up)).T * dots[:nf, :nf])
        t_gg = two_pi * np.sum((base * np.outer(sin_up, sin_up)).T * dots[1:, 1:])
        # pairing of W_P = (q_ee-shaped) S with W_rho, angular part exact:
        # pi * [ m_const * (P0 R0) + m_cos2 * (P1 R1) ] with
        # P0 = S/2, P1 = sqrt(3) S / 2 and R0 = (Tee+Tgg)/2, R1 = sqrt(3)(Tee-Tgg)/2.
        sum_t = np.real(t_ee + t_gg)
        dif_t = np.real(t_ee - t_gg)
        pe[i] = math.pi * (m_const * 0.25 * sum_t + m_cos2 * 0.75 * dif_t)
        pg[i] = math.pi * (m_const * 0.25 * sum_t - m_cos2 * 0.75 * dif_t)
    return pe, pg
