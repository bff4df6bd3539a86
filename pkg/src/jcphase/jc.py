"""Closed-form resonant Jaynes-Cummings dynamics.

Times are dimensionless (hbar = 1). The closed forms below require exact
resonance omega = Omega; detuned evolution is available numerically through
the matrix-mechanics oracle.

Boundary convention at the truncation edge: coefficients indexed outside
0..N are zero (C_{-1} = C_{N+1} = 0), consistent with the action of the
truncated ladder operators.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .hilbert import CutoffError, FockCutoff, HybridDensityMatrix, QubitAmplitudes

__all__ = [
    "CoherentAmplitude",
    "JcParams",
    "ResonanceError",
    "coherent_coeffs",
    "density_excited_coherent",
    "evolution_matrix",
    "evolve_state",
]

RESONANCE_TOL = 1e-12
TAIL_MASS_TOL = 1e-12


class ResonanceError(ValueError):
    """Raised when a resonant-only closed form gets detuned parameters."""


@dataclass(frozen=True)
class JcParams:
    """Field frequency omega, qubit splitting Omega, coupling g."""

    omega: float
    Omega: float
    g: float

    def __post_init__(self):
        for name in ("omega", "Omega", "g"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise ValueError(f"{name} must be finite and positive, got {v}")

    @property
    def is_resonant(self) -> bool:
        return abs(self.omega - self.Omega) < RESONANCE_TOL

    def require_resonant(self):
        if not self.is_resonant:
            raise ResonanceError(
                f"closed form needs omega == Omega, got detuning "
                f"{self.omega - self.Omega:.3e}"
            )


@dataclass(frozen=True)
class CoherentAmplitude:
    """Complex amplitude of the initial coherent field state."""

    alpha: complex

    def __post_init__(self):
        a = complex(self.alpha)
        if not (math.isfinite(a.real) and math.isfinite(a.imag)):
            raise ValueError("alpha must be finite")
        object.__setattr__(self, "alpha", a)

    def __abs__(self) -> float:
        return abs(self.alpha)


def _as_alpha(alpha) -> complex:
    return alpha.alpha if isinstance(alpha, CoherentAmplitude) else complex(alpha)


def coherent_coeffs(alpha, cutoff: FockCutoff) -> np.ndarray:
    """Fock amplitudes C_n = e^{-|alpha|^2/2} alpha^n / sqrt(n!) up to N.

    Raises CutoffError when the discarded tail mass exceeds 1e-12.
    """
    a = _as_alpha(alpha)
    n = np.arange(cutoff.n_max + 1)
    log_fact = np.concatenate(([0.0], np.cumsum(np.log(np.arange(1.0, cutoff.n_max + 1)))))
    if a == 0:
        coeffs = np.zeros(cutoff.n_max + 1, dtype=complex)
        coeffs[0] = 1.0
        return coeffs
    mag = np.exp(-abs(a) ** 2 / 2 + n * math.log(abs(a)) - 0.5 * log_fact)
    coeffs = mag * np.exp(1j * n * np.angle(a))
    tail = 1.0 - float(np.sum(mag**2))
    if tail > TAIL_MASS_TOL:
        raise CutoffError(
            f"coherent tail mass {tail:.3e} above {TAIL_MASS_TOL:.0e} "
            f"at cutoff {cutoff.n_max}; increase the cutoff"
        )
    return coeffs


def _rabi_factors(t: float, g: float, n_max: int):
    """cos/sin of the Rabi half-angles g t sqrt(n+1), n = 0..N."""
    arg = g * t * np.sqrt(np.arange(1.0, n_max + 2))
    return np.cos(arg), np.sin(arg)


def evolution_matrix(t: float, params: JcParams, cutoff: FockCutoff) -> np.ndarray:
    """Closed-form resonant propagator assembled block by block.

    In the qubit-major basis the propagator is the 2x2 operator block matrix
    with diagonal blocks cos(g t sqrt(N_hat + 1)) / cos(g t sqrt(N_hat)) and
    off-diagonal blocks proportional to a / a^dag, every function of the
    number operator evaluated on its eigenvalues.
    """
    params.require_resonant()
    nf = cutoff.dim_field
    n = np.arange(nf)
    omega = params.omega
    cos_up, sin_up = _rabi_factors(t, params.g, cutoff.n_max)

    phase_e = np.exp(-1j * omega * t * (n + 0.5))
    ee = np.diag(phase_e * cos_up[: nf])
    gg = np.diag(np.exp(-1j * omega * t * (n - 0.5)) * np.cos(params.g * t * np.sqrt(n)))
    eg = np.zeros((nf, nf), dtype=complex)
    ge = np.zeros((nf, nf), dtype=complex)
    idx = np.arange(nf - 1)
    eg[idx, idx + 1] = -1j * phase_e[:-1] * sin_up[: nf - 1]
    ge[idx + 1, idx] = -1j * phase_e[:-1] * sin_up[: nf - 1]

    top = np.hstack([ee, eg])
    bottom = np.hstack([ge, gg])
    return np.vstack([top, bottom])


def evolve_state(
    qubit: QubitAmplitudes,
    alpha,
    t: float,
    params: JcParams,
    cutoff: FockCutoff,
) -> np.ndarray:
    """Amplitudes of the evolved state over |e,n> then |g,n>.

    Both branches carry the phases e^{-i t E_n}, E_n = omega (n + 1/2);
    the density-operator phase convention is the authoritative one and is
    cross-checked against the numeric propagator in the test suite.
    """
    params.require_resonant()
    coeffs = coherent_coeffs(alpha, cutoff)
    nf = cutoff.dim_field
    n = np.arange(nf)
    omega, g = params.omega, params.g

    cos_up, sin_up = _rabi_factors(t, g, cutoff.n_max)
    cos_here = np.cos(g * t * np.sqrt(n))
    sin_here = np.sin(g * t * np.sqrt(n))

    shifted_up = np.concatenate([coeffs[1:], [0.0]])    # C_{n+1}
    shifted_down = np.concatenate([[0.0], coeffs[:-1]])  # C_{n-1}

    phase_n = np.exp(-1j * omega * t * (n + 0.5))        # e^{-i t E_n}
    phase_prev = np.exp(-1j * omega * t * (n - 0.5))     # e^{-i t E_{n-1}}

    amp_e = phase_n * (qubit.c_e * coeffs * cos_up[:nf] - 1j * qubit.c_g * shifted_up * sin_up[:nf])
    amp_g = phase_prev * (qubit.c_g * coeffs * cos_here - 1j * qubit.c_e * shifted_down * sin_here)
    return np.concatenate([amp_e, amp_g])


def density_excited_coherent(
    t: float,
    alpha,
    params: JcParams,
    cutoff: FockCutoff,
) -> HybridDensityMatrix:
    """Density matrix of the evolved |e> (x) |alpha> state, assembled term by term.

    The four dyadic blocks of the double sum are written out directly
    (cos cos on |e,n><e,m|, +i cos sin on |e,n><g,m+1|, -i sin cos on
    |g,n+1><e,m|, sin sin on |g,n+1><g,m+1|) with relative phases
    e^{-i t (E_n - E_m)} rather than forming an outer product, so this path
    exercises the displayed expansion independently of evolve_state.
    """
    params.require_resonant()
    coeffs = coherent_coeffs(alpha, cutoff)
    nf = cutoff.dim_field
    n = np.arange(nf)
    cos_up, sin_up = _rabi_factors(t, params.g, cutoff.n_max)
    cos_up = cos_up[:nf]
    sin_up = sin_up[:nf]

    phase = np.exp(-1j * params.omega * t * n)
    base = np.outer(coeffs * phase, np.conj(coeffs * phase))

    ee = base * np.outer(cos_up, cos_up)
    eg = np.zeros((nf, nf), dtype=complex)
    ge = np.zeros((nf, nf), dtype=complex)
    gg = np.zeros((nf, nf), dtype=complex)
    # |g, n+1> components beyond the cutoff are dropped (C_{N+1} = 0 rule)
    eg[:, 1:] = 1j * (base * np.outer(cos_up, sin_up))[:, :-1]
    ge[1:, :] = -1j * (base * np.outer(sin_up, cos_up))[:-1, :]
    gg[1:, 1:] = (base * np.outer(sin_up, sin_up))[:-1, :-1]

    top = np.hstack([ee, eg])
    bottom = np.hstack([ge, gg])
    mat = np.vstack([top, bottom])
    # Edge norm loss (|C_N|^2 sin^2) is far below the trace tolerance for
    # cutoffs from the coherent rule; renormalization is deliberately absent.
    return HybridDensityMatrix(mat, cutoff)
