"""Stratonovich-Weyl kernels for the qubit, the field, and the hybrid system.

Conventions, fixed once for the whole package and tagged in serialized
artifacts as CONVENTION_TAG:

* Qubit kernel: Delta_q(theta, phi) =
  (1/2) [[1 + sqrt(3) cos(theta),        sqrt(3) e^{+i phi} sin(theta)],
         [sqrt(3) e^{-i phi} sin(theta), 1 - sqrt(3) cos(theta)]].
  Conjugating the parity 1 + sqrt(3) sigma_z by the Euler rotation
  U(phi, theta, Phi) below reproduces this matrix at phi -> -phi; the two
  parametrizations cover the same kernel family with mirrored azimuth.
* Field kernel: Delta_f(beta) = (2/pi) D(beta) Pi_f D(beta)^dag with the
  displacement D built by dense scaling-and-squaring matrix exponential.
* Phase-space pairing: any pairing that involves the field sector carries
  the sector constant pi, i.e. tr[AB] = pi * int W_A W_B dOmega with
  dOmega = (1/2 pi) sin(theta) dtheta dphi d^2 beta.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

from .hilbert import FockCutoff, annihilation, tensor

__all__ = [
    "CONVENTION_TAG",
    "PhasePoint",
    "TruncationWarning",
    "boson_parity",
    "displacement_matrix",
    "field_kernel",
    "hybrid_kernel",
    "kernel_cutoff_for",
    "qubit_kernel",
    "qubit_parity",
    "su2_rotation",
    "sw_transform",
]

SQRT3 = math.sqrt(3.0)
CONVENTION_TAG = "sw-hybrid:qubit-sqrt3-parity/field-displaced-parity/pairing-pi"

_SIGMA_Z = np.diag([1.0, -1.0]).astype(complex)


class TruncationWarning(UserWarning):
    """Signals that a truncated operator lost accuracy beyond tolerance."""


@dataclass(frozen=True)
class PhasePoint:
    """Point of the hybrid phase space: sphere angles plus field coordinate."""

    theta: float
    phi: float
    beta: complex

    def __post_init__(self):
        if not 0.0 <= self.theta <= math.pi:
            raise ValueError(f"theta must lie in [0, pi], got {self.theta}")
        if not 0.0 <= self.phi < 2 * math.pi:
            raise ValueError(f"phi must lie in [0, 2 pi), got {self.phi}")
        b = complex(self.beta)
        if not (math.isfinite(b.real) and math.isfinite(b.imag)):
            raise ValueError("beta must be finite")
        object.__setattr__(self, "beta", b)


def qubit_parity() -> np.ndarray:
    """Qubit parity operator 1 + sqrt(3) sigma_z."""
    return np.eye(2, dtype=complex) + SQRT3 * _SIGMA_Z


def qubit_kernel(theta: float, phi: float) -> np.ndarray:
    st, ct = math.sin(theta), math.cos(theta)
    off = SQRT3 * np.exp(1j * phi) * st
    return 0.5 * np.array(
        [[1 + SQRT3 * ct, off], [np.conj(off), 1 - SQRT3 * ct]], dtype=complex
    )


def su2_rotation(phi: float, theta: float, Phi: float) -> np.ndarray:
    """Euler rotation exp(-i sz phi/2) exp(-i sy theta/2) exp(-i sz Phi/2)."""
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    ry = np.array([[c, -s], [s, c]], dtype=complex)
    rz_phi = np.diag([np.exp(-0.5j * phi), np.exp(0.5j * phi)])
    rz_Phi = np.diag([np.exp(-0.5j * Phi), np.exp(0.5j * Phi)])
    return rz_phi @ ry @ rz_Phi


def boson_parity(cutoff: FockCutoff) -> np.ndarray:
    """Bosonic parity diag((-1)^n)."""
    return np.diag((-1.0) ** np.arange(cutoff.n_max + 1)).astype(complex)


def displacement_matrix(alpha: complex, cutoff: FockCutoff) -> np.ndarray:
    """Truncated displacement exp(alpha a^dag - alpha* a).

    Dense matrix exponential; the truncated generator is anti-Hermitian so
    the result is unitary to machine precision. A warning fires when the
    unitarity defect on the interior levels exceeds 1e-8.
    """
    a = annihilation(cutoff)
    d = expm(alpha * a.conj().T - np.conj(alpha) * a)
    n = cutoff.n_max
    keep = max(1, n + 1 - math.ceil(3 * math.sqrt(n)) if n else 1)
    block = d[:, :keep]
    defect = np.abs(block.conj().T @ block - np.eye(keep)).max()
    if defect > 1e-8:
        warnings.warn(
            f"displacement truncation defect {defect:.3e} at cutoff {n}",
            TruncationWarning,
            stacklevel=2,
        )
    return d


def field_kernel(beta: complex, cutoff: FockCutoff) -> np.ndarray:
    """Field kernel (2/pi) D(beta) Pi_f D(beta)^dag on the truncated space."""
    d = displacement_matrix(beta, cutoff)
    return (2.0 / math.pi) * d @ boson_parity(cutoff) @ d.conj().T


def hybrid_kernel(point: PhasePoint, cutoff: FockCutoff) -> np.ndarray:
    """Hybrid kernel Delta_q(theta, phi) (x) Delta_f(beta)."""
    return tensor(qubit_kernel(point.theta, point.phi), field_kernel(point.beta, cutoff))


def kernel_cutoff_for(beta: complex, needed_levels: int, margin: int = 10) -> FockCutoff:
    """Cutoff adequate for displaced-parity matrix elements up to a level.

    Elements <m|Delta_f(beta)|n> with m, n <= needed_levels are accurate to
    machine precision when the truncation exceeds (sqrt(level) + |2 beta|)^2;
    below that the exponential reflects off the boundary.
    """
    reach = (math.sqrt(max(needed_levels, 1)) + 2 * abs(beta)) ** 2
    return FockCutoff(max(needed_levels, math.ceil(reach) + margin))


def sw_transform(op: np.ndarray, point: PhasePoint, imag_tol: float = 1e-10):
    """Phase-space symbol tr[op (Delta_q (x) Delta_f)] at one point.

    Hermitian input gives the real symbol value; the imaginary residue is
    checked against `imag_tol` and reported through a warning. Non-Hermitian
    input returns the complex value with a flag warning.
    """
    op = np.asarray(op, dtype=complex)
    dim = op.shape[0]
    if op.ndim != 2 or op.shape[1] != dim or dim % 2:
        raise ValueError(f"operator must be square with even dimension, got {op.shape}")
    cutoff = FockCutoff(dim // 2 - 1)
    value = complex(np.einsum("ij,ji->", op, hybrid_kernel(point, cutoff)))
    hermitian = np.abs(op - op.conj().T).max() <= 1e-12
    if not hermitian:
        warnings.warn(
            "sw_transform of non-Hermitian operator returns a complex symbol",
            UserWarning,
            stacklevel=2,
        )
        return value
    if abs(value.imag) > imag_tol:
        warnings.warn(
            f"sw_transform imaginary residue {value.imag:.3e} exceeds {imag_tol:.1e}",
            TruncationWarning,
            stacklevel=2,
        )
    return value.real
