"""Truncated qubit (x) Fock Hilbert-space algebra.

Basis ordering is qubit-major throughout: |e,0>, ..., |e,N>, |g,0>, ..., |g,N>.
The excited block comes first so hybrid operators take the same 2x2 block
form as the closed-form propagator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "CutoffError",
    "FockCutoff",
    "HybridDensityMatrix",
    "QubitAmplitudes",
    "annihilation",
    "creation",
    "cutoff_for_coherent",
    "matrix_purity",
    "number_operator",
    "partial_trace_field",
    "partial_trace_qubit",
    "tensor",
]

HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-10
EIGENVALUE_FLOOR = -1e-10


class CutoffError(ValueError):
    """Raised when a Fock truncation cannot carry the requested state."""


@dataclass(frozen=True)
class FockCutoff:
    """Highest retained Fock level N; hybrid dimension is 2(N+1)."""

    n_max: int

    def __post_init__(self):
        if not isinstance(self.n_max, (int, np.integer)) or self.n_max < 0:
            raise ValueError(f"n_max must be a nonnegative integer, got {self.n_max!r}")
        object.__setattr__(self, "n_max", int(self.n_max))

    @property
    def dim_field(self) -> int:
        return self.n_max + 1

    @property
    def dim_hybrid(self) -> int:
        return 2 * (self.n_max + 1)


def cutoff_for_coherent(alpha: complex) -> FockCutoff:
    """Cutoff rule N = ceil(|alpha|^2 + 8|alpha| + 12).

    Leaves coherent tail mass below 1e-12 for |alpha| <= 4 with generous
    headroom, so closed forms and the truncated oracle agree to ~1e-9.
    """
    a = abs(alpha)
    return FockCutoff(math.ceil(a * a + 8 * a + 12))


@dataclass(frozen=True)
class QubitAmplitudes:
    """Normalized qubit amplitudes (c_e, c_g)."""

    c_e: complex
    c_g: complex

    def __post_init__(self):
        norm = abs(self.c_e) ** 2 + abs(self.c_g) ** 2
        if abs(norm - 1.0) > 1e-12:
            raise ValueError(f"qubit amplitudes must be normalized, |.|^2 = {norm}")

    @classmethod
    def excited(cls) -> "QubitAmplitudes":
        return cls(1.0, 0.0)


def annihilation(cutoff: FockCutoff) -> np.ndarray:
    """Truncated annihilation operator, <n-1|a|n> = sqrt(n)."""
    return np.diag(np.sqrt(np.arange(1.0, cutoff.n_max + 1)), 1).astype(complex)


def creation(cutoff: FockCutoff) -> np.ndarray:
    return annihilation(cutoff).conj().T


def number_operator(cutoff: FockCutoff) -> np.ndarray:
    return np.diag(np.arange(cutoff.n_max + 1, dtype=float)).astype(complex)


def tensor(qubit_op: np.ndarray, field_op: np.ndarray) -> np.ndarray:
    """Kronecker product in the qubit-major ordering."""
    qubit_op = np.asarray(qubit_op)
    field_op = np.asarray(field_op)
    if qubit_op.shape != (2, 2):
        raise ValueError(f"qubit operator must be 2x2, got {qubit_op.shape}")
    if field_op.ndim != 2 or field_op.shape[0] != field_op.shape[1]:
        raise ValueError(f"field operator must be square, got {field_op.shape}")
    return np.kron(qubit_op, field_op)


def _as_matrix(rho) -> np.ndarray:
    return rho.matrix if isinstance(rho, HybridDensityMatrix) else np.asarray(rho)


def _split_dims(rho: np.ndarray) -> int:
    d = rho.shape[0]
    if rho.ndim != 2 or rho.shape[1] != d or d % 2:
        raise ValueError(f"hybrid matrix must be square of even dimension, got {rho.shape}")
    return d // 2


def partial_trace_qubit(rho) -> np.ndarray:
    """Trace out the qubit: (rho_f)_nm = rho_(e,n),(e,m) + rho_(g,n),(g,m)."""
    mat = _as_matrix(rho)
    nf = _split_dims(mat)
    blocks = mat.reshape(2, nf, 2, nf)
    return blocks[0, :, 0, :] + blocks[1, :, 1, :]


def partial_trace_field(rho) -> np.ndarray:
    """Trace out the field, leaving the 2x2 qubit state."""
    mat = _as_matrix(rho)
    nf = _split_dims(mat)
    blocks = mat.reshape(2, nf, 2, nf)
    return np.einsum("qnrn->qr", blocks)


def matrix_purity(rho) -> float:
    """tr(rho^2) of a Hermitian unit-trace matrix."""
    mat = _as_matrix(rho)
    return float(np.real(np.einsum("ij,ji->", mat, mat)))


@dataclass(frozen=True, eq=False)
class HybridDensityMatrix:
    """Validated hybrid density matrix in the qubit-major basis.

    Construction enforces Hermiticity (1e-12), unit trace (1e-10) and
    eigenvalues above -1e-10, catching truncation leakage early.
    """

    matrix: np.ndarray
    cutoff: FockCutoff

    def __post_init__(self):
        mat = np.asarray(self.matrix, dtype=complex)
        object.__setattr__(self, "matrix", mat)
        if mat.shape != (self.cutoff.dim_hybrid, self.cutoff.dim_hybrid):
            raise ValueError(
                f"matrix shape {mat.shape} does not match hybrid dimension "
                f"{self.cutoff.dim_hybrid}"
            )
        herm = np.abs(mat - mat.conj().T).max()
        if herm > HERMITICITY_TOL:
            raise ValueError(f"matrix not Hermitian, defect {herm:.3e}")
        tr = np.trace(mat)
        if abs(tr - 1.0) > TRACE_TOL:
            raise ValueError(f"trace must be 1, got {tr}")
        lo = float(np.linalg.eigvalsh(mat).min())
        if lo < EIGENVALUE_FLOOR:
            raise ValueError(f"negative eigenvalue {lo:.3e} below tolerance")

    @property
    def dim(self) -> int:
        return self.cutoff.dim_hybrid

    def field_state(self) -> np.ndarray:
        return partial_trace_qubit(self.matrix)

    def qubit_state(self) -> np.ndarray:
        return partial_trace_field(self.matrix)

    def purity(self) -> float:
        return matrix_purity(self.matrix)
