"""Phase-space toolkit for the resonant Jaynes-Cummings model.

Hybrid qubit-boson Wigner functions in closed form, Rabi and inversion
observables, collapse-revival analysis, and phase-space purity as an
entanglement witness, cross-validated against a truncated matrix-mechanics
oracle.
"""

from .hilbert import (
    CutoffError,
    FockCutoff,
    HybridDensityMatrix,
    QubitAmplitudes,
    annihilation,
    creation,
    cutoff_for_coherent,
    matrix_purity,
    number_operator,
    partial_trace_field,
    partial_trace_qubit,
    tensor,
)
from .jc import (
    CoherentAmplitude,
    JcParams,
    ResonanceError,
    coherent_coeffs,
    density_excited_coherent,
    evolution_matrix,
    evolve_state,
)
from .kernels import (
    CONVENTION_TAG,
    PhasePoint,
    boson_parity,
    displacement_matrix,
    field_kernel,
    hybrid_kernel,
    qubit_kernel,
    qubit_parity,
    su2_rotation,
    sw_transform,
)
from .numerics import (
    QuadratureRule,
    bessel_i0,
    default_plane_rule,
    default_sphere_rule,
    laguerre2d,
    laguerre_std,
    plane_rule,
    sphere_rule,
)
from .observables import (
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
from .oracle import (
    CampaignConfig,
    OracleReport,
    crosscheck_campaign,
    hamiltonian_matrix,
    propagate,
    wigner_by_trace,
)
from .wigner import (
    AxisSpec,
    WignerGrid,
    reduced_field_wigner,
    reduced_qubit_wigner,
    wigner_fock_mode,
    wigner_full,
    wigner_grid,
)

__version__ = "0.1.0"
