"""Special functions and quadrature rules shared by the whole toolkit.

Everything here is a pure function of its inputs and safe to call
concurrently.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import mpmath
import numpy as np

__all__ = [
    "LOG_FACTORIAL",
    "QuadratureRule",
    "RuleKind",
    "bessel_i0",
    "default_plane_rule",
    "default_sphere_rule",
    "integrate_plane",
    "laguerre2d",
    "laguerre2d_table",
    "laguerre_std",
    "plane_points",
    "plane_rule",
    "sphere_rule",
]

# log(n!) for n = 0..511; Laguerre-2D terms overflow the linear domain
# beyond order ~85, so every factorial ratio is formed in log space.
LOG_FACTORIAL = np.concatenate(([0.0], np.cumsum(np.log(np.arange(1.0, 512.0)))))

_BESSEL_SWITCH = 15.0
_MAX_FLOAT_LOG = math.log(np.finfo(float).max)


def laguerre_std(r: int, x: float) -> float:
    """Standard Laguerre polynomial L_r(x) by the three-term recurrence."""
    if r < 0:
        raise ValueError(f"polynomial degree must be nonnegative, got {r}")
    if r == 0:
        return 1.0
    prev, cur = 1.0, 1.0 - x
    for k in range(1, r):
        prev, cur = cur, ((2 * k + 1 - x) * cur - k * prev) / (k + 1)
    return cur


def laguerre2d(n: int, m: int, beta: complex) -> complex:
    """Two-index Laguerre polynomial L_{n,m}(beta, beta*).

    Evaluates sum_j n!m!/(j!(n-j)!(m-j)!) (-1)^j beta^(n-j) conj(beta)^(m-j).
    The alternating sum cancels catastrophically for large orders (condition
    number ~1e12 already at n=m=30, |beta|=4), so the accumulation runs with
    exact integer coefficients at adaptive mpmath precision and only the
    final value is rounded to a complex double.

    Raises OverflowError if the exact value exceeds the double range: a
    saturated value must never be returned silently.
    """
    if n < 0 or m < 0:
        raise ValueError(f"indices must be nonnegative, got ({n}, {m})")
    b = complex(beta)
    if not (math.isfinite(b.real) and math.isfinite(b.imag)):
        raise ValueError("beta must be finite")
    if b == 0:
        return complex(math.factorial(n)) * (-1.0) ** n if n == m else 0.0

    k = min(n, m)
    coeffs = [
        math.factorial(n)
        * math.factorial(m)
        // (math.factorial(j) * math.factorial(n - j) * math.factorial(m - j))
        for j in range(k + 1)
    ]
    # Magnitude bound of the largest term fixes the first working precision.
    log_b = math.log(abs(b))
    peak = max(
        math.log10(c) + (n + m - 2 * j) * log_b / math.log(10)
        for j, c in enumerate(coeffs)
    )

    dps = max(30, int(peak) + 20)
    value = _laguerre2d_mp(n, m, b, coeffs, dps=dps)
    mag = mpmath.fabs(value)
    if mag > 0:
        # Second pass once the true cancellation level is known.
        need = int(peak - mpmath.log10(mag)) + 20
        if need > dps:
            value = _laguerre2d_mp(n, m, b, coeffs, dps=need)
            mag = mpmath.fabs(value)
    if mag > 0 and mpmath.log(mag) > _MAX_FLOAT_LOG:
        raise OverflowError(
            f"laguerre2d({n}, {m}, {beta!r}) exceeds the double range"
        )
    return complex(value)


def _laguerre2d_mp(n, m, b, coeffs, dps):
    with mpmath.workdps(dps):
        bb = mpmath.mpc(b.real, b.imag)
        bc = mpmath.conj(bb)
        total = mpmath.mpc(0)
        for j, c in enumerate(coeffs):
            total += (-1) ** j * c * bb ** (n - j) * bc ** (m - j)
        return total


def laguerre2d_table(n_max: int, m_max: int, beta: np.ndarray) -> np.ndarray:
    """L_{n,m}(beta, beta*) for all n <= n_max, m <= m_max over an array.

    Float recurrence, adequate for the low orders used in quadrature tests;
    for high orders at scalar points use :func:`laguerre2d`.
    """
    beta = np.asarray(beta, dtype=complex)
    out = np.empty((n_max + 1, m_max + 1) + beta.shape, dtype=complex)
    out[0, 0] = 1.0
    for n in range(n_max):
        out[n + 1, 0] = beta * out[n, 0]
    for m in range(m_max):
        out[0, m + 1] = np.conj(beta) * out[0, m]
        for n in range(1, n_max + 1):
            out[n, m + 1] = np.conj(beta) * out[n, m] - n * out[n - 1, m]
    return out


def bessel_i0(x: float) -> float:
    """Modified Bessel function I0(x) for x >= 0.

    Power series below the switch point, asymptotic expansion above it;
    the switch at x = 15 keeps both branches at relative error < 1e-13.
    """
    if x < 0:
        raise ValueError(f"bessel_i0 requires x >= 0, got {x}")
    if x <= _BESSEL_SWITCH:
        return _i0_series(x)
    # e^x / sqrt(2 pi x) * sum_k a_k / x^k, truncated at the smallest term
    total = term = 1.0
    k = 0
    while True:
        nxt = term * (2 * k + 1) ** 2 / (8.0 * (k + 1) * x)
        if nxt >= term:
            break  # asymptotic tail started growing; stop at optimal truncation
        total += nxt
        term = nxt
        k += 1
        if term < 1e-17 * total:
            break
    return math.exp(x) / math.sqrt(2 * math.pi * x) * total


def _i0_series(x: float) -> float:
    total = term = 1.0
    q = 0.25 * x * x
    k = 0
    while term > 1e-18 * total:
        k += 1
        term *= q / (k * k)
        total += term
    return total


class RuleKind(str, enum.Enum):
    LEGENDRE_ON_COSTHETA = "legendre_on_costheta"
    UNIFORM_ON_PHI = "uniform_on_phi"
    CARTESIAN_PLANE = "cartesian_plane"


@dataclass(frozen=True, eq=False)
class QuadratureRule:
    """1D abscissae and positive weights with the measure they realize."""

    nodes: np.ndarray
    weights: np.ndarray
    kind: RuleKind

    def __post_init__(self):
        nodes = np.asarray(self.nodes, dtype=float)
        weights = np.asarray(self.weights, dtype=float)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", weights)
        if nodes.size < 1 or nodes.size != weights.size:
            raise ValueError("rule needs matching node/weight arrays, >= 1 node")
        if np.any(np.diff(nodes) <= 0):
            raise ValueError("nodes must be strictly increasing")
        if np.any(weights <= 0):
            raise ValueError("weights must be strictly positive")
        if self.kind is RuleKind.LEGENDRE_ON_COSTHETA:
            if abs(weights.sum() - 2.0) > 1e-12:
                raise ValueError("Legendre weights must sum to 2")


def sphere_rule(n_theta: int, n_phi: int) -> tuple[QuadratureRule, QuadratureRule]:
    """Product rule for the sphere: Gauss-Legendre in cos(theta), uniform phi.

    Exact for integrands polynomial of degree <= 2*n_theta - 1 in cos(theta)
    and trigonometric degree < n_phi in phi. Kernel products are degree 2 in
    both, hence the minimums n_theta >= 2, n_phi >= 4.
    """
    if n_theta < 2:
        raise ValueError(f"n_theta must be >= 2, got {n_theta}")
    if n_phi < 4:
        raise ValueError(f"n_phi must be >= 4, got {n_phi}")
    x, w = np.polynomial.legendre.leggauss(n_theta)
    cos_rule = QuadratureRule(x, w, RuleKind.LEGENDRE_ON_COSTHETA)
    phi = 2 * np.pi * np.arange(n_phi) / n_phi
    wphi = np.full(n_phi, 2 * np.pi / n_phi)
    return cos_rule, QuadratureRule(phi, wphi, RuleKind.UNIFORM_ON_PHI)


def default_sphere_rule() -> tuple[QuadratureRule, QuadratureRule]:
    """16x32 sphere rule, far beyond the degree-2 exactness requirement."""
    return sphere_rule(16, 32)


def plane_rule(radius: float, step: float) -> QuadratureRule:
    """Cartesian midpoint grid over [-radius, radius]^2, weight step^2/node.

    The returned rule stores one axis; the plane grid is its tensor square.
    """
    if not (math.isfinite(radius) and math.isfinite(step)):
        raise ValueError("radius and step must be finite")
    if radius <= 0 or step <= 0:
        raise ValueError("radius and step must be positive")
    if step > radius / 10:
        raise ValueError(f"step {step} too coarse for radius {radius}")
    count = int(round(2 * radius / step))
    nodes = -radius + (np.arange(count) + 0.5) * step
    return QuadratureRule(nodes, np.full(count, step), RuleKind.CARTESIAN_PLANE)


def default_plane_rule(alpha_abs: float, n_max: int, step: float = 0.05) -> QuadratureRule:
    """Plane rule sized so Gaussian tails beyond the grid are below 1e-12."""
    return plane_rule(alpha_abs + math.sqrt(n_max) + 5.0, step)


def plane_points(rule: QuadratureRule) -> np.ndarray:
    """Flattened complex grid nodes, row-major with Re(beta) outermost."""
    if rule.kind is not RuleKind.CARTESIAN_PLANE:
        raise ValueError("plane_points needs a cartesian_plane rule")
    re, im = np.meshgrid(rule.nodes, rule.nodes, indexing="ij")
    return (re + 1j * im).ravel()


def integrate_plane(values: np.ndarray, rule: QuadratureRule) -> float | complex:
    """Integral of sampled values over the plane grid of `rule`."""
    if rule.kind is not RuleKind.CARTESIAN_PLANE:
        raise ValueError("integrate_plane needs a cartesian_plane rule")
    cell = float(rule.weights[0]) ** 2
    return np.asarray(values).sum() * cell
