"""Reaction term, nonlinear right-hand sides, and weighted norms.

The state is a two-component field (u1, u2).  Component arrays have shape
``(N_theta, N_z)``: row n holds the angular Fourier coefficient of mode n as a
function of z.  A real-valued function on the cylinder is represented through
its nonnegative modes (Hermitian extension), so the squared L2 norm counts
rows n >= 1 twice.

All inner products carry the recovery-variable weight 1/eps on the second
component and the Riemannian measure sqrt(g) dtheta dz.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from .errors import ShapeMismatch
from .surface import (
    GridSpec,
    SurfaceMetric,
    axial_derivative,
    laplace_beltrami_apply,
)


@dataclass(frozen=True)
class Params:
    """Model parameters.

    ``alpha`` is the reaction threshold in (0, 1/2); ``eps`` and ``gamma`` are
    the recovery rates; ``c`` is the frame speed (0 in the static frame);
    ``R_ref`` is the reference cylinder radius.
    """

    alpha: float = 0.1
    gamma: float = 1.0
    eps: float = 1e-3
    c: float = 0.0
    R_ref: float = 1.0

    def __post_init__(self):
        if not 0.0 < self.alpha < 0.5:
            raise ValueError("alpha must lie in (0, 1/2)")
        if self.eps <= 0 or self.gamma <= 0:
            raise ValueError("eps and gamma must be positive")
        if self.c < 0:
            raise ValueError("frame speed c must be nonnegative")
        if self.R_ref <= 0:
            raise ValueError("R_ref must be positive")

    @property
    def sigma(self) -> float:
        """Dissipativity rate min(alpha, eps*gamma) of the constant-coefficient part."""
        return min(self.alpha, self.eps * self.gamma)

    def with_speed(self, c: float) -> "Params":
        return replace(self, c=c)


FRAMES = ("static", "moving")


@dataclass(eq=False)
class Field:
    """Two-component state on the (angular mode, z) grid."""

    u1: np.ndarray
    u2: np.ndarray
    grid: GridSpec
    frame: str = "static"

    def __post_init__(self):
        if self.frame not in FRAMES:
            raise ValueError(f"frame must be one of {FRAMES}")
        shape = (self.grid.N_theta, self.grid.N_z)
        self.u1 = np.asarray(self.u1)
        self.u2 = np.asarray(self.u2)
        if self.u1.shape != shape or self.u2.shape != shape:
            raise ShapeMismatch(
                f"components of shape {self.u1.shape}/{self.u2.shape} do not match grid {shape}"
            )
        if not (np.all(np.isfinite(self.u1)) and np.all(np.isfinite(self.u2))):
            raise ValueError("field contains non-finite values")

    def copy(self) -> "Field":
        return Field(self.u1.copy(), self.u2.copy(), self.grid, self.frame)

    def __add__(self, other: "Field") -> "Field":
        check_same_grid(self, other)
        return Field(self.u1 + other.u1, self.u2 + other.u2, self.grid, self.frame)

    def __sub__(self, other: "Field") -> "Field":
        check_same_grid(self, other)
        return Field(self.u1 - other.u1, self.u2 - other.u2, self.grid, self.frame)

    def __mul__(self, a):
        return Field(a * self.u1, a * self.u2, self.grid, self.frame)

    __rmul__ = __mul__


def check_same_grid(u: Field, w: Field) -> None:
    if not u.grid.compatible(w.grid):
        raise ShapeMismatch("fields live on incompatible grids")


def zero_field(grid: GridSpec, frame: str = "static") -> Field:
    shape = (grid.N_theta, grid.N_z)
    return Field(np.zeros(shape), np.zeros(shape), grid, frame)


def field_from_mode(grid: GridSpec, n: int, f1: np.ndarray, f2: np.ndarray,
                    frame: str = "static") -> Field:
    """Field with a single populated angular mode."""
    u = zero_field(grid, frame)
    u1 = u.u1.astype(complex)
    u2 = u.u2.astype(complex)
    u1[n] = f1
    u2[n] = f2
    return Field(u1, u2, grid, frame)


def mode_weights(n_theta: int) -> np.ndarray:
    """Quadrature weight per angular row: 1 for n = 0, 2 for the folded pairs."""
    w = np.full(n_theta, 2.0)
    w[0] = 1.0
    return w


# ---------------------------------------------------------------------------
# reaction term

def reaction(y, alpha: float):
    """Cubic reaction term -y (y - alpha) (y - 1)."""
    return -y * (y - alpha) * (y - 1.0)


def reaction_derivative(y, alpha: float):
    return -3.0 * y * y + 2.0 * (alpha + 1.0) * y - alpha


# ---------------------------------------------------------------------------
# angular synthesis for the pointwise nonlinearity

def synthesize_theta(rows: np.ndarray, grid: GridSpec) -> np.ndarray:
    """Evaluate a mode-wise stored real field on the angular synthesis grid."""
    if grid.N_theta == 1:
        return rows.real if np.iscomplexobj(rows) else rows
    m = grid.theta_points
    spec = np.zeros((m // 2 + 1, grid.N_z), dtype=complex)
    spec[: grid.N_theta] = rows
    return np.fft.irfft(m * spec, n=m, axis=0)


def analyze_theta(values: np.ndarray, grid: GridSpec) -> np.ndarray:
    """Project angular grid values back onto the retained modes."""
    if grid.N_theta == 1:
        return values
    m = grid.theta_points
    return np.fft.rfft(values, axis=0)[: grid.N_theta] / m


def apply_pointwise(fn, rows: np.ndarray, grid: GridSpec) -> np.ndarray:
    """Apply a pointwise real function under the Hermitian-extension semantics."""
    return analyze_theta(fn(synthesize_theta(rows, grid)), grid)


# ---------------------------------------------------------------------------
# right-hand sides

def rhs_static(u: Field, metric: SurfaceMetric, p: Params) -> Field:
    """Static-frame right-hand side on the (possibly warped) surface:
    (Lap u1 + f(u1) - u2, eps (u1 - gamma u2))."""
    f1 = (
        laplace_beltrami_apply(u.u1, metric, u.grid)
        + apply_pointwise(lambda y: reaction(y, p.alpha), u.u1, u.grid)
        - u.u2
    )
    f2 = p.eps * (u.u1 - p.gamma * u.u2)
    return Field(f1, f2, u.grid, u.frame)


def rhs_moving(u: Field, p: Params) -> Field:
    """Moving-frame right-hand side on the constant-radius surface; adds the
    transport term c d_z to both components."""
    n_sq = (u.grid.modes**2)[:, None]
    lap = axial_derivative(u.u1, u.grid, order=2) - n_sq / p.R_ref**2 * u.u1
    f1 = (
        lap
        + p.c * axial_derivative(u.u1, u.grid)
        + apply_pointwise(lambda y: reaction(y, p.alpha), u.u1, u.grid)
        - u.u2
    )
    f2 = p.c * axial_derivative(u.u2, u.grid) + p.eps * (u.u1 - p.gamma * u.u2)
    return Field(f1, f2, u.grid, u.frame)


def nonlinear_remainder(u: Field, p: Params) -> Field:
    """Right-hand side minus its linearization at zero: (-u1^3 + (alpha+1) u1^2, 0)."""
    poly = lambda y: y * y * (p.alpha + 1.0 - y)
    f1 = apply_pointwise(poly, u.u1, u.grid)
    return Field(f1, np.zeros_like(u.u2), u.grid, u.frame)


# ---------------------------------------------------------------------------
# inner products and norms

def _scalar_inner(a: np.ndarray, b: np.ndarray, metric: SurfaceMetric, grid: GridSpec) -> complex:
    wz = metric.sqrt_g * grid.dz
    mn = mode_weights(grid.N_theta)
    return 2.0 * np.pi * np.sum(mn @ ((a * np.conj(b)) * wz))


def inner_eps(u: Field, w: Field, metric: SurfaceMetric, p: Params) -> complex:
    """Weighted inner product  int (u1 conj(w1) + eps^-1 u2 conj(w2)) sqrt(g) dtheta dz.

    Exact for band-limited integrands (trapezoid in z, Parseval over modes).
    """
    check_same_grid(u, w)
    return _scalar_inner(u.u1, w.u1, metric, u.grid) + _scalar_inner(
        u.u2, w.u2, metric, u.grid
    ) / p.eps


def norm_eps(u: Field, metric: SurfaceMetric, p: Params) -> float:
    return float(np.sqrt(max(inner_eps(u, u, metric, p).real, 0.0)))


def norm_21(u: Field, metric: SurfaceMetric, p: Params) -> float:
    """Mixed Sobolev norm: weighted L2 norm of (Lap u1, d_z u2) plus the
    weighted L2 norm of u."""
    a1 = laplace_beltrami_apply(u.u1, metric, u.grid)
    a2 = axial_derivative(u.u2, u.grid)
    pair_sq = (
        _scalar_inner(a1, a1, metric, u.grid).real
        + _scalar_inner(a2, a2, metric, u.grid).real / p.eps
    )
    return float(np.sqrt(max(pair_sq, 0.0))) + norm_eps(u, metric, p)


def norm_01(u: Field, metric: SurfaceMetric, p: Params) -> float:
    """Norm of the space requiring only d_z u2 (besides L2): used for graph-norm
    equivalence measurements of the static-frame linearization."""
    a2 = axial_derivative(u.u2, u.grid)
    val = inner_eps(u, u, metric, p).real + _scalar_inner(a2, a2, metric, u.grid).real / p.eps
    return float(np.sqrt(max(val, 0.0)))


# ---------------------------------------------------------------------------
# random band-limited fields

def random_field(
    grid: GridSpec,
    rng: np.random.Generator,
    k_band: tuple[float, float] = (0.0, 6.0),
    n_modes: int | None = None,
    frame: str = "static",
    complex_modes: bool = True,
) -> Field:
    """Random band-limited field with axial wavenumbers inside ``k_band``.

    Mode 0 is real in z-space; higher rows get complex coefficients (their
    conjugate pairs are implied).  Used for perturbation draws and trial
    fields in dissipativity checks.
    """
    n_modes = grid.N_theta if n_modes is None else min(n_modes, grid.N_theta)
    mask = (np.abs(grid.k) >= k_band[0]) & (np.abs(grid.k) <= k_band[1])
    shape = (grid.N_theta, grid.N_z)
    comps = []
    for _ in range(2):
        spec = np.zeros(shape, dtype=complex)
        draw = rng.standard_normal((n_modes, grid.N_z)) + 1j * rng.standard_normal(
            (n_modes, grid.N_z)
        )
        spec[:n_modes] = draw * mask
        vals = np.fft.ifft(spec, axis=-1)
        if not complex_modes:
            vals = vals.real.astype(complex)
        else:
            vals[0] = vals[0].real  # mode 0 of a real field is real
        comps.append(vals)
    return Field(comps[0], comps[1], grid, frame)
