"""Cylindrical geometry: periodic grids, radius families, metric data, Laplace-Beltrami.

Fields live on a truncated periodic cylinder: the axial coordinate z is
collocated on ``N_z`` equispaced points of ``[-L_z, L_z)`` and differentiated
spectrally, while the angular direction is stored mode-wise (Fourier
coefficients for ``n = 0 .. N_theta-1``), never on a theta grid.  All operators
used here are diagonal in the angular mode index.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import NonPositiveRadius, ShapeMismatch

RADIUS_KINDS = ("constant", "sine-bump", "gaussian-bump")


@dataclass(eq=False)
class GridSpec:
    """Discretization of the cylinder [-L_z, L_z) x S^1.

    Parameters
    ----------
    L_z : float
        Domain half-length; the axial grid covers ``[-L_z, L_z)`` periodically.
    N_z : int
        Number of axial collocation points (a power of two, >= 8).
    N_theta : int
        Number of retained angular modes ``n = 0 .. N_theta-1``.

    Notes
    -----
    Odd spectral derivatives zero the Nyquist mode so that differentiation
    matrices are real; second derivatives use the squared first-derivative
    multiplier for consistency.  Fields are expected to be band-limited below
    the Nyquist mode.
    """

    L_z: float = 200.0
    N_z: int = 1024
    N_theta: int = 1

    z: np.ndarray = field(init=False, repr=False)
    k: np.ndarray = field(init=False, repr=False)
    modes: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        if self.L_z <= 0:
            raise ValueError("L_z must be positive")
        if self.N_z < 8 or (self.N_z & (self.N_z - 1)) != 0:
            raise ValueError("N_z must be a power of two with N_z >= 8")
        if self.N_theta < 1:
            raise ValueError("N_theta must be at least 1")
        self.z = -self.L_z + self.dz * np.arange(self.N_z)
        k = 2.0 * np.pi * np.fft.fftfreq(self.N_z, d=self.dz)
        k[self.N_z // 2] = 0.0  # Nyquist zeroed: real, skew-symmetric d/dz
        self.k = k
        self.modes = np.arange(self.N_theta)

    @property
    def dz(self) -> float:
        return 2.0 * self.L_z / self.N_z

    @property
    def theta_points(self) -> int:
        """Synthesis grid size that represents cubic products of the retained
        angular modes without aliasing."""
        if self.N_theta == 1:
            return 1
        need = 6 * (self.N_theta - 1) + 2
        return max(8, 1 << (need - 1).bit_length())

    def with_modes(self, n_theta: int) -> "GridSpec":
        return GridSpec(L_z=self.L_z, N_z=self.N_z, N_theta=n_theta)

    def compatible(self, other: "GridSpec") -> bool:
        return (
            self.N_z == other.N_z
            and self.N_theta == other.N_theta
            and math.isclose(self.L_z, other.L_z, rel_tol=1e-12)
        )


@dataclass(frozen=True)
class RadiusFamily:
    """Analytic radius profile rho(x) of a cylindrical surface.

    ``constant``       rho = R
    ``sine-bump``      rho = R + a*sin(omega*x)   (omega must be grid-periodic)
    ``gaussian-bump``  rho = R + a*exp(-x^2/(2*omega^2)), omega = bump width
    """

    kind: str = "constant"
    R: float = 1.0
    amplitude: float = 0.0
    omega: float = 0.0

    def __post_init__(self):
        if self.kind not in RADIUS_KINDS:
            raise ValueError(f"unknown radius kind {self.kind!r}; expected one of {RADIUS_KINDS}")
        if self.R <= 0:
            raise ValueError("base radius R must be positive")
        if self.kind != "constant":
            if abs(self.amplitude) >= self.R:
                raise NonPositiveRadius(
                    f"|amplitude| = {abs(self.amplitude)} must stay below R = {self.R}"
                )
            if self.kind == "gaussian-bump" and self.omega <= 0:
                raise ValueError("gaussian-bump requires a positive width omega")

    def evaluate(self, x: np.ndarray):
        """Return (rho, rho', rho'') sampled analytically at x."""
        x = np.asarray(x, dtype=float)
        if self.kind == "constant":
            zero = np.zeros_like(x)
            return self.R + zero, zero.copy(), zero.copy()
        a, w = self.amplitude, self.omega
        if self.kind == "sine-bump":
            s, c = np.sin(w * x), np.cos(w * x)
            return self.R + a * s, a * w * c, -a * w * w * s
        # gaussian-bump
        e = np.exp(-0.5 * (x / w) ** 2)
        rho = self.R + a * e
        drho = -a * x / w**2 * e
        ddrho = a * (x**2 - w**2) / w**4 * e
        return rho, drho, ddrho


def sine_bump_frequency(L_z: float, cycles: int) -> float:
    """Angular frequency of a sine bump completing ``cycles`` periods on [-L_z, L_z)."""
    if cycles < 1:
        raise ValueError("cycles must be a positive integer")
    return np.pi * cycles / L_z


@dataclass(eq=False)
class SurfaceMetric:
    """Sampled radius, derivatives, and squared Riemannian density g = rho^2 (1 + rho'^2)."""

    rho: np.ndarray
    drho: np.ndarray
    ddrho: np.ndarray
    g: np.ndarray
    R_ref: float

    @property
    def sqrt_g(self) -> np.ndarray:
        return np.sqrt(self.g)

    @property
    def flux_coef(self) -> np.ndarray:
        """Coefficient rho / sqrt(1 + rho'^2) of the axial flux term."""
        return self.rho / np.sqrt(1.0 + self.drho**2)

    @property
    def inv_rho_sq(self) -> np.ndarray:
        return 1.0 / self.rho**2

    @property
    def is_constant(self) -> bool:
        return bool(np.all(self.drho == 0.0) and np.all(self.rho == self.rho[0]))


def build_metric(family: RadiusFamily, grid: GridSpec) -> SurfaceMetric:
    """Sample a radius family on the grid and assemble the metric data.

    Derivatives are taken from the analytic family, not from finite
    differences, so that the deviation measure ``c2_distance`` is exact.

    Raises
    ------
    NonPositiveRadius
        If the sampled radius is not strictly positive.
    ValueError
        If a sine-bump frequency is not periodic on the grid.
    """
    if family.kind == "sine-bump":
        cycles = family.omega * grid.L_z / np.pi
        if abs(cycles - round(cycles)) > 1e-8 * max(1.0, abs(cycles)):
            raise ValueError(
                "sine-bump omega must complete an integer number of periods on "
                f"[-L_z, L_z); got omega*L_z/pi = {cycles}. "
                "Use sine_bump_frequency(L_z, cycles)."
            )
    rho, drho, ddrho = family.evaluate(grid.z)
    if rho.min() <= 0.0:
        raise NonPositiveRadius(f"min rho = {rho.min()} on the sampled grid")
    g = rho**2 * (1.0 + drho**2)
    return SurfaceMetric(rho=rho, drho=drho, ddrho=ddrho, g=g, R_ref=family.R)


def constant_metric(R: float, grid: GridSpec) -> SurfaceMetric:
    return build_metric(RadiusFamily(kind="constant", R=R), grid)


def _check_field_shape(u: np.ndarray, grid: GridSpec) -> np.ndarray:
    u = np.asarray(u)
    if u.ndim == 1:
        u = u[None, :]
    if u.ndim != 2 or u.shape[1] != grid.N_z or u.shape[0] > grid.N_theta:
        raise ShapeMismatch(
            f"field of shape {u.shape} does not fit grid (N_theta={grid.N_theta}, N_z={grid.N_z})"
        )
    return u


def axial_derivative(u: np.ndarray, grid: GridSpec, order: int = 1) -> np.ndarray:
    """Spectral d^order/dz^order along the last axis."""
    mult = (1j * grid.k) ** order
    out = np.fft.ifft(mult * np.fft.fft(u, axis=-1), axis=-1)
    if np.isrealobj(u):
        return out.real
    return out


def laplace_beltrami_apply(u1: np.ndarray, metric: SurfaceMetric, grid: GridSpec) -> np.ndarray:
    """Apply the surface Laplacian to a scalar field stored mode-wise.

    Computes ``(1/sqrt(g)) d_x( rho/sqrt(1+rho'^2) d_x u ) - n^2 rho^{-2} u``
    row by row, with spectral axial derivatives.  For a constant metric this
    reduces to ``d_z^2 u - (n/R)^2 u`` on band-limited fields.
    """
    u = _check_field_shape(u1, grid)
    if metric.rho.shape[0] != grid.N_z:
        raise ShapeMismatch("metric sampled on a different grid")
    du = axial_derivative(u, grid)
    term1 = axial_derivative(metric.flux_coef * du, grid) / metric.sqrt_g
    n_sq = (grid.modes[: u.shape[0]] ** 2)[:, None]
    out = term1 - n_sq * metric.inv_rho_sq * u
    if np.isrealobj(u1):
        out = out.real
    return out if np.asarray(u1).ndim == 2 else out[0]


def c2_distance(metric: SurfaceMetric) -> float:
    """Relative C^2 deviation of the sampled radius from the reference radius.

    Returns ``max(sup|rho - R|, sup|rho'|, sup|rho''|) / R`` over the grid
    samples.
    """
    dr = np.abs(metric.rho - metric.R_ref).max()
    return max(dr, np.abs(metric.drho).max(), np.abs(metric.ddrho).max()) / metric.R_ref


def diff_matrices(grid: GridSpec):
    """Dense spectral differentiation matrices (D1, D2) on the axial grid."""
    eye = np.eye(grid.N_z)
    f = np.fft.fft(eye, axis=0)
    d1 = np.fft.ifft(1j * grid.k[:, None] * f, axis=0).real
    d2 = np.fft.ifft(-(grid.k[:, None] ** 2) * f, axis=0).real
    return d1, d2


def laplace_beltrami_matrix(metric: SurfaceMetric, grid: GridSpec, n: int) -> np.ndarray:
    """Dense matrix of the mode-n surface Laplacian."""
    d1, _ = diff_matrices(grid)
    flux = d1 @ (metric.flux_coef[:, None] * d1)
    mat = flux / metric.sqrt_g[:, None]
    if n:
        mat = mat - np.diag(float(n) ** 2 * metric.inv_rho_sq)
    return mat
