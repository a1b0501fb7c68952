"""Numerical disk map for smooth simply connected domains.

The map Phi : Omega -> D with Phi(0) = 0 and Phi'(0) > 0 is built from the
analytic function F = log(Phi(z)/z).  Re F is harmonic with boundary data
-log|gamma(t)|, solved by a double-layer potential whose Nystrom system has
a smooth kernel (trapezoid rule is then spectrally accurate for analytic
boundaries).  The boundary values of Im F follow from the Plemelj jump of
the layer potential, with the principal-value part split into a smooth
kernel plus the periodic Hilbert transform, which is an exact Fourier
multiplier.  The boundary correspondence theta(t) = arg Phi(gamma(t))
determines everything else:

* the inverse map is evaluated through its Maclaurin coefficients
  c_k = (1/2pi) int gamma(t) theta'(t) exp(-ik theta(t)) dt, a representation
  that stays uniformly accurate up to |y| = 1 for analytic boundaries;
* the forward map is evaluated by the Cauchy integral of the boundary values
  exp(i theta(t)), with FFT upsampling of the integrand when the target point
  approaches the boundary.

Transported potentials K~(y) = K(Phi^{-1}(y)) (|Phi^{-1}(y)|/|y|)^{2 alpha}
|(Phi^{-1})'(y)|^2 are sampled on a polar grid and wrapped in a bicubic
interpolant whose analytic derivatives feed the dilation terms of the
identity checks.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field

import numpy as np
from scipy.interpolate import RectBivariateSpline

from .errors import (
    DomainTooDistorted,
    InvalidParameter,
    MapSolverDiverged,
    NonPositivePotential,
    PointOutsideDomain,
    SingularityMismatch,
)
from .geometry import DomainSpec
from .grid import PolarGrid

RATIO_LIMIT_RADIUS = 1e-6  # below this |y|, (|Phi^-1(y)|/|y|)^2a uses its limit


def hilbert_conjugate(f: np.ndarray) -> np.ndarray:
    """Periodic Hilbert transform (1/2pi) PV int f(t) cot((t-t0)/2) dt.

    Exact Fourier multiplier i*sgn(k); the Nyquist mode is dropped.  Maps
    real samples to real samples, e.g. cos -> -sin.
    """
    n = len(f)
    spec = np.fft.fft(f)
    k = np.fft.fftfreq(n, d=1.0 / n)
    mult = 1j * np.sign(k)
    if n % 2 == 0:
        mult[n // 2] = 0.0
    out = np.fft.ifft(spec * mult)
    return out.real if np.isrealobj(f) else out


def _fourier_upsample(samples: np.ndarray, n_fine: int) -> np.ndarray:
    """Trigonometric interpolation of periodic samples onto a finer grid."""
    n = len(samples)
    if n_fine <= n:
        return samples
    if n % 2:
        raise InvalidParameter("upsampling expects an even sample count")
    spec = np.fft.fft(samples)
    half = n // 2
    padded = np.zeros(n_fine, dtype=complex)
    padded[:half] = spec[:half]
    padded[n_fine - half + 1:] = spec[half + 1:]
    padded[half] = 0.5 * spec[half]          # split the Nyquist mode
    padded[n_fine - half] = 0.5 * spec[half]
    return np.fft.ifft(padded) * (n_fine / n)


@dataclass(frozen=True, eq=False)
class ConformalMap:
    """Discretized Riemann map of a domain onto the unit disk."""

    domain: DomainSpec
    n_nodes: int
    t_nodes: np.ndarray          # boundary parameter samples
    theta_nodes: np.ndarray      # angles of Phi(gamma(t)), strictly increasing
    theta_dot: np.ndarray        # d theta / d t at the nodes
    mu: np.ndarray               # double-layer density (diagnostic)
    boundary_z: np.ndarray       # gamma(t) as complex numbers
    boundary_dz: np.ndarray      # gamma'(t)
    inv_coeffs: np.ndarray       # Maclaurin coefficients of Phi^{-1}
    ie_residual: float           # a posteriori integral-equation residual
    coeff_tail: float            # relative tail of inv_coeffs (accuracy proxy)
    crowding: float              # max theta' / min theta'

    # -- boundary correspondence ------------------------------------------

    def correspondence(self):
        return self.t_nodes, self.theta_nodes

    def _theta_fourier(self):
        q = self.theta_nodes - self.t_nodes - (self.theta_nodes[0] - self.t_nodes[0])
        q = self.theta_nodes - self.t_nodes
        return np.fft.fft(q) / self.n_nodes

    def theta_of_t(self, t):
        """Spectral evaluation of theta at arbitrary parameters."""
        t = np.asarray(t, dtype=float)
        qhat = self._theta_fourier()
        k = np.fft.fftfreq(self.n_nodes, d=1.0 / self.n_nodes)
        phase = np.exp(1j * np.multiply.outer(t, k))
        q = (phase @ qhat).real
        return t + q

    def theta_dot_of_t(self, t):
        t = np.asarray(t, dtype=float)
        qhat = self._theta_fourier()
        k = np.fft.fftfreq(self.n_nodes, d=1.0 / self.n_nodes)
        if self.n_nodes % 2 == 0:
            qhat = qhat.copy()
            qhat[self.n_nodes // 2] = 0.0
        phase = np.exp(1j * np.multiply.outer(t, k))
        return 1.0 + (phase @ (1j * k * qhat)).real

    def t_of_theta(self, theta):
        """Invert the boundary correspondence by Newton iteration."""
        theta = np.atleast_1d(np.asarray(theta, dtype=float))
        base = np.floor((theta - self.theta_nodes[0]) / (2 * np.pi)) * 2 * np.pi
        th = theta - base
        tt = np.concatenate([self.t_nodes, self.t_nodes[:1] + 2 * np.pi])
        thn = np.concatenate([self.theta_nodes, self.theta_nodes[:1] + 2 * np.pi])
        t = np.interp(th, thn, tt)
        for _ in range(8):
            err = self.theta_of_t(t) - th
            t = t - err / self.theta_dot_of_t(t)
            if np.max(np.abs(err)) < 1e-14:
                break
        return (t + base) if theta.ndim else float(t + base)

    # -- inverse map (power series) ---------------------------------------

    def inverse(self, w):
        w = np.asarray(w, dtype=complex)
        if np.any(np.abs(w) >= 1.0 + 1e-12):
            raise PointOutsideDomain("inverse map requires |y| < 1")
        return _polyval_ascending(self.inv_coeffs, w)

    def inverse_deriv(self, w):
        w = np.asarray(w, dtype=complex)
        if np.any(np.abs(w) >= 1.0 + 1e-12):
            raise PointOutsideDomain("inverse map requires |y| < 1")
        k = np.arange(1, len(self.inv_coeffs))
        return _polyval_ascending(self.inv_coeffs[1:] * k, w)

    # -- forward map (Cauchy integral with upsampling) --------------------

    def _forward_cauchy(self, z, kernel_power=1, n_cap=1 << 17):
        z = np.atleast_1d(np.asarray(z, dtype=complex))
        out = np.empty(z.shape, dtype=complex)
        speed = np.max(np.abs(self.boundary_dz))
        d = np.min(np.abs(self.boundary_z[None, :] - z[:, None]), axis=1)
        d = np.maximum(d, 1e-300)
        need = np.minimum(np.maximum(40.0 * speed / d, self.n_nodes), n_cap)
        levels = np.ceil(np.log2(need / self.n_nodes)).astype(int)
        levels = np.maximum(levels, 0)
        B = np.exp(1j * self.theta_nodes)
        for lev in np.unique(levels):
            sel = levels == lev
            nf = self.n_nodes << lev
            tf = 2 * np.pi * np.arange(nf) / nf
            if lev == 0:
                zb, dzb, Bf = self.boundary_z, self.boundary_dz, B
            else:
                zb = self.domain.zeta(tf)
                dzb = self.domain.zeta_dot(tf)
                Bf = _fourier_upsample(B, nf)
            diff = zb[None, :] - z[sel][:, None]
            ker = dzb[None, :] / diff**kernel_power
            out[sel] = (ker @ Bf) * (-1j / nf)
        return out

    def winding(self, z, n_cap=1 << 14):
        """Winding number of the boundary around z (1 inside, 0 outside)."""
        z = np.atleast_1d(np.asarray(z, dtype=complex))
        speed = np.max(np.abs(self.boundary_dz))
        d = np.min(np.abs(self.boundary_z[None, :] - z[:, None]), axis=1)
        d = np.maximum(d, 1e-300)
        need = np.minimum(np.maximum(30.0 * speed / d, self.n_nodes), n_cap)
        levels = np.maximum(np.ceil(np.log2(need / self.n_nodes)).astype(int), 0)
        out = np.empty(z.shape, dtype=complex)
        for lev in np.unique(levels):
            sel = levels == lev
            nf = self.n_nodes << lev
            tf = 2 * np.pi * np.arange(nf) / nf
            zb = self.domain.zeta(tf) if lev else self.boundary_z
            dzb = self.domain.zeta_dot(tf) if lev else self.boundary_dz
            diff = zb[None, :] - z[sel][:, None]
            out[sel] = (dzb[None, :] / diff).sum(axis=1) * (-1j / nf)
        return out.real

    def forward(self, z):
        z = np.atleast_1d(np.asarray(z, dtype=complex))
        w = self.winding(z)
        if np.any(np.abs(w - 1.0) > 0.5):
            raise PointOutsideDomain("forward map requires points inside the domain")
        return self._forward_cauchy(z, kernel_power=1)

    def forward_deriv(self, z):
        z = np.atleast_1d(np.asarray(z, dtype=complex))
        w = self.winding(z)
        if np.any(np.abs(w - 1.0) > 0.5):
            raise PointOutsideDomain("forward map requires points inside the domain")
        return self._forward_cauchy(z, kernel_power=2)

    # -- derived quantities ------------------------------------------------

    def conformal_factor(self, w):
        """1 / det(D Phi(Phi^{-1}(y))) = |(Phi^{-1})'(y)|^2."""
        return np.abs(self.inverse_deriv(w)) ** 2

    def boundary_inverse_deriv_abs(self, theta):
        """|(Phi^{-1})'| on |y|=1 from the correspondence: |gamma'(t)|/theta'(t)."""
        t = self.t_of_theta(theta)
        return np.abs(self.domain.zeta_dot(t)) / self.theta_dot_of_t(t)


def _polyval_ascending(coeffs, w):
    out = np.zeros_like(w, dtype=complex)
    for c in coeffs[::-1]:
        out = out * w + c
    return out


def compute_map(domain: DomainSpec, n_boundary_nodes: int = 512,
                residual_tol: float = 1e-10) -> ConformalMap:
    """Solve the boundary integral equation and assemble the disk map.

    Raises MapSolverDiverged when the a posteriori residual of the integral
    equation exceeds `residual_tol` or the correspondence is not strictly
    increasing, and DomainTooDistorted when boundary crowding underflows the
    conformal factor.
    """
    n = int(n_boundary_nodes)
    if n < 64 or n % 2:
        raise InvalidParameter("n_boundary_nodes must be >= 64 and even")

    t = 2 * np.pi * np.arange(n) / n
    z = domain.zeta(t)
    dz = domain.zeta_dot(t, deriv=1)
    ddz = domain.zeta_dot(t, deriv=2)
    if np.min(np.abs(z)) <= 0:
        raise InvalidParameter("boundary passes through the origin")

    # Nystrom system for the double-layer density:  (1/2 I + K) mu = u_b
    diff = z[None, :] - z[:, None]          # diff[j, k] = z_k - z_j
    np.fill_diagonal(diff, 1.0)
    Q = dz[None, :] / diff                  # Cauchy kernel, target j, source k
    np.fill_diagonal(Q, ddz / (2.0 * dz))
    kappa = Q.imag
    M = 0.5 * np.eye(n) + kappa / n
    u_b = -np.log(np.abs(z))
    mu = np.linalg.solve(M, u_b)

    # a posteriori residual at interleaved boundary targets
    tm = t + np.pi / n
    zm = domain.zeta(tm)
    diff_m = z[None, :] - zm[:, None]
    Km = (dz[None, :] / diff_m).imag
    mu_m = _fourier_upsample(mu, 2 * n)[1::2].real
    resid = (Km @ mu) / n + 0.5 * mu_m + np.log(np.abs(zm))
    ie_residual = float(np.max(np.abs(resid)))
    if ie_residual > residual_tol * max(1.0, np.max(np.abs(u_b))):
        raise MapSolverDiverged(
            f"integral equation residual {ie_residual:.3e} exceeds "
            f"{residual_tol:.1e}; increase n_boundary_nodes"
        )

    # Plemelj boundary values of Im log(Phi(z)/z)
    R = Q.copy()
    offs = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n
    cot_by_offset = np.empty(n)
    cot_by_offset[0] = 0.0
    cot_by_offset[1:] = 1.0 / np.tan(np.pi * np.arange(1, n) / n)
    R -= 0.5 * cot_by_offset[offs]
    np.fill_diagonal(R, ddz / (2.0 * dz))
    im_g = -(R @ mu).real / n - 0.5 * hilbert_conjugate(mu)
    c0_const = (mu * dz / z).sum().real / n
    phi = im_g + c0_const

    theta = np.unwrap(np.angle(z)) + phi
    theta = theta - 2 * np.pi * np.floor(theta[0] / (2 * np.pi))

    dtheta = np.diff(np.concatenate([theta, theta[:1] + 2 * np.pi]))
    if np.any(dtheta <= 0):
        raise MapSolverDiverged("boundary correspondence is not strictly increasing")

    # spectral derivative of theta(t) - t (periodic)
    q = theta - t
    k = np.fft.fftfreq(n, d=1.0 / n)
    qhat = np.fft.fft(q) / n
    qhat_d = 1j * k * qhat
    if n % 2 == 0:
        qhat_d[n // 2] = 0.0
    theta_dot = 1.0 + (np.fft.ifft(qhat_d) * n).real
    if np.min(theta_dot) <= 0:
        raise MapSolverDiverged("theta'(t) is not positive; map not injective")
    crowding = float(np.max(theta_dot) / np.min(theta_dot))
    if crowding > 1e12:
        raise DomainTooDistorted(
            "conformal factor underflow on the boundary",
            condition_estimate=crowding,
        )

    # rotation polish: make c_1 exactly real positive
    c1 = (z * theta_dot * np.exp(-1j * theta)).sum() / n
    theta = theta + np.angle(c1)

    k_inv = n // 2
    kk = np.arange(k_inv + 1)
    E = np.exp(-1j * np.outer(kk, theta))
    coeffs = (E @ (z * theta_dot)) / n
    c0_abs = abs(coeffs[0])
    coeffs[0] = 0.0
    coeffs[1] = coeffs[1].real
    if coeffs[1].real <= 0:
        raise MapSolverDiverged("normalization failed: (Phi^-1)'(0) <= 0")
    scale = np.max(np.abs(coeffs))
    tail = float(np.max(np.abs(coeffs[int(0.9 * k_inv):])) / scale)
    tail = max(tail, c0_abs / scale)
    if tail > 1e-3:
        raise DomainTooDistorted(
            f"inverse-map coefficients do not decay (tail {tail:.2e}); "
            "the domain is too distorted for this node count",
            condition_estimate=crowding,
        )

    return ConformalMap(
        domain=domain, n_nodes=n, t_nodes=t, theta_nodes=theta,
        theta_dot=theta_dot, mu=mu, boundary_z=z, boundary_dz=dz,
        inv_coeffs=coeffs, ie_residual=ie_residual, coeff_tail=tail,
        crowding=crowding,
    )


def map_point(cmap: ConformalMap, point, direction: str = "forward"):
    """Map a point forward (Omega -> D) or inverse (D -> Omega)."""
    pt = complex(point[0], point[1]) if np.ndim(point) else complex(point)
    if direction == "forward":
        w = cmap.forward(np.array([pt]))[0]
    elif direction == "inverse":
        if abs(pt) >= 1.0:
            raise PointOutsideDomain("inverse map requires |point| < 1")
        w = cmap.inverse(np.array([pt]))[0]
    else:
        raise InvalidParameter(f"unknown direction {direction!r}")
    return np.array([w.real, w.imag])


def conformal_factor(cmap: ConformalMap, y) -> float:
    """Positive conformal factor |(Phi^{-1})'(y)|^2 at |y| < 1."""
    pt = complex(y[0], y[1]) if np.ndim(y) else complex(y)
    if abs(pt) >= 1.0:
        raise PointOutsideDomain("conformal factor requires |y| < 1")
    return float(cmap.conformal_factor(np.array([pt]))[0])


# ---------------------------------------------------------------------------
# transported potentials
# ---------------------------------------------------------------------------


@dataclass(eq=False)
class PotentialField:
    """Scalar field sampled on a polar grid with a bicubic interpolant.

    `values` holds samples at the grid's cell centers and `boundary_values`
    the trace on |y| = 1 obtained from the boundary correspondence (never
    from near-boundary Cauchy evaluation).  inf/sup records are scanned
    estimates; `scan_resolution` documents the scan spacing.
    """

    grid: PolarGrid
    values: np.ndarray             # (n_r, n_theta)
    boundary_values: np.ndarray    # (n_theta,)
    inf_value: float
    sup_grad: float
    scan_resolution: float
    _spline: RectBivariateSpline = field(repr=False, default=None)

    @classmethod
    def constant(cls, grid: PolarGrid, value: float) -> "PotentialField":
        if value <= 0:
            raise NonPositivePotential(f"constant potential must be > 0, got {value}")
        vals = np.full((grid.n_r, grid.n_theta), float(value))
        bvals = np.full(grid.n_theta, float(value))
        fld = cls(grid=grid, values=vals, boundary_values=bvals,
                  inf_value=float(value), sup_grad=0.0,
                  scan_resolution=0.0)
        fld._build_spline()
        return fld

    @classmethod
    def from_samples(cls, grid: PolarGrid, values: np.ndarray,
                     boundary_values: np.ndarray,
                     nonnegative_ok: bool = False) -> "PotentialField":
        values = np.asarray(values, dtype=float)
        boundary_values = np.asarray(boundary_values, dtype=float)
        low = 0.0 if not nonnegative_ok else -np.inf
        if np.any(values <= low) or np.any(boundary_values <= low):
            raise NonPositivePotential("potential samples must be strictly positive")
        fld = cls(grid=grid, values=values, boundary_values=boundary_values,
                  inf_value=0.0, sup_grad=0.0, scan_resolution=0.0)
        fld._build_spline()
        fld._scan_extrema()
        return fld

    def _build_spline(self):
        g = self.grid
        r_knots = np.concatenate([g.radii, [1.0]])
        data = np.vstack([self.values, self.boundary_values[None, :]])
        th = g.thetas
        pad = 3
        th_knots = np.concatenate([th[-pad:] - 2 * np.pi, th, th[:pad] + 2 * np.pi])
        data_p = np.hstack([data[:, -pad:], data, data[:, :pad]])
        self._spline = RectBivariateSpline(r_knots, th_knots, data_p, kx=3, ky=3, s=0)

    def value(self, r, theta):
        return self._spline(np.asarray(r, float), np.asarray(theta, float) % (2 * np.pi),
                            grid=False)

    def radial_derivative(self, r, theta):
        return self._spline(np.asarray(r, float), np.asarray(theta, float) % (2 * np.pi),
                            dx=1, grid=False)

    def angular_derivative(self, r, theta):
        return self._spline(np.asarray(r, float), np.asarray(theta, float) % (2 * np.pi),
                            dy=1, grid=False)

    def radial_slope_nodes(self):
        """(y . grad K~) = r dK~/dr at the grid nodes."""
        g = self.grid
        r, th = g.node_mesh()
        return r * self._spline(g.radii, g.thetas, dx=1, grid=True).reshape?

    def grad_norm(self, r, theta):
        kr = self.radial_derivative(r, theta)
        kth = self.angular_derivative(r, theta)
        rr = np.maximum(np.asarray(r, float), 1e-12)
        return np.hypot(kr, kth / rr)

    def _scan_extrema(self, refine: int = 3):
        g = self.grid
        # value scan over all samples plus the r=0 spline limit
        r_scan = np.concatenate([[0.0], g.radii, [1.0]])
        vals = self._spline(r_scan, g.thetas, grid=True)
        inf_val = float(vals.min())
        imin, jmin = np.unravel_index(np.argmin(vals), vals.shape)
        inf_val = min(inf_val, self._refine_extremum(r_scan, imin, jmin, refine, kind="min"))

        # gradient scan avoids r below the first cell center, where the
        # interpolant is extrapolating and 1/r amplifies spline noise
        r_lo = g.radii[0]
        r_g = np.linspace(r_lo, 1.0, len(r_scan))
        gr = self._grad_on(r_g, g.thetas)
        sup_g = float(gr.max())
        imax, jmax = np.unravel_index(np.argmax(gr), gr.shape)
        sup_g = max(sup_g, self._refine_gradient(r_g, imax, jmax, refine))

        self.inf_value = inf_val
        self.sup_grad = sup_g
        self.scan_resolution = float(max(np.max(np.diff(r_scan)), g.dtheta))

    def _grad_on(self, r_vec, th_vec):
        kr = self._spline(r_vec, th_vec, dx=1, grid=True)
        kth = self._spline(r_vec, th_vec, dy=1, grid=True)
        rr = np.maximum(r_vec[:, None], 1e-12)
        return np.hypot(kr, kth / rr)

    def _neighborhood(self, r_vec, i, j, refine):
        g = self.grid
        r_lo = r_vec[max(i - 1, 0)]
        r_hi = r_vec[min(i + 1, len(r_vec) - 1)]
        th_mid = g.thetas[j]
        th_lo, th_hi = th_mid - g.dtheta, th_mid + g.dtheta
        nr = 2 * refine + 1
        return np.linspace(r_lo, r_hi, nr), np.linspace(th_lo, th_hi, nr)

    def _refine_extremum(self, r_vec, i, j, refine, kind):
        rr, tt = self._neighborhood(r_vec, i, j, refine)
        v = self._spline(rr, tt % (2 * np.pi), grid=False) if rr.ndim else None
        R, T = np.meshgrid(rr, tt % (2 * np.pi), indexing="ij")
        v = self._spline(R.ravel(), T.ravel(), grid=False)
        return float(v.min() if kind == "min" else v.max())

    def _refine_gradient(self, r_vec, i, j, refine):
        rr, tt = self._neighborhood(r_vec, i, j, refine)
        rr = np.clip(rr, self.grid.radii[0], 1.0)
        R, T = np.meshgrid(rr, tt % (2 * np.pi), indexing="ij")
        kr = self._spline(R.ravel(), T.ravel(), dx=1, grid=False)
        kth = self._spline(R.ravel(), T.ravel(), dy=1, grid=False)
        return float(np.hypot(kr, kth / np.maximum(R.ravel(), 1e-12)).max())


def transform_potential(cmap: ConformalMap, alpha: float, k_func,
                        grid: PolarGrid) -> PotentialField:
    """Transport K on Omega to K~ on the unit disk.

    K~(y) = K(Phi^{-1}(y)) (|Phi^{-1}(y)|/|y|)^{2 alpha} |(Phi^{-1})'(y)|^2,
    with the removable ratio at y = 0 replaced by its limit
    |(Phi^{-1})'(0)|^{2 alpha}.  `k_func` maps complex points of Omega to
    strictly positive values.
    """
    if alpha <= -1.0:
        raise SingularityMismatch(f"alpha must exceed -1, got {alpha}")
    y = grid.nodes_complex()
    z = cmap.inverse(y)
    dz = cmap.inverse_deriv(y)
    k_vals = np.asarray(k_func(z), dtype=float)
    if np.any(k_vals <= 0):
        raise NonPositivePotential("K must be strictly positive on the domain")
    absy = np.abs(y)
    ratio = np.where(absy < RATIO_LIMIT_RADIUS,
                     abs(cmap.inv_coeffs[1]),
                     np.abs(z) / np.maximum(absy, RATIO_LIMIT_RADIUS))
    vals = k_vals * ratio ** (2 * alpha) * np.abs(dz) ** 2

    th = grid.thetas
    t_b = cmap.t_of_theta(th)
    z_b = cmap.domain.zeta(t_b)
    k_b = np.asarray(k_func(z_b), dtype=float)
    if np.any(k_b <= 0):
        raise NonPositivePotential("K must be strictly positive up to the boundary")
    dinv_b = cmap.boundary_inverse_deriv_abs(th)
    bvals = k_b * np.abs(z_b) ** (2 * alpha) * dinv_b**2

    return PotentialField.from_samples(grid, vals, bvals)


# ---------------------------------------------------------------------------
# exports
# ---------------------------------------------------------------------------


def map_to_csv(cmap: ConformalMap, path) -> None:
    """Write the boundary correspondence as t, theta, gamma_x, gamma_y."""
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["t", "theta", "gamma_x", "gamma_y"])
        for t, th, z in zip(cmap.t_nodes, cmap.theta_nodes, cmap.boundary_z):
            w.writerow([f"{t:.17g}", f"{th:.17g}", f"{z.real:.17g}", f"{z.imag:.17g}"])


def potential_to_csv(fld: PotentialField, path) -> None:
    """Write the sampled potential as r, theta, value."""
    g = fld.grid
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["r", "theta", "value"])
        for i, r in enumerate(g.radii):
            for j, th in enumerate(g.thetas):
                w.writerow([f"{r:.17g}", f"{th:.17g}", f"{fld.values[i, j]:.17g}"])
