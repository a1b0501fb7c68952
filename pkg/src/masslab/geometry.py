"""Simply connected planar domains with smooth Fourier-series boundaries.

A domain is described by a closed curve gamma(t), t in [0, 2pi), whose
coordinates are truncated Fourier series.  Truncation keeps every boundary
analytic, which the disk-map solver relies on for spectral convergence.
Supported families: the unit disk, axis-aligned ellipses, star-shaped
"fourier blobs" r(t) = sum of trigonometric modes, and a one-parameter
dumbbell family r(t) = eps + (1 - eps) cos^2(t) whose neck half-width at
x1 = 0 equals eps.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    InvalidParameter,
    OriginOutsideDomain,
    SelfIntersectingBoundary,
)

DUMBBELL_FOURIER_DEGREE = 64  # projection degree for the dumbbell family
_VALID_KINDS = ("unit_disk", "ellipse", "fourier_blob", "dumbbell")


@dataclass(frozen=True, eq=False)
class DomainSpec:
    """Validated boundary of a simply connected domain containing the origin.

    Coordinates of gamma are stored as Fourier coefficients:
    x(t) = sum_k ax[k] cos(kt) + bx[k] sin(kt), same for y with ay/by.
    """

    kind: str
    params: dict
    ax: np.ndarray
    bx: np.ndarray
    ay: np.ndarray
    by: np.ndarray
    n_validation_samples: int = 2048

    def _coord(self, t, coef_cos, coef_sin, deriv=0):
        t = np.asarray(t, dtype=float)
        k = np.arange(len(coef_cos))
        kt = np.multiply.outer(t, k)
        c, s = np.cos(kt), np.sin(kt)
        if deriv == 0:
            basis_c, basis_s = c, s
        elif deriv == 1:
            basis_c, basis_s = -k * s, k * c
        elif deriv == 2:
            basis_c, basis_s = -(k**2) * c, -(k**2) * s
        else:
            raise InvalidParameter(f"derivative order {deriv} not supported")
        return basis_c @ coef_cos + basis_s @ coef_sin

    def gamma(self, t):
        """Boundary point(s) as an array (..., 2)."""
        return np.stack(
            [self._coord(t, self.ax, self.bx), self._coord(t, self.ay, self.by)],
            axis=-1,
        )

    def gamma_dot(self, t):
        return np.stack(
            [
                self._coord(t, self.ax, self.bx, deriv=1),
                self._coord(t, self.ay, self.by, deriv=1),
            ],
            axis=-1,
        )

    def zeta(self, t):
        """Boundary as complex numbers x + iy."""
        g = self.gamma(t)
        return g[..., 0] + 1j * g[..., 1]

    def zeta_dot(self, t, deriv=1):
        x = self._coord(t, self.ax, self.bx, deriv=deriv)
        y = self._coord(t, self.ay, self.by, deriv=deriv)
        return x + 1j * y


def _fourier_project(samples):
    """Exact cos/sin coefficients of a real trigonometric polynomial.

    `samples` must be taken at len(samples) equispaced nodes, with at least
    twice as many nodes as the polynomial degree.
    """
    n = len(samples)
    spec = np.fft.rfft(samples) / n
    a = 2.0 * spec.real
    a[0] = spec[0].real
    b = -2.0 * spec.imag
    b[0] = 0.0
    return a, b


def _radial_curve_coeffs(rc, rs):
    """Coordinate Fourier coefficients of gamma(t) = r(t) (cos t, sin t)."""
    deg = max(len(rc), len(rs)) + 1
    n = 4 * (deg + 2)
    t = 2 * np.pi * np.arange(n) / n
    k = np.arange(len(rc))
    r = np.cos(np.multiply.outer(t, k)) @ rc
    if len(rs):
        ks = np.arange(len(rs))
        r = r + np.sin(np.multiply.outer(t, ks)) @ rs
    ax, bx = _fourier_project(r * np.cos(t))
    ay, by = _fourier_project(r * np.sin(t))
    return ax, bx, ay, by


def _validate(domain: DomainSpec) -> None:
    n = domain.n_validation_samples
    t = 2 * np.pi * np.arange(n) / n
    pts = domain.gamma(t)

    radii = np.hypot(pts[:, 0], pts[:, 1])
    if np.min(radii) <= 0:
        raise OriginOutsideDomain("boundary passes through the origin")

    # winding number of gamma around 0 via unwrapped angle increments
    ang = np.unwrap(np.arctan2(pts[:, 1], pts[:, 0]))
    total = ang[-1] - ang[0] + _angle_increment(pts[-1], pts[0])
    winding = total / (2 * np.pi)
    if abs(winding - 1.0) > 1e-6:
        raise OriginOutsideDomain(
            f"winding number of boundary around origin is {winding:.6f}, expected 1"
        )

    # sampled simplicity check: non-adjacent samples must stay separated
    seg = np.linalg.norm(np.roll(pts, -1, axis=0) - pts, axis=1)
    tol = 0.25 * np.median(seg)
    min_dist = _min_nonadjacent_distance(pts, exclude=2)
    if min_dist < tol:
        raise SelfIntersectingBoundary(
            f"non-adjacent boundary samples come within {min_dist:.3e} "
            f"(tolerance {tol:.3e}); curve is self-intersecting or nearly so"
        )


def _angle_increment(p, q):
    """Signed angle from p to q as seen from the origin, in (-pi, pi]."""
    a = np.arctan2(q[1], q[0]) - np.arctan2(p[1], p[0])
    return (a + np.pi) % (2 * np.pi) - np.pi


def _min_nonadjacent_distance(pts, exclude=2, block=512):
    n = len(pts)
    best = np.inf
    for start in range(0, n, block):
        stop = min(start + block, n)
        d = np.linalg.norm(pts[start:stop, None, :] - pts[None, :, :], axis=2)
        idx = np.arange(start, stop)[:, None]
        jdx = np.arange(n)[None, :]
        gap = np.abs(idx - jdx)
        gap = np.minimum(gap, n - gap)
        d[gap <= exclude] = np.inf
        best = min(best, d.min())
    return best


def build_domain(kind: str, params: dict | None = None,
                 n_validation_samples: int = 2048) -> DomainSpec:
    """Construct and validate a domain of the given kind.

    Raises InvalidParameter for malformed parameters, and
    SelfIntersectingBoundary / OriginOutsideDomain when the sampled
    invariant checks fail.
    """
    params = dict(params or {})
    if kind not in _VALID_KINDS:
        raise InvalidParameter(f"unknown domain kind {kind!r}")
    if n_validation_samples < 16:
        raise InvalidParameter("n_validation_samples must be >= 16")

    if kind == "unit_disk":
        if params:
            raise InvalidParameter("unit_disk takes no parameters")
        ax, bx = np.array([0.0, 1.0]), np.array([0.0, 0.0])
        ay, by = np.array([0.0, 0.0]), np.array([0.0, 1.0])
    elif kind == "ellipse":
        try:
            a, b = float(params.pop("a")), float(params.pop("b"))
        except KeyError as exc:
            raise InvalidParameter("ellipse requires params a and b") from exc
        if params:
            raise InvalidParameter(f"unexpected ellipse params: {sorted(params)}")
        if not (a > 0 and b > 0):
            raise InvalidParameter(f"ellipse semi-axes must be positive, got a={a}, b={b}")
        ax, bx = np.array([0.0, a]), np.array([0.0, 0.0])
        ay, by = np.array([0.0, 0.0]), np.array([0.0, b])
    elif kind == "fourier_blob":
        rc = np.asarray(params.pop("cos", []), dtype=float)
        rs = np.asarray(params.pop("sin", []), dtype=float)
        if params:
            raise InvalidParameter(f"unexpected fourier_blob params: {sorted(params)}")
        if rc.size == 0 and rs.size == 0:
            raise InvalidParameter("fourier_blob requires nonempty coefficient lists")
        if rc.size == 0:
            rc = np.array([0.0])
        ax, bx, ay, by = _radial_curve_coeffs(rc, rs)
    else:  # dumbbell
        try:
            eps = float(params.pop("eps"))
        except KeyError as exc:
            raise InvalidParameter("dumbbell requires param eps") from exc
        if params:
            raise InvalidParameter(f"unexpected dumbbell params: {sorted(params)}")
        if not (0.0 < eps < 1.0):
            raise InvalidParameter(f"dumbbell eps must lie in (0,1), got {eps}")
        # r(t) = eps + (1-eps) cos^2 t  =  (1+eps)/2 + (1-eps)/2 cos(2t),
        # an exact trigonometric polynomial; projection to degree 64 is the
        # identity but is applied anyway to keep one code path.
        rc = np.zeros(DUMBBELL_FOURIER_DEGREE + 1)
        rc[0] = (1.0 + eps) / 2.0
        rc[2] = (1.0 - eps) / 2.0
        ax, bx, ay, by = _radial_curve_coeffs(rc, np.array([]))

    if kind == "unit_disk":
        kept = {}
    elif kind == "ellipse":
        kept = {"a": a, "b": b}
    elif kind == "fourier_blob":
        kept = {"cos": rc.tolist(), "sin": rs.tolist()}
    else:
        kept = {"eps": eps}
    dom = DomainSpec(
        kind=kind, params=kept,
        ax=ax, bx=bx, ay=ay, by=by,
        n_validation_samples=n_validation_samples,
    )
    _validate(dom)
    return dom


def boundary_point(domain: DomainSpec, t: float):
    """Point, unit tangent and outward unit normal at parameter t (mod 2pi).

    The normal is the tangent rotated by -pi/2, outward for the
    counterclockwise parametrizations produced by build_domain.
    """
    t = float(t) % (2 * np.pi)
    point = domain.gamma(t)
    vel = domain.gamma_dot(t)
    speed = np.hypot(vel[0], vel[1])
    tangent = vel / speed
    normal = np.array([tangent[1], -tangent[0]])
    return point, tangent, normal
