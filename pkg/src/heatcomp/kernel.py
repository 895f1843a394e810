"""Radial heat kernels for the model spaces.

The Euclidean kernel is the exact Gaussian.  The hyperbolic-plane kernel is
evaluated from its classical integral representation

    k(t, d) = sqrt(2) (4 pi t)^(-3/2) e^(-t/4)
              * integral_d^inf s e^(-s^2/(4t)) / sqrt(cosh s - cosh d) ds,

where the substitution v = sqrt(cosh s - cosh d) removes the inverse
square-root endpoint singularity exactly and stays regular at d = 0.  The
representation is not taken on faith: conservation and radial monotonicity
are enforced by tests.  Everything exposes a log form as well, since
e^(-d^2/4t) underflows long before small-time comparisons become trivial.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.integrate import quad
from scipy.special import gammainc, gammaincc

from .errors import ArgumentError, QuadratureError

_LOG_TAIL = 42.0  # e^-42 ~ 5e-19: relative truncation of kernel integrals


def euclidean_kernel(t: float, d, n: int = 2):
    """Gaussian heat kernel (4 pi t)^(-n/2) exp(-d^2 / 4t); broadcasts in d."""
    if t <= 0:
        raise ArgumentError("time must be positive")
    if n < 1:
        raise ArgumentError("dimension must be >= 1")
    d = np.asarray(d, dtype=float)
    out = (4.0 * math.pi * t) ** (-0.5 * n) * np.exp(-d * d / (4.0 * t))
    return float(out) if out.ndim == 0 else out


def euclidean_log_kernel(t: float, d, n: int = 2):
    if t <= 0:
        raise ArgumentError("time must be positive")
    d = np.asarray(d, dtype=float)
    out = -0.5 * n * math.log(4.0 * math.pi * t) - d * d / (4.0 * t)
    return float(out) if out.ndim == 0 else out


def euclidean_ball_mass(t: float, r: float, n: int = 2) -> float:
    """Heat-kernel mass of the ball B_r about the source point."""
    if t <= 0:
        raise ArgumentError("time must be positive")
    return float(gammainc(0.5 * n, r * r / (4.0 * t)))


def euclidean_tail_mass(t: float, r: float, n: int = 2) -> float:
    """Heat-kernel mass outside the ball B_r about the source point."""
    if t <= 0:
        raise ArgumentError("time must be positive")
    return float(gammaincc(0.5 * n, r * r / (4.0 * t)))


# -- hyperbolic plane ----------------------------------------------------------


def _cosh_minus_one(d: float) -> float:
    return 2.0 * math.sinh(0.5 * d) ** 2


def hyperbolic2_scaled_kernel(t: float, d: float, rel_tol: float = 1e-11) -> float:
    """m(t, d) with k(t, d) = m(t, d) * exp(-d^2 / 4t); m stays representable."""
    if t <= 0:
        raise ArgumentError("time must be positive")
    if d < 0:
        raise ArgumentError("distance must be nonnegative")
    base = _cosh_minus_one(d)
    s_max = min(math.sqrt(d * d + 4.0 * t * _LOG_TAIL), 700.0)
    if s_max <= d:
        s_max = d + 1e-6
    v_max = math.sqrt(max(_cosh_minus_one(s_max) - base, 1e-300))
    inv4t = 1.0 / (4.0 * t)

    def integrand(v: float) -> float:
        u = base + v * v  # cosh(s) - 1
        if u < 1e-8:
            s2 = 2.0 * u * (1.0 - u / 6.0)
            s = math.sqrt(s2)
            ratio = 1.0 - s2 / 6.0  # s / sinh(s)
        else:
            s = math.acosh(1.0 + u)
            ratio = s / math.sinh(s)
        return 2.0 * ratio * math.exp(-(s * s - d * d) * inv4t)

    val, err = quad(integrand, 0.0, v_max, epsabs=0.0, epsrel=rel_tol, limit=200)
    if val <= 0.0 or err > 100.0 * rel_tol * val:
        raise QuadratureError(
            f"hyperbolic kernel quadrature failed at t={t}, d={d}",
            achieved=err / val if val > 0 else math.inf,
        )
    pref = math.sqrt(2.0) * (4.0 * math.pi * t) ** -1.5 * math.exp(-t / 4.0)
    return pref * val


def hyperbolic2_kernel(t: float, d: float) -> float:
    """Heat kernel of the hyperbolic plane as a function of distance."""
    return hyperbolic2_scaled_kernel(t, d) * math.exp(-d * d / (4.0 * t))


def hyperbolic2_log_kernel(t: float, d: float) -> float:
    return math.log(hyperbolic2_scaled_kernel(t, d)) - d * d / (4.0 * t)


def hyperbolic2_ball_mass(t: float, r: float, rel_tol: float = 1e-9) -> float:
    """Heat-kernel mass of the hyperbolic ball B_r about the source point."""
    if r <= 0:
        return 0.0

    def integrand(s: float) -> float:
        return hyperbolic2_kernel(t, s) * 2.0 * math.pi * math.sinh(s)

    val, _ = quad(integrand, 0.0, r, epsabs=0.0, epsrel=rel_tol, limit=200)
    return float(val)


def hyperbolic2_total_mass(t: float, rel_tol: float = 1e-9) -> float:
    """Conservation check: should equal 1 for every t."""
    r_max = 2.0 * t + math.sqrt(4.0 * t * (_LOG_TAIL + 4.0)) + 2.0
    return hyperbolic2_ball_mass(t, r_max, rel_tol=rel_tol)


# -- Dirichlet kernel on a rectangle -------------------------------------------


def _image_count(t: float, length: float, tol: float = 1e-12) -> int:
    return int(math.ceil(math.sqrt(t * math.log(1.0 / tol)) / length)) + 2


def _dirichlet_1d(t: float, xi, eta, length: float, n_images: int):
    xi = np.asarray(xi, dtype=float)[..., None]
    eta = np.asarray(eta, dtype=float)[..., None]
    m = np.arange(-n_images, n_images + 1, dtype=float)
    shift = 2.0 * m * length
    pref = (4.0 * math.pi * t) ** -0.5
    direct = np.exp(-((xi - eta + shift) ** 2) / (4.0 * t))
    mirror = np.exp(-((xi + eta + shift) ** 2) / (4.0 * t))
    out = pref * np.sum(direct - mirror, axis=-1)
    return out


def rect_dirichlet_kernel(
    t: float,
    x,
    y,
    rect: tuple[float, float],
    n_images: int | None = None,
):
    """Dirichlet heat kernel of the open rectangle (0,L1)x(0,L2) by images.

    The truncation count keeps the discarded image tail below 1e-12
    relative; pass ``n_images`` to override.
    """
    if t <= 0:
        raise ArgumentError("time must be positive")
    L1, L2 = rect
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if np.any(x[..., 0] <= 0) or np.any(x[..., 0] >= L1) or np.any(
        x[..., 1] <= 0
    ) or np.any(x[..., 1] >= L2) or np.any(y[..., 0] <= 0) or np.any(
        y[..., 0] >= L1
    ) or np.any(y[..., 1] <= 0) or np.any(y[..., 1] >= L2):
        raise ArgumentError("points must lie strictly inside the rectangle")
    n1 = n_images if n_images is not None else _image_count(t, L1)
    n2 = n_images if n_images is not None else _image_count(t, L2)
    k1 = _dirichlet_1d(t, x[..., 0], y[..., 0], L1, n1)
    k2 = _dirichlet_1d(t, x[..., 1], y[..., 1], L2, n2)
    out = k1 * k2
    return float(out) if np.ndim(out) == 0 else out


# -- Hessian structure of the Euclidean kernel ---------------------------------


def hessian_quadratic_form(t: float, z, n: int | None = None) -> np.ndarray:
    """Matrix Q(t, z) = z z^T / (2t) - I; the kernel Hessian is (k/2t) Q."""
    if t <= 0:
        raise ArgumentError("time must be positive")
    z = np.asarray(z, dtype=float)
    if n is not None and len(z) != n:
        raise ArgumentError(f"displacement has length {len(z)}, expected {n}")
    return np.outer(z, z) / (2.0 * t) - np.eye(len(z))
