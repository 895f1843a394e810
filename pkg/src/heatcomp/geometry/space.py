"""Model spaces and points.

Two constant-curvature planes are supported: the Euclidean plane and the
hyperbolic plane in the hyperboloid model.  Hyperbolic points are triples
(x, y, z) on the upper sheet of x^2 + y^2 - z^2 = -1, and the distance is

    d(p, q) = arccosh(-<p, q>),

with <.,.> the Minkowski product of signature (+, +, -).  The hyperboloid
model keeps distances and geodesics algebraically stable far from the
origin, which the conformal disc models do not.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from ..errors import ArgumentError, SpaceMismatchError

HYPERBOLOID_TOL = 1e-12


class Space(Enum):
    """Ambient model space of a domain or point."""

    EUCLIDEAN2 = "euclidean2"
    HYPERBOLIC2 = "hyperbolic2"

    @property
    def dim(self) -> int:
        return 2


@dataclass(frozen=True)
class Point:
    """A space-tagged point.

    Euclidean points store (x, y); hyperbolic points store the hyperboloid
    triple (x, y, z).  Coordinates are kept as a plain tuple so points are
    hashable and safely immutable.
    """

    space: Space
    coords: tuple[float, ...]

    def __post_init__(self):
        expected = 2 if self.space is Space.EUCLIDEAN2 else 3
        if len(self.coords) != expected:
            raise ArgumentError(
                f"{self.space.value} point needs {expected} coordinates, "
                f"got {len(self.coords)}"
            )
        if self.space is Space.HYPERBOLIC2:
            x, y, z = self.coords
            if z <= 0:
                raise ArgumentError("hyperboloid point must have z > 0")
            residual = abs(x * x + y * y - z * z + 1.0)
            if residual > HYPERBOLOID_TOL * max(1.0, z * z):
                raise ArgumentError(
                    f"point violates hyperboloid constraint (residual {residual:.3e})"
                )

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.coords, dtype=float)


def euclidean_point(x: float, y: float) -> Point:
    return Point(Space.EUCLIDEAN2, (float(x), float(y)))


def hyperboloid_point(x: float, y: float, z: float | None = None) -> Point:
    """Hyperbolic point from hyperboloid coordinates.

    With ``z`` omitted, (x, y) is lifted onto the sheet.  A provided z is
    renormalized onto the sheet so that accumulated round-off never leaks
    past the constructor.
    """
    x = float(x)
    y = float(y)
    z = math.sqrt(1.0 + x * x + y * y)
    return Point(Space.HYPERBOLIC2, (x, y, z))


def point_from_array(space: Space, arr) -> Point:
    arr = np.asarray(arr, dtype=float)
    if space is Space.EUCLIDEAN2:
        return euclidean_point(arr[0], arr[1])
    return hyperboloid_point(arr[0], arr[1])


def minkowski_dot(p, q):
    """Minkowski product with signature (+, +, -); broadcasts over rows."""
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    return p[..., 0] * q[..., 0] + p[..., 1] * q[..., 1] - p[..., 2] * q[..., 2]


def hyperbolic_distance_arrays(p, q):
    inner = -minkowski_dot(p, q)
    return np.arccosh(np.maximum(inner, 1.0))


def distance(p: Point, q: Point) -> float:
    """Geodesic distance between two points of the same space."""
    if p.space is not q.space:
        raise SpaceMismatchError(f"{p.space.value} vs {q.space.value}")
    if p.space is Space.EUCLIDEAN2:
        return float(math.hypot(p.coords[0] - q.coords[0], p.coords[1] - q.coords[1]))
    return float(hyperbolic_distance_arrays(p.array, q.array))


def circumference(space: Space, r: float) -> float:
    """Length of the geodesic circle of radius r."""
    if r < 0:
        raise ArgumentError("radius must be nonnegative")
    if space is Space.EUCLIDEAN2:
        return 2.0 * math.pi * r
    return 2.0 * math.pi * math.sinh(r)


def ball_area(space: Space, r: float) -> float:
    """Area of the closed metric ball of radius r."""
    if r < 0:
        raise ArgumentError("radius must be nonnegative")
    if space is Space.EUCLIDEAN2:
        return math.pi * r * r
    return 4.0 * math.pi * math.sinh(0.5 * r) ** 2


# -- hyperboloid utilities ---------------------------------------------------


def tangent_basis(x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Minkowski-orthonormal basis of the tangent plane at hyperboloid x."""
    seed = np.array([1.0, 0.0, 0.0])
    if abs(x[0]) > 0.9 * x[2]:
        seed = np.array([0.0, 1.0, 0.0])
    e1 = seed + minkowski_dot(seed, x) * x
    e1 = e1 / math.sqrt(minkowski_dot(e1, e1))
    e2 = lorentz_cross(x, e1)
    e2 = e2 / math.sqrt(minkowski_dot(e2, e2))
    return e1, e2


def lorentz_cross(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Minkowski cross product: orthogonal to u and v in the (+,+,-) metric."""
    c = np.cross(u, v)
    c[2] = -c[2]
    return c


def geodesic_unit_tangent(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Unit tangent at p of the geodesic towards q (hyperboloid points)."""
    inner = minkowski_dot(p, q)
    u = q + inner * p
    norm2 = minkowski_dot(u, u)
    if norm2 <= 0:
        raise ArgumentError("geodesic tangent undefined for coincident points")
    return u / math.sqrt(norm2)


def geodesic_point_at(p: np.ndarray, u: np.ndarray, s) -> np.ndarray:
    """Point at arclength s along the geodesic from p with unit tangent u."""
    s = np.asarray(s, dtype=float)
    return np.cosh(s)[..., None] * p + np.sinh(s)[..., None] * u


def circle_points(center: np.ndarray, r: float, angles) -> np.ndarray:
    """Points of the hyperbolic circle of radius r at the given angles."""
    e1, e2 = tangent_basis(center)
    angles = np.asarray(angles, dtype=float)
    direction = np.cos(angles)[..., None] * e1 + np.sin(angles)[..., None] * e2
    return math.cosh(r) * center + math.sinh(r) * direction


def to_klein(p) -> np.ndarray:
    """Projective (Klein) coordinates; geodesics become straight chords."""
    p = np.asarray(p, dtype=float)
    return p[..., :2] / p[..., 2:3]


def from_klein(k) -> np.ndarray:
    """Lift Klein-disc coordinates back onto the hyperboloid sheet."""
    k = np.asarray(k, dtype=float)
    norm2 = np.sum(k * k, axis=-1)
    if np.any(norm2 >= 1.0):
        raise ArgumentError("Klein coordinates must lie in the open unit disc")
    z = 1.0 / np.sqrt(1.0 - norm2)
    return np.concatenate([k * z[..., None], z[..., None]], axis=-1)


# -- isometries ---------------------------------------------------------------


@dataclass(frozen=True)
class EuclideanIsometry:
    """Rotation by `angle` about the origin followed by `shift`."""

    angle: float
    shift: tuple[float, float]

    def apply(self, xy) -> np.ndarray:
        xy = np.asarray(xy, dtype=float)
        c, s = math.cos(self.angle), math.sin(self.angle)
        rot = np.array([[c, -s], [s, c]])
        return xy @ rot.T + np.asarray(self.shift)


@dataclass(frozen=True)
class HyperbolicIsometry:
    """Element of the isometry group acting on hyperboloid coordinates."""

    matrix: tuple  # 3x3, preserves the Minkowski form and the upper sheet

    def apply(self, p) -> np.ndarray:
        p = np.asarray(p, dtype=float)
        out = p @ np.asarray(self.matrix).T
        # renormalize onto the sheet; the matrix preserves it only up to eps
        xy = out[..., :2]
        z = np.sqrt(1.0 + np.sum(xy * xy, axis=-1))
        return np.concatenate([xy, z[..., None]], axis=-1)


def hyperbolic_rotation(angle: float) -> HyperbolicIsometry:
    c, s = math.cos(angle), math.sin(angle)
    return HyperbolicIsometry(((c, -s, 0.0), (s, c, 0.0), (0.0, 0.0, 1.0)))


def hyperbolic_translation(length: float) -> HyperbolicIsometry:
    """Boost moving the origin by `length` along the x-axis geodesic."""
    ch, sh = math.cosh(length), math.sinh(length)
    return HyperbolicIsometry(((ch, 0.0, sh), (0.0, 1.0, 0.0), (sh, 0.0, ch)))


def compose_hyperbolic(*isos: HyperbolicIsometry) -> HyperbolicIsometry:
    m = np.eye(3)
    for iso in isos:
        m = np.asarray(iso.matrix) @ m
    return HyperbolicIsometry(tuple(map(tuple, m)))


def random_isometry(space: Space, rng: np.random.Generator):
    """Random orientation-preserving isometry, used by invariance tests."""
    if space is Space.EUCLIDEAN2:
        angle = rng.uniform(0.0, 2.0 * math.pi)
        shift = tuple(rng.uniform(-1.5, 1.5, size=2))
        return EuclideanIsometry(angle, shift)
    return compose_hyperbolic(
        hyperbolic_rotation(rng.uniform(0.0, 2.0 * math.pi)),
        hyperbolic_translation(rng.uniform(-1.0, 1.0)),
        hyperbolic_rotation(rng.uniform(0.0, 2.0 * math.pi)),
    )
