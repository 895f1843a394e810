"""Admissible domains: polygons, discs, annuli, unions, and 2D tubes.

All domains are closed sets with boundary of measure zero.  Polygons have
geodesic edges; in the hyperbolic plane the point-in-polygon test runs in
Klein coordinates, where geodesics are straight chords.  Domains are
immutable after construction and all queries are pure.
"""

from __future__ import annotations

import math
from enum import Enum

import numpy as np

from ..errors import ArgumentError, DegenerateDomainError, SpaceMismatchError
from . import space as sp
from .space import Point, Space

BAND_FACTOR = 1e-10  # boundary tolerance band, relative to the domain scale


class Containment(Enum):
    INSIDE = "inside"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


def _shoelace(xy: np.ndarray) -> float:
    x, y = xy[:, 0], xy[:, 1]
    return 0.5 * float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))


def _point_in_polygon_mask(xy: np.ndarray, pts: np.ndarray) -> np.ndarray:
    """Even-odd rule with a half-open crossing convention; vectorized."""
    edges = (
        xy[None, :, 0],
        xy[None, :, 1],
        np.roll(xy[:, 0], -1)[None, :],
        np.roll(xy[:, 1], -1)[None, :],
    )
    return _mask_from_edges(edges, pts)


def _mask_from_edges(edges, pts: np.ndarray) -> np.ndarray:
    pts = np.atleast_2d(pts)
    x = pts[:, 0:1]
    y = pts[:, 1:2]
    x1, y1, x2, y2 = edges
    crosses = (y1 > y) != (y2 > y)
    with np.errstate(divide="ignore", invalid="ignore"):
        x_at = x1 + (y - y1) * (x2 - x1) / (y2 - y1)
    hits = crosses & (x_at > x)
    return (np.sum(hits, axis=1) % 2).astype(bool)


def _segment_distance(p: np.ndarray, a: np.ndarray, b: np.ndarray) -> float:
    ab = b - a
    denom = float(ab @ ab)
    if denom == 0.0:
        return float(np.linalg.norm(p - a))
    lam = float((p - a) @ ab) / denom
    lam = min(1.0, max(0.0, lam))
    return float(np.linalg.norm(p - (a + lam * ab)))


class Domain:
    """Base class; concrete variants implement the geometric queries."""

    space: Space

    # -- queries implemented by every variant --------------------------------

    def contains(self, x: Point) -> Containment:
        raise NotImplementedError

    def contains_mask(self, pts: np.ndarray) -> np.ndarray:
        """Strict-interior test for an array of coordinate rows."""
        raise NotImplementedError

    def boundary_distance(self, x: Point) -> float:
        """Distance to the topological boundary of this variant."""
        raise NotImplementedError

    def area(self) -> float:
        raise NotImplementedError

    def extent_from(self, x: Point) -> float:
        """Upper bound (attained) for the distance from x to the domain."""
        raise NotImplementedError

    def critical_radii(self, x: Point) -> list[float]:
        """Radii where the spherical area function may lose smoothness."""
        raise NotImplementedError

    def scale(self) -> float:
        """Rough diameter, used to size tolerance bands."""
        raise NotImplementedError

    def chart_bounds(self) -> tuple[np.ndarray, np.ndarray]:
        """Bounding box in chart coordinates (plane, or Klein disc)."""
        raise NotImplementedError

    # -- shared helpers -------------------------------------------------------

    def _check_space(self, x: Point):
        if x.space is not self.space:
            raise SpaceMismatchError(
                f"point in {x.space.value}, domain in {self.space.value}"
            )

    def distance_from_complement(self, x: Point) -> float:
        """Distance from x to the closure of the complement (0 outside)."""
        self._check_space(x)
        if self.contains(x) is not Containment.INSIDE:
            return 0.0
        return self.boundary_distance(x)

    def distance_to_set(self, x: Point) -> float:
        """Distance from x to the domain itself (0 on the domain)."""
        self._check_space(x)
        if self.contains(x) is not Containment.OUTSIDE:
            return 0.0
        return self.boundary_distance(x)

    @property
    def band(self) -> float:
        return BAND_FACTOR * self.scale()


# -- simple polygon -----------------------------------------------------------


class SimplePolygon(Domain):
    """Simple polygon with geodesic edges, oriented counterclockwise."""

    def __init__(self, space: Space, vertices):
        self.space = space
        verts = np.asarray(vertices, dtype=float)
        if verts.ndim != 2 or len(verts) < 3:
            raise ArgumentError("polygon needs at least 3 vertices")
        if space is Space.EUCLIDEAN2:
            if verts.shape[1] != 2:
                raise ArgumentError("Euclidean vertices must be (x, y) pairs")
            self._verts = verts.copy()
            self._chart = self._verts
        else:
            if verts.shape[1] != 3:
                raise ArgumentError("hyperbolic vertices must be hyperboloid triples")
            xy = verts[:, :2]
            z = np.sqrt(1.0 + np.sum(xy * xy, axis=1))
            self._verts = np.column_stack([xy, z])
            self._chart = sp.to_klein(self._verts)
        if abs(_shoelace(self._chart)) < 1e-300:
            raise DegenerateDomainError("polygon has zero chart area")
        if _shoelace(self._chart) < 0.0:
            self._verts = self._verts[::-1].copy()
            self._chart = self._chart[::-1].copy()
        self._key = tuple(map(tuple, self._verts))
        self._mask_edges = (
            self._chart[None, :, 0],
            self._chart[None, :, 1],
            np.roll(self._chart[:, 0], -1)[None, :],
            np.roll(self._chart[:, 1], -1)[None, :],
        )
        if space is Space.HYPERBOLIC2:
            self._edge_cache = self._build_hyperbolic_edges()

    def __eq__(self, other):
        return (
            isinstance(other, SimplePolygon)
            and other.space is self.space
            and other._key == self._key
        )

    def __hash__(self):
        return hash((self.space, self._key))

    @property
    def vertices(self) -> np.ndarray:
        return self._verts.copy()

    @property
    def chart_vertices(self) -> np.ndarray:
        """Euclidean coordinates, or Klein coordinates for hyperbolic polygons."""
        return self._chart.copy()

    def _build_hyperbolic_edges(self):
        edges = []
        n = len(self._verts)
        for i in range(n):
            p, q = self._verts[i], self._verts[(i + 1) % n]
            normal = sp.lorentz_cross(p, q)
            norm2 = sp.minkowski_dot(normal, normal)
            if norm2 <= 0:
                raise DegenerateDomainError("degenerate geodesic edge")
            normal = normal / math.sqrt(norm2)
            tangent = sp.geodesic_unit_tangent(p, q)
            length = sp.hyperbolic_distance_arrays(p, q)
            edges.append((p, q, normal, tangent, float(length)))
        return edges

    def scale(self) -> float:
        if self.space is Space.EUCLIDEAN2:
            lo = self._verts.min(axis=0)
            hi = self._verts.max(axis=0)
            return float(np.linalg.norm(hi - lo))
        dmax = 0.0
        for i in range(len(self._verts)):
            d = sp.hyperbolic_distance_arrays(self._verts[i], self._verts)
            dmax = max(dmax, float(np.max(d)))
        return max(dmax, 1e-30)

    def chart_bounds(self) -> tuple[np.ndarray, np.ndarray]:
        return self._chart.min(axis=0), self._chart.max(axis=0)

    def contains_mask(self, pts: np.ndarray) -> np.ndarray:
        pts = np.atleast_2d(np.asarray(pts, dtype=float))
        if self.space is Space.HYPERBOLIC2 and pts.shape[1] == 3:
            pts = pts[:, :2] / pts[:, 2:3]
        return _mask_from_edges(self._mask_edges, pts)

    def contains(self, x: Point) -> Containment:
        self._check_space(x)
        if self.boundary_distance(x) <= self.band:
            return Containment.BOUNDARY
        if bool(self.contains_mask(x.array[None, :])[0]):
            return Containment.INSIDE
        return Containment.OUTSIDE

    def boundary_distance(self, x: Point) -> float:
        self._check_space(x)
        if self.space is Space.EUCLIDEAN2:
            p = x.array
            a = self._verts
            ab = np.roll(a, -1, axis=0) - a
            len2 = np.sum(ab * ab, axis=1)
            with np.errstate(divide="ignore", invalid="ignore"):
                lam = np.sum((p - a) * ab, axis=1) / len2
            lam = np.nan_to_num(np.clip(lam, 0.0, 1.0))
            feet = a + lam[:, None] * ab
            return float(np.min(np.linalg.norm(p - feet, axis=1)))
        p = x.array
        best = math.inf
        for p1, _p2, normal, tangent, length in self._edge_cache:
            a = -sp.minkowski_dot(p, p1)
            b = -sp.minkowski_dot(p, tangent)
            if abs(b) < a:
                s_star = math.atanh(-b / a)
                if 0.0 <= s_star <= length:
                    best = min(best, math.acosh(max(math.sqrt(a * a - b * b), 1.0)))
                    continue
            d1 = math.acosh(max(a, 1.0))
            d2 = float(sp.hyperbolic_distance_arrays(p, _p2))
            best = min(best, d1, d2)
        return best

    def area(self) -> float:
        if self.space is Space.EUCLIDEAN2:
            return abs(_shoelace(self._verts))
        # Gauss-Bonnet with geodesic edges: area = sum of signed turns - 2*pi
        n = len(self._verts)
        turns = []
        for i in range(n):
            v = self._verts[i]
            prev = self._verts[(i - 1) % n]
            nxt = self._verts[(i + 1) % n]
            incoming = -sp.geodesic_unit_tangent(v, prev)
            outgoing = sp.geodesic_unit_tangent(v, nxt)
            e1, e2 = sp.tangent_basis(v)
            a = (sp.minkowski_dot(incoming, e1), sp.minkowski_dot(incoming, e2))
            b = (sp.minkowski_dot(outgoing, e1), sp.minkowski_dot(outgoing, e2))
            cross = a[0] * b[1] - a[1] * b[0]
            dot = a[0] * b[0] + a[1] * b[1]
            turns.append(math.atan2(cross, dot))
        return abs(math.fsum(turns) - 2.0 * math.pi)

    def extent_from(self, x: Point) -> float:
        self._check_space(x)
        if self.space is Space.EUCLIDEAN2:
            return float(np.max(np.linalg.norm(self._verts - x.array, axis=1)))
        return float(np.max(sp.hyperbolic_distance_arrays(x.array, self._verts)))

    def critical_radii(self, x: Point) -> list[float]:
        self._check_space(x)
        radii = []
        if self.space is Space.EUCLIDEAN2:
            p = x.array
            radii.extend(np.linalg.norm(self._verts - p, axis=1).tolist())
            a = self._verts
            ab = np.roll(a, -1, axis=0) - a
            len2 = np.sum(ab * ab, axis=1)
            with np.errstate(divide="ignore", invalid="ignore"):
                lam = np.sum((p - a) * ab, axis=1) / len2
            interior = np.nan_to_num(lam, nan=-1.0)
            ok = (interior > 0.0) & (interior < 1.0)
            if np.any(ok):
                feet = a[ok] + lam[ok, None] * ab[ok]
                radii.extend(np.linalg.norm(p - feet, axis=1).tolist())
        else:
            p = x.array
            radii.extend(sp.hyperbolic_distance_arrays(p, self._verts).tolist())
            for p1, _p2, _normal, tangent, length in self._edge_cache:
                a = -sp.minkowski_dot(p, p1)
                b = -sp.minkowski_dot(p, tangent)
                if abs(b) < a:
                    s_star = math.atanh(-b / a)
                    if 0.0 < s_star < length:
                        radii.append(math.acosh(max(math.sqrt(a * a - b * b), 1.0)))
        return radii

    # -- Euclidean-only helpers ----------------------------------------------

    def triangulate(self) -> list[np.ndarray]:
        """Ear-clipping triangulation (Euclidean polygons only)."""
        if self.space is not Space.EUCLIDEAN2:
            raise ArgumentError("triangulation implemented for Euclidean polygons")
        verts = [v.copy() for v in self._verts]
        idx = list(range(len(verts)))
        triangles = []
        guard = 0
        while len(idx) > 3:
            guard += 1
            if guard > 10 * len(self._verts) ** 2:
                raise DegenerateDomainError("ear clipping failed; polygon not simple?")
            n = len(idx)
            clipped = False
            for k in range(n):
                i0, i1, i2 = idx[(k - 1) % n], idx[k], idx[(k + 1) % n]
                a, b, c = verts[i0], verts[i1], verts[i2]
                cross = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
                if cross <= 1e-14 * self.scale() ** 2:
                    continue
                tri = np.array([a, b, c])
                others = np.array([verts[j] for j in idx if j not in (i0, i1, i2)])
                if len(others) and np.any(_points_in_triangle(tri, others)):
                    continue
                triangles.append(tri)
                idx.pop(k)
                clipped = True
                break
            if not clipped:
                raise DegenerateDomainError("ear clipping stalled; polygon not simple?")
        triangles.append(np.array([verts[idx[0]], verts[idx[1]], verts[idx[2]]]))
        return triangles


def _points_in_triangle(tri: np.ndarray, pts: np.ndarray) -> np.ndarray:
    a, b, c = tri
    v0, v1 = b - a, c - a
    den = v0[0] * v1[1] - v0[1] * v1[0]
    w = pts - a
    s = (w[:, 0] * v1[1] - w[:, 1] * v1[0]) / den
    t = (v0[0] * w[:, 1] - v0[1] * w[:, 0]) / den
    eps = 1e-12
    return (s > eps) & (t > eps) & (s + t < 1.0 - eps)


# -- disc and annulus ---------------------------------------------------------


class Disc(Domain):
    """Closed metric ball."""

    def __init__(self, center: Point, radius: float):
        if radius <= 0:
            raise ArgumentError("disc radius must be positive")
        self.space = center.space
        self.center = center
        self.radius = float(radius)

    def __eq__(self, other):
        return (
            isinstance(other, Disc)
            and other.space is self.space
            and other.center == self.center
            and other.radius == self.radius
        )

    def __hash__(self):
        return hash((self.space, self.center, self.radius))

    def scale(self) -> float:
        return 2.0 * self.radius

    def _dist_center(self, x: Point) -> float:
        return sp.distance(self.center, x)

    def contains(self, x: Point) -> Containment:
        self._check_space(x)
        d = self._dist_center(x)
        if abs(d - self.radius) <= self.band:
            return Containment.BOUNDARY
        return Containment.INSIDE if d < self.radius else Containment.OUTSIDE

    def contains_mask(self, pts: np.ndarray) -> np.ndarray:
        pts = np.atleast_2d(np.asarray(pts, dtype=float))
        if self.space is Space.EUCLIDEAN2:
            d = np.linalg.norm(pts - self.center.array, axis=1)
        else:
            if pts.shape[1] == 2:
                pts = sp.from_klein(pts)
            d = sp.hyperbolic_distance_arrays(self.center.array, pts)
        return d < self.radius

    def boundary_distance(self, x: Point) -> float:
        return abs(self._dist_center(x) - self.radius)

    def area(self) -> float:
        return sp.ball_area(self.space, self.radius)

    def extent_from(self, x: Point) -> float:
        return self._dist_center(x) + self.radius

    def critical_radii(self, x: Point) -> list[float]:
        d = self._dist_center(x)
        return [abs(d - self.radius), d + self.radius]

    def chart_bounds(self) -> tuple[np.ndarray, np.ndarray]:
        return _circle_chart_bounds(self.center, self.radius)


class Annulus(Domain):
    """Closed annulus between two concentric metric circles."""

    def __init__(self, center: Point, r_in: float, r_out: float):
        if not 0 < r_in < r_out:
            raise ArgumentError("annulus needs 0 < r_in < r_out")
        self.space = center.space
        self.center = center
        self.r_in = float(r_in)
        self.r_out = float(r_out)

    def __eq__(self, other):
        return (
            isinstance(other, Annulus)
            and other.space is self.space
            and other.center == self.center
            and (other.r_in, other.r_out) == (self.r_in, self.r_out)
        )

    def __hash__(self):
        return hash((self.space, self.center, self.r_in, self.r_out))

    def scale(self) -> float:
        return 2.0 * self.r_out

    def _dist_center(self, x: Point) -> float:
        return sp.distance(self.center, x)

    def contains(self, x: Point) -> Containment:
        self._check_space(x)
        d = self._dist_center(x)
        if abs(d - self.r_in) <= self.band or abs(d - self.r_out) <= self.band:
            return Containment.BOUNDARY
        return (
            Containment.INSIDE
            if self.r_in < d < self.r_out
            else Containment.OUTSIDE
        )

    def contains_mask(self, pts: np.ndarray) -> np.ndarray:
        pts = np.atleast_2d(np.asarray(pts, dtype=float))
        if self.space is Space.EUCLIDEAN2:
            d = np.linalg.norm(pts - self.center.array, axis=1)
        else:
            if pts.shape[1] == 2:
                pts = sp.from_klein(pts)
            d = sp.hyperbolic_distance_arrays(self.center.array, pts)
        return (d > self.r_in) & (d < self.r_out)

    def boundary_distance(self, x: Point) -> float:
        d = self._dist_center(x)
        return min(abs(d - self.r_in), abs(d - self.r_out))

    def area(self) -> float:
        return sp.ball_area(self.space, self.r_out) - sp.ball_area(self.space, self.r_in)

    def extent_from(self, x: Point) -> float:
        return self._dist_center(x) + self.r_out

    def critical_radii(self, x: Point) -> list[float]:
        d = self._dist_center(x)
        return [abs(d - self.r_in), d + self.r_in, abs(d - self.r_out), d + self.r_out]

    def chart_bounds(self) -> tuple[np.ndarray, np.ndarray]:
        return _circle_chart_bounds(self.center, self.r_out)


# -- union --------------------------------------------------------------------


class UnionDomain(Domain):
    """Finite union of domains with pairwise disjoint interiors."""

    def __init__(self, components: list[Domain]):
        if not components:
            raise ArgumentError("union needs at least one component")
        self.space = components[0].space
        for c in components:
            if c.space is not self.space:
                raise SpaceMismatchError("union components live in different spaces")
        self.components = list(components)

    def __eq__(self, other):
        return (
            isinstance(other, UnionDomain)
            and other.space is self.space
            and other.components == self.components
        )

    def __hash__(self):
        return hash((self.space, tuple(self.components)))

    def scale(self) -> float:
        return max(c.scale() for c in self.components) * max(1, len(self.components))

    def contains(self, x: Point) -> Containment:
        self._check_space(x)
        states = [c.contains(x) for c in self.components]
        if Containment.INSIDE in states:
            return Containment.INSIDE
        n_bnd = states.count(Containment.BOUNDARY)
        if n_bnd >= 2:
            # shared internal boundary of two components: interior to the union
            return Containment.INSIDE
        if n_bnd == 1:
            return Containment.BOUNDARY
        return Containment.OUTSIDE

    def contains_mask(self, pts: np.ndarray) -> np.ndarray:
        pts = np.atleast_2d(np.asarray(pts, dtype=float))
        mask = np.zeros(len(pts), dtype=bool)
        for c in self.components:
            mask |= c.contains_mask(pts)
        return mask

    def boundary_distance(self, x: Point) -> float:
        # distance to the union's boundary, skipping shared internal faces
        self._check_space(x)
        if self.contains(x) is Containment.OUTSIDE:
            return min(c.boundary_distance(x) for c in self.components)
        best = math.inf
        for c in self.components:
            for q in _boundary_candidates(c, x):
                if self._is_strictly_interior(q):
                    continue
                best = min(best, sp.distance(x, q))
        if not math.isfinite(best):
            best = min(c.boundary_distance(x) for c in self.components)
        return best

    def _is_strictly_interior(self, q: Point) -> bool:
        states = [c.contains(q) for c in self.components]
        if Containment.INSIDE in states:
            return True
        return states.count(Containment.BOUNDARY) >= 2

    def area(self) -> float:
        return sum(c.area() for c in self.components)

    def extent_from(self, x: Point) -> float:
        return max(c.extent_from(x) for c in self.components)

    def critical_radii(self, x: Point) -> list[float]:
        radii = []
        for c in self.components:
            radii.extend(c.critical_radii(x))
        return radii

    def chart_bounds(self) -> tuple[np.ndarray, np.ndarray]:
        los, his = zip(*(c.chart_bounds() for c in self.components))
        return np.min(np.array(los), axis=0), np.max(np.array(his), axis=0)


def _circle_chart_bounds(center: Point, radius: float) -> tuple[np.ndarray, np.ndarray]:
    if center.space is Space.EUCLIDEAN2:
        c = center.array
        r = np.array([radius, radius])
        return c - r, c + r
    angles = np.linspace(0.0, 2.0 * math.pi, 256, endpoint=False)
    ring = sp.to_klein(sp.circle_points(center.array, radius, angles))
    return ring.min(axis=0), ring.max(axis=0)


def _boundary_candidates(dom: Domain, x: Point) -> list[Point]:
    """Nearest-boundary candidates of a single (non-union) component."""
    if isinstance(dom, SimplePolygon):
        out = []
        verts = dom.vertices
        if dom.space is Space.EUCLIDEAN2:
            p = x.array
            n = len(verts)
            for i in range(n):
                a, b = verts[i], verts[(i + 1) % n]
                ab = b - a
                denom = float(ab @ ab)
                if denom > 0:
                    lam = float((p - a) @ ab) / denom
                    if 0.0 < lam < 1.0:
                        out.append(sp.point_from_array(dom.space, a + lam * ab))
                out.append(sp.point_from_array(dom.space, a))
        else:
            p = x.array
            for p1, p2, _normal, tangent, length in dom._edge_cache:
                a = -sp.minkowski_dot(p, p1)
                b = -sp.minkowski_dot(p, tangent)
                if abs(b) < a:
                    s_star = math.atanh(-b / a)
                    if 0.0 < s_star < length:
                        q = sp.geodesic_point_at(p1, tangent, s_star)
                        out.append(sp.point_from_array(dom.space, q))
                out.append(sp.point_from_array(dom.space, p1))
        return out
    if isinstance(dom, Disc):
        return _radial_candidates(dom.center, x, [dom.radius])
    if isinstance(dom, Annulus):
        return _radial_candidates(dom.center, x, [dom.r_in, dom.r_out])
    if isinstance(dom, UnionDomain):
        out = []
        for c in dom.components:
            out.extend(_boundary_candidates(c, x))
        return out
    raise ArgumentError(f"unsupported component type {type(dom).__name__}")


def _radial_candidates(center: Point, x: Point, radii: list[float]) -> list[Point]:
    out = []
    if center.space is Space.EUCLIDEAN2:
        v = x.array - center.array
        norm = float(np.linalg.norm(v))
        direction = v / norm if norm > 0 else np.array([1.0, 0.0])
        for r in radii:
            out.append(sp.point_from_array(center.space, center.array + r * direction))
            out.append(sp.point_from_array(center.space, center.array - r * direction))
    else:
        c = center.array
        d = float(sp.hyperbolic_distance_arrays(c, x.array))
        if d > 1e-14:
            u = sp.geodesic_unit_tangent(c, x.array)
        else:
            u, _ = sp.tangent_basis(c)
        for r in radii:
            out.append(sp.point_from_array(center.space, sp.geodesic_point_at(c, u, r)))
            out.append(sp.point_from_array(center.space, sp.geodesic_point_at(c, u, -r)))
    return out


# -- factories ----------------------------------------------------------------


def make_regular_polygon(
    n: int, circumradius: float, space: Space, center: Point | None = None
) -> SimplePolygon:
    """Regular n-gon inscribed in the circle of the given radius."""
    if n < 3:
        raise ArgumentError("regular polygon needs n >= 3")
    if circumradius <= 0:
        raise ArgumentError("circumradius must be positive")
    angles = 2.0 * math.pi * np.arange(n) / n
    if space is Space.EUCLIDEAN2:
        if center is None:
            center = sp.euclidean_point(0.0, 0.0)
        verts = center.array + circumradius * np.column_stack(
            [np.cos(angles), np.sin(angles)]
        )
        return SimplePolygon(space, verts)
    if center is None:
        center = sp.hyperboloid_point(0.0, 0.0)
    verts = sp.circle_points(center.array, circumradius, angles)
    return SimplePolygon(space, verts)


def make_dumbbell(a: float, b: float, c: float) -> Domain:
    """Two axis-aligned squares of side 2a joined by a thin bar.

    The squares span x in [b, b+2a] and [-b-2a, -b] with |y| <= a; the bar
    is [-b, b] x [-c, c].  With c = 0 the bar degenerates and the domain is
    the union of the two squares.
    """
    if a <= 0 or b <= 0:
        raise ArgumentError("dumbbell needs a > 0 and b > 0")
    if not 0 <= c < a:
        raise ArgumentError("dumbbell needs 0 <= c < a")
    space = Space.EUCLIDEAN2
    if c == 0.0:
        right = SimplePolygon(space, [(b, -a), (b + 2 * a, -a), (b + 2 * a, a), (b, a)])
        left = SimplePolygon(
            space, [(-b - 2 * a, -a), (-b, -a), (-b, a), (-b - 2 * a, a)]
        )
        return UnionDomain([left, right])
    verts = [
        (b, -a),
        (b + 2 * a, -a),
        (b + 2 * a, a),
        (b, a),
        (b, c),
        (-b, c),
        (-b, a),
        (-b - 2 * a, a),
        (-b - 2 * a, -a),
        (-b, -a),
        (-b, -c),
        (b, -c),
    ]
    return SimplePolygon(space, verts)


def make_rectangle(x0: float, x1: float, y0: float, y1: float) -> SimplePolygon:
    if not (x0 < x1 and y0 < y1):
        raise ArgumentError("rectangle needs x0 < x1 and y0 < y1")
    return SimplePolygon(Space.EUCLIDEAN2, [(x0, y0), (x1, y0), (x1, y1), (x0, y1)])


def make_star_polygon(space: Space, radii, center: Point | None = None) -> SimplePolygon:
    """Star-shaped polygon with given vertex radii at equally spaced angles."""
    radii = np.asarray(radii, dtype=float)
    if len(radii) < 3 or np.any(radii <= 0):
        raise ArgumentError("star polygon needs >= 3 positive radii")
    angles = 2.0 * math.pi * np.arange(len(radii)) / len(radii)
    if space is Space.EUCLIDEAN2:
        if center is None:
            center = sp.euclidean_point(0.0, 0.0)
        verts = center.array + np.column_stack(
            [radii * np.cos(angles), radii * np.sin(angles)]
        )
        return SimplePolygon(space, verts)
    if center is None:
        center = sp.hyperboloid_point(0.0, 0.0)
    e1, e2 = sp.tangent_basis(center.array)
    direction = np.cos(angles)[:, None] * e1 + np.sin(angles)[:, None] * e2
    verts = np.cosh(radii)[:, None] * center.array + np.sinh(radii)[:, None] * direction
    return SimplePolygon(space, verts)


def make_tube2d(polyline, radius: float, cap_segments: int = 48) -> SimplePolygon:
    """Closed offset neighborhood of an open polyline, as a dense polygon.

    The two sides are straight offsets of the segments, joined by sampled
    circular arcs at the ends and at bends.  The Hausdorff gap to the true
    tube is stored in ``approx_error`` (arc sagitta bound) and should be
    folded into downstream tolerances.
    """
    pts = np.asarray(polyline, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2 or len(pts) < 2:
        raise ArgumentError("polyline needs at least 2 planar points")
    if radius <= 0:
        raise ArgumentError("tube radius must be positive")
    segs = pts[1:] - pts[:-1]
    lengths = np.linalg.norm(segs, axis=1)
    if np.any(lengths == 0):
        raise ArgumentError("polyline has a repeated point")
    normals = np.column_stack([-segs[:, 1], segs[:, 0]]) / lengths[:, None]

    def arc(center, a0, a1, n):
        ts = np.linspace(a0, a1, n + 1)
        return center + radius * np.column_stack([np.cos(ts), np.sin(ts)])

    left: list[np.ndarray] = []
    right: list[np.ndarray] = []
    for i in range(len(segs)):
        left.append(pts[i] + radius * normals[i])
        left.append(pts[i + 1] + radius * normals[i])
        right.append(pts[i] - radius * normals[i])
        right.append(pts[i + 1] - radius * normals[i])
        if i + 1 < len(segs):
            a0 = math.atan2(normals[i][1], normals[i][0])
            a1 = math.atan2(normals[i + 1][1], normals[i + 1][0])
            turn = math.remainder(a1 - a0, 2.0 * math.pi)
            n_arc = max(2, int(abs(turn) / math.pi * cap_segments))
            if turn < 0:  # left side is the outer side of the bend
                left.extend(arc(pts[i + 1], a0, a0 + turn, n_arc)[1:-1])
            else:
                right.extend(arc(pts[i + 1], a0 - math.pi, a0 - math.pi + turn, n_arc)[1:-1])
    a_end = math.atan2(normals[-1][1], normals[-1][0])
    end_cap = arc(pts[-1], a_end, a_end - math.pi, cap_segments)[1:-1]
    a_start = math.atan2(-normals[0][1], -normals[0][0])
    start_cap = arc(pts[0], a_start, a_start - math.pi, cap_segments)[1:-1]
    boundary = np.vstack(left + list(end_cap) + list(reversed(right)) + list(start_cap))
    keep = np.ones(len(boundary), dtype=bool)
    keep[1:] = np.linalg.norm(np.diff(boundary, axis=0), axis=1) > 1e-12 * radius
    if np.linalg.norm(boundary[0] - boundary[-1]) <= 1e-12 * radius:
        keep[-1] = False
    poly = SimplePolygon(Space.EUCLIDEAN2, boundary[keep])
    poly.approx_error = radius * (1.0 - math.cos(0.5 * math.pi / cap_segments))
    return poly


# -- boundary curvature -------------------------------------------------------


def boundary_curvature(dom: Domain, z: Point, corner_threshold: float = 0.05) -> float:
    """Curvature of the boundary at z with respect to the outer normal.

    Exact on circles; discrete (circumcircle of three consecutive boundary
    vertices) on polygons, where an edge-interior point has curvature 0 and
    a genuine corner raises ``NotSmoothError``.
    """
    from ..errors import NotSmoothError

    dom._check_space(z)
    if dom.space is not Space.EUCLIDEAN2:
        raise ArgumentError("boundary curvature implemented for Euclidean domains")
    if isinstance(dom, Disc):
        return 1.0 / dom.radius
    if isinstance(dom, Annulus):
        d = sp.distance(dom.center, z)
        if abs(d - dom.r_out) <= abs(d - dom.r_in):
            return 1.0 / dom.r_out
        return -1.0 / dom.r_in
    if isinstance(dom, UnionDomain):
        comp = min(dom.components, key=lambda c: c.boundary_distance(z))
        return boundary_curvature(comp, z, corner_threshold)
    if not isinstance(dom, SimplePolygon):
        raise ArgumentError(f"unsupported domain type {type(dom).__name__}")
    verts = dom.vertices
    n = len(verts)
    p = z.array
    dv = np.linalg.norm(verts - p, axis=1)
    i = int(np.argmin(dv))
    edge_band = 0.25 * min(
        np.linalg.norm(verts[i] - verts[(i - 1) % n]),
        np.linalg.norm(verts[(i + 1) % n] - verts[i]),
    )
    if dv[i] > edge_band:
        return 0.0  # interior point of a straight edge
    a, b, c = verts[(i - 1) % n], verts[i], verts[(i + 1) % n]
    u, v = b - a, c - b
    turn = math.atan2(
        u[0] * v[1] - u[1] * v[0], u[0] * v[0] + u[1] * v[1]
    )
    if abs(turn) > corner_threshold:
        raise NotSmoothError(
            f"vertex turn angle {turn:.3f} rad exceeds smoothness threshold"
        )
    chord = float(np.linalg.norm(c - a))
    if chord == 0.0:
        return 0.0
    return 2.0 * math.sin(turn) / chord
