"""Spherical area functions A(r) = length of the circle S_r(x) inside a domain.

Both spaces use exact intersection angles: the circle is cut into arcs at
every candidate crossing angle (circle/edge and circle/circle in the
Euclidean plane; circle/geodesic and circle/circle via hyperbolic law of
cosines in the hyperboloid model) and each arc is classified by testing its
midpoint, so tangencies and corner grazes resolve themselves.  A dense
angular sampling path with bisection-refined crossings is kept as an
independent cross-check (`spherical_area_sampled`); its resolution limit is
the base sampling step 2*pi/2^14.
"""

from __future__ import annotations

import math

import numpy as np

from ..errors import ArgumentError
from . import space as sp
from .domain import Annulus, Containment, Disc, Domain, SimplePolygon, UnionDomain
from .space import Point, Space

TWO_PI = 2.0 * math.pi
HYP_BASE_SAMPLES = 2 ** 14
ANGLE_TOL = 1e-12


def spherical_area(dom: Domain, center: Point, r: float) -> float:
    """Measure of S_r(center) inside the closed domain."""
    dom._check_space(center)
    if r <= 0:
        raise ArgumentError("spherical_area needs r > 0")
    gap_in = dom.distance_from_complement(center)
    if r < gap_in:
        return sp.circumference(dom.space, r)
    gap_out = dom.distance_to_set(center)
    if gap_out > 0.0 and r < gap_out:
        return 0.0
    if r > dom.extent_from(center):
        return 0.0
    if dom.space is Space.EUCLIDEAN2:
        return r * _inside_angle_measure_euclidean(dom, center.array, r)
    return math.sinh(r) * _inside_angle_measure_hyperbolic(dom, center.array, r)


def spherical_area_sampled(
    dom: Domain, center: Point, r: float, refine: bool = True
) -> float:
    """Angular-sampling estimate of A(r); independent cross-check path.

    Uses 2^14 base angles; with `refine` every inside/outside flip is pinned
    by bisection, otherwise the raw sample fraction is returned.
    """
    dom._check_space(center)
    if r <= 0:
        raise ArgumentError("spherical_area needs r > 0")
    if dom.space is Space.EUCLIDEAN2:
        c = center.array

        def mask_at(cos_a, sin_a):
            return dom.contains_mask(c + r * np.column_stack([cos_a, sin_a]))

    else:
        e1, e2 = sp.tangent_basis(center.array)
        apex = math.cosh(r) * center.array
        u = math.sinh(r) * e1
        v = math.sinh(r) * e2

        def mask_at(cos_a, sin_a):
            return dom.contains_mask(apex + cos_a[:, None] * u + sin_a[:, None] * v)

    measure = _sampled_measure(mask_at, refine)
    return sp.circumference(dom.space, r) / TWO_PI * measure


def ball_volume(dom: Domain, center: Point, r: float, tol: float = 1e-10) -> float:
    """vol(B_r(center) ∩ domain) by radial (coarea) integration of A."""
    from scipy.integrate import quad

    dom._check_space(center)
    if r <= 0:
        return 0.0
    breaks = sorted({b for b in dom.critical_radii(center) if 0.0 < b < r})
    val, _ = quad(
        lambda s: spherical_area(dom, center, s),
        0.0,
        r,
        points=breaks or None,
        epsabs=tol,
        epsrel=1e-12,
        limit=400,
    )
    return float(val)


# -- Euclidean exact path -----------------------------------------------------


def _inside_angle_measure_euclidean(dom: Domain, c: np.ndarray, r: float) -> float:
    angles = _candidate_angles(dom, c, r)
    return _classified_measure(
        angles,
        lambda mids: dom.contains_mask(
            c + r * np.column_stack([np.cos(mids), np.sin(mids)])
        )
        | _on_boundary_mask(dom, c, r, mids),
    )


def _on_boundary_mask(dom: Domain, c: np.ndarray, r: float, mids: np.ndarray) -> np.ndarray:
    # Closed domains contain their boundary: arcs running along a boundary
    # circle (e.g. the domain circle of a disc) count as inside.
    out = np.zeros(len(mids), dtype=bool)
    band = dom.band
    for circ_c, circ_r in _boundary_circles(dom):
        d = np.linalg.norm(c + r * np.column_stack([np.cos(mids), np.sin(mids)]) - circ_c, axis=1)
        out |= np.abs(d - circ_r) <= band
    return out


def _boundary_circles(dom: Domain) -> list[tuple[np.ndarray, float]]:
    if isinstance(dom, Disc):
        return [(dom.center.array, dom.radius)]
    if isinstance(dom, Annulus):
        return [(dom.center.array, dom.r_in), (dom.center.array, dom.r_out)]
    if isinstance(dom, UnionDomain):
        out = []
        for comp in dom.components:
            out.extend(_boundary_circles(comp))
        return out
    return []


def _candidate_angles(dom: Domain, c: np.ndarray, r: float) -> np.ndarray:
    cands: list[float] = []
    if isinstance(dom, SimplePolygon):
        cands.extend(_circle_polygon_angles(c, r, dom.vertices))
    elif isinstance(dom, Disc):
        cands.extend(_circle_circle_angles(c, r, dom.center.array, dom.radius))
    elif isinstance(dom, Annulus):
        cands.extend(_circle_circle_angles(c, r, dom.center.array, dom.r_in))
        cands.extend(_circle_circle_angles(c, r, dom.center.array, dom.r_out))
    elif isinstance(dom, UnionDomain):
        for comp in dom.components:
            cands.extend(_candidate_angles(comp, c, r).tolist())
    else:
        raise ArgumentError(f"unsupported domain type {type(dom).__name__}")
    cands = [a % TWO_PI for a in cands]
    cands.append(0.0)
    arr = np.sort(np.asarray(cands, dtype=float))
    keep = np.empty(len(arr), dtype=bool)
    keep[0] = True
    keep[1:] = np.diff(arr) > ANGLE_TOL
    return arr[keep]


def _circle_polygon_angles(c: np.ndarray, r: float, verts: np.ndarray) -> list[float]:
    """Angles on S_r(c) where any polygon edge crosses the circle."""
    a = verts
    b = np.roll(verts, -1, axis=0)
    ab = b - a
    qa = np.sum(ab * ab, axis=1)
    ac = a - c
    qb = 2.0 * np.sum(ac * ab, axis=1)
    qc = np.sum(ac * ac, axis=1) - r * r
    disc = qb * qb - 4.0 * qa * qc
    ok = (disc >= 0.0) & (qa > 0.0)
    if not np.any(ok):
        return []
    sq = np.sqrt(disc[ok])
    lam = np.concatenate(
        [(-qb[ok] - sq) / (2.0 * qa[ok]), (-qb[ok] + sq) / (2.0 * qa[ok])]
    )
    pts = np.concatenate([a[ok], a[ok]]) + lam[:, None] * np.concatenate([ab[ok], ab[ok]])
    valid = (lam >= -1e-12) & (lam <= 1.0 + 1e-12)
    pts = pts[valid]
    return np.arctan2(pts[:, 1] - c[1], pts[:, 0] - c[0]).tolist()


def _circle_circle_angles(c: np.ndarray, r: float, c2: np.ndarray, r2: float) -> list[float]:
    d = float(np.linalg.norm(c2 - c))
    if d == 0.0:
        return []
    cosv = (d * d + r * r - r2 * r2) / (2.0 * d * r)
    if abs(cosv) > 1.0:
        return []
    half = math.acos(cosv)
    base = math.atan2(c2[1] - c[1], c2[0] - c[0])
    return [base - half, base + half]


def _classified_measure(angles: np.ndarray, inside_of_mids) -> float:
    """Total length of the inside angular windows cut at `angles`."""
    widths = np.diff(np.append(angles, angles[0] + TWO_PI))
    mids = angles + 0.5 * widths
    inside = inside_of_mids(np.mod(mids, TWO_PI))
    return float(np.sum(widths[inside]))


# -- hyperbolic exact path ----------------------------------------------------


def _inside_angle_measure_hyperbolic(dom: Domain, c: np.ndarray, r: float) -> float:
    e1, e2 = sp.tangent_basis(c)
    angles = _candidate_angles_hyperbolic(dom, c, r, e1, e2)
    apex = math.cosh(r) * c
    u = math.sinh(r) * e1
    v = math.sinh(r) * e2

    def inside_of_mids(mids: np.ndarray) -> np.ndarray:
        pts = apex + np.cos(mids)[:, None] * u + np.sin(mids)[:, None] * v
        return dom.contains_mask(pts) | _on_circle_boundary_hyp(dom, pts)

    return _classified_measure(angles, inside_of_mids)


def _on_circle_boundary_hyp(dom: Domain, pts: np.ndarray) -> np.ndarray:
    out = np.zeros(len(pts), dtype=bool)
    band = dom.band
    for circ_c, circ_r in _boundary_circles_hyp(dom):
        d = sp.hyperbolic_distance_arrays(circ_c, pts)
        out |= np.abs(d - circ_r) <= band
    return out


def _boundary_circles_hyp(dom: Domain) -> list[tuple[np.ndarray, float]]:
    if isinstance(dom, Disc):
        return [(dom.center.array, dom.radius)]
    if isinstance(dom, Annulus):
        return [(dom.center.array, dom.r_in), (dom.center.array, dom.r_out)]
    if isinstance(dom, UnionDomain):
        out = []
        for comp in dom.components:
            out.extend(_boundary_circles_hyp(comp))
        return out
    return []


def _candidate_angles_hyperbolic(
    dom: Domain, c: np.ndarray, r: float, e1: np.ndarray, e2: np.ndarray
) -> np.ndarray:
    cands = _collect_hyp_candidates(dom, c, r, e1, e2)
    cands = [a % TWO_PI for a in cands]
    cands.append(0.0)
    arr = np.sort(np.asarray(cands, dtype=float))
    keep = np.empty(len(arr), dtype=bool)
    keep[0] = True
    keep[1:] = np.diff(arr) > ANGLE_TOL
    return arr[keep]


def _collect_hyp_candidates(dom, c, r, e1, e2) -> list[float]:
    if isinstance(dom, SimplePolygon):
        return _circle_geodesic_polygon_angles(c, r, dom, e1, e2)
    if isinstance(dom, Disc):
        return _circle_circle_angles_hyp(c, r, dom.center.array, dom.radius, e1, e2)
    if isinstance(dom, Annulus):
        return _circle_circle_angles_hyp(
            c, r, dom.center.array, dom.r_in, e1, e2
        ) + _circle_circle_angles_hyp(c, r, dom.center.array, dom.r_out, e1, e2)
    if isinstance(dom, UnionDomain):
        out: list[float] = []
        for comp in dom.components:
            out.extend(_collect_hyp_candidates(comp, c, r, e1, e2))
        return out
    raise ArgumentError(f"unsupported domain type {type(dom).__name__}")


def _angle_of_points(c: np.ndarray, pts: np.ndarray, e1, e2) -> np.ndarray:
    # tangent direction at c towards each point, in the (e1, e2) frame
    inner = sp.minkowski_dot(pts, c)
    tangents = pts + inner[:, None] * c
    return np.arctan2(sp.minkowski_dot(tangents, e2), sp.minkowski_dot(tangents, e1))


def _circle_geodesic_polygon_angles(c, r, poly: SimplePolygon, e1, e2) -> list[float]:
    """Crossing angles of S_r(c) with the geodesic edges of a polygon.

    On the edge from p1 with unit tangent u, points at arclength s satisfy
    -<gamma(s), c> = a cosh s + b sinh s with a = -<p1,c>, b = -<u,c>; the
    circle condition a cosh s + b sinh s = cosh r is a quadratic in e^s.
    """
    cosh_r = math.cosh(r)
    out: list[float] = []
    pts: list[np.ndarray] = []
    for p1, _p2, _normal, tangent, length in poly._edge_cache:
        a = -sp.minkowski_dot(p1, c)
        b = -sp.minkowski_dot(tangent, c)
        qa = a + b
        qb = -2.0 * cosh_r
        qc = a - b
        roots: list[float] = []
        if abs(qa) < 1e-300:
            if qb != 0.0:
                roots.append(-qc / qb)
        else:
            disc = qb * qb - 4.0 * qa * qc
            if disc >= 0.0:
                sq = math.sqrt(disc)
                roots.extend([(-qb - sq) / (2 * qa), (-qb + sq) / (2 * qa)])
        for X in roots:
            if X <= 0.0:
                continue
            s = math.log(X)
            if -1e-12 <= s <= length + 1e-12:
                pts.append(math.cosh(s) * p1 + math.sinh(s) * tangent)
    if not pts:
        return out
    return _angle_of_points(c, np.asarray(pts), e1, e2).tolist()


def _circle_circle_angles_hyp(c, r, c2, r2: float, e1, e2) -> list[float]:
    """Hyperbolic law of cosines: crossing angles of S_r(c) with S_r2(c2)."""
    d = float(sp.hyperbolic_distance_arrays(c, c2))
    if d <= 1e-15:
        return []
    cosv = (math.cosh(d) * math.cosh(r) - math.cosh(r2)) / (
        math.sinh(d) * math.sinh(r)
    )
    if abs(cosv) > 1.0:
        return []
    half = math.acos(cosv)
    base = float(_angle_of_points(c, np.asarray([c2]), e1, e2)[0])
    return [base - half, base + half]


# -- sampled cross-check path ---------------------------------------------------

_BASE_ANGLES = (np.arange(HYP_BASE_SAMPLES) + 0.5) * (TWO_PI / HYP_BASE_SAMPLES)
_BASE_COS = np.cos(_BASE_ANGLES)
_BASE_SIN = np.sin(_BASE_ANGLES)


def _sampled_measure(mask_at, refine: bool) -> float:
    angles = _BASE_ANGLES
    inside = mask_at(_BASE_COS, _BASE_SIN)
    if inside.all():
        return TWO_PI
    if not inside.any():
        return 0.0
    if not refine:
        return TWO_PI * float(np.mean(inside))
    flips = np.nonzero(inside != np.roll(inside, -1))[0]
    lo = angles[flips]
    hi = lo + TWO_PI / HYP_BASE_SAMPLES
    lo_inside = inside[flips]
    for _ in range(30):
        mid = 0.5 * (lo + hi)
        m_inside = mask_at(np.cos(mid), np.sin(mid))
        go_right = m_inside == lo_inside
        lo = np.where(go_right, mid, lo)
        hi = np.where(go_right, hi, mid)
    crossings = np.sort(0.5 * (lo + hi))
    # measure of the inside set: walk the sorted crossings once around
    total = 0.0
    prev = angles[0]
    state = bool(inside[0])
    for a in crossings:
        if state:
            total += a - prev
        prev = a
        state = not state
    if state:
        total += angles[0] + TWO_PI - prev
    return float(total)
