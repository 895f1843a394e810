"""Inradius and maximally interior points.

The distance from the complement is maximized by multi-start derivative-free
ascent: a deterministic chart grid seeds Nelder-Mead refinements, and every
refined point within tolerance of the best value is kept.  When the set of
maximizers is a continuum (an annulus has a whole circle of them) the result
is a sampled ring of points rather than a single maximizer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.optimize import minimize

from ..errors import DegenerateDomainError
from . import space as sp
from .domain import Domain
from .space import Point, Space


@dataclass
class SearchGrid:
    """Grid-and-refine configuration for the interior search."""

    grid_n: int = 48
    refine_starts: int = 24
    xatol: float = 1e-10
    fatol: float = 1e-12
    merge_scale: float = 1e-6  # cluster radius, relative to the domain scale


@dataclass
class InteriorProfile:
    """Distance-from-complement profile of a domain."""

    R_of: Callable[[Point], float]
    inradius: float
    maximal_points: list[Point] = field(default_factory=list)


def _chart_to_point(space: Space, xy: np.ndarray) -> Point | None:
    if space is Space.EUCLIDEAN2:
        return sp.euclidean_point(xy[0], xy[1])
    if xy[0] * xy[0] + xy[1] * xy[1] >= 1.0 - 1e-12:
        return None
    return sp.point_from_array(space, sp.from_klein(xy))


def inradius_and_maximal_points(
    dom: Domain, search: SearchGrid | None = None
) -> InteriorProfile:
    """Inradius and the (sampled) set of maximally interior points."""
    search = search or SearchGrid()
    lo, hi = dom.chart_bounds()
    n = search.grid_n
    gx = np.linspace(lo[0], hi[0], n)
    gy = np.linspace(lo[1], hi[1], n)
    xx, yy = np.meshgrid(gx, gy)
    seeds = np.column_stack([xx.ravel(), yy.ravel()])

    def r_of_chart(xy: np.ndarray) -> float:
        p = _chart_to_point(dom.space, xy)
        if p is None:
            return 0.0
        return dom.distance_from_complement(p)

    values = np.array([r_of_chart(s) for s in seeds])
    if not np.any(values > 0.0):
        raise DegenerateDomainError("no grid seed lies in the interior")

    order = np.argsort(values)[::-1]
    top = order[: search.refine_starts]
    best_val = 0.0
    refined: list[tuple[np.ndarray, float]] = []
    for idx in top:
        if values[idx] <= 0.0:
            break
        res = minimize(
            lambda xy: -r_of_chart(xy),
            seeds[idx],
            method="Nelder-Mead",
            options={
                "xatol": search.xatol,
                "fatol": search.fatol,
                "maxiter": 400,
            },
        )
        val = -float(res.fun)
        refined.append((np.asarray(res.x), val))
        best_val = max(best_val, val)

    merge_r = search.merge_scale * dom.scale()
    tol_val = max(1e-9, 1e-9 * dom.scale())
    points: list[Point] = []
    for xy, val in sorted(refined, key=lambda t: -t[1]):
        if val < best_val - tol_val:
            continue
        p = _chart_to_point(dom.space, xy)
        if p is None:
            continue
        if all(sp.distance(p, q) > merge_r for q in points):
            points.append(p)

    def r_of(p: Point) -> float:
        return dom.distance_from_complement(p)

    return InteriorProfile(R_of=r_of, inradius=best_val, maximal_points=points)


def exterior_gap(dom: Domain, x: Point) -> float:
    """Largest radius of a ball about x that misses the domain entirely."""
    return dom.distance_to_set(x)
