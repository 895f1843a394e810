"""Domains and geometric functionals on the two model planes."""

from .domain import (
    Annulus,
    Containment,
    Disc,
    Domain,
    SimplePolygon,
    UnionDomain,
    boundary_curvature,
    make_dumbbell,
    make_rectangle,
    make_regular_polygon,
    make_star_polygon,
    make_tube2d,
)
from .interior import InteriorProfile, SearchGrid, exterior_gap, inradius_and_maximal_points
from .serialize import domain_from_dict, domain_to_dict, load_domain, save_domain
from .space import (
    EuclideanIsometry,
    HyperbolicIsometry,
    Point,
    Space,
    ball_area,
    circumference,
    distance,
    euclidean_point,
    hyperboloid_point,
    point_from_array,
    random_isometry,
)
from .spherical import ball_volume, spherical_area, spherical_area_sampled

__all__ = [
    "Annulus",
    "Containment",
    "Disc",
    "Domain",
    "EuclideanIsometry",
    "HyperbolicIsometry",
    "InteriorProfile",
    "Point",
    "SearchGrid",
    "SimplePolygon",
    "Space",
    "UnionDomain",
    "ball_area",
    "ball_volume",
    "boundary_curvature",
    "circumference",
    "distance",
    "domain_from_dict",
    "domain_to_dict",
    "euclidean_point",
    "exterior_gap",
    "hyperboloid_point",
    "inradius_and_maximal_points",
    "load_domain",
    "make_dumbbell",
    "make_rectangle",
    "make_regular_polygon",
    "make_star_polygon",
    "make_tube2d",
    "point_from_array",
    "random_isometry",
    "save_domain",
    "spherical_area",
    "spherical_area_sampled",
]
