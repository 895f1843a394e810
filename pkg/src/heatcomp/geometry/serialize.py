"""Domain specification files.

Format:

    {"space": "euclidean2" | "hyperbolic2",
     "shape": {"type": "polygon" | "disc" | "annulus" | "union"
                       | "dumbbell" | "regular_polygon" | "tube2d",
               ...parameters}}

Parametric shapes (dumbbell, regular_polygon, tube2d) are constructed into
their structural form, so parse -> serialize -> parse is the identity on
Domain objects.
"""

from __future__ import annotations

import json
from pathlib import Path

from ..errors import ConfigError
from . import space as sp
from .domain import (
    Annulus,
    Disc,
    Domain,
    SimplePolygon,
    UnionDomain,
    make_dumbbell,
    make_regular_polygon,
    make_tube2d,
)
from .space import Point, Space


def point_to_list(p: Point) -> list[float]:
    return [float(v) for v in p.coords]


def point_from_list(space: Space, coords) -> Point:
    if space is Space.EUCLIDEAN2:
        if len(coords) != 2:
            raise ConfigError("euclidean2 point needs [x, y]")
        return sp.euclidean_point(*coords)
    if len(coords) not in (2, 3):
        raise ConfigError("hyperbolic2 point needs [x, y] or [x, y, z]")
    return sp.hyperboloid_point(coords[0], coords[1])


def domain_to_dict(dom: Domain) -> dict:
    if isinstance(dom, SimplePolygon):
        shape = {"type": "polygon", "vertices": dom.vertices.tolist()}
    elif isinstance(dom, Disc):
        shape = {
            "type": "disc",
            "center": point_to_list(dom.center),
            "radius": dom.radius,
        }
    elif isinstance(dom, Annulus):
        shape = {
            "type": "annulus",
            "center": point_to_list(dom.center),
            "r_in": dom.r_in,
            "r_out": dom.r_out,
        }
    elif isinstance(dom, UnionDomain):
        shape = {
            "type": "union",
            "components": [domain_to_dict(c)["shape"] for c in dom.components],
        }
    else:
        raise ConfigError(f"cannot serialize domain type {type(dom).__name__}")
    return {"space": dom.space.value, "shape": shape}


def _shape_from_dict(space: Space, shape: dict) -> Domain:
    kind = shape.get("type")
    if kind == "polygon":
        return SimplePolygon(space, shape["vertices"])
    if kind == "disc":
        return Disc(point_from_list(space, shape["center"]), shape["radius"])
    if kind == "annulus":
        return Annulus(
            point_from_list(space, shape["center"]), shape["r_in"], shape["r_out"]
        )
    if kind == "union":
        return UnionDomain([_shape_from_dict(space, s) for s in shape["components"]])
    if kind == "dumbbell":
        if space is not Space.EUCLIDEAN2:
            raise ConfigError("dumbbell shapes are Euclidean")
        return make_dumbbell(shape["a"], shape["b"], shape["c"])
    if kind == "regular_polygon":
        center = shape.get("center")
        return make_regular_polygon(
            int(shape["n"]),
            shape["circumradius"],
            space,
            point_from_list(space, center) if center is not None else None,
        )
    if kind == "tube2d":
        if space is not Space.EUCLIDEAN2:
            raise ConfigError("tube2d shapes are Euclidean")
        return make_tube2d(
            shape["polyline"], shape["radius"], int(shape.get("cap_segments", 48))
        )
    raise ConfigError(f"unknown shape type {kind!r}")


def domain_from_dict(data: dict) -> Domain:
    try:
        space = Space(data["space"])
    except (KeyError, ValueError) as exc:
        raise ConfigError(f"bad or missing 'space' field: {exc}") from exc
    shape = data.get("shape")
    if not isinstance(shape, dict):
        raise ConfigError("missing 'shape' object")
    try:
        return _shape_from_dict(space, shape)
    except KeyError as exc:
        raise ConfigError(f"shape is missing parameter {exc}") from exc


def load_domain(path: str | Path) -> Domain:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(
            f"{path}:{exc.lineno}:{exc.colno}: invalid JSON: {exc.msg}"
        ) from exc
    return domain_from_dict(data)


def save_domain(dom: Domain, path: str | Path) -> None:
    Path(path).write_text(json.dumps(domain_to_dict(dom), indent=2) + "\n")
