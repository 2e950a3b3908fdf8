"""Planar convex bodies by support function, mixed volumes and entropy inequalities."""

from ._core import (
    Body,
    GeometryError,
    InequalityReport,
    check,
    cone_volume,
    curvature_entropy,
    dilation_position,
    disk,
    ellipse,
    from_trig,
    fuzz,
    green_osher,
    homothety_detect,
    inradius,
    is_dilation_position,
    load_body,
    log_minkowski_functional,
    minkowski_sum,
    mixed_volume,
    outradius,
    random_body,
    registered_checks,
    save_body,
    scale,
    steiner_roots,
    surface_area,
    translate,
    volume,
)

__all__ = [
    "Body",
    "GeometryError",
    "InequalityReport",
    "check",
    "cone_volume",
    "curvature_entropy",
    "dilation_position",
    "disk",
    "ellipse",
    "from_trig",
    "fuzz",
    "green_osher",
    "homothety_detect",
    "inradius",
    "is_dilation_position",
    "load_body",
    "log_minkowski_functional",
    "minkowski_sum",
    "mixed_volume",
    "outradius",
    "random_body",
    "registered_checks",
    "save_body",
    "scale",
    "steiner_roots",
    "surface_area",
    "translate",
    "volume",
]
