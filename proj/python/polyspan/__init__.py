"""Plane bounded-degree spanners among polygonal obstacles."""

from ._polyspan import (
    GeneralPositionError,
    Graph,
    ParseError,
    Scene,
    SceneError,
    build,
    build_all,
    generate,
    is_plane,
    oracle_g_infinity,
    render_svg,
    stretch_factor,
    verify,
    visible,
)

__all__ = [
    "GeneralPositionError",
    "Graph",
    "ParseError",
    "Scene",
    "SceneError",
    "build",
    "build_all",
    "generate",
    "is_plane",
    "oracle_g_infinity",
    "render_svg",
    "stretch_factor",
    "verify",
    "visible",
]
