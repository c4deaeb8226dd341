"""Star colorings of torus grids C_m x C_n."""

from ._core import (
    ConstructionError,
    Graph,
    ParseError,
    RangeError,
    cartesian_product,
    construct,
    exists_star_coloring,
    find_tile,
    make_cycle,
    make_path,
    make_torus,
    multi_decompose,
    parse_dimacs,
    render_svg,
    star_chromatic_number,
    sylvester_decompose,
    tile_catalog,
    verify_star,
)

__all__ = [
    "ConstructionError",
    "Graph",
    "ParseError",
    "RangeError",
    "cartesian_product",
    "construct",
    "exists_star_coloring",
    "find_tile",
    "make_cycle",
    "make_path",
    "make_torus",
    "multi_decompose",
    "parse_dimacs",
    "render_svg",
    "star_chromatic_number",
    "sylvester_decompose",
    "tile_catalog",
    "verify_star",
]
