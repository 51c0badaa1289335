from .core import (
    GENERIC,
    LATTICE_WINDOW,
    TREE_BIREGULAR,
    TREE_REGULAR,
    Board,
    BoardError,
    Coord,
    build_generic,
    contract_boundary,
)
from .lattice import (
    HORIZONTAL,
    VERTICAL,
    DualEdgeCoord,
    axis_colour,
    build_lattice_window,
    coord_edge,
    dual_of,
    edge_of_dual,
    sup_norm,
)
from .trees import (
    TYPE_I,
    TYPE_II,
    BiRegularTreeSpec,
    RegularTreeSpec,
    TreeSpec,
    build_tree,
    parent_edge,
)
from .annulus import AnnulusGeometry, BoundAnnulusGeometry, annulus_geometry

__all__ = [
    "Board",
    "BoardError",
    "Coord",
    "DualEdgeCoord",
    "AnnulusGeometry",
    "BoundAnnulusGeometry",
    "RegularTreeSpec",
    "BiRegularTreeSpec",
    "TreeSpec",
    "GENERIC",
    "LATTICE_WINDOW",
    "TREE_REGULAR",
    "TREE_BIREGULAR",
    "TYPE_I",
    "TYPE_II",
    "HORIZONTAL",
    "VERTICAL",
    "annulus_geometry",
    "axis_colour",
    "build_generic",
    "build_lattice_window",
    "build_tree",
    "contract_boundary",
    "coord_edge",
    "dual_of",
    "edge_of_dual",
    "parent_edge",
    "sup_norm",
]
