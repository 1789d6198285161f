from .checkerboard import (
    CheckerboardGraph,
    checkerboard_graph,
    face_coloring,
    goeritz_determinant,
    laplacian,
    spanning_tree_count,
)
from .codes import braid_closure, parse_braid, parse_gauss, parse_pd, to_gauss_string
from .diagram import (
    Crossing,
    Diagram,
    Edge,
    Face,
    Pass,
    QuadrantClass,
    bad_domain_count,
    bad_edges,
    flip_crossings,
    is_alternating,
    mirror,
    writhe,
)
