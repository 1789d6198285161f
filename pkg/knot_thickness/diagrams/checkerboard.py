from dataclasses import dataclass
from typing import Dict, Optional

import networkx as nx
import numpy as np
import sympy
from networkx.algorithms import bipartite

from ..exceptions import CheckerboardError
from .diagram import Diagram


@dataclass(frozen=True)
class CheckerboardGraph:
    """Graph on the faces of one color class, one edge (keyed by crossing id) per crossing."""

    color: int
    graph: nx.MultiGraph

    @property
    def vertices(self):
        return sorted(self.graph.nodes)

    @property
    def edge_count(self) -> int:
        return self.graph.number_of_edges()


def face_coloring(diagram: Diagram) -> Dict[int, int]:
    """Proper 2-coloring of the faces; face 0 gets color 0."""
    adjacency = nx.Graph()
    adjacency.add_nodes_from(face.id for face in diagram.faces)
    for edge in diagram.edges:
        right, left = diagram.edge_faces(edge.label)
        if right == left:
            raise CheckerboardError(f"Edge {edge.label} has face {right} on both sides")
        adjacency.add_edge(right, left)
    if not nx.is_bipartite(adjacency):
        raise CheckerboardError("Faces of the diagram cannot be 2-colored")
    coloring = bipartite.color(adjacency)
    if coloring[0] == 1:
        coloring = {face: 1 - color for face, color in coloring.items()}

    for crossing in diagram.crossings:
        colors = [coloring[diagram.face_of(crossing.id, quadrant)] for quadrant in range(4)]
        if colors[0] != colors[2] or colors[1] != colors[3] or colors[0] == colors[1]:
            raise CheckerboardError(f"Corners of crossing {crossing.id} are not colored alternately")
    return coloring


def checkerboard_graph(diagram: Diagram, color: int = 0) -> CheckerboardGraph:
    """Graph on the faces of one color, one edge per crossing.

    Each edge carries a `goeritz` weight: +1 when the faces of `color` sit
    counterclockwise from the under-strand to the over-strand (quadrants 0
    and 2), -1 otherwise.
    """
    coloring = face_coloring(diagram)
    graph = nx.MultiGraph()
    graph.add_nodes_from(sorted(face for face, face_color in coloring.items() if face_color == color))
    for crossing in diagram.crossings:
        first = 0 if coloring[diagram.face_of(crossing.id, 0)] == color else 1
        graph.add_edge(
            diagram.face_of(crossing.id, first),
            diagram.face_of(crossing.id, first + 2),
            key=crossing.id,
            goeritz=1 if first == 0 else -1,
        )
    return CheckerboardGraph(color=color, graph=graph)


def laplacian(graph: nx.MultiGraph, weight: Optional[str] = None) -> np.ndarray:
    """Graph Laplacian with parallel edges counted and loops dropped.

    With `weight`, each edge counts with that attribute instead of 1.
    """
    index = {node: i for i, node in enumerate(sorted(graph.nodes))}
    matrix = np.zeros((len(index), len(index)), dtype=np.int64)
    edges = graph.edges(data=weight, default=1) if weight else ((u, v, 1) for u, v in graph.edges())
    for u, v, w in edges:
        if u == v:
            continue
        i, j = index[u], index[v]
        matrix[i, i] += w
        matrix[j, j] += w
        matrix[i, j] -= w
        matrix[j, i] -= w
    return matrix


def _reduced_determinant(matrix: np.ndarray) -> int:
    if matrix.shape[0] <= 1:
        return 1
    minor = sympy.Matrix(matrix[1:, 1:].tolist())
    return int(minor.det(method="bareiss"))


def spanning_tree_count(graph: nx.MultiGraph) -> int:
    """Matrix-tree theorem with exact integer arithmetic."""
    return _reduced_determinant(laplacian(graph))


def goeritz_determinant(diagram: Diagram) -> int:
    """Knot determinant as |det| of a reduced Goeritz matrix, independent of the orientation."""
    return abs(_reduced_determinant(laplacian(checkerboard_graph(diagram).graph, weight="goeritz")))
