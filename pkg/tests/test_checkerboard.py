import networkx as nx
import pytest

from knot_thickness.diagrams import checkerboard_graph, face_coloring, goeritz_determinant, spanning_tree_count
from knot_thickness.diagrams.checkerboard import laplacian


def test_coloring_is_proper(small_diagrams):
    for diagram in small_diagrams:
        coloring = face_coloring(diagram)
        assert coloring[0] == 0
        for edge in diagram.edges:
            right, left = diagram.edge_faces(edge.label)
            assert coloring[right] != coloring[left]


def test_trefoil_classes(trefoil):
    graphs = sorted((checkerboard_graph(trefoil, color) for color in (0, 1)), key=lambda g: len(g.vertices))
    two, three = graphs
    assert len(two.vertices) == 2 and two.edge_count == 3
    assert len(three.vertices) == 3 and three.edge_count == 3
    assert nx.is_connected(nx.Graph(three.graph))


def test_one_edge_per_crossing(small_diagrams):
    for diagram in small_diagrams:
        for color in (0, 1):
            graph = checkerboard_graph(diagram, color)
            assert graph.edge_count == diagram.n
            assert sorted(key for _, _, key in graph.graph.edges(keys=True)) == list(range(diagram.n))


def test_unknot_classes(unknot):
    shapes = {
        (len(graph.vertices), nx.number_of_selfloops(graph.graph))
        for graph in (checkerboard_graph(unknot, color) for color in (0, 1))
    }
    assert shapes == {(2, 0), (1, 1)}


@pytest.mark.parametrize(
    "edges, expected",
    [
        ([(0, 1), (0, 1), (0, 1)], 3),
        ([(0, 1), (1, 2), (2, 0)], 3),
        ([(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)], 16),
        ([(0, 0)], 1),
    ],
)
def test_spanning_tree_count(edges, expected):
    graph = nx.MultiGraph()
    graph.add_edges_from(edges)
    assert spanning_tree_count(graph) == expected


def test_laplacian_drops_loops():
    graph = nx.MultiGraph()
    graph.add_edges_from([(0, 0), (0, 1), (0, 1)])
    assert laplacian(graph).tolist() == [[2, -2], [-2, 2]]


def test_classes_agree(small_diagrams):
    for diagram in small_diagrams:
        counts = {spanning_tree_count(checkerboard_graph(diagram, color).graph) for color in (0, 1)}
        assert len(counts) == 1


def test_goeritz_determinant(unknot, trefoil, trefoil_mirror, trefoil_flipped, figure_eight, t34):
    assert goeritz_determinant(unknot) == 1
    assert goeritz_determinant(trefoil) == goeritz_determinant(trefoil_mirror) == 3
    assert goeritz_determinant(figure_eight) == 5
    # Not alternating: the spanning-tree count overshoots.
    assert goeritz_determinant(trefoil_flipped) == 1
    assert spanning_tree_count(checkerboard_graph(trefoil_flipped).graph) == 3
    assert goeritz_determinant(t34) == 3
