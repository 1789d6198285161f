import pytest

from knot_thickness.exceptions import IneligibleEdgeError, StateLimitExceeded
from knot_thickness.states import (
    domains,
    eligible_marked_edges,
    enumerate_states,
    iter_states,
    marked_edge,
    state_count_oracle,
)


def _assert_valid(diagram, edge, state):
    faces = [face for face, _ in state.assignment]
    assert sorted(faces) == sorted(domains(diagram, edge))
    for crossing_id, (face, quadrant) in enumerate(state.assignment):
        assert diagram.face_of(crossing_id, quadrant) == face


def test_eligible_edges(trefoil, unknot):
    edges = eligible_marked_edges(trefoil)
    assert [edge.label for edge in edges] == [1, 2, 3, 4, 5, 6]
    for edge in edges:
        assert len(set(edge.excluded_faces)) == 2
        assert len(domains(trefoil, edge)) == trefoil.n
    assert [edge.label for edge in eligible_marked_edges(unknot)] == [1, 2]


def test_marked_edge_lookup(trefoil):
    assert marked_edge(trefoil, 1).excluded_faces == (0, 3)
    with pytest.raises(IneligibleEdgeError):
        marked_edge(trefoil, 9)


def test_trefoil_states(trefoil):
    edge = marked_edge(trefoil, 1)
    states = enumerate_states(trefoil, edge)
    assert len(states) == 3
    assert [state.to_json() for state in states] == [
        [[0, 1, 1], [1, 4, 0], [2, 2, 0]],
        [[0, 2, 2], [1, 1, 1], [2, 4, 2]],
        [[0, 2, 2], [1, 4, 0], [2, 1, 1]],
    ]


@pytest.mark.parametrize("fixture, expected", [("trefoil", 3), ("figure_eight", 5), ("unknot", 1)])
def test_state_counts(request, fixture, expected):
    diagram = request.getfixturevalue(fixture)
    assert state_count_oracle(diagram) == expected
    for edge in eligible_marked_edges(diagram):
        assert len(enumerate_states(diagram, edge)) == expected


def test_states_match_oracle(small_diagrams):
    for diagram in small_diagrams:
        expected = state_count_oracle(diagram)
        for edge in eligible_marked_edges(diagram):
            states = enumerate_states(diagram, edge)
            assert len(states) == expected
            assert len(set(states)) == len(states)
            for state in states:
                _assert_valid(diagram, edge, state)


def test_enumeration_is_deterministic(t34):
    edge = marked_edge(t34, 3)
    first = enumerate_states(t34, edge)
    assert first == enumerate_states(t34, edge)
    assert first == sorted(first)
    assert sorted(iter_states(t34, edge)) == first


def test_state_cap(figure_eight):
    edge = marked_edge(figure_eight, 1)
    assert len(list(iter_states(figure_eight, edge, max_states=5))) == 5
    with pytest.raises(StateLimitExceeded, match="cap of 4"):
        list(iter_states(figure_eight, edge, max_states=4))
