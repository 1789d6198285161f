from collections import Counter

import pytest

from knot_thickness.diagrams import QuadrantClass, mirror
from knot_thickness.exceptions import EmptyStateSetError, GradingConventionError
from knot_thickness.invariants import (
    STANDARD_TABLES,
    DeltaSpread,
    GradingTables,
    alexander,
    delta,
    delta_contribution,
    delta_spread,
    f_value,
    format_quarters,
    grading_histogram,
    gradings,
)
from knot_thickness.states import eligible_marked_edges, enumerate_states, marked_edge


def test_tables_are_consistent():
    STANDARD_TABLES.validate()


def test_broken_table_is_rejected():
    maslov = dict(STANDARD_TABLES.maslov)
    maslov[(1, QuadrantClass.NORTH)] = 0
    with pytest.raises(GradingConventionError):
        GradingTables(maslov=maslov, alexander=STANDARD_TABLES.alexander, name="broken").validate()


def test_local_contributions(trefoil, trefoil_mirror):
    negative, positive = trefoil.crossings[0], trefoil_mirror.crossings[0]
    for crossing in (negative, positive):
        assert delta_contribution(crossing, QuadrantClass.LATERAL) == 0
    assert delta_contribution(negative, QuadrantClass.NORTH) == 2
    assert delta_contribution(positive, QuadrantClass.NORTH) == -2
    assert f_value(positive, QuadrantClass.LATERAL) == 1
    assert f_value(negative, QuadrantClass.LATERAL) == -1
    for quadrant_class in QuadrantClass:
        assert f_value(positive, quadrant_class) == -f_value(negative, quadrant_class)
        assert f_value(positive, quadrant_class) in (1, -1)


def test_trefoil_gradings(trefoil, trefoil_mirror):
    for edge in eligible_marked_edges(trefoil):
        assert {delta(state, trefoil) for state in enumerate_states(trefoil, edge)} == {4}
    edge = marked_edge(trefoil_mirror, 1)
    states = enumerate_states(trefoil_mirror, edge)
    assert {delta(state, trefoil_mirror) for state in states} == {-4}
    assert sorted(alexander(state, trefoil_mirror) for state in states) == [-4, 0, 4]


def test_maslov_minus_alexander(small_diagrams):
    for diagram in small_diagrams:
        edge = eligible_marked_edges(diagram)[0]
        for state in enumerate_states(diagram, edge):
            vector = gradings(state, diagram)
            assert vector.maslov - vector.alexander == vector.delta
            assert vector.delta % 4 == 0


def test_gradings_json(trefoil):
    state = enumerate_states(trefoil, marked_edge(trefoil, 1))[0]
    assert gradings(state, trefoil).to_json() == {
        "maslov": "0",
        "alexander": "-1",
        "delta": "1",
        "quarters": [0, -4, 4],
    }
    assert format_quarters(-3) == "-3/4"
    assert format_quarters(2) == "1/2"


def test_mirror_negates_deltas(small_diagrams):
    for diagram in small_diagrams:
        image = mirror(diagram)
        before = Counter(delta(x, diagram) for x in enumerate_states(diagram, marked_edge(diagram, 1)))
        after = Counter(delta(x, image) for x in enumerate_states(image, marked_edge(image, 1)))
        assert after == Counter({-value: count for value, count in before.items()})


def test_alternating_spread_is_zero(trefoil, trefoil_mirror, figure_eight, unknot):
    for diagram in (trefoil, trefoil_mirror, figure_eight, unknot):
        for edge in eligible_marked_edges(diagram):
            assert delta_spread(diagram, edge) == 0


def test_flipped_trefoil_spread(trefoil_flipped):
    edge = marked_edge(trefoil_flipped, 1)
    assert delta_spread(trefoil_flipped, edge) == 1
    assert grading_histogram(trefoil_flipped, edge) == {"0": 2, "1": 1}


def test_figure_eight_histogram(figure_eight):
    assert grading_histogram(figure_eight, marked_edge(figure_eight, 1)) == {"0": 5}


def test_delta_spread_accumulator():
    spread = DeltaSpread()
    with pytest.raises(EmptyStateSetError):
        spread.compute()
    for value in (4, -4, 0, 4):
        spread.update(value)
    assert spread.compute() == 2
    other = DeltaSpread()
    other.update(8)
    merged = spread.merge(other)
    assert merged.compute() == 3
    assert merged.total == 5
