"""Two independent routes to the Alexander polynomial.

`state_sum_euler` folds the Kauffman states with their Maslov and Alexander
gradings; `fox_alexander` takes a minor of the Alexander matrix of the
Wirtinger presentation. They must agree after normalization.
"""
import logging
from typing import Dict, List, Optional

import sympy
from sympy.polys.matrices import DomainMatrix

from ..diagrams import Diagram
from ..exceptions import NonIntegerGradingError, SingularMinorError
from ..states import MarkedEdge, iter_states
from .gradings import QUARTER, STANDARD_TABLES, GradingTables, alexander, format_quarters, maslov
from .laurent import T, LaurentPolynomial


logger = logging.getLogger(__name__)


def state_sum_euler(
    diagram: Diagram,
    edge: MarkedEdge,
    tables: GradingTables = STANDARD_TABLES,
    max_states: Optional[int] = None,
) -> LaurentPolynomial:
    """Σ (-1)^M(x) t^A(x) over the Kauffman states, normalized.

    Raises:
        NonIntegerGradingError: Some state has a fractional Maslov or
            Alexander grading.
    """
    totals: Dict[int, int] = {}
    for state in iter_states(diagram, edge, max_states=max_states):
        m = maslov(state, diagram, tables)
        a = alexander(state, diagram, tables)
        if m % QUARTER or a % QUARTER:
            raise NonIntegerGradingError(
                f"State {state.to_json()} has gradings M = {format_quarters(m)}, A = {format_quarters(a)}"
            )
        sign = -1 if (m // QUARTER) % 2 else 1
        totals[a // QUARTER] = totals.get(a // QUARTER, 0) + sign
    return LaurentPolynomial(totals).normalized()


def wirtinger_arcs(diagram: Diagram) -> Dict[int, int]:
    """Arc index of every edge label; an arc ends wherever the knot passes under."""
    arc_of: Dict[int, int] = {}
    arc = 0
    for edge in diagram.edges:
        arc_of[edge.label] = arc
        if edge.head_slot == 0:
            arc += 1
    last = diagram.edges[-1]
    if last.head_slot != 0:
        # The final stretch continues into the arc holding edge 1.
        for label, index in arc_of.items():
            if index == arc:
                arc_of[label] = 0
    return arc_of


def alexander_matrix(diagram: Diagram) -> sympy.Matrix:
    """One row per crossing, one column per arc, entries in Z[t]."""
    arc_of = wirtinger_arcs(diagram)
    rows: List[List[sympy.Expr]] = []
    for crossing in diagram.crossings:
        row = [sympy.Integer(0)] * diagram.n
        over = arc_of[crossing.slots[1]]
        under_in = arc_of[crossing.slots[0]]
        under_out = arc_of[crossing.slots[2]]
        if crossing.sign > 0:
            row[over] += 1 - T
            row[under_in] += T
            row[under_out] += -1
        else:
            row[over] += T - 1
            row[under_in] += 1
            row[under_out] += -T
        rows.append(row)
    return sympy.Matrix(rows)


def fox_alexander(diagram: Diagram, label: int = 1) -> LaurentPolynomial:
    """Alexander polynomial from the Fox calculus, normalized.

    The deleted row is the crossing the edge `label` runs into and the deleted
    column is the arc carrying that edge.

    Raises:
        SingularMinorError: The minor vanishes.
    """
    if diagram.n == 1:
        return LaurentPolynomial({0: 1})
    matrix = alexander_matrix(diagram)
    row = diagram.edge(label).head_crossing
    column = wirtinger_arcs(diagram)[label]
    minor = matrix.copy()
    minor.row_del(row)
    minor.col_del(column)
    domain_matrix = DomainMatrix.from_Matrix(minor)
    determinant = domain_matrix.domain.to_sympy(domain_matrix.det())
    logger.debug("Alexander minor of %s: %dx%d", diagram.name, minor.rows, minor.cols)
    if sympy.expand(determinant) == 0:
        raise SingularMinorError(f"Alexander matrix minor of {diagram.name or diagram.to_pd_string()} is singular")
    return LaurentPolynomial.from_sympy(determinant).normalized()


def determinant(diagram: Diagram) -> int:
    return abs(int(fox_alexander(diagram).evaluate(-1)))
