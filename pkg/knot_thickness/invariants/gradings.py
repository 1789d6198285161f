"""Maslov, Alexander and δ gradings of Kauffman states.

Every grading is kept as an integer number of quarters. A state's grading is
the sum of the local contributions of the corners it occupies; each local
contribution depends only on the crossing sign and on whether the corner is
the N, S or a lateral quadrant of its crossing.
"""
import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Tuple

from ..diagrams import Crossing, Diagram, QuadrantClass
from ..exceptions import DecompositionViolation, EmptyStateSetError, GradingConventionError, NonIntegerGradingError
from ..states import KauffmanState, MarkedEdge, iter_states


logger = logging.getLogger(__name__)

QUARTER = 4

TableKey = Tuple[int, QuadrantClass]

# Local δ contributions in quarters. Lateral corners contribute nothing; the N
# and S corners of a positive crossing give -1/2, those of a negative one +1/2.
DELTA_TABLE: Dict[TableKey, int] = {
    (1, QuadrantClass.LATERAL): 0,
    (1, QuadrantClass.NORTH): -2,
    (1, QuadrantClass.SOUTH): -2,
    (-1, QuadrantClass.LATERAL): 0,
    (-1, QuadrantClass.NORTH): 2,
    (-1, QuadrantClass.SOUTH): 2,
}


def format_quarters(value: int) -> str:
    """Render a quarter count as a reduced rational string, e.g. -3 -> "-3/4"."""
    return str(Fraction(value, QUARTER))


@dataclass(frozen=True)
class GradingTables:
    """Local Maslov and Alexander contributions, in quarters, keyed by (sign, class)."""

    maslov: Mapping[TableKey, int]
    alexander: Mapping[TableKey, int]
    name: str = "standard"

    def delta(self, sign: int, quadrant_class: QuadrantClass) -> int:
        return self.maslov[(sign, quadrant_class)] - self.alexander[(sign, quadrant_class)]

    def validate(self) -> None:
        """Check M - A against the δ table and f against {±1/4} for every entry.

        Raises:
            GradingConventionError: Some entry is inconsistent.
        """
        for key, expected in DELTA_TABLE.items():
            if key not in self.maslov or key not in self.alexander:
                raise GradingConventionError(f"Table {self.name} has no entry for {key}")
            if self.delta(*key) != expected:
                raise GradingConventionError(
                    f"Table {self.name}: M - A = {format_quarters(self.delta(*key))} at {key}, "
                    f"expected {format_quarters(expected)}"
                )
            sign, _ = key
            if abs(expected + sign) != 1:
                raise GradingConventionError(f"f-value at {key} is not ±1/4")


STANDARD_TABLES = GradingTables(
    maslov={
        (1, QuadrantClass.LATERAL): 0,
        (1, QuadrantClass.NORTH): -4,
        (1, QuadrantClass.SOUTH): 0,
        (-1, QuadrantClass.LATERAL): 0,
        (-1, QuadrantClass.NORTH): 4,
        (-1, QuadrantClass.SOUTH): 0,
    },
    alexander={
        (1, QuadrantClass.LATERAL): 0,
        (1, QuadrantClass.NORTH): -2,
        (1, QuadrantClass.SOUTH): 2,
        (-1, QuadrantClass.LATERAL): 0,
        (-1, QuadrantClass.NORTH): 2,
        (-1, QuadrantClass.SOUTH): -2,
    },
)


@dataclass(frozen=True, order=True)
class GradingVector:
    """Gradings of one state, in quarters."""

    maslov: int
    alexander: int
    delta: int

    def to_json(self) -> Dict[str, object]:
        return {
            "maslov": format_quarters(self.maslov),
            "alexander": format_quarters(self.alexander),
            "delta": format_quarters(self.delta),
            "quarters": [self.maslov, self.alexander, self.delta],
        }


def delta_contribution(crossing: Crossing, quadrant_class: QuadrantClass) -> int:
    return DELTA_TABLE[(crossing.sign, quadrant_class)]


def f_value(crossing: Crossing, quadrant_class: QuadrantClass) -> int:
    """δ contribution shifted by sign/4; always ±1 quarter.

    Raises:
        GradingConventionError: The shifted value is not ±1/4.
    """
    value = delta_contribution(crossing, quadrant_class) + crossing.sign
    if value not in (1, -1):
        raise GradingConventionError(
            f"f-value {format_quarters(value)} at crossing {crossing.id} ({quadrant_class.value}) is not ±1/4"
        )
    return value


def _corner_classes(state: KauffmanState, diagram: Diagram) -> Iterable[Tuple[Crossing, QuadrantClass]]:
    for crossing in diagram.crossings:
        yield crossing, crossing.quadrant_class(state.assignment[crossing.id][1])


def delta(state: KauffmanState, diagram: Diagram) -> int:
    """δ-grading of a state, in quarters.

    The sum is checked against -wr(D)/4 plus the per-crossing f-values, and
    against integrality.

    Raises:
        DecompositionViolation: The two sums disagree.
        NonIntegerGradingError: The result is not a whole number.
    """
    total = 0
    f_total = 0
    for crossing, quadrant_class in _corner_classes(state, diagram):
        total += delta_contribution(crossing, quadrant_class)
        f_total += f_value(crossing, quadrant_class)
    if total != f_total - diagram.writhe:
        raise DecompositionViolation(
            f"δ = {format_quarters(total)} but -wr/4 + Σf = {format_quarters(f_total - diagram.writhe)}"
        )
    if total % QUARTER:
        raise NonIntegerGradingError(f"δ-grading {format_quarters(total)} of a knot state is not an integer")
    return total


def maslov(state: KauffmanState, diagram: Diagram, tables: GradingTables = STANDARD_TABLES) -> int:
    return sum(tables.maslov[(crossing.sign, cls)] for crossing, cls in _corner_classes(state, diagram))


def alexander(state: KauffmanState, diagram: Diagram, tables: GradingTables = STANDARD_TABLES) -> int:
    return sum(tables.alexander[(crossing.sign, cls)] for crossing, cls in _corner_classes(state, diagram))


def gradings(state: KauffmanState, diagram: Diagram, tables: GradingTables = STANDARD_TABLES) -> GradingVector:
    """All three gradings of a state; M - A must reproduce δ."""
    m = maslov(state, diagram, tables)
    a = alexander(state, diagram, tables)
    d = delta(state, diagram)
    if m - a != d:
        raise GradingConventionError(
            f"Tables {tables.name}: M - A = {format_quarters(m - a)} differs from δ = {format_quarters(d)}"
        )
    return GradingVector(maslov=m, alexander=a, delta=d)


@dataclass
class DeltaSpread:
    """Running min/max of δ over a stream of states."""

    low: Optional[int] = None
    high: Optional[int] = None
    total: int = 0
    histogram: Counter = field(default_factory=Counter)

    def update(self, value: int) -> None:
        self.low = value if self.low is None else min(self.low, value)
        self.high = value if self.high is None else max(self.high, value)
        self.total += 1
        self.histogram[value] += 1

    def merge(self, other: "DeltaSpread") -> "DeltaSpread":
        merged = DeltaSpread()
        for value, count in (self.histogram + other.histogram).items():
            merged.low = value if merged.low is None else min(merged.low, value)
            merged.high = value if merged.high is None else max(merged.high, value)
            merged.histogram[value] = count
        merged.total = self.total + other.total
        return merged

    def compute(self) -> int:
        """Spread in whole units.

        Raises:
            EmptyStateSetError: No states were seen.
        """
        if self.low is None or self.high is None:
            raise EmptyStateSetError("δ-spread of an empty state set is undefined")
        return (self.high - self.low) // QUARTER


def fold_deltas(diagram: Diagram, edge: MarkedEdge, max_states: Optional[int] = None) -> DeltaSpread:
    accumulator = DeltaSpread()
    for state in iter_states(diagram, edge, max_states=max_states):
        accumulator.update(delta(state, diagram))
    return accumulator


def delta_spread(diagram: Diagram, edge: MarkedEdge, max_states: Optional[int] = None) -> int:
    """max δ - min δ over the Kauffman states of (diagram, edge)."""
    spread = fold_deltas(diagram, edge, max_states=max_states).compute()
    logger.debug("δ-spread of %s at edge %d: %d", diagram.name, edge.label, spread)
    return spread


def grading_histogram(diagram: Diagram, edge: MarkedEdge, max_states: Optional[int] = None) -> Dict[str, int]:
    """Number of states per δ value, keyed by whole-number strings in increasing order."""
    histogram = fold_deltas(diagram, edge, max_states=max_states).histogram
    return {format_quarters(value): histogram[value] for value in sorted(histogram)}
