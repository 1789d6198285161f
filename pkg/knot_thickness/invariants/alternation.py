"""Crossing changes that make a diagram alternating, and the δ-spread bound they give.

A projection carries exactly two alternating over/under assignments, one the
global swap of the other. Reading the edge labels as visit indices, one of
them puts every under-pass on an even label and the other on an odd label, so
comparing a diagram against both is linear in the crossing count.
"""
import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from ..diagrams import Diagram, bad_domain_count, bad_edges, flip_crossings, is_alternating
from ..exceptions import (
    AlternationInconsistencyError,
    DecompositionViolation,
    KnotThicknessError,
    ResourceLimitError,
)
from ..states import KauffmanState, MarkedEdge, eligible_marked_edges, enumerate_states, iter_states, marked_edge
from .gradings import QUARTER, DeltaSpread, delta, f_value


logger = logging.getLogger(__name__)

CASES = (1, 2, 3, 4)


@dataclass(frozen=True)
class FixableSet:
    """Crossings whose change leaves an alternating diagram; the rest are static."""

    crossings: FrozenSet[int]

    @property
    def size(self) -> int:
        return len(self.crossings)

    def __contains__(self, crossing_id: object) -> bool:
        return crossing_id in self.crossings

    def apply(self, diagram: Diagram) -> Diagram:
        return flip_crossings(diagram, self.crossings)

    def to_json(self) -> List[int]:
        return sorted(self.crossings)


def alternating_assignments(diagram: Diagram) -> Tuple[FixableSet, FixableSet]:
    """Flip masks of the two alternating assignments of the projection.

    The first mask makes every under-pass land on an even label, the second on
    an odd one.

    Raises:
        AlternationInconsistencyError: Some crossing has both passes on labels
            of the same parity.
    """
    odd = set()
    for crossing in diagram.crossings:
        under_label = crossing.slots[0]
        over_label = crossing.slots[crossing.over_in_slot]
        if (under_label - over_label) % 2 == 0:
            raise AlternationInconsistencyError(
                f"Crossing {crossing.id} is entered on labels {under_label} and {over_label} of equal parity"
            )
        if under_label % 2:
            odd.add(crossing.id)
    everything = frozenset(range(diagram.n))
    return FixableSet(frozenset(odd)), FixableSet(everything - frozenset(odd))


def min_fixable_set(diagram: Diagram) -> FixableSet:
    """The smaller alternating flip mask; on a tie, the one containing crossing 0."""
    first, second = alternating_assignments(diagram)
    if first.size != second.size:
        return first if first.size < second.size else second
    return first if 0 in first else second


def dalt(diagram: Diagram) -> int:
    return min_fixable_set(diagram).size


def is_fixable(diagram: Diagram, crossings: Iterable[int]) -> bool:
    return is_alternating(flip_crossings(diagram, crossings))


def brute_force_dalt(diagram: Diagram) -> int:
    """Smallest number of crossing changes giving an alternating diagram, by subset search."""
    for size in range(diagram.n + 1):
        for subset in itertools.combinations(range(diagram.n), size):
            if is_fixable(diagram, subset):
                return size
    raise AlternationInconsistencyError(f"No crossing changes make {diagram.name or diagram} alternating")


def good_domain_violations(diagram: Diagram) -> List[int]:
    """Faces without bad boundary edges whose corners do not share one f-value."""
    bad = {edge.label for edge in bad_edges(diagram)}
    violations = []
    for face in diagram.faces:
        if face.boundary_edges & bad:
            continue
        values = {
            f_value(diagram.crossings[c], diagram.crossings[c].quadrant_class(q)) for c, q in face.corners
        }
        if len(values) > 1:
            violations.append(face.id)
    return violations


@dataclass(frozen=True)
class PairCheck:
    case_counts: Dict[int, int]
    delta_difference: int
    bound: int

    @property
    def tight(self) -> bool:
        """The difference reaches a nonzero bound."""
        return self.bound > 0 and self.delta_difference == self.bound


def pair_decomposition_check(
    diagram: Diagram, edge: MarkedEdge, x: KauffmanState, y: KauffmanState, fixable: FixableSet
) -> PairCheck:
    """Sort the domains by whether x and y occupy them at static or fixable crossings.

    Case 1: x static, y fixable. Case 2: x fixable, y static. Case 3: both
    fixable. Case 4: both static.

    Raises:
        DecompositionViolation: An f-value differs in cases 3 or 4, cases 1
            or 2 occur more often than there are fixable crossings, or
            |δ(x) - δ(y)| exceeds the number of fixable crossings.
    """
    x_at, y_at = x.crossing_by_face(), y.crossing_by_face()
    counts = {case: 0 for case in CASES}
    for face in sorted(x_at):
        cx, cy = x_at[face], y_at[face]
        x_fixable, y_fixable = cx in fixable, cy in fixable
        if x_fixable and y_fixable:
            case = 3
        elif not x_fixable and not y_fixable:
            case = 4
        else:
            case = 2 if x_fixable else 1
        counts[case] += 1
        crossing_x, crossing_y = diagram.crossings[cx], diagram.crossings[cy]
        fx = f_value(crossing_x, crossing_x.quadrant_class(x.assignment[cx][1]))
        fy = f_value(crossing_y, crossing_y.quadrant_class(y.assignment[cy][1]))
        if case in (3, 4) and fx != fy:
            raise DecompositionViolation(
                f"Face {face} (case {case}): f-values {fx}/4 and {fy}/4 differ at edge {edge.label}"
            )
    for case in (1, 2):
        if counts[case] > fixable.size:
            raise DecompositionViolation(
                f"{counts[case]} faces fall in case {case} but only {fixable.size} crossings are fixable"
            )
    difference = abs(delta(x, diagram) - delta(y, diagram)) // QUARTER
    if difference > fixable.size:
        raise DecompositionViolation(f"|δ(x) - δ(y)| = {difference} exceeds {fixable.size} fixable crossings")
    return PairCheck(case_counts=counts, delta_difference=difference, bound=fixable.size)


@dataclass
class AlternationReport:
    """Verification record for one diagram.

    `theorem_ok` is None when some requested edge produced no spread.
    """

    name: Optional[str]
    crossings: int
    writhe: int
    alternating: bool
    dalt: int
    fixable: List[int]
    beta: int
    spreads: Dict[int, int] = field(default_factory=dict)
    state_counts: Dict[int, int] = field(default_factory=dict)
    histograms: Dict[int, Dict[str, int]] = field(default_factory=dict)
    theorem_ok: Optional[bool] = None
    decomposition_ok: bool = True
    good_domains_ok: bool = True
    case_counts: Dict[int, int] = field(default_factory=lambda: {case: 0 for case in CASES})
    pairs_checked: int = 0
    tight_pairs: int = 0
    errors: List[Dict[str, object]] = field(default_factory=list)

    @property
    def max_spread(self) -> Optional[int]:
        return max(self.spreads.values()) if self.spreads else None

    @property
    def spread_vs_beta(self) -> Optional[bool]:
        """Whether every spread is at most β(D); informational only."""
        return None if self.max_spread is None else self.max_spread <= self.beta

    def record_error(self, error: KnotThicknessError, edge: Optional[int] = None) -> None:
        self.errors.append({"edge": edge, "error": type(error).__name__, "message": str(error)})

    @property
    def resource_limited(self) -> bool:
        return any(entry["error"] == "StateLimitExceeded" for entry in self.errors)

    def to_json(self) -> Dict[str, object]:
        return {
            "name": self.name,
            "crossings": self.crossings,
            "writhe": self.writhe,
            "alternating": self.alternating,
            "dalt": self.dalt,
            "fixable": self.fixable,
            "beta": self.beta,
            "spreads": {str(label): spread for label, spread in sorted(self.spreads.items())},
            "max_spread": self.max_spread,
            "state_counts": {str(label): count for label, count in sorted(self.state_counts.items())},
            "delta_histograms": {str(label): hist for label, hist in sorted(self.histograms.items())},
            "theorem_ok": self.theorem_ok,
            "decomposition_ok": self.decomposition_ok,
            "good_domains_ok": self.good_domains_ok,
            "spread_le_beta": self.spread_vs_beta,
            "case_counts": {str(case): count for case, count in sorted(self.case_counts.items())},
            "pairs_checked": self.pairs_checked,
            "tight_pairs": self.tight_pairs,
            "errors": self.errors,
        }


def _select_edges(diagram: Diagram, edges: Optional[Sequence[int]]) -> List[MarkedEdge]:
    if edges is None:
        return eligible_marked_edges(diagram)
    return [marked_edge(diagram, label) for label in edges]


def verify_theorem(
    diagram: Diagram,
    edges: Optional[Sequence[int]] = None,
    max_states: Optional[int] = None,
    deep: bool = False,
) -> AlternationReport:
    """Compare the δ-spread at each marked edge with dalt(D).

    Errors raised for one edge are recorded in the report and the remaining
    edges are still processed. With `deep`, every pair of states at the first
    selected edge also goes through `pair_decomposition_check`.
    """
    fixable = min_fixable_set(diagram)
    report = AlternationReport(
        name=diagram.name,
        crossings=diagram.n,
        writhe=diagram.writhe,
        alternating=is_alternating(diagram),
        dalt=fixable.size,
        fixable=fixable.to_json(),
        beta=bad_domain_count(diagram),
    )
    try:
        selected = _select_edges(diagram, edges)
    except KnotThicknessError as error:
        report.record_error(error)
        return report

    if good_domain_violations(diagram):
        report.good_domains_ok = False

    complete = True
    for edge in selected:
        accumulator = DeltaSpread()
        try:
            for state in iter_states(diagram, edge, max_states=max_states):
                accumulator.update(delta(state, diagram))
            report.spreads[edge.label] = accumulator.compute()
            report.state_counts[edge.label] = accumulator.total
            report.histograms[edge.label] = {
                str(value // QUARTER): accumulator.histogram[value] for value in sorted(accumulator.histogram)
            }
        except DecompositionViolation as error:
            report.decomposition_ok = False
            report.record_error(error, edge.label)
            complete = False
        except KnotThicknessError as error:
            report.record_error(error, edge.label)
            complete = False
            if isinstance(error, ResourceLimitError):
                break

    if report.spreads and any(spread > report.dalt for spread in report.spreads.values()):
        report.theorem_ok = False
    elif report.spreads and complete:
        report.theorem_ok = True

    if deep and selected and complete:
        _scan_pairs(diagram, selected[0], fixable, report, max_states)
    logger.info(
        "%s: dalt=%d beta=%d max spread=%s theorem_ok=%s",
        diagram.name,
        report.dalt,
        report.beta,
        report.max_spread,
        report.theorem_ok,
    )
    return report


def _scan_pairs(
    diagram: Diagram, edge: MarkedEdge, fixable: FixableSet, report: AlternationReport, max_states: Optional[int]
) -> None:
    states = enumerate_states(diagram, edge, max_states=max_states)
    for x, y in itertools.combinations(states, 2):
        try:
            check = pair_decomposition_check(diagram, edge, x, y, fixable)
        except DecompositionViolation as error:
            report.decomposition_ok = False
            report.record_error(error, edge.label)
            return
        report.pairs_checked += 1
        report.tight_pairs += int(check.tight)
        for case, count in check.case_counts.items():
            report.case_counts[case] += count
