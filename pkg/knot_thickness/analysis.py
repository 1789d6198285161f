"""Per-diagram analysis and the census verification suite used by the CLI."""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Sequence

from .data import CensusRecord
from .diagrams import Diagram, goeritz_determinant, mirror
from .exceptions import (
    DiagramError,
    IneligibleEdgeError,
    KnotThicknessError,
    ResourceLimitError,
    UnsupportedDiagramError,
)
from .invariants import (
    STANDARD_TABLES,
    AlternationReport,
    GradingTables,
    brute_force_dalt,
    fox_alexander,
    grading_histogram,
    gradings,
    state_sum_euler,
    verify_theorem,
)
from .states import (
    DEFAULT_MAX_STATES,
    MarkedEdge,
    eligible_marked_edges,
    enumerate_states,
    marked_edge,
    state_count_oracle,
)


logger = logging.getLogger(__name__)


class Status(str, Enum):
    PASS = "pass"
    SKIPPED = "skipped"
    VIOLATION = "violation"
    PARSE_ERROR = "parse_error"
    UNSUPPORTED = "unsupported"
    RESOURCE = "resource_limit"

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self]


EXIT_CODES = {
    Status.PASS: 0,
    Status.SKIPPED: 0,
    Status.VIOLATION: 1,
    Status.PARSE_ERROR: 2,
    Status.UNSUPPORTED: 3,
    Status.RESOURCE: 4,
}

# Most severe first.
PRECEDENCE = (Status.VIOLATION, Status.PARSE_ERROR, Status.UNSUPPORTED, Status.RESOURCE)


def status_for(error: KnotThicknessError) -> Status:
    if isinstance(error, UnsupportedDiagramError):
        return Status.UNSUPPORTED
    # Unknown edge labels are bad input.
    if isinstance(error, (DiagramError, IneligibleEdgeError)):
        return Status.PARSE_ERROR
    if isinstance(error, ResourceLimitError):
        return Status.RESOURCE
    return Status.VIOLATION


def overall_status(statuses: Sequence[Status]) -> Status:
    for status in PRECEDENCE:
        if status in statuses:
            return status
    return Status.PASS


@dataclass
class Settings:
    max_states: int = DEFAULT_MAX_STATES
    edge: Optional[int] = None
    all_edges: bool = True
    deep: bool = False
    max_crossings: int = 10
    fox_max_crossings: int = 9
    deep_max_crossings: int = 8
    brute_force_max_crossings: int = 8
    states: bool = False
    tables: GradingTables = STANDARD_TABLES

    def edges(self) -> Optional[List[int]]:
        if self.edge is not None:
            return [self.edge]
        return None if self.all_edges else [1]


@dataclass
class Outcome:
    name: Optional[str]
    status: Status
    checks: Dict[str, bool] = field(default_factory=dict)
    data: Dict[str, object] = field(default_factory=dict)
    message: Optional[str] = None

    def fail(self, check: str) -> None:
        self.checks[check] = False
        if self.status == Status.PASS:
            self.status = Status.VIOLATION

    def check(self, name: str, passed: bool) -> None:
        if passed:
            self.checks.setdefault(name, True)
        else:
            self.fail(name)

    def to_json(self) -> Dict[str, object]:
        entry: Dict[str, object] = {"name": self.name, "status": self.status.value}
        if self.message is not None:
            entry["message"] = self.message
        entry["checks"] = dict(sorted(self.checks.items()))
        entry.update(self.data)
        return entry


def _report_status(report: AlternationReport) -> Status:
    if report.resource_limited:
        return Status.RESOURCE
    if report.errors or not report.decomposition_ok or not report.good_domains_ok or report.theorem_ok is False:
        return Status.VIOLATION
    return Status.PASS


def state_listing(diagram: Diagram, edge: MarkedEdge, settings: Settings) -> List[Dict[str, object]]:
    """Every state at `edge` as [crossing, face, quadrant] triples, with its gradings."""
    return [
        {"corners": state.to_json(), "gradings": gradings(state, diagram, settings.tables).to_json()}
        for state in enumerate_states(diagram, edge, max_states=settings.max_states)
    ]


def analyze_diagram(diagram: Diagram, settings: Settings) -> Outcome:
    """States, spreads, dalt(D), β(D) and both Alexander polynomials of one diagram."""
    edges = settings.edges()
    try:
        for label in edges or ():
            marked_edge(diagram, label)
    except IneligibleEdgeError as error:
        return Outcome(name=diagram.name, status=status_for(error), message=str(error))
    report = verify_theorem(diagram, edges=edges, max_states=settings.max_states, deep=settings.deep)
    outcome = Outcome(name=diagram.name, status=_report_status(report))
    outcome.data.update(
        {
            "pd": diagram.to_pd_string(),
            "faces": len(diagram.faces),
            "report": report.to_json(),
        }
    )
    outcome.check("theorem", report.theorem_ok is True)
    outcome.check("decomposition", report.decomposition_ok)
    outcome.check("good_domains", report.good_domains_ok)
    if report.errors:
        outcome.message = "; ".join(f"{entry['error']}: {entry['message']}" for entry in report.errors)
    if outcome.status == Status.RESOURCE or not report.spreads:
        return outcome

    try:
        oracle = state_count_oracle(diagram)
        outcome.data["state_count_oracle"] = oracle
        outcome.check("state_count", all(count == oracle for count in report.state_counts.values()))

        fox = fox_alexander(diagram)
        first = min(report.spreads)
        euler = state_sum_euler(diagram, marked_edge(diagram, first), settings.tables, settings.max_states)
        outcome.data["alexander"] = {
            "fox": str(fox),
            "state_sum": str(euler),
            "coefficients": fox.to_json(),
        }
        outcome.data["determinant"] = abs(int(fox.evaluate(-1)))
        outcome.check("goeritz_determinant", goeritz_determinant(diagram) == outcome.data["determinant"])
        outcome.check("alexander_symmetric", fox.is_symmetric() and fox.evaluate(1) == 1)
        outcome.check("euler_matches_fox", euler == fox)
        if report.alternating:
            outcome.check("alternating_spread_zero", report.max_spread == 0)
        if settings.states:
            outcome.data["states"] = {
                str(label): state_listing(diagram, marked_edge(diagram, label), settings)
                for label in sorted(report.spreads)
            }
    except ResourceLimitError as error:
        outcome.status = Status.RESOURCE
        outcome.message = str(error)
    except KnotThicknessError as error:
        outcome.fail(type(error).__name__)
        outcome.message = str(error)
    return outcome


def _mirror_checks(diagram: Diagram, outcome: Outcome, settings: Settings, fox_enabled: bool) -> None:
    image = mirror(diagram)
    report = verify_theorem(image, edges=[1], max_states=settings.max_states)
    original = outcome.data["report"]
    outcome.check("mirror_writhe", image.writhe == -diagram.writhe)
    outcome.check("mirror_dalt", report.dalt == original["dalt"])  # type: ignore
    outcome.check("mirror_beta", report.beta == original["beta"])  # type: ignore
    edge = marked_edge(diagram, 1)
    before = grading_histogram(diagram, edge, max_states=settings.max_states)
    after = grading_histogram(image, marked_edge(image, 1), max_states=settings.max_states)
    negated = {str(-int(value)): count for value, count in before.items()}
    outcome.check("mirror_delta", after == negated)
    if fox_enabled:
        outcome.check("mirror_alexander", fox_alexander(image) == fox_alexander(diagram))


def verify_record(record: CensusRecord, settings: Settings) -> Outcome:
    """Run every cross-check available for one census record.

    Errors are folded into the returned outcome; nothing is raised.
    """
    try:
        diagram = record.diagram()
    except KnotThicknessError as error:
        return Outcome(name=record.name, status=status_for(error), message=str(error))

    if diagram.n > settings.max_crossings:
        return Outcome(
            name=record.name,
            status=Status.SKIPPED,
            message=f"{diagram.n} crossings exceeds the limit of {settings.max_crossings}",
        )

    deep = settings.deep and diagram.n <= settings.deep_max_crossings
    fox_enabled = diagram.n <= settings.fox_max_crossings
    local = Settings(**{**settings.__dict__, "deep": deep, "edge": None, "all_edges": True})
    outcome = analyze_diagram(diagram, local)
    report = outcome.data["report"]
    if outcome.status == Status.RESOURCE or not report["spreads"]:  # type: ignore
        return outcome

    try:
        counts = set(report["state_counts"].values())  # type: ignore
        outcome.check("state_count_edge_independent", len(counts) == 1)

        if fox_enabled:
            fox = fox_alexander(diagram)
            for edge in eligible_marked_edges(diagram):
                euler = state_sum_euler(diagram, edge, settings.tables, settings.max_states)
                outcome.check("euler_edge_independent", euler == fox)

        determinant = outcome.data.get("determinant")
        if record.determinant is not None:
            outcome.check("expected_determinant", determinant == record.determinant)
        if record.alternating is not None:
            outcome.check("expected_alternating", report["alternating"] == record.alternating)  # type: ignore
        if report["alternating"]:  # type: ignore
            outcome.check("determinant_equals_states", counts == {determinant})

        if diagram.n <= settings.brute_force_max_crossings:
            outcome.check("dalt_brute_force", brute_force_dalt(diagram) == report["dalt"])  # type: ignore

        _mirror_checks(diagram, outcome, settings, fox_enabled)
    except ResourceLimitError as error:
        outcome.status = Status.RESOURCE
        outcome.message = str(error)
    except KnotThicknessError as error:
        outcome.fail(type(error).__name__)
        outcome.message = str(error)

    if outcome.status == Status.VIOLATION:
        failed = sorted(name for name, passed in outcome.checks.items() if not passed)
        logger.warning("%s failed checks: %s", record.name, ", ".join(failed) or outcome.message)
    return outcome
