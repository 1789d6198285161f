import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Set, Tuple

from ..diagrams import Diagram, checkerboard_graph, spanning_tree_count
from ..exceptions import CheckerboardError, IneligibleEdgeError, NoEligibleEdgeError, StateLimitExceeded


logger = logging.getLogger(__name__)

DEFAULT_MAX_STATES = 10_000_000


@dataclass(frozen=True)
class MarkedEdge:
    label: int
    excluded_faces: Tuple[int, int]


@dataclass(frozen=True, order=True)
class KauffmanState:
    """Entry i of `assignment` is the (face id, quadrant) chosen at crossing i."""

    assignment: Tuple[Tuple[int, int], ...]

    def crossing_by_face(self) -> Dict[int, int]:
        return {face: crossing_id for crossing_id, (face, _) in enumerate(self.assignment)}

    def to_json(self) -> List[List[int]]:
        return [[crossing_id, face, quadrant] for crossing_id, (face, quadrant) in enumerate(self.assignment)]


def eligible_marked_edges(diagram: Diagram) -> List[MarkedEdge]:
    """Edges with two distinct faces alongside, in label order."""
    edges = []
    for edge in diagram.edges:
        right, left = diagram.edge_faces(edge.label)
        if right != left:
            edges.append(MarkedEdge(label=edge.label, excluded_faces=(min(right, left), max(right, left))))
    if not edges:
        raise NoEligibleEdgeError(f"Diagram {diagram.name or diagram.to_pd_string()} has no eligible marked edge")
    return edges


def marked_edge(diagram: Diagram, label: int) -> MarkedEdge:
    try:
        right, left = diagram.edge_faces(label)
    except KeyError:
        raise IneligibleEdgeError(f"Diagram has no edge labelled {label}") from None
    if right == left:
        raise IneligibleEdgeError(f"Edge {label} has the same face on both sides")
    return MarkedEdge(label=label, excluded_faces=(min(right, left), max(right, left)))


def domains(diagram: Diagram, edge: MarkedEdge) -> Tuple[int, ...]:
    """Faces not adjacent to the marked edge."""
    return tuple(face.id for face in diagram.faces if face.id not in edge.excluded_faces)


def iter_states(diagram: Diagram, edge: MarkedEdge, max_states: Optional[int] = None) -> Iterator[KauffmanState]:
    """Stream the Kauffman states of (diagram, edge) in search order.

    Backtracks over crossings, always settling a face with a single open
    crossing first and otherwise the crossing with the fewest free corners.

    Raises:
        StateLimitExceeded: More than `max_states` states exist.
    """
    limit = DEFAULT_MAX_STATES if max_states is None else max_states
    allowed = set(domains(diagram, edge))
    candidates: Dict[int, List[Tuple[int, int]]] = {}
    incident: Dict[int, Set[int]] = {face: set() for face in allowed}
    for crossing in diagram.crossings:
        corners = []
        for quadrant in range(4):
            face = diagram.face_of(crossing.id, quadrant)
            if face in allowed:
                corners.append((face, quadrant))
                incident[face].add(crossing.id)
        candidates[crossing.id] = sorted(corners)

    assignment: Dict[int, Tuple[int, int]] = {}
    used: Set[int] = set()

    def next_choice() -> Optional[Tuple[int, List[Tuple[int, int]]]]:
        for face in sorted(allowed - used):
            open_crossings = [c for c in incident[face] if c not in assignment]
            if not open_crossings:
                return None
            if len(open_crossings) == 1:
                crossing_id = open_crossings[0]
                return crossing_id, [corner for corner in candidates[crossing_id] if corner[0] == face]
        best: Optional[Tuple[int, List[Tuple[int, int]]]] = None
        for crossing_id in range(diagram.n):
            if crossing_id in assignment:
                continue
            options = [corner for corner in candidates[crossing_id] if corner[0] not in used]
            if not options:
                return None
            if best is None or len(options) < len(best[1]):
                best = (crossing_id, options)
        return best

    def search() -> Iterator[KauffmanState]:
        if len(assignment) == diagram.n:
            yield KauffmanState(tuple(assignment[c] for c in range(diagram.n)))
            return
        choice = next_choice()
        if choice is None:
            return
        crossing_id, options = choice
        for face, quadrant in options:
            assignment[crossing_id] = (face, quadrant)
            used.add(face)
            yield from search()
            del assignment[crossing_id]
            used.discard(face)

    count = 0
    for state in search():
        count += 1
        if count > limit:
            raise StateLimitExceeded(limit)
        yield state
    logger.debug("Edge %d of %s: %d Kauffman states", edge.label, diagram.name, count)


def enumerate_states(
    diagram: Diagram, edge: MarkedEdge, max_states: Optional[int] = None
) -> List[KauffmanState]:
    """All Kauffman states of (diagram, edge), sorted by crossing id then face id."""
    return sorted(iter_states(diagram, edge, max_states=max_states))


def state_count_oracle(diagram: Diagram) -> int:
    """Spanning-tree count of the checkerboard graph; both color classes must agree."""
    counts = [spanning_tree_count(checkerboard_graph(diagram, color).graph) for color in (0, 1)]
    if counts[0] != counts[1]:
        raise CheckerboardError(f"Checkerboard classes disagree on spanning trees: {counts}")
    return counts[0]
