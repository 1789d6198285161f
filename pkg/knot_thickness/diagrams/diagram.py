import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from ..exceptions import (
    DuplicateLabelError,
    InconsistentDiagramError,
    LinkDiagramError,
    NonPlanarDiagramError,
    UnsupportedDiagramError,
)


logger = logging.getLogger(__name__)

# (crossing id, slot index) of one end of an edge
Slot = Tuple[int, int]
# (crossing id, quadrant index); quadrant q sits between slots q and q + 1
Corner = Tuple[int, int]


class Pass(str, Enum):
    OVER = "over"
    UNDER = "under"


class QuadrantClass(str, Enum):
    """Position of a corner relative to the orientation of its crossing.

    NORTH is flanked by the two outgoing half-edges, SOUTH by the two incoming
    ones, LATERAL by one of each.
    """

    NORTH = "N"
    SOUTH = "S"
    LATERAL = "lateral"


@dataclass(frozen=True)
class Crossing:
    """A crossing in PD form.

    `slots` are the four edge labels counterclockwise, starting at the
    incoming under-strand, so the under-strand runs from slot 0 to slot 2.
    `over_in_slot` is 1 or 3, whichever slot holds the incoming over-strand.
    """

    id: int
    slots: Tuple[int, int, int, int]
    sign: int
    over_in_slot: int

    def is_incoming(self, slot: int) -> bool:
        return slot == 0 or slot == self.over_in_slot

    def pass_at(self, slot: int) -> Pass:
        return Pass.UNDER if slot % 2 == 0 else Pass.OVER

    def quadrant_class(self, quadrant: int) -> QuadrantClass:
        first = self.is_incoming(quadrant)
        second = self.is_incoming((quadrant + 1) % 4)
        if first and second:
            return QuadrantClass.SOUTH
        if not first and not second:
            return QuadrantClass.NORTH
        return QuadrantClass.LATERAL


@dataclass(frozen=True)
class Edge:
    label: int
    tail_crossing: int
    tail_slot: int
    tail_pass: Pass
    head_crossing: int
    head_slot: int
    head_pass: Pass

    @property
    def is_bad(self) -> bool:
        """Both ends are over-passes or both are under-passes."""
        return self.tail_pass == self.head_pass


@dataclass(frozen=True)
class Face:
    id: int
    corners: Tuple[Corner, ...]
    boundary_edges: FrozenSet[int]


class Diagram:
    """An oriented knot diagram stored as a rotation system.

    Args:
        codes: One 4-tuple of edge labels per crossing, in PD convention.
        name: Optional display name carried into reports.

    Raises:
        UnsupportedDiagramError: No crossings were given.
        DuplicateLabelError: Some label does not appear exactly twice, or the
            labels are not exactly 1..2n.
        LinkDiagramError: The code describes more than one component.
        InconsistentDiagramError: Labels are not consecutive along the knot.
        NonPlanarDiagramError: Face tracing does not give n + 2 faces.
    """

    def __init__(self, codes: Sequence[Sequence[int]], name: Optional[str] = None) -> None:
        self.name = name
        codes = [tuple(int(label) for label in code) for code in codes]
        if not codes:
            raise UnsupportedDiagramError("A diagram needs at least one crossing")
        for code in codes:
            if len(code) != 4:
                raise InconsistentDiagramError(f"Crossing {code} does not have four slots")

        self.n = len(codes)
        _check_labels(codes)
        _check_single_component(codes)
        self.crossings: Tuple[Crossing, ...] = tuple(
            _orient(index, code, 2 * self.n) for index, code in enumerate(codes)  # type: ignore
        )

        self._slots_of: Dict[int, List[Slot]] = {}
        for crossing in self.crossings:
            for slot, label in enumerate(crossing.slots):
                self._slots_of.setdefault(label, []).append((crossing.id, slot))

        self.edges: Tuple[Edge, ...] = tuple(self._build_edge(label) for label in range(1, 2 * self.n + 1))
        self.faces: Tuple[Face, ...] = self._trace_faces()
        if len(self.faces) != self.n + 2:
            raise NonPlanarDiagramError(
                f"Face tracing found {len(self.faces)} faces, a planar diagram with {self.n} crossings has {self.n + 2}"
            )
        self._face_of: Dict[Corner, int] = {
            corner: face.id for face in self.faces for corner in face.corners
        }
        logger.debug("Built diagram %s: %d crossings, %d faces", name, self.n, len(self.faces))

    def _build_edge(self, label: int) -> Edge:
        tail = head = None
        for crossing_id, slot in self._slots_of[label]:
            if self.crossings[crossing_id].is_incoming(slot):
                if head is not None:
                    raise InconsistentDiagramError(f"Edge {label} enters two crossings")
                head = (crossing_id, slot)
            else:
                if tail is not None:
                    raise InconsistentDiagramError(f"Edge {label} leaves two crossings")
                tail = (crossing_id, slot)
        assert tail is not None and head is not None
        return Edge(
            label=label,
            tail_crossing=tail[0],
            tail_slot=tail[1],
            tail_pass=self.crossings[tail[0]].pass_at(tail[1]),
            head_crossing=head[0],
            head_slot=head[1],
            head_pass=self.crossings[head[0]].pass_at(head[1]),
        )

    def partner(self, crossing_id: int, slot: int) -> Slot:
        """The other end of the edge sitting in the given slot."""
        label = self.crossings[crossing_id].slots[slot]
        first, second = self._slots_of[label]
        return second if first == (crossing_id, slot) else first

    def _trace_faces(self) -> Tuple[Face, ...]:
        # Arrive through slot j, leave along slot j + 1 (counterclockwise).
        seen = set()
        faces = []
        for crossing in self.crossings:
            for quadrant in range(4):
                if (crossing.id, quadrant) in seen:
                    continue
                corners = []
                boundary = set()
                current = (crossing.id, quadrant)
                while current not in seen:
                    seen.add(current)
                    corners.append(current)
                    exit_slot = (current[1] + 1) % 4
                    boundary.add(self.crossings[current[0]].slots[exit_slot])
                    current = self.partner(current[0], exit_slot)
                if current != (crossing.id, quadrant):
                    raise NonPlanarDiagramError(f"Face walk from {(crossing.id, quadrant)} does not close up")
                faces.append(Face(id=len(faces), corners=tuple(corners), boundary_edges=frozenset(boundary)))
        return tuple(faces)

    @cached_property
    def writhe(self) -> int:
        return sum(crossing.sign for crossing in self.crossings)

    def edge(self, label: int) -> Edge:
        if not 1 <= label <= 2 * self.n:
            raise KeyError(f"No edge labelled {label}")
        return self.edges[label - 1]

    def face_of(self, crossing_id: int, quadrant: int) -> int:
        return self._face_of[(crossing_id, quadrant % 4)]

    def edge_faces(self, label: int) -> Tuple[int, int]:
        """The faces on the right and on the left of an edge."""
        edge = self.edge(label)
        right = self.face_of(edge.tail_crossing, edge.tail_slot - 1)
        left = self.face_of(edge.tail_crossing, edge.tail_slot)
        return right, left

    def corner_class(self, crossing_id: int, quadrant: int) -> QuadrantClass:
        return self.crossings[crossing_id].quadrant_class(quadrant)

    @property
    def pd_code(self) -> Tuple[Tuple[int, int, int, int], ...]:
        return tuple(crossing.slots for crossing in self.crossings)

    def to_pd_string(self) -> str:
        return " ".join("X[" + ",".join(str(label) for label in code) + "]" for code in self.pd_code)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Diagram):
            return NotImplemented
        return self.pd_code == other.pd_code

    def __hash__(self) -> int:
        return hash(self.pd_code)

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"<Diagram{label} n={self.n} {self.to_pd_string()}>"


def _check_labels(codes: Sequence[Tuple[int, ...]]) -> None:
    counts = Counter(label for code in codes for label in code)
    wrong = sorted(label for label, count in counts.items() if count != 2)
    if wrong:
        raise DuplicateLabelError(f"Edge labels {wrong} do not appear exactly twice")
    expected = set(range(1, 2 * len(codes) + 1))
    if set(counts) != expected:
        raise DuplicateLabelError(f"Edge labels must be exactly 1..{2 * len(codes)}, got {sorted(counts)}")


def _check_single_component(codes: Sequence[Tuple[int, ...]]) -> None:
    strands = nx.MultiGraph()
    for a, b, c, d in codes:
        strands.add_edge(a, c)
        strands.add_edge(b, d)
    components = nx.number_connected_components(strands)
    if components > 1:
        raise LinkDiagramError(f"links unsupported: the code describes {components} components")


def _successor(label: int, modulus: int) -> int:
    return label % modulus + 1


def _orient(index: int, code: Tuple[int, int, int, int], modulus: int) -> Crossing:
    a, b, c, d = code
    if c != _successor(a, modulus):
        raise InconsistentDiagramError(f"Under-strand {a} -> {c} of crossing {index} is not consecutive")
    if modulus == 2:
        # Only two labels: the over slot sharing the under-strand's incoming label is outgoing.
        over_in_slot = 3 if b == a else 1
    elif b == _successor(d, modulus):
        over_in_slot = 3
    elif d == _successor(b, modulus):
        over_in_slot = 1
    else:
        raise InconsistentDiagramError(f"Over-strand {b}, {d} of crossing {index} is not consecutive")
    # Right-hand rule: under-strand heading north, over-strand heading east from slot 3 is positive.
    sign = 1 if over_in_slot == 3 else -1
    return Crossing(id=index, slots=code, sign=sign, over_in_slot=over_in_slot)


def writhe(diagram: Diagram) -> int:
    return diagram.writhe


def bad_edges(diagram: Diagram) -> List[Edge]:
    return [edge for edge in diagram.edges if edge.is_bad]


def is_alternating(diagram: Diagram) -> bool:
    return not bad_edges(diagram)


def bad_domain_count(diagram: Diagram) -> int:
    """Number of faces with at least one bad edge on their boundary."""
    bad = {edge.label for edge in bad_edges(diagram)}
    return sum(1 for face in diagram.faces if face.boundary_edges & bad)


def _flip_code(crossing: Crossing) -> Tuple[int, int, int, int]:
    a, b, c, d = crossing.slots
    # The old over-strand becomes the under-strand and leads the new code.
    if crossing.sign > 0:
        return (d, a, b, c)
    return (b, c, d, a)


def flip_crossings(diagram: Diagram, crossing_ids: Iterable[int], name: Optional[str] = None) -> Diagram:
    """Change the crossings with the given ids, keeping the projection and labels."""
    flipped = set(crossing_ids)
    unknown = flipped - set(range(diagram.n))
    if unknown:
        raise KeyError(f"No crossings with ids {sorted(unknown)}")
    codes = [_flip_code(crossing) if crossing.id in flipped else crossing.slots for crossing in diagram.crossings]
    return Diagram(codes, name=diagram.name if name is None else name)


def mirror(diagram: Diagram) -> Diagram:
    name = None
    if diagram.name:
        name = diagram.name[:-1] if diagram.name.endswith("*") else diagram.name + "*"
    return flip_crossings(diagram, range(diagram.n), name=name)
