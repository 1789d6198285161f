"""Text formats for knot diagrams.

PD codes follow the census convention: `X[a,b,c,d]` lists the edges around a
crossing counterclockwise starting at the incoming under-strand, edges are
numbered 1..2n along the orientation.

Signed Gauss codes list the crossings met along the knot as `O<k><s>` or
`U<k><s>`: over or under, crossing label k, crossing sign s in {+, -}. For
example the all-negative trefoil is `U1- O3- U2- O1- U3- O2-`.
"""
import re
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

from ..exceptions import (
    InconsistentDiagramError,
    LinkDiagramError,
    MalformedInputError,
    NonPlanarDiagramError,
    NonRealizableGaussCodeError,
)
from .diagram import Diagram


PD_TOKEN = re.compile(r"X\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]")
GAUSS_TOKEN = re.compile(r"([OUou])(\d+)([+-])")
SEPARATORS = re.compile(r"[\s,]*")

# (crossing key, passes over, crossing sign)
Visit = Tuple[Hashable, bool, int]


def _tokenize(text: str, pattern: "re.Pattern[str]", what: str) -> List["re.Match[str]"]:
    matches = []
    position = SEPARATORS.match(text, 0).end()  # type: ignore
    while position < len(text):
        match = pattern.match(text, position)
        if match is None:
            snippet = text[position : position + 12]
            raise MalformedInputError(f"Expected a {what} token, found {snippet!r}", position=position)
        matches.append(match)
        position = SEPARATORS.match(text, match.end()).end()  # type: ignore
    if not matches:
        raise MalformedInputError(f"No {what} tokens found in input")
    return matches


def _strip_wrapper(text: str, prefix: str) -> str:
    text = text.strip()
    if text.startswith(prefix) and text.endswith("]"):
        return text[len(prefix) : -1]
    return text


def parse_pd(text: str, name: Optional[str] = None) -> Diagram:
    """Parse a PD code such as `X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]`.

    Tokens may be separated by whitespace or commas and the whole code may be
    wrapped in `PD[...]`.
    """
    matches = _tokenize(_strip_wrapper(text, "PD["), PD_TOKEN, "X[a,b,c,d]")
    codes = [tuple(int(group) for group in match.groups()) for match in matches]
    return Diagram(codes, name=name)


def pd_from_visits(visits: Sequence[Visit]) -> List[Tuple[int, int, int, int]]:
    """Build PD codes from the crossings met along the knot.

    The edge arriving at the k-th visit (1-based) gets label k. Crossings are
    ordered by their keys.
    """
    modulus = len(visits)

    def successor(label: int) -> int:
        return label % modulus + 1

    under: Dict[Hashable, int] = {}
    over: Dict[Hashable, int] = {}
    signs: Dict[Hashable, int] = {}
    for index, (key, is_over, sign) in enumerate(visits, start=1):
        (over if is_over else under)[key] = index
        signs[key] = sign

    codes = []
    for key in sorted(signs):  # type: ignore
        u, o = under[key], over[key]
        if signs[key] > 0:
            codes.append((u, successor(o), successor(u), o))
        else:
            codes.append((u, o, successor(u), successor(o)))
    return codes


def parse_gauss(text: str, name: Optional[str] = None) -> Diagram:
    """Parse a signed Gauss code and check that it is realizable in the plane."""
    matches = _tokenize(text, GAUSS_TOKEN, "signed Gauss")
    visits: List[Visit] = []
    seen: Dict[int, List[Tuple[bool, int, int]]] = {}
    for match in matches:
        kind, label, sign_char = match.groups()
        is_over = kind.upper() == "O"
        sign = 1 if sign_char == "+" else -1
        visits.append((int(label), is_over, sign))
        seen.setdefault(int(label), []).append((is_over, sign, match.start()))

    for label, entries in sorted(seen.items()):
        if len(entries) != 2:
            raise MalformedInputError(
                f"Crossing {label} is visited {len(entries)} time(s), expected twice", position=entries[-1][2]
            )
        (first_over, first_sign, _), (second_over, second_sign, position) = entries
        if first_over == second_over:
            raise MalformedInputError(f"Crossing {label} needs one over and one under visit", position=position)
        if first_sign != second_sign:
            raise MalformedInputError(f"Crossing {label} has conflicting signs", position=position)

    try:
        return Diagram(pd_from_visits(visits), name=name)
    except NonPlanarDiagramError as error:
        raise NonRealizableGaussCodeError(f"Gauss code is not realizable as a planar diagram: {error}") from error


def to_gauss_string(diagram: Diagram) -> str:
    """Signed Gauss code of a diagram; crossing k of the code is crossing id k - 1."""
    tokens = []
    for edge in diagram.edges:
        crossing = diagram.crossings[edge.head_crossing]
        kind = "U" if edge.head_slot == 0 else "O"
        tokens.append(f"{kind}{crossing.id + 1}{'+' if crossing.sign > 0 else '-'}")
    return " ".join(tokens)


def parse_braid(text: str) -> List[int]:
    """Parse a braid word given as signed generator indices, e.g. `1 1 -2 1`."""
    word = []
    for match in re.finditer(r"\S+", text.replace(",", " ")):
        token = match.group()
        try:
            generator = int(token)
        except ValueError:
            raise MalformedInputError(f"Bad braid generator {token!r}", position=match.start()) from None
        if generator == 0:
            raise MalformedInputError("Braid generators are nonzero", position=match.start())
        word.append(generator)
    if not word:
        raise MalformedInputError("Empty braid word")
    return word


def braid_closure(word: Sequence[int], name: Optional[str] = None) -> Diagram:
    """Diagram of the closure of a braid word.

    Generator i is σ_i, a positive crossing in which the strand moving from
    position i to i + 1 passes over; -i is its inverse. Strands run upwards and
    close up on the right.
    """
    word = list(word)
    if not word or any(generator == 0 for generator in word):
        raise MalformedInputError("A braid word needs at least one nonzero generator")
    strands = max(abs(generator) for generator in word) + 1

    visits: List[Visit] = []
    position = 1
    for _ in range(strands):
        for level, generator in enumerate(word):
            low = abs(generator)
            sign = 1 if generator > 0 else -1
            if position == low:
                visits.append((level, sign > 0, sign))
                position = low + 1
            elif position == low + 1:
                visits.append((level, sign < 0, sign))
                position = low
        if position == 1:
            break

    if len(visits) != 2 * len(word):
        raise LinkDiagramError(f"links unsupported: the closure of braid {word} has more than one component")
    try:
        return Diagram(pd_from_visits(visits), name=name)
    except NonPlanarDiagramError as error:
        raise InconsistentDiagramError(f"Braid closure produced a non-planar code: {error}") from error
