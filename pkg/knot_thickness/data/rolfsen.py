"""Prime knots up to ten crossings, from the knot tables that ship with SnapPy."""
import logging
from typing import Dict, List, Sequence

from tqdm import tqdm

from ..diagrams import goeritz_determinant, parse_pd
from .census import CensusRecord


logger = logging.getLogger(__name__)

# Number of prime knots per crossing number, chirality ignored.
ROLFSEN_COUNTS: Dict[int, int] = {3: 1, 4: 1, 5: 2, 6: 3, 7: 7, 8: 21, 9: 49, 10: 165}
# Tables list the alternating knots of each crossing number first.
FIRST_NON_ALTERNATING: Dict[int, int] = {8: 19, 9: 42, 10: 124}


def rolfsen_names(max_crossings: int = 10) -> List[str]:
    return [
        f"{crossings}_{index}"
        for crossings, count in ROLFSEN_COUNTS.items()
        if crossings <= max_crossings
        for index in range(1, count + 1)
    ]


def is_alternating_knot(name: str) -> bool:
    crossings, index = (int(part) for part in name.split("_"))
    return index < FIRST_NON_ALTERNATING.get(crossings, ROLFSEN_COUNTS[crossings] + 1)


def pd_code_string(codes: Sequence[Sequence[int]]) -> str:
    """Census form of a PD code with labels shifted to start at 1, e.g. `X[1;4;2;5] ...`."""
    low = min(label for code in codes for label in code)
    return " ".join("X[" + ";".join(str(label - low + 1) for label in code) + "]" for code in codes)


def rolfsen_census(max_crossings: int = 10) -> List[CensusRecord]:
    """One record per Rolfsen knot: the tabulated diagram, its determinant and whether the knot alternates.

    The determinant comes from the Goeritz matrix so that it can be checked against the Fox calculus.
    """
    import snappy

    records = []
    for name in tqdm(rolfsen_names(max_crossings), desc="Rolfsen", unit="knot", disable=None):
        pd = pd_code_string(snappy.Link(name).PD_code())
        diagram = parse_pd(pd.replace(";", ","), name=name)
        records.append(
            CensusRecord(
                name=name,
                pd=pd,
                determinant=goeritz_determinant(diagram),
                alternating=is_alternating_knot(name),
            )
        )
        logger.debug("%s: %d crossings", name, diagram.n)
    logger.info("Built %d Rolfsen records up to %d crossings", len(records), max_crossings)
    return records
