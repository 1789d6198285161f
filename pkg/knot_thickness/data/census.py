import csv
import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Union

from ..diagrams import Diagram, braid_closure, parse_braid, parse_pd
from ..exceptions import MalformedInputError


logger = logging.getLogger(__name__)

DEFAULT_CENSUS = Path(__file__).resolve().parent / "census.csv"
# Written by scripts/prepare_census.py; built from SnapPy when missing.
ROLFSEN_CENSUS = Path(__file__).resolve().parent / "rolfsen.csv"
ROLFSEN = "rolfsen"
FIELDS = ("name", "pd", "braid", "determinant", "alternating")


@dataclass(frozen=True)
class CensusRecord:
    """One census row. `pd` wins over `braid` when both are given.

    PD tokens may use `;` in place of `,` so that a code fits in one CSV cell.
    """

    name: str
    pd: str = ""
    braid: str = ""
    determinant: Optional[int] = None
    alternating: Optional[bool] = None

    def diagram(self) -> Diagram:
        if self.pd:
            return parse_pd(self.pd.replace(";", ","), name=self.name)
        if self.braid:
            return braid_closure(parse_braid(self.braid), name=self.name)
        raise MalformedInputError(f"Census record {self.name} has neither a PD code nor a braid word")

    def to_json(self) -> Dict[str, object]:
        entry: Dict[str, object] = {"name": self.name}
        if self.pd:
            entry["pd"] = self.pd
        if self.braid:
            entry["braid"] = self.braid
        if self.determinant is not None:
            entry["determinant"] = self.determinant
        if self.alternating is not None:
            entry["alternating"] = self.alternating
        return entry


def _parse_bool(value: Union[str, bool, None]) -> Optional[bool]:
    if value is None or value == "":
        return None
    if isinstance(value, bool):
        return value
    lowered = value.strip().lower()
    if lowered in ("true", "yes", "1"):
        return True
    if lowered in ("false", "no", "0"):
        return False
    raise MalformedInputError(f"Expected a boolean, got {value!r}")


def _parse_int(value: Union[str, int, None]) -> Optional[int]:
    if value is None or value == "":
        return None
    try:
        return int(value)
    except ValueError:
        raise MalformedInputError(f"Expected an integer, got {value!r}") from None


def _record(row: Dict[str, object], where: str) -> CensusRecord:
    name = str(row.get("name") or "").strip()
    if not name:
        raise MalformedInputError(f"Census entry {where} has no name")
    return CensusRecord(
        name=name,
        pd=str(row.get("pd") or "").strip(),
        braid=str(row.get("braid") or "").strip(),
        determinant=_parse_int(row.get("determinant")),  # type: ignore
        alternating=_parse_bool(row.get("alternating")),  # type: ignore
    )


def load_census(path: Optional[Union[str, Path]] = None) -> List[CensusRecord]:
    """Read a census from CSV (header `name,pd,...`) or from a JSON array of objects.

    `None` selects the bundled sample and `"rolfsen"` the prime knots up to ten crossings.
    """
    if path == ROLFSEN:
        if not ROLFSEN_CENSUS.is_file():
            from .rolfsen import rolfsen_census

            return rolfsen_census()
        path = ROLFSEN_CENSUS
    path = Path(path) if path is not None else DEFAULT_CENSUS
    if not path.is_file():
        raise FileNotFoundError(f"Census file {path} does not exist")
    if path.suffix == ".json":
        with open(path, encoding="utf-8") as f:
            entries = json.load(f)
        if not isinstance(entries, list):
            raise MalformedInputError(f"{path} must hold a JSON array of census entries")
        records = [_record(entry, f"#{index}") for index, entry in enumerate(entries)]
    else:
        with open(path, newline="", encoding="utf-8") as f:
            reader = csv.DictReader(f)
            if reader.fieldnames is None or "name" not in reader.fieldnames:
                raise MalformedInputError(f"{path} needs a header row starting with `name`")
            records = [_record(row, f"on line {reader.line_num}") for row in reader]
    logger.info("Loaded %d census records from %s", len(records), path)
    return records


def save_census(records: List[CensusRecord], path: Union[str, Path]) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    if path.suffix == ".json":
        with open(path, "w", encoding="utf-8") as f:
            json.dump([record.to_json() for record in records], f, indent=2)
            f.write("\n")
        return
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.DictWriter(f, fieldnames=FIELDS)
        writer.writeheader()
        for record in records:
            row = record.to_json()
            if "alternating" in row:
                row["alternating"] = str(row["alternating"]).lower()
            writer.writerow(row)
