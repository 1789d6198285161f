import sys
sys.path.append('.')

import argparse
import logging
from pathlib import Path

from tqdm import tqdm

from knot_thickness.data import ROLFSEN_CENSUS, CensusRecord, load_census, rolfsen_census, save_census


def expand(source: Path):
    """Records of `source` with every braid row expanded to a PD code."""
    records = []
    for record in tqdm(load_census(source), desc="Expanding", unit="knot"):
        records.append(
            CensusRecord(
                name=record.name,
                pd=record.diagram().to_pd_string().replace(",", ";"),
                braid=record.braid,
                determinant=record.determinant,
                alternating=record.alternating,
            )
        )
    return records


def main():
    parser = argparse.ArgumentParser(description="Write the Rolfsen census, or expand the braid rows of a census.")
    parser.add_argument("--expand", type=Path, default=None, metavar="CENSUS", help="Expand this census instead.")
    parser.add_argument("--max-crossings", type=int, default=10)
    parser.add_argument("--output", type=Path, default=ROLFSEN_CENSUS)
    args = parser.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(message)s")

    if args.expand is not None:
        records = expand(args.expand)
    else:
        records = rolfsen_census(args.max_crossings)
    save_census(records, args.output)
    save_census(records, args.output.with_suffix(".json"))
    logging.info("Wrote %d records to %s", len(records), args.output)


if __name__ == "__main__":
    main()
