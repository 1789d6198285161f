import sys
sys.path.append('.')

import json
import logging
from pathlib import Path

import hydra
from omegaconf import DictConfig, OmegaConf

from knot_thickness.analysis import Settings, overall_status
from knot_thickness.cli import run_verify, summarize
from knot_thickness.data import ROLFSEN, load_census


logger = logging.getLogger(__name__)


@hydra.main(version_base=None, config_path="../knot_thickness/conf", config_name="config")
def main(cfg: DictConfig):
    census = cfg.census
    if census and census != ROLFSEN:
        census = hydra.utils.to_absolute_path(census)
    records = load_census(census)

    settings = Settings(
        max_states=int(cfg.limits.max_states),
        all_edges=cfg.analyze.all_edges,
        deep=cfg.verify.deep,
        max_crossings=cfg.verify.max_crossings,
        fox_max_crossings=cfg.verify.fox_max_crossings,
        deep_max_crossings=cfg.verify.deep_max_crossings,
        brute_force_max_crossings=cfg.verify.brute_force_max_crossings,
    )
    outcomes = run_verify(records, settings, jobs=cfg.jobs)
    status = overall_status([outcome.status for outcome in outcomes])

    report = {
        "config": OmegaConf.to_container(cfg, resolve=True),
        "records": [outcome.to_json() for outcome in outcomes],
        "summary": summarize(outcomes),
        "status": status.value,
    }
    # hydra changes into the run directory before calling main
    with open(Path.cwd() / "report.json", "w", encoding="utf-8") as f:
        json.dump(report, f, indent=2, sort_keys=True, ensure_ascii=False)
    logger.info("Census status: %s (%s)", status.value, report["summary"])
    if status.exit_code:
        sys.exit(status.exit_code)


if __name__ == "__main__":
    main()
