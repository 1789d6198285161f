from pathlib import Path
from typing import Optional, Sequence

from omegaconf import DictConfig, OmegaConf


CONFIG_DIRNAME = Path(__file__).resolve().parent / "conf"
CONFIG_FILE = CONFIG_DIRNAME / "config.yaml"


def load_config(path: Optional[Path] = None, overrides: Sequence[str] = ()) -> DictConfig:
    """Load the YAML config and apply `key=value` dotlist overrides on top."""
    cfg = OmegaConf.load(path or CONFIG_FILE)
    if overrides:
        cfg = OmegaConf.merge(cfg, OmegaConf.from_dotlist(list(overrides)))
    return cfg  # type: ignore
