from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from pydantic import ValidationError

from ..core.exceptions import ConfigError
from ..models.anneal_models import AnnealConfig
from ..models.config_models import FlipToolConfig

DEFAULT_CONFIG_PATH = Path(__file__).resolve().parent.parent / "config" / "flip_config.yaml"


def load_config(config_path: Optional[str] = None) -> FlipToolConfig:
    """Load and validate the YAML configuration; the bundled defaults when no path is given"""

    config_file = Path(config_path) if config_path else DEFAULT_CONFIG_PATH
    if not config_file.exists():
        raise ConfigError(f"Configuration file not found: {config_file}")

    with open(config_file, "r", encoding="utf-8") as f:
        try:
            raw = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ConfigError(f"Invalid YAML in {config_file}: {e}") from e

    if not isinstance(raw, dict):
        raise ConfigError(f"Configuration root must be a mapping: {config_file}")

    try:
        return FlipToolConfig.model_validate(raw)
    except ValidationError as e:
        raise ConfigError(f"Invalid configuration {config_file}: {e}") from e


def anneal_config(config: FlipToolConfig, overrides: Optional[Dict[str, Any]] = None) -> AnnealConfig:
    """Annealing schedule from the config file with non-None command-line overrides applied"""
    values = config.anneal.model_dump(exclude={"max_restarts"})
    values.update({k: v for k, v in (overrides or {}).items() if v is not None})
    try:
        return AnnealConfig.model_validate(values)
    except ValidationError as e:
        raise ConfigError(f"Invalid annealing parameters: {e}") from e
