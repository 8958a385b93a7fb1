# tests/test_config.py
import os
import tempfile

import pytest

from src.core.exceptions import ConfigError
from src.models.config_models import FlipToolConfig
from src.models.flip_models import FlipKind
from src.utils.config import anneal_config, load_config


def write_config(content: str) -> str:
    with tempfile.NamedTemporaryFile(mode="w", suffix=".yaml", delete=False) as f:
        f.write(content)
        return f.name


def test_default_config_loading():
    """Test the bundled YAML defaults"""
    config = load_config()
    assert isinstance(config, FlipToolConfig)
    assert config.logging.level == "WARNING"
    assert config.search.threads == 1
    assert config.search.max_classes is None
    assert config.anneal.cooling_factor == 0.99
    assert config.anneal.initial_temperature is None
    assert config.certificate.max_classes == 100000


def test_config_loading():
    """Test configuration loading from YAML"""
    config_path = write_config(
        """
logging:
  level: "debug"
search:
  max_classes: 500
  threads: 4
anneal:
  cooling_factor: 0.95
  max_flips: 1000
  rng_seed: 42
"""
    )
    try:
        config = load_config(config_path)
        assert config.logging.level == "DEBUG"
        assert config.search.max_classes == 500
        assert config.search.threads == 4
        assert config.anneal.rng_seed == 42
        assert config.generators.default_seed == 0
    finally:
        os.unlink(config_path)


def test_invalid_configs():
    """Test that broken files raise ConfigError"""
    with pytest.raises(ConfigError):
        load_config("does/not/exist.yaml")

    for content in ("search: [1, 2\n", "- just\n- a list\n", "anneal:\n  cooling_factor: 1.5\n"):
        config_path = write_config(content)
        try:
            with pytest.raises(ConfigError):
                load_config(config_path)
        finally:
            os.unlink(config_path)


def test_anneal_overrides():
    """Test command-line style overrides of the annealing section"""
    config = load_config()
    merged = anneal_config(config, {"rng_seed": 7, "max_flips": None, "allowed_kinds": ["23"]})
    assert merged.rng_seed == 7
    assert merged.max_flips == config.anneal.max_flips
    assert merged.allowed_kinds == [FlipKind.TWO_THREE]
    with pytest.raises(ConfigError):
        anneal_config(config, {"cooling_factor": 2.0})
