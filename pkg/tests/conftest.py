import os

import pytest

from wavenav.config import load_config
from wavenav.runner import verify_scenario

SCENARIO_DIR = os.path.join(os.path.dirname(__file__), os.pardir,
                            "src", "wavenav", "scenarios")


def scenario_path(name: str) -> str:
    return os.path.join(SCENARIO_DIR, name + ".cfg")


def load_scenario(name: str, **overrides):
    cfg = load_config(scenario_path(name))
    for key, value in overrides.items():
        setattr(cfg, key, value)
    return cfg


@pytest.fixture(scope="session")
def maze_results():
    """Run and verify the three shipped mazes once per test session."""
    out = {}
    for name in ("s_maze", "block", "complex"):
        cfg = load_scenario(name)
        result, row = verify_scenario(cfg)
        out[name] = (cfg, result, row)
    return out


@pytest.fixture(scope="session")
def simple_result():
    cfg = load_scenario("simple")
    result, row = verify_scenario(cfg)
    return cfg, result, row
