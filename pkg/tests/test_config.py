import json

import pytest

from wavenav.config import (ConfigError, apply_overrides, load_config,
                            parse_config)
from wavenav.runner import run_scenario

MINIMAL = '{"grid": {"nx": 41, "ny": 41}, "start": [4, 4], "target": [36, 36]}'


def test_minimal_config_gets_all_defaults():
    cfg = parse_config(MINIMAL)
    assert (cfg.nx, cfg.ny) == (41, 41)
    assert cfg.start == (4, 4) and cfg.targets == [(36, 36)]
    assert cfg.mode == "homogeneous" and cfg.seed is None
    assert cfg.max_steps == 1000
    assert cfg.synapse.s_ee_max == 50.0
    assert cfg.synapse.d_e == 2.0 and cfg.synapse.d_i == 2.0
    assert cfg.substeps == 2 and cfg.v_floor == -90.0 and cfg.stim_dc == 25.0
    assert cfg.attractor.J == 12.0 and cfg.attractor.sigma == 0.03
    assert cfg.attractor.T == 0.05 and cfg.attractor.tau == 0.8
    assert cfg.coupling.R == 12 and cfg.coupling.arrival_radius == 2.0
    assert cfg.coupling.max_steps == 1000
    assert cfg.frame_stride == 0 and cfg.out_dir == "out"


def test_explicit_tau():
    raw = json.loads(MINIMAL)
    raw["attractor"] = {"tau": 0.8}
    cfg = parse_config(json.dumps(raw))
    assert cfg.attractor.tau == 0.8


def test_unknown_keys_rejected_with_location():
    raw = json.loads(MINIMAL)
    raw["attractor"] = {"sigmaa": 0.03}
    with pytest.raises(ConfigError, match="sigmaa.*attractor"):
        parse_config(json.dumps(raw))
    raw = json.loads(MINIMAL)
    raw["speed"] = 3
    with pytest.raises(ConfigError, match="speed.*top level"):
        parse_config(json.dumps(raw))


def test_syntax_error_reports_line_and_column():
    with pytest.raises(ConfigError, match=r"line 3, column 3"):
        parse_config('{\n"grid": {"nx": 5, "ny": 5},\n  target: [1, 1]\n}')


def test_start_inside_obstacle_names_the_field():
    raw = json.loads(MINIMAL)
    raw["obstacles"] = [[3, 3, 6, 6]]
    with pytest.raises(ConfigError, match="start.*obstacle"):
        parse_config(json.dumps(raw))


def test_target_geometry_checks():
    raw = json.loads(MINIMAL)
    raw["target"] = [80, 80]
    with pytest.raises(ConfigError, match="target.*outside"):
        parse_config(json.dumps(raw))
    raw = json.loads(MINIMAL)
    raw["obstacles"] = [[34, 34, 38, 38]]
    with pytest.raises(ConfigError, match="target.*obstacle"):
        parse_config(json.dumps(raw))


def test_missing_required_fields():
    with pytest.raises(ConfigError, match="grid"):
        parse_config('{"target": [1, 1]}')
    with pytest.raises(ConfigError, match="target"):
        parse_config('{"grid": {"nx": 5, "ny": 5}}')


def test_multiple_targets_require_wave_only():
    raw = json.loads(MINIMAL)
    raw["target"] = [[4, 10], [30, 10]]
    with pytest.raises(ConfigError, match="start"):
        parse_config(json.dumps(raw))
    raw["start"] = None
    cfg = parse_config(json.dumps(raw))
    assert cfg.targets == [(4, 10), (30, 10)]


def test_type_checks():
    raw = json.loads(MINIMAL)
    raw["max_steps"] = "many"
    with pytest.raises(ConfigError, match="max_steps"):
        parse_config(json.dumps(raw))
    raw = json.loads(MINIMAL)
    raw["seed"] = True
    with pytest.raises(ConfigError, match="seed"):
        parse_config(json.dumps(raw))
    raw = json.loads(MINIMAL)
    raw["coupling"] = {"R": 2.5}
    with pytest.raises(ConfigError, match="R.*integer"):
        parse_config(json.dumps(raw))
    raw = json.loads(MINIMAL)
    raw["synapse"] = {"metric": "polar"}
    with pytest.raises(ConfigError, match="metric"):
        parse_config(json.dumps(raw))


def test_invalid_parameter_combinations():
    raw = json.loads(MINIMAL)
    raw["coupling"] = {"R": 4, "hold": 9}
    with pytest.raises(ConfigError, match="hold"):
        parse_config(json.dumps(raw))
    raw = json.loads(MINIMAL)
    raw["attractor"] = {"sigma": -1.0}
    with pytest.raises(ConfigError, match="sigma"):
        parse_config(json.dumps(raw))


def test_max_steps_reaches_the_coupling_budget():
    raw = json.loads(MINIMAL)
    raw["max_steps"] = 77
    cfg = parse_config(json.dumps(raw))
    assert cfg.coupling.max_steps == 77


def test_heterogeneous_without_seed_fails_at_run_time():
    raw = json.loads(MINIMAL)
    raw["mode"] = "heterogeneous"
    cfg = parse_config(json.dumps(raw))  # parses fine, seed may come later
    with pytest.raises(ConfigError, match="seed"):
        run_scenario(cfg)


def test_apply_overrides():
    text = apply_overrides(MINIMAL, ["coupling.R=9", "seed=4",
                                     "synapse.metric=euclid"])
    cfg = parse_config(text)
    assert cfg.coupling.R == 9
    assert cfg.seed == 4
    assert cfg.synapse.metric == "euclid"
    with pytest.raises(ConfigError, match="form"):
        apply_overrides(MINIMAL, ["coupling.R"])
    with pytest.raises(ConfigError, match="non-object"):
        apply_overrides(MINIMAL, ["grid.nx.deep=1"])
    with pytest.raises(ConfigError, match="line"):
        apply_overrides("{not json", ["seed=1"])


def test_load_config_names_after_the_file(tmp_path):
    path = tmp_path / "my_run.cfg"
    path.write_text(MINIMAL)
    assert load_config(path).name == "my_run"
