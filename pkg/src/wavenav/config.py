"""Scenario configuration: JSON text with strict key checking.

Grammar (all sections optional unless noted):

    {
      "grid":      {"nx": int >= 3, "ny": int >= 3},          (required)
      "obstacles": [[x0, y0, x1, y1], ...],                   inclusive bounds
      "start":     [x, y] | null,          null = run the wave layer only
      "target":    [x, y] | [[x, y], ...], (required) stimulated node(s)
      "mode":      "homogeneous" | "heterogeneous",
      "seed":      int | null,             required to run heterogeneous mode
      "max_steps": int >= 1,
      "synapse":   {"s_ee_max", "s_ei_max", "s_ie_max", "d_e", "d_i",
                    "metric", "substeps", "v_floor", "stim_dc"},
      "attractor": {"J", "sigma", "T", "tau", "warmup", "seed_radius",
                    "jitter_seed", "jitter_mag"},
      "coupling":  {"R", "hold", "arrival_radius"},
      "output":    {"frame_stride": int >= 0, "directory": str}
    }

Unknown keys anywhere are rejected. Multi-node "target" is only valid
together with "start": null (wave-only scenarios with several sources).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .attractor import AttractorParams
from .manifold import Manifold, build_manifold
from .planner import CouplingParams
from .wave import STIM_DC, SynapseConfig


class ConfigError(ValueError):
    pass


_SYNAPSE_KEYS = {"s_ee_max", "s_ei_max", "s_ie_max", "d_e", "d_i", "metric",
                 "substeps", "v_floor", "stim_dc"}
_ATTRACTOR_KEYS = {"J", "sigma", "T", "tau", "warmup", "seed_radius",
                   "jitter_seed", "jitter_mag"}
_COUPLING_KEYS = {"R", "hold", "arrival_radius"}
_OUTPUT_KEYS = {"frame_stride", "directory"}
_TOP_KEYS = {"grid", "obstacles", "start", "target", "mode", "seed",
             "max_steps", "synapse", "attractor", "coupling", "output"}


@dataclass
class ScenarioConfig:
    nx: int
    ny: int
    obstacles: list = field(default_factory=list)
    start: tuple[int, int] | None = None
    targets: list = field(default_factory=list)
    mode: str = "homogeneous"
    seed: int | None = None
    max_steps: int = 1000
    synapse: SynapseConfig = field(default_factory=SynapseConfig)
    substeps: int = 2
    v_floor: float | None = -90.0
    stim_dc: float = STIM_DC
    attractor: AttractorParams = field(default_factory=AttractorParams)
    coupling: CouplingParams = field(default_factory=CouplingParams)
    frame_stride: int = 0
    out_dir: str = "out"
    name: str = "scenario"

    def build(self) -> Manifold:
        return build_manifold(self.nx, self.ny, self.obstacles)


def _reject_unknown(section: dict, allowed: set, where: str) -> None:
    for key in section:
        if key not in allowed:
            raise ConfigError(f"unknown key {key!r} in {where}")


def _coord(value, where: str) -> tuple[int, int]:
    if (not isinstance(value, list) or len(value) != 2
            or not all(isinstance(v, int) for v in value)):
        raise ConfigError(f"{where} must be a [x, y] pair of integers")
    return value[0], value[1]


def _number(section: dict, key: str, where: str, default, *,
            integer: bool = False, optional: bool = False):
    if key not in section:
        return default
    value = section[key]
    if value is None and optional:
        return None
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{where}.{key} must be a number")
    if integer:
        if not isinstance(value, int):
            raise ConfigError(f"{where}.{key} must be an integer")
        return value
    return float(value)


def parse_config(text: str, name: str = "scenario") -> ScenarioConfig:
    """Parse and fully validate a scenario; defaults applied to omissions."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigError(
            f"syntax error at line {e.lineno}, column {e.colno}: {e.msg}") from e
    if not isinstance(raw, dict):
        raise ConfigError("top level must be an object")
    _reject_unknown(raw, _TOP_KEYS, "top level")

    if "grid" not in raw:
        raise ConfigError("missing required section 'grid'")
    grid = raw["grid"]
    _reject_unknown(grid, {"nx", "ny"}, "'grid'")
    nx = _number(grid, "nx", "grid", None, integer=True)
    ny = _number(grid, "ny", "grid", None, integer=True)
    if nx is None or ny is None:
        raise ConfigError("grid.nx and grid.ny are required")
    if nx < 3 or ny < 3:
        raise ConfigError("grid.nx and grid.ny must be >= 3")

    obstacles = raw.get("obstacles", [])
    if not isinstance(obstacles, list):
        raise ConfigError("obstacles must be a list of rectangles")
    rects = []
    for i, rect in enumerate(obstacles):
        if (not isinstance(rect, list) or len(rect) != 4
                or not all(isinstance(v, int) for v in rect)):
            raise ConfigError(f"obstacles[{i}] must be [x0, y0, x1, y1] integers")
        rects.append(tuple(rect))

    start = raw.get("start")
    if start is not None:
        start = _coord(start, "start")

    if "target" not in raw or raw["target"] is None:
        raise ConfigError("missing required field 'target'")
    target = raw["target"]
    if isinstance(target, list) and target and isinstance(target[0], list):
        targets = [_coord(t, f"target[{i}]") for i, t in enumerate(target)]
    else:
        targets = [_coord(target, "target")]
    if len(targets) > 1 and start is not None:
        raise ConfigError("multiple targets require start: null")

    mode = raw.get("mode", "homogeneous")
    if mode not in ("homogeneous", "heterogeneous"):
        raise ConfigError(f"mode must be homogeneous or heterogeneous, got {mode!r}")
    seed = raw.get("seed")
    if seed is not None and (isinstance(seed, bool) or not isinstance(seed, int)):
        raise ConfigError("seed must be an integer or null")
    max_steps = _number(raw, "max_steps", "top level", 1000, integer=True)
    if max_steps < 1:
        raise ConfigError("max_steps must be >= 1")

    syn = raw.get("synapse", {})
    _reject_unknown(syn, _SYNAPSE_KEYS, "'synapse'")
    metric = syn.get("metric", "manhattan")
    if metric not in ("manhattan", "euclid", "cheb"):
        raise ConfigError(
            f"synapse.metric must be manhattan, euclid or cheb, got {metric!r}")
    synapse = SynapseConfig(
        s_ee_max=_number(syn, "s_ee_max", "synapse", 50.0),
        s_ei_max=_number(syn, "s_ei_max", "synapse", 9.0),
        s_ie_max=_number(syn, "s_ie_max", "synapse", -200.0),
        d_e=_number(syn, "d_e", "synapse", 2.0),
        d_i=_number(syn, "d_i", "synapse", 2.0),
        metric=metric)
    try:
        synapse.validate()
    except ValueError as e:
        raise ConfigError(f"synapse: {e}") from e
    substeps = _number(syn, "substeps", "synapse", 2, integer=True)
    if substeps < 1:
        raise ConfigError("synapse.substeps must be >= 1")
    v_floor = _number(syn, "v_floor", "synapse", -90.0, optional=True)
    stim_dc = _number(syn, "stim_dc", "synapse", STIM_DC)

    att = raw.get("attractor", {})
    _reject_unknown(att, _ATTRACTOR_KEYS, "'attractor'")
    jitter_seed = att.get("jitter_seed")
    if jitter_seed is not None and (isinstance(jitter_seed, bool)
                                    or not isinstance(jitter_seed, int)):
        raise ConfigError("attractor.jitter_seed must be an integer or null")
    attractor = AttractorParams(
        J=_number(att, "J", "attractor", 12.0),
        sigma=_number(att, "sigma", "attractor", 0.03),
        T=_number(att, "T", "attractor", 0.05),
        tau=_number(att, "tau", "attractor", 0.8),
        warmup=_number(att, "warmup", "attractor", 50, integer=True),
        seed_radius=_number(att, "seed_radius", "attractor", 6.0),
        jitter_seed=jitter_seed,
        jitter_mag=_number(att, "jitter_mag", "attractor", 1e-9))
    try:
        attractor.validate()
    except ValueError as e:
        raise ConfigError(f"attractor: {e}") from e

    cpl = raw.get("coupling", {})
    _reject_unknown(cpl, _COUPLING_KEYS, "'coupling'")
    coupling = CouplingParams(
        R=_number(cpl, "R", "coupling", 12, integer=True),
        hold=_number(cpl, "hold", "coupling", None, integer=True, optional=True),
        arrival_radius=_number(cpl, "arrival_radius", "coupling", 2.0),
        max_steps=max_steps)
    try:
        coupling.validate()
    except ValueError as e:
        raise ConfigError(f"coupling: {e}") from e

    out = raw.get("output", {})
    _reject_unknown(out, _OUTPUT_KEYS, "'output'")
    frame_stride = _number(out, "frame_stride", "output", 0, integer=True)
    if frame_stride < 0:
        raise ConfigError("output.frame_stride must be >= 0")
    out_dir = out.get("directory", "out")
    if not isinstance(out_dir, str):
        raise ConfigError("output.directory must be a string")

    cfg = ScenarioConfig(
        nx=nx, ny=ny, obstacles=rects, start=start, targets=targets,
        mode=mode, seed=seed, max_steps=max_steps, synapse=synapse,
        substeps=substeps, v_floor=v_floor, stim_dc=stim_dc,
        attractor=attractor, coupling=coupling,
        frame_stride=frame_stride, out_dir=out_dir, name=name)
    _validate_geometry(cfg)
    return cfg


def _validate_geometry(cfg: ScenarioConfig) -> None:
    try:
        m = cfg.build()
    except ValueError as e:
        raise ConfigError(f"obstacles: {e}") from e
    for i, (tx, ty) in enumerate(cfg.targets):
        where = "target" if len(cfg.targets) == 1 else f"target[{i}]"
        if not (0 <= tx < cfg.nx and 0 <= ty < cfg.ny):
            raise ConfigError(f"{where} is outside the grid")
        if m.is_blocked(m.index(tx, ty)):
            raise ConfigError(f"{where} lies inside an obstacle")
    if cfg.start is not None:
        sx, sy = cfg.start
        if not (0 <= sx < cfg.nx and 0 <= sy < cfg.ny):
            raise ConfigError("start is outside the grid")
        if m.is_blocked(m.index(sx, sy)):
            raise ConfigError("start lies inside an obstacle")


def load_config(path) -> ScenarioConfig:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    name = str(path).rsplit("/", 1)[-1]
    name = name[:-4] if name.endswith(".cfg") else name
    return parse_config(text, name=name)


def apply_overrides(raw_text: str, overrides: list[str]) -> str:
    """Apply `section.key=value` strings onto raw JSON config text.

    Values are parsed as JSON, falling back to bare strings. Returns
    the updated JSON text; key validation happens in parse_config.
    """
    try:
        data = json.loads(raw_text)
    except json.JSONDecodeError as e:
        raise ConfigError(
            f"syntax error at line {e.lineno}, column {e.colno}: {e.msg}") from e
    for item in overrides:
        if "=" not in item:
            raise ConfigError(f"override {item!r} is not of the form key=value")
        dotted, value = item.split("=", 1)
        try:
            parsed = json.loads(value)
        except json.JSONDecodeError:
            parsed = value
        node = data
        parts = dotted.split(".")
        for part in parts[:-1]:
            node = node.setdefault(part, {})
            if not isinstance(node, dict):
                raise ConfigError(f"override {item!r} descends into a non-object")
        node[parts[-1]] = parsed
    return json.dumps(data)
