"""JSON config ingestion for stack assemblies.

Keys carry their units explicitly (sheet_resistance_ohm_per_sq, radius_um,
shell_resistivity_uohm_cm, area_um2, ...) because the source data mixes
unit systems.  Every diagnostic names the offending field and layer.

Top-level schema::

    {
      "layers": [
        {"name": ..., "sheet_resistance_ohm_per_sq": ...,
         "cube_count": ...                      # and/or width_um/length_um/thickness_um
        },
        {"name": ..., "particle": {"radius_um": ..., "shell_thickness_um": ...,
                                   "shell_resistivity_uohm_cm": ...},
         "contact_count": ...                   # or density_per_um2 + area_um2
        }
      ],
      "measured_resistance_ohm": ...,           # optional
      "sweep": {"parameter": "particle-count" | "shell-thickness",
                "from": ..., "to": ..., "steps": ...},   # optional
      "monte_carlo": {"trials": ..., "seed": ...}        # optional
    }
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import ConfigError, ValidationError
from .model import AcfContactSpec, LayerSpec, ParticleSpec, StackAssembly

SWEEP_PARAMETERS = ("particle-count", "shell-thickness")

_BUILTIN = "data/default_stack.json"


@dataclass(frozen=True)
class SweepSettings:
    parameter: str
    start: float
    stop: float
    steps: int


@dataclass(frozen=True)
class MonteCarloSettings:
    trials: int
    seed: int


@dataclass(frozen=True)
class AssemblyConfig:
    assembly: StackAssembly
    sweep: SweepSettings | None = None
    monte_carlo: MonteCarloSettings | None = None


def _check_keys(mapping, allowed, where):
    unknown = set(mapping) - set(allowed)
    if unknown:
        raise ConfigError(f"{where}: unknown key(s) {sorted(unknown)}")


def _number(mapping, key, where, required=False):
    if key not in mapping:
        if required:
            raise ConfigError(f"{where}.{key}: missing required field")
        return None
    value = mapping[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{where}.{key}: expected a number, got {value!r}")
    return float(value)


def _integer(mapping, key, where, required=False):
    if key not in mapping:
        if required:
            raise ConfigError(f"{where}.{key}: missing required field")
        return None
    value = mapping[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{where}.{key}: expected an integer, got {value!r}")
    return value


def _name(mapping, where):
    if "name" not in mapping:
        raise ConfigError(f"{where}.name: missing required field")
    if not isinstance(mapping["name"], str) or not mapping["name"]:
        raise ConfigError(
            f"{where}.name: expected a non-empty string, "
            f"got {mapping['name']!r}")
    return mapping["name"]


def _parse_particle(mapping, where):
    if not isinstance(mapping, dict):
        raise ConfigError(f"{where}: expected an object, got {mapping!r}")
    _check_keys(mapping, ("radius_um", "shell_thickness_um",
                          "shell_resistivity_uohm_cm"), where)
    try:
        return ParticleSpec(
            radius=_number(mapping, "radius_um", where, required=True),
            shell_thickness=_number(mapping, "shell_thickness_um", where,
                                    required=True),
            shell_resistivity=_number(mapping, "shell_resistivity_uohm_cm",
                                      where, required=True),
        )
    except ValidationError as exc:
        raise ConfigError(f"{where}: {exc}") from exc


def _parse_layer(mapping, index):
    where = f"layers[{index}]"
    if not isinstance(mapping, dict):
        raise ConfigError(f"{where}: expected an object, got {mapping!r}")
    name = _name(mapping, where)
    try:
        if "particle" in mapping:
            _check_keys(mapping, ("name", "particle", "contact_count",
                                  "density_per_um2", "area_um2"), where)
            return AcfContactSpec(
                particle=_parse_particle(mapping["particle"],
                                         f"{where}.particle"),
                contact_count=_number(mapping, "contact_count", where),
                density=_number(mapping, "density_per_um2", where),
                area=_number(mapping, "area_um2", where),
                name=name,
            )
        _check_keys(mapping, ("name", "sheet_resistance_ohm_per_sq",
                              "width_um", "length_um", "thickness_um",
                              "cube_count"), where)
        return LayerSpec(
            name=name,
            sheet_resistance=_number(mapping, "sheet_resistance_ohm_per_sq",
                                     where, required=True),
            width=_number(mapping, "width_um", where),
            length=_number(mapping, "length_um", where),
            thickness=_number(mapping, "thickness_um", where),
            cube_count=_number(mapping, "cube_count", where),
        )
    except ConfigError:
        raise
    except ValidationError as exc:
        raise ConfigError(f"{where}: {exc}") from exc


def assembly_from_dict(data) -> StackAssembly:
    """Build a validated StackAssembly from a parsed config dict."""
    if not isinstance(data, dict):
        raise ConfigError(f"config root: expected an object, got {data!r}")
    _check_keys(data, ("layers", "measured_resistance_ohm", "sweep",
                       "monte_carlo"), "config root")
    if "layers" not in data:
        raise ConfigError("config root.layers: missing required field")
    if not isinstance(data["layers"], list) or not data["layers"]:
        raise ConfigError("config root.layers: expected a non-empty list")
    layers = tuple(_parse_layer(entry, i)
                   for i, entry in enumerate(data["layers"]))
    measured = _number(data, "measured_resistance_ohm", "config root")
    try:
        return StackAssembly(layers, measured_resistance=measured)
    except ValidationError as exc:
        raise ConfigError(f"config root: {exc}") from exc


def _parse_sweep(mapping):
    where = "sweep"
    if not isinstance(mapping, dict):
        raise ConfigError(f"{where}: expected an object, got {mapping!r}")
    _check_keys(mapping, ("parameter", "from", "to", "steps"), where)
    parameter = mapping.get("parameter")
    if parameter not in SWEEP_PARAMETERS:
        raise ConfigError(
            f"{where}.parameter: expected one of {SWEEP_PARAMETERS}, "
            f"got {parameter!r}")
    start = _number(mapping, "from", where, required=True)
    stop = _number(mapping, "to", where, required=True)
    steps = _integer(mapping, "steps", where, required=True)
    if steps < 1:
        raise ConfigError(f"{where}.steps: must be >= 1, got {steps}")
    return SweepSettings(parameter, start, stop, steps)


def _parse_monte_carlo(mapping):
    where = "monte_carlo"
    if not isinstance(mapping, dict):
        raise ConfigError(f"{where}: expected an object, got {mapping!r}")
    _check_keys(mapping, ("trials", "seed"), where)
    trials = _integer(mapping, "trials", where, required=True)
    seed = _integer(mapping, "seed", where, required=True)
    if trials < 1:
        raise ConfigError(f"{where}.trials: must be >= 1, got {trials}")
    if seed < 0:
        raise ConfigError(f"{where}.seed: must be >= 0, got {seed}")
    return MonteCarloSettings(trials, seed)


def config_from_dict(data) -> AssemblyConfig:
    assembly = assembly_from_dict(data)
    sweep = _parse_sweep(data["sweep"]) if "sweep" in data else None
    monte_carlo = _parse_monte_carlo(data["monte_carlo"]) \
        if "monte_carlo" in data else None
    return AssemblyConfig(assembly, sweep, monte_carlo)


def _parse_text(text, source) -> AssemblyConfig:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{source}: invalid JSON: {exc}") from exc
    return config_from_dict(data)


def load_config(path) -> AssemblyConfig:
    """Load and validate a config file."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    return _parse_text(text, str(path))


def load_builtin_config() -> AssemblyConfig:
    """The bundled reference chip-on-glass stack."""
    text = resources.files(__package__).joinpath(_BUILTIN).read_text()
    return _parse_text(text, "builtin default stack")


def load_assembly(path) -> StackAssembly:
    """Load a config file and return just the stack."""
    return load_config(path).assembly


def assembly_to_dict(stack: StackAssembly) -> dict:
    """Serialize a StackAssembly to the config dict format (round-trips)."""
    layers = []
    for layer in stack.layers:
        if isinstance(layer, AcfContactSpec):
            entry = {
                "name": layer.name,
                "particle": {
                    "radius_um": layer.particle.radius,
                    "shell_thickness_um": layer.particle.shell_thickness,
                    "shell_resistivity_uohm_cm":
                        layer.particle.shell_resistivity,
                },
            }
            if layer.contact_count is not None:
                entry["contact_count"] = layer.contact_count
            else:
                entry["density_per_um2"] = layer.density
                entry["area_um2"] = layer.area
        else:
            entry = {
                "name": layer.name,
                "sheet_resistance_ohm_per_sq": layer.sheet_resistance,
            }
            if layer.width is not None:
                entry["width_um"] = layer.width
                entry["length_um"] = layer.length
                entry["thickness_um"] = layer.thickness
            if layer.cube_count is not None:
                entry["cube_count"] = layer.cube_count
        layers.append(entry)
    data = {"layers": layers}
    if stack.measured_resistance is not None:
        data["measured_resistance_ohm"] = stack.measured_resistance
    return data
