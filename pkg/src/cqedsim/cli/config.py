"""Scenario configuration files.

INI-style text with a [scenario] section naming the kind and its
parameters, and an [output] section with file paths and grid settings.
Keys carry explicit unit suffixes (g_MHz, T_mK, t_max_ns, ...) so configs
are self-documenting. Key case is preserved.
"""

from configparser import ConfigParser, Error as ParserError
from dataclasses import dataclass, field
from pathlib import Path

from ..errors import ConfigError

_REQUIRED = object()


@dataclass
class ScenarioConfig:
    kind: str
    params: dict = field(default_factory=dict)
    output: dict = field(default_factory=dict)


def load_config(path) -> ScenarioConfig:
    text = Path(path).read_text(encoding="utf-8")
    parser = ConfigParser(inline_comment_prefixes=("#", ";"))
    parser.optionxform = str
    try:
        parser.read_string(text, source=str(path))
    except ParserError as exc:
        raise ConfigError("(file)", f"cannot parse {path}: {exc}") from exc
    sections = set(parser.sections())
    unknown = sections - {"scenario", "output"}
    if unknown:
        raise ConfigError(sorted(unknown)[0], "unknown section")
    if "scenario" not in sections:
        raise ConfigError("scenario", "missing [scenario] section")
    params = dict(parser["scenario"])
    if "kind" not in params:
        raise ConfigError("scenario.kind", "missing scenario kind")
    kind = params.pop("kind")
    output = dict(parser["output"]) if "output" in sections else {}
    return ScenarioConfig(kind=kind, params=params, output=output)


def scenario_config_from_manifest(manifest: dict) -> ScenarioConfig:
    """Rebuild a runnable config from a manifest's resolved parameters."""
    params = manifest["parameters"]
    return ScenarioConfig(kind=manifest["kind"],
                          params=dict(params["scenario"]),
                          output=dict(params["output"]))


@dataclass(frozen=True)
class Param:
    """One validated scenario parameter."""

    name: str
    kind: str                    # float | int | bool | str | floats
    default: object = _REQUIRED
    positive: bool = False       # value > 0
    nonneg: bool = False         # value >= 0
    choices: tuple = ()
    help: str = ""

    @property
    def required(self) -> bool:
        return self.default is _REQUIRED


def _convert(param: Param, value, key: str):
    try:
        if param.kind == "float":
            if isinstance(value, bool):
                raise ValueError("expected a number")
            return float(value)
        if param.kind == "int":
            if isinstance(value, bool):
                raise ValueError("expected an integer")
            f = float(value)
            if f != int(f):
                raise ValueError("expected an integer")
            return int(f)
        if param.kind == "bool":
            if isinstance(value, bool):
                return value
            if str(value).lower() in ("true", "1", "yes", "on"):
                return True
            if str(value).lower() in ("false", "0", "no", "off"):
                return False
            raise ValueError("expected true/false")
        if param.kind == "str":
            return str(value)
        if param.kind == "floats":
            if isinstance(value, str):
                items = [s for s in value.split(",") if s.strip()]
            else:
                items = list(value)
            if not items:
                raise ValueError("expected a comma-separated list of numbers")
            return tuple(float(s) for s in items)
    except (TypeError, ValueError) as exc:
        raise ConfigError(key, f"invalid value {value!r}: {exc}") from exc
    raise ConfigError(key, f"unknown parameter kind {param.kind!r}")


class Schema:
    """Declarative validation of one config section."""

    def __init__(self, section: str, params: list[Param]):
        self.section = section
        self.params = {p.name: p for p in params}

    def validate(self, raw: dict) -> dict:
        for key in raw:
            if key not in self.params:
                raise ConfigError(f"{self.section}.{key}", "unknown parameter")
        resolved = {}
        for name, param in self.params.items():
            key = f"{self.section}.{name}"
            if name in raw:
                value = _convert(param, raw[name], key)
            elif param.required:
                raise ConfigError(key, "required parameter missing")
            else:
                value = param.default
            if param.positive and isinstance(value, (int, float)) \
                    and not value > 0:
                raise ConfigError(key, f"must be positive, got {value}")
            if param.nonneg and isinstance(value, (int, float)) \
                    and value < 0:
                raise ConfigError(key, f"must be >= 0, got {value}")
            if param.choices and value not in param.choices:
                raise ConfigError(
                    key, f"must be one of {param.choices}, got {value!r}")
            resolved[name] = value
        return resolved
