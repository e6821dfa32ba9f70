"""Run configuration: a flat YAML mapping plus command-line overrides."""

from __future__ import annotations

from dataclasses import dataclass, fields

import yaml

from .model import PARAM_FIELDS, TIE_EPS, InvalidParams, ModelParams
from .oracle import TIMINGS


class ConfigError(ValueError):
    """Bad configuration input; the message names the location and the rule."""


FORMATS = ("json", "csv")


@dataclass(frozen=True)
class RunConfig:
    params: ModelParams | None = None
    policy_steps: int = 201
    rent_steps: int = 101
    epsilon: float = 1e-6
    tie_eps: float = TIE_EPS
    timing: str = "responsive"
    format: str | None = None
    out: str | None = None
    seed: int | None = None
    draws: int = 200

    def to_mapping(self) -> dict:
        data = dict(self.params.to_dict()) if self.params else {}
        for f in fields(self):
            if f.name != "params":
                data[f.name] = getattr(self, f.name)
        return data

    def dump(self) -> str:
        return yaml.safe_dump(self.to_mapping(), sort_keys=False, default_flow_style=False)


_SETTINGS = {
    "policy_steps": int,
    "rent_steps": int,
    "epsilon": float,
    "tie_eps": float,
    "timing": str,
    "format": str,
    "out": str,
    "seed": int,
    "draws": int,
}


def _coerce(key: str, raw, where: str):
    if key in PARAM_FIELDS or _SETTINGS.get(key) is float:
        if isinstance(raw, bool) or not isinstance(raw, (int, float)):
            raise ConfigError(f"{where}: {key} must be a number, got {raw!r}")
        return float(raw)
    kind = _SETTINGS[key]
    if raw is None and key in ("format", "out", "seed"):
        return None
    if kind is int:
        if isinstance(raw, bool) or not isinstance(raw, int):
            raise ConfigError(f"{where}: {key} must be an integer, got {raw!r}")
        return raw
    if not isinstance(raw, str):
        raise ConfigError(f"{where}: {key} must be a string, got {raw!r}")
    return raw


def _build(values: dict, where: dict) -> RunConfig:
    given = [k for k in PARAM_FIELDS if k in values]
    params = None
    if given:
        missing = [k for k in PARAM_FIELDS if k not in values]
        if missing:
            raise ConfigError(f"missing model parameter(s): {', '.join(missing)}")
        try:
            params = ModelParams(**{k: values[k] for k in PARAM_FIELDS})
        except InvalidParams as exc:
            raise ConfigError(f"{where.get(exc.field, 'config')}: {exc}") from exc
    settings = {k: v for k, v in values.items() if k in _SETTINGS}
    cfg = RunConfig(params=params, **settings)
    checks = (
        ("policy_steps", cfg.policy_steps >= 2, "policy_steps >= 2"),
        ("rent_steps", cfg.rent_steps >= 2, "rent_steps >= 2"),
        ("epsilon", cfg.epsilon > 0, "epsilon > 0"),
        ("tie_eps", cfg.tie_eps >= 0, "tie_eps >= 0"),
        ("timing", cfg.timing in TIMINGS, f"timing in {TIMINGS}"),
        ("format", cfg.format in FORMATS + (None,), f"format in {FORMATS}"),
        ("draws", cfg.draws >= 1, "draws >= 1"),
    )
    for key, ok, rule in checks:
        if not ok:
            raise ConfigError(f"{where.get(key, 'config')}: {key}={getattr(cfg, key)!r} violates {rule}")
    return cfg


def parse_config(text: str, source: str = "<config>", overrides=()) -> RunConfig:
    """Parse YAML ``text`` and apply ``key=value`` overrides on top."""
    values, where = {}, {}
    try:
        root = yaml.compose(text) if text.strip() else None
    except yaml.YAMLError as exc:
        raise ConfigError(f"{source}: not valid YAML: {exc}") from exc
    if root is not None:
        if not isinstance(root, yaml.MappingNode):
            raise ConfigError(f"{source}:{root.start_mark.line + 1}: expected a flat key: value mapping")
        for knode, vnode in root.value:
            key = knode.value
            loc = f"{source}:{knode.start_mark.line + 1}"
            if key not in PARAM_FIELDS and key not in _SETTINGS:
                raise ConfigError(f"{loc}: unknown key {key!r}")
            if key in values:
                raise ConfigError(f"{loc}: duplicate key {key!r}")
            if not isinstance(vnode, yaml.ScalarNode):
                raise ConfigError(f"{loc}: {key} must be a scalar")
            raw = yaml.safe_load(yaml.serialize(vnode))
            values[key] = _coerce(key, raw, loc)
            where[key] = loc
    for item in overrides:
        key, sep, raw_text = item.partition("=")
        key = key.strip()
        loc = f"--set {item}"
        if not sep:
            raise ConfigError(f"{loc}: expected key=value")
        if key not in PARAM_FIELDS and key not in _SETTINGS:
            raise ConfigError(f"{loc}: unknown key {key!r}")
        try:
            raw = yaml.safe_load(raw_text)
        except yaml.YAMLError as exc:
            raise ConfigError(f"{loc}: cannot parse value") from exc
        values[key] = _coerce(key, raw, loc)
        where[key] = loc
    return _build(values, where)


def load_config(path: str | None, overrides=()) -> RunConfig:
    if path is None:
        return parse_config("", overrides=overrides)
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"{path}: cannot read config: {exc.strerror}") from exc
    return parse_config(text, path, overrides)


def with_flags(cfg: RunConfig, **flags) -> RunConfig:
    """Overlay non-None command-line flags."""
    given = {k: v for k, v in flags.items() if v is not None}
    if not given:
        return cfg
    merged = cfg.to_mapping()
    merged.update(given)
    return parse_config(yaml.safe_dump(merged, sort_keys=False), "<flags>")
