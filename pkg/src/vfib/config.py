"""Flat key=value configuration files with command-line overrides."""

from __future__ import annotations

from dataclasses import asdict
from pathlib import Path

from .case import CaseConfig, ConfigError, DEFAULT_PHASES
from .grid import DomainSpec

#: Recognized configuration keys and their parsers.
_PARSERS = {
    "delta_f_over_D": float,
    "delta_f_over_dx": float,
    "delta_f_over_dxf": int,
    "cfl": float,
    "periods": int,
    "sfs_enabled": None,  # bool, handled below
    "circle_center_x": float,
    "circle_center_y": float,
    "D": float,
    "domain_length_x": float,
    "domain_length_y": float,
    "output_dir": str,
    "phases": None,  # comma list of floats
    "alpha_method": str,
    "marker_spacing_factor": float,
}


def _parse_bool(key: str, raw: str) -> bool:
    low = raw.strip().lower()
    if low in ("1", "true", "on", "yes"):
        return True
    if low in ("0", "false", "off", "no"):
        return False
    raise ConfigError(f"{key}: expected a boolean, got {raw!r}")


def parse_config(path: str | Path | None = None, overrides=()) -> CaseConfig:
    """Build a CaseConfig from an optional file plus key=value overrides.

    Unknown keys are rejected with the offending key named. An empty input
    yields the default configuration.
    """
    pairs: list[tuple[str, str]] = []
    if path is not None:
        for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            if "=" not in stripped:
                raise ConfigError(f"{path}:{lineno}: expected key=value, got {line!r}")
            key, _, value = stripped.partition("=")
            pairs.append((key.strip(), value.strip()))
    for item in overrides:
        if "=" not in item:
            raise ConfigError(f"override {item!r} is not of the form key=value")
        key, _, value = item.partition("=")
        pairs.append((key.strip(), value.strip()))

    kw: dict = {}
    center = {"x": 0.0, "y": 0.0}
    domain = {"x": 2.0, "y": 2.0}
    center_seen = domain_seen = False
    for key, raw in pairs:
        if key not in _PARSERS:
            raise ConfigError(f"unknown configuration key {key!r}")
        try:
            if key == "sfs_enabled":
                kw[key] = _parse_bool(key, raw)
            elif key == "phases":
                kw[key] = tuple(float(v) for v in raw.split(",") if v.strip())
            elif key in ("circle_center_x", "circle_center_y"):
                center[key[-1]] = float(raw)
                center_seen = True
            elif key in ("domain_length_x", "domain_length_y"):
                domain[key[-1]] = float(raw)
                domain_seen = True
            else:
                kw[key] = _PARSERS[key](raw)
        except ConfigError:
            raise
        except ValueError as exc:
            raise ConfigError(f"{key}: {exc}") from exc
    if center_seen:
        kw["circle_center"] = (center["x"], center["y"])
    if domain_seen:
        kw["domain"] = DomainSpec(domain["x"], domain["y"])
    return CaseConfig(**kw)


def config_dict(config: CaseConfig) -> dict:
    """JSON-serializable echo of a configuration for manifests."""
    d = asdict(config)
    d["domain"] = {"length_x": config.domain.length_x, "length_y": config.domain.length_y}
    d["circle_center"] = list(config.circle_center)
    d["phases"] = list(config.phases)
    return d
