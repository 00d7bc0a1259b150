"""Configuration parsing and validation."""

import pytest

from vfib.case import DEFAULT_PHASES, CaseConfig, ConfigError, build_case
from vfib.config import config_dict, parse_config


def test_defaults_without_file():
    cfg = parse_config()
    assert cfg == CaseConfig()
    assert cfg.delta_f == pytest.approx(0.4 / 6.0)
    assert cfg.phases == DEFAULT_PHASES


def test_file_parsing(tmp_path):
    path = tmp_path / "case.cfg"
    path.write_text(
        "# comment line\n"
        "\n"
        "delta_f_over_D = 0.25\n"
        "cfl=0.3\n"
        "sfs_enabled = true\n"
        "phases = 0.25, 0.5\n"
        "circle_center_x = 0.1\n"
    )
    cfg = parse_config(path)
    assert cfg.delta_f_over_D == 0.25
    assert cfg.cfl == 0.3
    assert cfg.sfs_enabled is True
    assert cfg.phases == (0.25, 0.5)
    assert cfg.circle_center == (0.1, 0.0)


def test_overrides_win(tmp_path):
    path = tmp_path / "case.cfg"
    path.write_text("cfl = 0.3\n")
    cfg = parse_config(path, ["cfl=0.7", "periods=3"])
    assert cfg.cfl == 0.7
    assert cfg.periods == 3


def test_unknown_key_rejected():
    with pytest.raises(ConfigError, match="unknown"):
        parse_config(None, ["filter_width=0.1"])


def test_malformed_inputs(tmp_path):
    path = tmp_path / "bad.cfg"
    path.write_text("just a line without equals\n")
    with pytest.raises(ConfigError):
        parse_config(path)
    with pytest.raises(ConfigError):
        parse_config(None, ["cfl"])
    with pytest.raises(ConfigError):
        parse_config(None, ["sfs_enabled=maybe"])
    with pytest.raises(ConfigError):
        parse_config(None, ["cfl=fast"])


def test_validation_bounds():
    with pytest.raises(ConfigError):
        CaseConfig(cfl=0.0)
    with pytest.raises(ConfigError):
        CaseConfig(cfl=1.5)
    with pytest.raises(ConfigError):
        CaseConfig(delta_f_over_dxf=2)
    with pytest.raises(ConfigError):
        CaseConfig(periods=0)
    with pytest.raises(ConfigError):
        CaseConfig(alpha_method="magic")


def test_with_replaces_immutably():
    cfg = CaseConfig()
    other = cfg.with_(cfl=0.5)
    assert other.cfl == 0.5
    assert cfg.cfl == 0.1


def test_config_dict_roundtrip():
    cfg = CaseConfig(cfl=0.25, circle_center=(0.5, -0.34))
    d = config_dict(cfg)
    assert d["cfl"] == 0.25
    assert d["circle_center"] == [0.5, -0.34]
    assert d["domain"] == {"length_x": 2.0, "length_y": 2.0}


def test_setup_step_count_hits_phase_times():
    cfg = CaseConfig(
        delta_f_over_D=1.0 / 3.0, delta_f_over_dx=4.0, delta_f_over_dxf=8, cfl=0.5
    )
    setup = build_case(cfg)
    assert setup.steps_per_period % 8 == 0
    assert setup.dt * setup.steps_per_period == pytest.approx(1.0)
    # effective CFL never exceeds the requested one
    assert setup.dt <= cfg.cfl * setup.grid.dx + 1e-15


def test_circle_must_fit_with_halo():
    with pytest.raises(ConfigError):
        build_case(CaseConfig(circle_center=(0.9, 0.0)))
