import math

import pytest

import cadel


def test_presets_and_ik():
    cfg = cadel.build_preset(cadel.Version.LCADEL)
    assert cfg.cable_count == 2
    assert cfg.routing == ["forearm_following", "forearm_following"]
    lengths = cadel.inverse_kinematics(cfg, cadel.JointState(0.0, 0.0))
    assert lengths[0] == pytest.approx(lengths[1], abs=1e-14)
    q = cadel.forward_kinematics(cfg, cadel.inverse_kinematics(cfg, cadel.JointState(0.7, 0.2)),
                                 cadel.JointState(0.6, 0.1))
    assert q.alpha == pytest.approx(0.7, abs=1e-8)
    assert q.beta == pytest.approx(0.2, abs=1e-8)


def test_config_json_round_trip():
    cfg = cadel.build_preset(cadel.Version.CADEL3)
    assert cadel.DeviceConfig.from_json(cfg.to_json()) == cfg
    with pytest.raises(cadel.ConfigError):
        cadel.DeviceConfig.from_json("{}")


def test_statics_and_errors():
    cfg = cadel.build_preset(cadel.Version.LCADEL)
    sol = cadel.tension_distribution(cfg, cadel.JointState(0.0, 0.0), [2.0, 0.0])
    assert sol.tensions[0] == pytest.approx(sol.tensions[1], abs=1e-9)
    with pytest.raises(cadel.Infeasible):
        cadel.tension_distribution(cfg, cadel.JointState(0.0, 0.0), [-1.0, 0.0])
    assert issubclass(cadel.Infeasible, cadel.CadelError)
    bad = cadel.build_preset(cadel.Version.CADEL)
    ring = bad.arm_ring
    ring.radius = -1.0
    bad.arm_ring = ring
    with pytest.raises(cadel.InvalidGeometry):
        cadel.validate_config(bad)


def test_exercise_and_workspace():
    cfg = cadel.build_preset(cadel.Version.LCADEL)
    rec = cadel.simulate_exercise(cfg, cadel.bench_load(0.5))
    assert math.degrees(rec.summary.rms_tracking_error) < 1.0
    assert len(rec.time) == len(rec.alpha) == len(rec.tensions)
    load = cadel.bench_load(0.0)
    load.forearm_mass = 0.0
    grid = cadel.workspace_map(cfg, load, 13, 11)
    assert grid.feasible_fraction() == 1.0
