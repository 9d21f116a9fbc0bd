import json
import warnings

import pytest

from gravwitness.cli import main
from gravwitness.core import ConfigConsistencyWarning, config_from_dict


def run_cli(capsys, *argv):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ConfigConsistencyWarning)
        code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_defaults_round_trips_validate(capsys):
    code, out, _ = run_cli(capsys, "defaults")
    assert code == 0
    data = json.loads(out)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ConfigConsistencyWarning)
        cfg = config_from_dict(data)
    assert cfg.tau == 2.5


def test_witness_payload_keys(capsys):
    code, out, _ = run_cli(capsys, "witness", "--paper-defaults")
    assert code == 0
    data = json.loads(out)
    for key in ("dPhiLR", "dPhiRL", "w", "wOptimized", "negativity",
                "feasibility"):
        assert key in data
    assert data["feasibility"]["feasible"] is True
    assert data["negativity"] == pytest.approx(0.0781617306618, rel=1e-9)


def test_phases_with_dynamic(capsys):
    code, out, _ = run_cli(capsys, "phases", "--paper-defaults",
                           "--dynamic-steps", "200")
    data = json.loads(out)
    assert code == 0
    assert data["dynamic"]["dPhiRL"] >= data["dPhiRL"]


def test_state_payload(capsys):
    code, out, _ = run_cli(capsys, "state", "--paper-defaults")
    data = json.loads(out)
    assert code == 0
    assert data["purity"] == pytest.approx(1.0, abs=1e-12)
    assert len(data["rhoRe"]) == 4 and len(data["rhoIm"]) == 4


def test_constraints_and_decoherence(capsys):
    code, out, _ = run_cli(capsys, "constraints", "--paper-defaults")
    assert code == 0
    assert json.loads(out)["feasible"] is True
    code, out, _ = run_cli(capsys, "decoherence", "--paper-defaults")
    assert code == 0
    assert json.loads(out)["tauColl"] == pytest.approx(23.4025, rel=1e-4)


def test_field_convergence(capsys):
    code, out, _ = run_cli(capsys, "field", "--paper-defaults",
                           "--n-modes", "1000")
    data = json.loads(out)
    assert code == 0
    assert data["convergence"][-1]["ratio"] == pytest.approx(1.0, abs=0.05)
    assert data["negativityClassicalized"] == 0.0
    assert data["minOverlapMagnitude"] >= 1 - 1e-6


def test_set_overrides(capsys):
    code, out, _ = run_cli(capsys, "phases", "--paper-defaults",
                           "--set", "tau=5.0")
    data = json.loads(out)
    assert code == 0
    assert data["dPhiRL"] == pytest.approx(2 * 0.43950828960523563, rel=1e-12)


def test_bad_set_value_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "phases", "--set", "tau=fast")
    assert code == 2
    assert "tau" in err


def test_unknown_set_key_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "phases", "--set", "speed=1")
    assert code == 2
    assert "unknown" in err


def test_invalid_config_value_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "phases", "--set", "m1=-1")
    assert code == 2
    assert "m1" in err


def test_config_file(tmp_path, capsys):
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps({"tau": 1.25}))
    code, out, _ = run_cli(capsys, "phases", "--config", str(path))
    assert code == 0
    assert json.loads(out)["dPhiRL"] == pytest.approx(
        0.43950828960523563 / 2, rel=1e-12)


def test_missing_config_file(capsys):
    code, _, err = run_cli(capsys, "phases", "--config", "/nonexistent.json")
    assert code == 2
    assert err


def test_out_of_regime_is_computation_error(capsys):
    code, _, err = run_cli(capsys, "decoherence", "--paper-defaults",
                           "--set", "tEnv=300")
    assert code == 1
    assert "wavelength" in err


def test_sweep_csv(capsys):
    code, out, _ = run_cli(capsys, "sweep", "--paper-defaults",
                           "--axis", "tau:0.5:2.5:5", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "tau,dPhiLR,dPhiRL,objective,cpRatio,tauColl,feasible,reason"
    assert len(lines) == 6


def test_sweep_malformed_axis_no_partial_output(tmp_path, capsys):
    out_file = tmp_path / "rows.csv"
    code, out, err = run_cli(capsys, "sweep", "--paper-defaults",
                             "--axis", "tau:5:0.5:5",
                             "--out", str(out_file))
    assert code == 2
    assert not out_file.exists()
    assert not out
    assert "min < max" in err


def test_sweep_requires_axis(capsys):
    code, _, err = run_cli(capsys, "sweep", "--paper-defaults")
    assert code == 2
    assert "--axis" in err


def test_sweep_maximize(capsys):
    code, out, _ = run_cli(capsys, "sweep", "--paper-defaults",
                           "--set", "pressure=1e-30", "--set", "tEnv=1e-3",
                           "--set", "tInt=1e-3",
                           "--axis", "tau:0.5:5:5", "--maximize")
    data = json.loads(out)
    assert code == 0
    assert data["row"]["feasible"] is True
    assert data["bestParams"]["tau"] == pytest.approx(5.0, rel=1e-6)


def test_out_writes_file(tmp_path, capsys):
    out_file = tmp_path / "witness.json"
    code, out, _ = run_cli(capsys, "witness", "--paper-defaults",
                           "--out", str(out_file))
    assert code == 0
    assert not out
    assert json.loads(out_file.read_text())["entangledByNegativity"] is True


def test_byte_identical_runs(capsys):
    _, out1, _ = run_cli(capsys, "witness", "--paper-defaults")
    _, out2, _ = run_cli(capsys, "witness", "--paper-defaults")
    assert out1 == out2
    _, csv1, _ = run_cli(capsys, "sweep", "--paper-defaults",
                         "--axis", "tau:0.5:2.5:9", "--format", "csv")
    _, csv2, _ = run_cli(capsys, "sweep", "--paper-defaults",
                         "--axis", "tau:0.5:2.5:9", "--format", "csv")
    assert csv1 == csv2


def test_table_and_csv_formats(capsys):
    code, out, _ = run_cli(capsys, "constraints", "--paper-defaults",
                           "--format", "table")
    assert code == 0
    assert out.startswith("key")
    code, out, _ = run_cli(capsys, "constraints", "--paper-defaults",
                           "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "key,value"


def test_sweep_table_and_json_formats(capsys):
    code, out, _ = run_cli(capsys, "sweep", "--paper-defaults",
                           "--axis", "tau:0.5:2.5:3", "--format", "table")
    assert code == 0
    assert out.splitlines()[0].split()[:2] == ["tau", "dPhiLR"]
    code, out, _ = run_cli(capsys, "sweep", "--paper-defaults",
                           "--axis", "tau:0.5:2.5:3", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 3 and rows[0]["feasible"] is True


def test_conflicting_config_sources(tmp_path, capsys):
    path = tmp_path / "cfg.json"
    path.write_text("{}")
    code, _, err = run_cli(capsys, "phases", "--config", str(path),
                           "--paper-defaults")
    assert code == 2
    assert "mutually exclusive" in err
