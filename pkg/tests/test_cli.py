import json

import pytest
import yaml

from nomgame.cli import main
from nomgame.config import ConfigError, parse_config
from nomgame.fixtures import OUTSIDER_FIXTURES


def write_cfg(tmp_path, params, extra=""):
    path = tmp_path / "run.yaml"
    path.write_text(yaml.safe_dump(params.to_dict(), sort_keys=False) + extra)
    return str(path)


def test_solve_case5(tmp_path, capsys):
    assert main(["solve", "--config", write_cfg(tmp_path, OUTSIDER_FIXTURES[5])]) == 0
    out = json.loads(capsys.readouterr().out)
    o = out["WithOutsider"]
    assert o["case"] == "WithOutsider/5"
    assert o["offer_o"]["policy"] == pytest.approx(0.3)
    assert o["offer_o"]["rent"] == pytest.approx(0.4)


def test_solve_zero_valence_lottery(tmp_path, capsys):
    cfg = write_cfg(tmp_path, OUTSIDER_FIXTURES[4])
    assert main(["solve", "--config", cfg]) == 0
    ins = json.loads(capsys.readouterr().out)["InsiderOnly"]
    assert ins["result"]["lottery"] and ins["winning_policy"] == 0


def test_invalid_param_exit_2(tmp_path, capsys):
    cfg = write_cfg(tmp_path, OUTSIDER_FIXTURES[5])
    assert main(["solve", "--config", cfg, "--set", "k_l=0.2"]) == 2
    assert "k_l < 0" in capsys.readouterr().err


def test_config_errors_name_the_line(tmp_path):
    text = yaml.safe_dump(OUTSIDER_FIXTURES[5].to_dict(), sort_keys=False)
    text = text.replace("k_r: 0.5", "k_r: -0.5")
    with pytest.raises(ConfigError, match=r"run.yaml:6: k_r=-0.5 violates k_r > 0"):
        parse_config(text, "run.yaml")
    with pytest.raises(ConfigError, match="unknown key"):
        parse_config("bogus: 1\n", "run.yaml")
    with pytest.raises(ConfigError, match="missing model parameter"):
        parse_config("b_L: -1\n")
    with pytest.raises(ConfigError, match="flat"):
        parse_config("- 1\n- 2\n")


def test_missing_params_for_solve(capsys):
    assert main(["solve"]) == 2


def test_dump_config_round_trip(tmp_path, capsys):
    cfg = write_cfg(tmp_path, OUTSIDER_FIXTURES[9], "tie_eps: 1.0e-10\nseed: 4\n")
    assert main(["dump-config", "--config", cfg, "--grid-steps", "51"]) == 0
    dumped = capsys.readouterr().out
    first = parse_config(dumped)
    assert first.policy_steps == 51 and first.seed == 4
    assert parse_config(first.dump()) == first


def test_verify_single_instance_case9(tmp_path, capsys):
    assert main(["verify", "--config", write_cfg(tmp_path, OUTSIDER_FIXTURES[9])]) == 0
    report = json.loads(capsys.readouterr().out)
    checks = report["results"][0]["checks"]
    assert all(c["agree_rent"] for c in checks)


def test_verify_default_fixtures_reports_case10(capsys):
    code = main(["verify", "--format", "csv"])
    captured = capsys.readouterr()
    rows = [line.split(",") for line in captured.out.splitlines()[1:]]
    assert len(rows) == 28
    failing = {r[0] for r in rows if r[3:6] != ["True", "True", "True"]}
    assert failing == {"WithOutsider/10"}
    assert code == 1


def test_verify_negative_control(tmp_path, capsys):
    cfg = write_cfg(tmp_path, OUTSIDER_FIXTURES[5])
    assert main(["verify", "--config", cfg, "--negative-control"]) == 1
    assert "discrepancy" in capsys.readouterr().err


def test_verify_random_batch(capsys):
    main(["verify", "--seed", "3", "--set", "draws=3", "--grid-steps", "41"])
    assert json.loads(capsys.readouterr().out)["instances"] == 3


def test_sweep_outputs(tmp_path, capsys):
    cfg = write_cfg(tmp_path, OUTSIDER_FIXTURES[5])
    assert main(["sweep", "--config", cfg, "--axis1", "V_r:-0.5:0.5:2",
                 "--axis2", "V_o:-0.5:0.5:2"]) == 0
    first = capsys.readouterr().out
    assert len(first.splitlines()) == 5
    out = tmp_path / "a.csv"
    assert main(["sweep", "--config", cfg, "--axis1", "V_r:-0.5:0.5:2",
                 "--axis2", "V_o:-0.5:0.5:2", "--out", str(out)]) == 0
    assert out.read_text() == first
    assert main(["sweep", "--config", cfg, "--axis1", "k_r:0.3:0.3:1",
                 "--axis2", "b_R:1:1:1", "--format", "json"]) == 0
    assert len(json.loads(capsys.readouterr().out)["cells"]) == 1


def test_sweep_all_infeasible(tmp_path, capsys):
    cfg = write_cfg(tmp_path, OUTSIDER_FIXTURES[5])
    assert main(["sweep", "--config", cfg, "--axis1", "V_o:-5:-4:2", "--axis2", "k_r:0.3:0.3:1"]) == 2


def test_sweep_parallel_matches_serial(tmp_path, capsys, monkeypatch):
    cfg = write_cfg(tmp_path, OUTSIDER_FIXTURES[11])
    argv = ["sweep", "--config", cfg, "--axis1", "V_r:0.2:0.9:4", "--axis2", "k_r:0.1:0.6:3"]
    main(argv)
    serial = capsys.readouterr().out
    monkeypatch.setenv("NOMGAME_THREADS", "2")
    main(argv)
    assert capsys.readouterr().out == serial


def test_regions(capsys):
    assert main(["regions", "--resolution", "3"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "V,X,preference" and "0,0,indifferent" in lines
