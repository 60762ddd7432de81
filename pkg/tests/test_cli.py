import json

import pytest

from fuzzyverb import cli


def run(capsys, *argv):
    code = cli.run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture(scope="module")
def workdir(tmp_path_factory):
    return tmp_path_factory.mktemp("cli")


@pytest.fixture(scope="module")
def fg_csv(workdir):
    path = workdir / "fg.csv"
    assert cli.run(["generate", "--grid-n", "21", "--out", str(path)]) == 0
    return path


@pytest.fixture(scope="module")
def trained_model(workdir, fg_csv):
    path = workdir / "model.json"
    code = cli.run(
        [
            "train", "--data", str(fg_csv), "--kind", "tsk", "--rules", "4",
            "--epochs", "100", "--learning-rate", "0.01", "--seed", "1",
            "--model-out", str(path),
        ]
    )
    assert code == 0
    return path


def test_generate_writes_csv(fg_csv):
    lines = fg_csv.read_text().splitlines()
    assert lines[0] == "x,y,z"
    assert len(lines) == 1 + 21 * 21


def test_end_to_end_pipeline(capsys, workdir, fg_csv, trained_model):
    code, out, err = run(
        capsys, "describe", "--model", str(trained_model), "--data", str(fg_csv)
    )
    assert code == 0 and err == ""
    assert out.count("RULE ") == 4
    locations = set()
    for line in out.splitlines():
        if line.lstrip().startswith(("IF", "AND")) and " is " in line and "input" in line:
            locations.add(line.rstrip(" .").split()[-1])
    assert locations == {"tiny", "large"}


def test_describe_json_format(capsys, fg_csv, trained_model):
    code, out, err = run(
        capsys, "describe", "--model", str(trained_model), "--data", str(fg_csv),
        "--format", "json",
    )
    assert code == 0
    obj = json.loads(out)
    assert len(obj["rules"]) == 4


def test_describe_golden_fixture(capsys, fg_csv, fixtures_dir, workdir):
    out_path = workdir / "tri.txt"
    code = cli.run(
        [
            "describe", "--model", str(fixtures_dir / "handcrafted_triangular.json"),
            "--data", str(fg_csv), "--out", str(out_path),
        ]
    )
    assert code == 0
    assert out_path.read_bytes() == (fixtures_dir / "handcrafted_triangular.txt").read_bytes()


def test_eval_prints_rmse(capsys, fg_csv, trained_model):
    code, out, err = run(capsys, "eval", "--model", str(trained_model), "--data", str(fg_csv))
    assert code == 0
    value = float(out.split()[-1])
    assert value >= 0.0


def test_curves_csv(capsys, trained_model):
    code, out, err = run(
        capsys, "curves", "--model", str(trained_model), "--attr", "0",
        "--n-points", "11",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "x,rule_1,rule_2,rule_3,rule_4"
    assert len(lines) == 12
    for line in lines[1:]:
        cells = [float(c) for c in line.split(",")]
        assert all(0.0 <= v <= 1.0 for v in cells[1:])


def test_reproducibility_byte_identical(workdir, fg_csv):
    paths = []
    for tag in ("a", "b"):
        model = workdir / f"model_{tag}.json"
        report = workdir / f"report_{tag}.csv"
        code = cli.run(
            [
                "train", "--data", str(fg_csv), "--kind", "tsk", "--rules", "3",
                "--epochs", "5", "--seed", "7", "--model-out", str(model),
                "--report-out", str(report),
            ]
        )
        assert code == 0
        paths.append((model, report))
    assert paths[0][0].read_bytes() == paths[1][0].read_bytes()
    assert paths[0][1].read_bytes() == paths[1][1].read_bytes()


def test_report_csv_shape(workdir, fg_csv):
    report = workdir / "report_a.csv"
    lines = report.read_text().splitlines()
    assert lines[0] == "epoch,rmse"
    assert len(lines) == 7  # header + epochs 0..5


def test_config_file_merged_under_flags(capsys, workdir, fg_csv):
    config = workdir / "cfg.json"
    config.write_text(json.dumps({"rules": 2, "epochs": 3, "seed": 11}))
    model = workdir / "model_cfg.json"
    code, out, err = run(
        capsys, "train", "--data", str(fg_csv), "--config", str(config),
        "--epochs", "4", "--model-out", str(model),
    )
    assert code == 0
    assert len(json.loads(model.read_text())["rules"]) == 2
    assert out.count("epoch ") == 5  # flag --epochs 4 overrides the config's 3


def test_usage_errors_exit_1(capsys):
    code, out, err = run(capsys, "trian")
    assert code == 1 and err.startswith("error: ")
    code, out, err = run(capsys, "train", "--nope")
    assert code == 1 and err.startswith("error: ")
    code, out, err = run(capsys, "curves", "--model", "x.json", "--n-points", "1")
    assert code == 1


def test_data_errors_exit_2(capsys, workdir, trained_model):
    code, out, err = run(capsys, "eval", "--model", str(trained_model), "--data", "/no/such.csv")
    assert code == 2 and err.startswith("error: ")

    bad = workdir / "bad.csv"
    bad.write_text("x,y,z\n1,oops,3\n")
    code, out, err = run(capsys, "eval", "--model", str(trained_model), "--data", str(bad))
    assert code == 2 and "line 2" in err

    bad_model = workdir / "bad_model.json"
    bad_model.write_text("{\"kind\": \"XXX\", \"inputs\": [], \"rules\": []}")
    code, out, err = run(capsys, "describe", "--model", str(bad_model), "--data", str(bad))
    assert code == 2 and err.startswith("error: ")


def test_width_mismatch_is_data_error(capsys, workdir, trained_model):
    narrow = workdir / "narrow.csv"
    narrow.write_text("x,z\n1,2\n")
    code, out, err = run(capsys, "describe", "--model", str(trained_model), "--data", str(narrow))
    assert code == 2 and "inputs" in err


def test_unknown_config_key_is_usage_error(capsys, workdir, fg_csv):
    config = workdir / "bad_cfg.json"
    config.write_text(json.dumps({"momentum": 0.9}))
    code, out, err = run(
        capsys, "train", "--data", str(fg_csv), "--config", str(config),
        "--model-out", str(workdir / "m.json"),
    )
    assert code == 1 and "momentum" in err
