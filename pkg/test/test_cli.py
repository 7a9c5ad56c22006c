from __future__ import annotations
import json
from pathlib import Path
import pytest
from isotonic.cli import join_negative_values, main
from isotonic.dbt import Series, load


def run(capsys: pytest.CaptureFixture[str], *argv: str) -> tuple[int, str]:
    code = main(list(argv))
    return code, capsys.readouterr().out


@pytest.mark.parametrize(
    "argv,joined",
    [
        (["--alpha", "-3/2"], ["--alpha=-3/2"]),
        (["--a", "-2", "--n", "3"], ["--a=-2", "--n", "3"]),
        (["--omega", "2", "--a", "5/2"], ["--omega", "2", "--a", "5/2"]),
        (["--n", "-1"], ["--n", "-1"]),
        (["--alpha", "-v"], ["--alpha", "-v"]),
        (["--alpha"], ["--alpha"]),
    ],
)
def test_join_negative_values(argv: list[str], joined: list[str]) -> None:
    assert join_negative_values(argv) == joined


@pytest.mark.parametrize(
    "argv",
    [
        ["extend", "--series", "L1", "--n", "1", "--a", "2.5"],
        ["extend", "--series", "L5", "--n", "1", "--a", "2"],
        ["extend", "--series", "base", "--n", "1", "--a", "2"],
        ["extend", "--series", "L1", "--n", "1"],
        ["extend", "--series", "L1", "--n", "-1", "--a", "2"],
        ["extend", "--series", "L1", "--n", "1", "--a", "2", "--omega", "0"],
        ["check", "klh", "--n", "3"],
        ["check", "klh", "--n", "3", "--alpha", "-2"],
        ["check", "shape", "--series", "L0", "--n", "1", "--a", "5/2"],
        ["check", "riccati", "--n", "1", "--a", "5/2"],
        ["spectrum", "--series", "base", "--a", "2", "--levels", "0"],
        ["plot-data", "--series", "L1", "--n", "1", "--a", "2", "--levels", "3", "--k", "3"],
        ["plot-data", "--series", "base", "--a", "2", "--extra-state"],
    ],
)
def test_usage_errors(argv: list[str]) -> None:
    with pytest.raises(SystemExit) as excinfo:
        main(argv)
    assert excinfo.value.code == 2


def test_extend(capsys: pytest.CaptureFixture[str]) -> None:
    code, out = run(capsys, "extend", "--series", "L1", "--n", "0", "--omega", "2", "--a", "2")
    assert code == 0
    data = json.loads(out)
    assert data["series"] == "L1"
    assert data["a"] == "2"


def test_extend_output(tmp_path: Path) -> None:
    outfile = tmp_path / "l2.json"
    argv = ["extend", "--series", "L2", "--n", "2", "--omega", "2", "--a", "9/2", "-o", str(outfile)]
    assert main(argv) == 0
    with outfile.open(encoding="utf-8") as fp:
        ep = load(fp)
    assert ep.series is Series.L2
    assert ep.n == 2
    assert ep.seed_energy == -8


def test_extend_singular_warns(caplog: pytest.LogCaptureFixture, tmp_path: Path) -> None:
    outfile = tmp_path / "l0.json"
    assert main(["extend", "--series", "L0", "--n", "2", "--a", "2", "-o", str(outfile)]) == 0
    assert "singular" in caplog.text


def test_check_klh(capsys: pytest.CaptureFixture[str]) -> None:
    code, out = run(capsys, "check", "klh", "--n", "3", "--alpha", "-3/2")
    assert code == 0
    data = json.loads(out)
    assert data["passed"] is True
    assert data["report"]["predicted"] == {"pos_zeros": 2, "neg_zeros": 1}


def test_check_riccati_degenerate_level(capsys: pytest.CaptureFixture[str]) -> None:
    code, out = run(
        capsys, "check", "riccati", "--series", "L2", "--n", "2", "--omega", "2", "--a", "5/2"
    )
    assert code == 0
    report = json.loads(out)["report"]
    assert report["k=0"] == "degenerate"
    assert report["k=1"] == {"num": [], "den": ["1"]}


def test_check_shape(capsys: pytest.CaptureFixture[str]) -> None:
    code, out = run(capsys, "check", "shape", "--series", "L1", "--n", "2", "--omega", "2", "--a", "7/3")
    assert code == 0
    data = json.loads(out)
    assert data["passed"] is True
    assert all(step["holds"] for step in data["report"]["lemma_chain"])


def test_check_shape_degenerate(capsys: pytest.CaptureFixture[str]) -> None:
    code, out = run(
        capsys, "check", "shape", "--series", "L2", "--n", "2", "--omega", "2", "--a", "5/2"
    )
    assert code == 1
    data = json.loads(out)
    assert data["passed"] is False
    assert "degenerate" in data


@pytest.mark.parametrize(
    "argv",
    [
        ["check", "regularity", "--series", "L3", "--n", "1", "--omega", "2", "--a", "4"],
        ["check", "wick", "--n", "4", "--a", "7/3"],
        ["check", "coincidence", "--a", "13/5", "--which", "P1Q1"],
        ["check", "coincidence", "--a", "13/5"],
    ],
)
def test_checks_pass(capsys: pytest.CaptureFixture[str], argv: list[str]) -> None:
    code, out = run(capsys, *argv)
    assert code == 0
    assert json.loads(out)["passed"] is True


def test_spectrum_csv(capsys: pytest.CaptureFixture[str]) -> None:
    code, out = run(
        capsys,
        "spectrum",
        "--series",
        "base",
        "--omega",
        "2",
        "--a",
        "5/2",
        "--levels",
        "3",
        "--format",
        "csv",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "k,predicted,computed,abs_error,nodes"
    assert len(lines) == 4
    assert lines[1].startswith("0,0,")


def test_spectrum_l3_json(capsys: pytest.CaptureFixture[str]) -> None:
    code, out = run(
        capsys, "spectrum", "--series", "L3", "--n", "2", "--omega", "2", "--a", "7/2", "--levels", "2"
    )
    assert code == 0
    data = json.loads(out)
    assert [lv["predicted"] for lv in data["levels"]] == ["-12", "0", "4"]


def test_spectrum_pole_in_window(capsys: pytest.CaptureFixture[str]) -> None:
    code, _ = run(capsys, "spectrum", "--series", "L0", "--n", "1", "--omega", "2", "--a", "5/2")
    assert code == 1


def test_spectrum_boundary(capsys: pytest.CaptureFixture[str]) -> None:
    code, _ = run(capsys, "spectrum", "--series", "base", "--a", "1/2")
    assert code == 2


def test_plot_data(tmp_path: Path) -> None:
    outfile = tmp_path / "plot.csv"
    argv = [
        "plot-data",
        "--series",
        "L1",
        "--n",
        "1",
        "--omega",
        "2",
        "--a",
        "5/2",
        "--levels",
        "3",
        "--k",
        "0",
        "--k",
        "1",
        "--samples",
        "50",
        "-o",
        str(outfile),
    ]
    assert main(argv) == 0
    lines = outfile.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "x,V,psi_0,psi_1"
    assert len(lines) == 51
