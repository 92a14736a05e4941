import subprocess
import sys

from frselect import cli
from frselect.tables import HEADER


def test_csv_is_byte_identical(tmp_path):
    args = ["run", "--family", "random", "--n", "20000", "--trials", "3", "--seed", "7",
            "--no-time"]
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert cli.main(args + ["--out", str(a)]) == 0
    assert cli.main(args + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert a.read_text().splitlines()[0].split(",") == HEADER


def test_multiple_rows_and_table(capsys):
    assert cli.main(["run", "--family", "sorted", "organpipe", "--n", "5000", "8000",
                     "--trials", "1", "--format", "table", "--k", "17"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert len(out) == 5


def test_options_reach_params(capsys):
    assert cli.main(["run", "--family", "sorted", "--n", "50000", "--trials", "1",
                     "--gap", "knuth", "--r2", "2", "--eta-bar", "1", "--no-randomize",
                     "--no-time"]) == 0
    row = capsys.readouterr().out.splitlines()[1].split(",")
    assert float(row[5]) > 10


def test_validate_bounds_flag(capsys):
    assert cli.main(["run", "--n", "100000", "--trials", "5", "--validate-bounds",
                     "--trace"]) == 0
    err = capsys.readouterr().err
    assert "# bounds random" in err and "trial,depth" in err


def test_bad_arguments_exit_nonzero(capsys):
    for argv in (["run", "--beta", "0.1"], ["run", "--n", "10", "--k", "11"],
                 ["run", "--n", "4000000"], ["run", "--k", "zero"]):
        try:
            code = cli.main(argv)
        except SystemExit as exc:
            code = exc.code
        assert code != 0


def test_oracle_mismatch_exit_code(monkeypatch, capsys):
    from frselect import bench
    real = bench.select
    monkeypatch.setattr(bench, "select",
                        lambda *a, **kw: real(*a, **kw)._replace(value=-1))
    assert cli.main(["run", "--n", "1000", "--trials", "1"]) == cli.EXIT_MISMATCH


def test_console_script():
    out = subprocess.run([sys.executable, "-m", "frselect.cli", "run", "--n", "3000",
                          "--trials", "2", "--no-time"], capture_output=True, text=True,
                         check=True).stdout
    assert out.startswith("input,n,")
