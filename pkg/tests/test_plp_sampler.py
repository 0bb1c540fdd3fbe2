import pytest

from bench_creation.bench_spec import read_manifest
from plp_sampler import main
from program_parsing.parser import read_program
from utilities.csv_output import CHAIN_HEADER, QSTORE_HEADER, read_chain_csv

REACH = ["--query", "reach(a,d)", "--evidence", "reach(a,e)"]


def run_args(six_edge_path, *extra):
    return ["run", "--program", str(six_edge_path), *REACH, *extra]


def test_exact(six_edge_path, capsys):
    assert main(["exact", "--program", str(six_edge_path), "--query", "reach(a,e)", "--world-check"]) == 0
    out = capsys.readouterr().out
    assert "P(query)\t0.02882" in out
    assert "worlds\t64" in out


def test_run_writes_csv(six_edge_path, tmp_path, capsys):
    csv_path = tmp_path / "trace.csv"
    code = main(run_args(six_edge_path, "--samples", "200", "--burnin", "20", "--adapt", "on", "--csv", str(csv_path)))
    assert code == 0
    rows = read_chain_csv(csv_path)
    assert len(rows) == 200
    assert list(rows[0]) == CHAIN_HEADER
    assert "estimate" in capsys.readouterr().out


def test_run_is_reproducible(six_edge_path, tmp_path):
    paths = [tmp_path / "first.csv", tmp_path / "second.csv"]
    for path in paths:
        assert main(run_args(six_edge_path, "--samples", "300", "--seed", "5", "--resample", "multi",
                             "--adapt", "on", "--csv", str(path))) == 0
    first, second = (read_chain_csv(path) for path in paths)
    for left, right in zip(first, second):
        left.pop("elapsed_us")
        right.pop("elapsed_us")
    assert first == second


def test_run_with_plot_and_qdump(six_edge_path, tmp_path):
    plot, qdump = tmp_path / "trace.png", tmp_path / "q.csv"
    assert main(run_args(six_edge_path, "--samples", "100", "--adapt", "on", "--plot", str(plot),
                         "--qdump", str(qdump))) == 0
    assert plot.exists()
    assert qdump.read_text().splitlines()[0] == ",".join(QSTORE_HEADER)


def test_markovian_run(six_edge_path, capsys):
    assert main(run_args(six_edge_path, "--samples", "200", "--markovian", "on")) == 0
    assert "Independent sampler" in capsys.readouterr().out


def test_qdump(six_edge_path, tmp_path):
    out = tmp_path / "q.csv"
    assert main(["qdump", "--program", str(six_edge_path), *REACH, "--samples", "100", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == ",".join(QSTORE_HEADER)
    assert len(lines) > 1


def test_genbench(tmp_path, capsys):
    out = tmp_path / "bn.plp"
    assert main(["genbench", "bn", "--out", str(out), "--rows", "2", "--cols", "2", "--evidence-count", "1",
                 "--seed", "3"]) == 0
    assert read_program(out).clauses
    assert read_manifest(tmp_path / "bn.manifest")["family"] == "bn"
    assert "Benchmark\tbn" in capsys.readouterr().out


@pytest.mark.parametrize("extra", [
    ["--samples", "0"],
    ["--burnin", "-1"],
    ["--markovian", "on", "--resample", "single"],
    ["--adapt", "maybe"],
    ["--chains", "0"],
    ["--chains", "-2"],
])
def test_usage_errors(six_edge_path, extra):
    assert main(run_args(six_edge_path, *extra)) == 2


def test_bad_goal(six_edge_path):
    assert main(["exact", "--program", str(six_edge_path), "--query", "reach(a,"]) == 2
    assert main(["exact", "--program", str(six_edge_path), "--query", "reach(a,X)"]) == 2


def test_missing_program(tmp_path):
    assert main(["exact", "--program", str(tmp_path / "missing.plp"), "--query", "p"]) == 4
    assert main(["run", "--program", str(tmp_path / "missing.plp"), "--query", "p"]) == 4


def test_program_syntax_error(tmp_path, capsys):
    path = tmp_path / "broken.plp"
    path.write_text("p :- q(.\n")
    assert main(["exact", "--program", str(path), "--query", "p"]) == 3
    assert "line 1" in capsys.readouterr().err


def test_unsatisfiable_evidence_is_a_runtime_error(six_edge_path):
    assert main(["exact", "--program", str(six_edge_path), "--query", "reach(a,d)", "--evidence", "reach(e,a)"]) == 4
