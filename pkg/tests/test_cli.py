import csv
import io
import json
import subprocess
import sys

import pytest

from rnabisect.cli import main
from rnabisect.graph import parse_edge_list, path_graph, serialize_edge_list


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def c72(tmp_path, capsys):
    path = tmp_path / "c72.txt"
    assert main(["gen", "cycle-power", "--n", "7", "--d", "2", "-o", str(path)]) == 0
    capsys.readouterr()
    return path


def test_gen_cycle_power(capsys):
    code, out, _ = run(capsys, "gen", "cycle-power", "--n", "7", "--d", "2")
    assert code == 0
    lines = [ln for ln in out.splitlines() if not ln.startswith("#")]
    assert lines[0] == "7 14"
    assert len(lines) - 1 == 14


def test_gen_complete(capsys):
    code, out, _ = run(capsys, "gen", "complete", "--n", "4")
    assert code == 0
    assert parse_edge_list(out.encode()).m == 6


def test_gen_bad_params(capsys):
    code, out, err = run(capsys, "gen", "cycle-power", "--n", "4", "--d", "2")
    assert code != 0
    assert out == ""
    assert "2d+1" in err


@pytest.mark.parametrize("method", ["brute", "bnb", "heuristic"])
def test_solve_c72(capsys, c72, method):
    code, out, _ = run(capsys, "solve", str(c72), "--method", method)
    assert code == 0
    rep = json.loads(out)
    assert rep["rna"] == 6
    assert set(rep) >= {"rna", "witness", "method", "nodes", "elapsed_ms"}


def test_solve_path6(tmp_path, capsys):
    p = tmp_path / "p6.txt"
    p.write_bytes(serialize_edge_list(path_graph(6)))
    code, out, _ = run(capsys, "solve", str(p), "--method", "brute")
    assert code == 0 and json.loads(out)["rna"] == 1


def test_solve_bnb_equals_brute(tmp_path, capsys):
    p = tmp_path / "g.txt"
    p.write_text("10 14\n0 1\n0 4\n1 2\n1 7\n2 3\n2 9\n3 4\n3 5\n4 8\n5 6\n5 9\n6 7\n6 8\n8 9\n")
    _, a, _ = run(capsys, "solve", str(p), "--method", "brute")
    _, b, _ = run(capsys, "solve", str(p), "--method", "bnb")
    a, b = json.loads(a), json.loads(b)
    assert (a["rna"], a["witness"]) == (b["rna"], b["witness"])


def test_solve_parse_error(tmp_path, capsys):
    p = tmp_path / "bad.txt"
    p.write_text("3 1\n0 0\n")
    code, out, err = run(capsys, "solve", str(p))
    assert code == 2
    assert out == "" and "self-loop" in err


def test_solve_missing_file(tmp_path, capsys):
    code, _, _ = run(capsys, "solve", str(tmp_path / "nope.txt"))
    assert code == 2


def test_solve_guard(capsys, tmp_path):
    p = tmp_path / "big.txt"
    p.write_text("20 0\n")
    code, _, err = run(capsys, "solve", str(p), "--method", "brute", "--guard-n", "10")
    assert code == 3 and "guard" in err


def parse_csv(text):
    rows = list(csv.reader(io.StringIO(text)))
    return rows[0], [dict(zip(rows[0], r)) for r in rows[1:]]


def test_verify_d2_3(capsys):
    code, out, _ = run(capsys, "verify", "--d", "2..3", "--n-max", "14")
    assert code == 0
    header, rows = parse_csv(out)
    assert header == ["d", "n", "exact", "formula", "kang", "lower", "elapsed_ms", "status"]
    assert len(rows) == (14 - 4) + (14 - 6)
    assert all(r["status"] == "Match" for r in rows)
    first = rows[0]
    assert (first["d"], first["n"], first["kang"], first["exact"]) == ("2", "5", "6", "6")


def test_verify_d4(capsys):
    code, out, _ = run(capsys, "verify", "--d", "4..4", "--n-max", "18", "--method", "bnb")
    assert code == 0
    _, rows = parse_csv(out)
    assert [r["n"] for r in rows] == [str(n) for n in range(9, 19)]
    assert {r["exact"] for r in rows} == {"20"}


def test_verify_skips_guarded_points(capsys):
    code, out, _ = run(capsys, "verify", "--d", "2", "--n-max", "12", "--guard-n", "10")
    assert code == 0
    _, rows = parse_csv(out)
    assert [r["status"] for r in rows[-2:]] == ["SKIPPED", "SKIPPED"]
    assert rows[-1]["exact"] == ""


def test_verify_jobs_same_rows(capsys):
    _, a, _ = run(capsys, "verify", "--d", "2..3", "--n-max", "10")
    _, b, _ = run(capsys, "verify", "--d", "2..3", "--n-max", "10", "--jobs", "2")
    strip = lambda t: [(r["d"], r["n"], r["exact"], r["status"]) for r in parse_csv(t)[1]]
    assert strip(a) == strip(b)


def test_bounds(capsys, c72, tmp_path):
    assert json.loads(run(capsys, "bounds", str(c72))[1]) == {"kang": 8, "ska_lower": 4, "ska_upper": 6}
    p4 = tmp_path / "p4.txt"
    p4.write_bytes(serialize_edge_list(path_graph(4)))
    assert json.loads(run(capsys, "bounds", str(p4))[1]) == {"kang": 2}
    k5 = tmp_path / "k5.txt"
    main(["gen", "complete", "--n", "5", "-o", str(k5)])
    capsys.readouterr()
    assert json.loads(run(capsys, "bounds", str(k5))[1]) == {"kang": 6}


def test_reduce(capsys, tmp_path, c72):
    h_path = tmp_path / "h.txt"
    code, out, _ = run(
        capsys, "reduce", "--n", "8", "--d", "2", "--coloring", "11112222", "--pivot", "0", "--emit-h", str(h_path)
    )
    assert code == 0
    res = json.loads(out)
    assert res["cut_after"] <= res["cut_before"] == 6
    assert res["H_is_cycle_power"]
    assert h_path.read_bytes() == c72.read_bytes()


def test_reduce_minority_pivot(capsys):
    code, out, err = run(capsys, "reduce", "--n", "9", "--d", "2", "--coloring", "111112222", "--pivot", "7")
    assert code == 4
    assert out == "" and "minority" in err


def test_reduce_too_small(capsys):
    code, _, _ = run(capsys, "reduce", "--n", "7", "--d", "3", "--coloring", "1112222")
    assert code == 4


def test_module_entry_point(c72):
    proc = subprocess.run(
        [sys.executable, "-m", "rnabisect", "solve", str(c72), "--method", "brute"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["rna"] == 6
