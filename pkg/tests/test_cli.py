import json

import pytest

from properconn.cli import main
from properconn.errors import GraphFormatError
from properconn.families import gen_cycle
from properconn.graph import format_edge_list, to_graph6
from properconn.io import format_coloring, parse_coloring, read_graphs
from properconn.paths import EdgeColoring


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_coloring_file_roundtrip():
    c = EdgeColoring((1, 2, 3, 1), 3)
    assert parse_coloring(format_coloring(c)) == c


@pytest.mark.parametrize("text", ["", "3 2\n1\n2\n", "2 2\n1\n3\n", "2 2\na\nb\n"])
def test_coloring_file_errors(text):
    with pytest.raises(GraphFormatError):
        parse_coloring(text)


def test_read_graphs_both_formats():
    g = gen_cycle(5)
    assert read_graphs(format_edge_list(g)) == [g]
    assert len(read_graphs(to_graph6(g) + "\n" + to_graph6(g) + "\n")) == 2


def test_pc_star(tmp_path, capsys):
    f = tmp_path / "star.g6"
    f.write_text("Cs\n")
    code, out, _ = run(capsys, "pc", str(f), "--out", str(tmp_path / "w.col"))
    assert code == 0 and out.strip() == "3"
    assert parse_coloring((tmp_path / "w.col").read_text()).k == 3


def test_pck_c5(capsys):
    code, out, _ = run(capsys, "pck", "--family", "cycle", "--params", "n=5", "--k", "2")
    assert code == 0 and out.strip() == "3"


def test_pck_undefined(capsys):
    code, out, _ = run(capsys, "pck", "--family", "path", "--params", "n=4", "--k", "2")
    assert code == 3 and "undefined: not 2-connected" in out


def test_color_then_verify(tmp_path, capsys):
    col = tmp_path / "cc.col"
    code, _, err = run(capsys, "color", "--theorem", "cycle-chord", "--params", "n=9", "--out", str(col))
    assert code == 0 and "provenance" in err
    code, g6, _ = run(capsys, "gen", "--family", "cycle_chord", "--params", "n=9")
    gf = tmp_path / "cc.g6"
    gf.write_text(g6)
    code, out, _ = run(capsys, "verify", str(gf), "--coloring", str(col), "--k", "2")
    assert code == 0 and "holds: yes" in out


@pytest.mark.parametrize(
    "theorem, family, params, flag",
    [
        ("tree", "star", ["m=4"], []),
        ("bridgeless", "petersen", [], ["--strong"]),
        ("general", "srt", ["r=3", "t=2"], []),
        ("dirac-pc2", "complete", ["n=7"], ["--k", "2"]),
        ("ore-pc2", "wheel", ["spokes=5"], ["--k", "2"]),
        ("dense2", "complete_minus_matching", ["n=14"], []),
    ],
)
def test_color_output_verifies(tmp_path, capsys, theorem, family, params, flag):
    col = tmp_path / "c.col"
    code, _, _ = run(capsys, "color", "--theorem", theorem, "--family", family, "--params", *params, "--out", str(col))
    assert code == 0
    code, g6, _ = run(capsys, "gen", "--family", family, "--params", *params)
    gf = tmp_path / "g.g6"
    gf.write_text(g6)
    code, out, _ = run(capsys, "verify", str(gf), "--coloring", str(col), *flag, "--json")
    assert code == 0 and json.loads(out)["holds"]


def test_color_json(capsys):
    code, out, _ = run(capsys, "color", "--theorem", "bridgeless", "--family", "cycle", "--params", "n=6", "--json")
    d = json.loads(out)
    assert code == 0 and d["palette"] == 2 and d["provenance"]


def test_verify_failure_exit(tmp_path, capsys):
    (tmp_path / "g.g6").write_text("Cs\n")
    (tmp_path / "c.col").write_text("3 2\n1\n2\n2\n")
    code, out, _ = run(capsys, "verify", str(tmp_path / "g.g6"), "--coloring", str(tmp_path / "c.col"))
    assert code == 1 and "holds: no" in out


def test_exit_codes(tmp_path, capsys, monkeypatch):
    assert run(capsys, "pc", "--nope")[0] == 2
    assert run(capsys, "gen", "--family", "cycle", "--params", "m=4")[0] == 2
    (tmp_path / "bad.g6").write_text("A!\n")
    assert run(capsys, "pc", str(tmp_path / "bad.g6"))[0] == 2
    assert run(capsys, "color", "--theorem", "dirac-pc2", "--family", "cycle", "--params", "n=7")[0] == 3
    assert run(capsys, "pc", "--family", "petersen", "--budget", "3")[0] == 4
    monkeypatch.setenv("PROPERCONN_BUDGET", "3")
    assert run(capsys, "pc", "--family", "petersen")[0] == 4


def test_fallback_exact(capsys):
    code, out, err = run(
        capsys, "color", "--theorem", "dirac-pc2", "--family", "cycle", "--params", "n=7", "--fallback-exact"
    )
    assert code == 0 and "exact search" in err


def test_output_is_deterministic(capsys):
    a = run(capsys, "color", "--theorem", "general", "--family", "srt", "--params", "r=4", "t=2", "--json")
    b = run(capsys, "color", "--theorem", "general", "--family", "srt", "--params", "r=4", "t=2", "--json")
    assert a == b


def test_sweep_table(capsys):
    code, out, _ = run(capsys, "sweep", "--suite", "cycle-chord")
    assert code == 0 and out.startswith("== cycle-chord: PASS")
    code, out, _ = run(capsys, "sweep", "--suite", "pc2-landmarks", "--json")
    assert json.loads(out)["passed"]
