import json

import pytest

from mergedsub.cli import main
from mergedsub.graph import cycle
from mergedsub.io import parse_graph, read_graph, write_graph


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_graph_file_round_trip(tmp_path):
    f = tmp_path / "c4.json"
    write_graph(cycle(4), f)
    assert read_graph(f) == cycle(4)
    assert f.read_text() == '{"order": 4, "edges": [[0, 1], [1, 2], [2, 3], [0, 3]]}\n'


def test_graph_specs():
    assert parse_graph("complement(cycle:5)").size == 5
    assert parse_graph("line(complete_bipartite:2,2)").order == 4
    assert parse_graph({"order": 2, "edges": [[0, 1]]}).size == 1


@pytest.mark.parametrize(
    "text, code",
    [('{"order": 3, "edges": [[1, 1]]}', 2), ('{"order": 3, "edges": [[0, 1], [1, 0]]}', 2), ("{oops", 2)],
)
def test_bad_graph_files(tmp_path, capsys, text, code):
    f = tmp_path / "g.json"
    f.write_text(text)
    got, _, err = run(capsys, "spectrum", str(f))
    assert got == code and "g.json" in err


def test_missing_file_is_io_error(tmp_path, capsys):
    code, _, _ = run(capsys, "spectrum", str(tmp_path / "none.json"))
    assert code == 3


def test_construct_and_oracle_spectrum(tmp_path, capsys):
    out = tmp_path / "s.json"
    assert run(capsys, "construct", "--op", "subdivision", "--g", "cycle:4", "-o", str(out))[0] == 0
    code, text, _ = run(capsys, "spectrum", "--matrix", "laplacian", str(out))
    entries = json.loads(text)
    assert code == 0 and [e["mult"] for e in entries] == [1, 2, 2, 2, 1]


def test_construct_merged_requires_both(capsys):
    code, _, err = run(capsys, "construct", "--op", "merged", "--g", "cycle:4", "--h1", "empty:4")
    assert code == 2 and "--h2" in err
    code, text, _ = run(
        capsys, "construct", "--op", "merged", "--g", "cycle:4", "--h1", "empty:4", "--h2", "complete:4"
    )
    assert code == 0 and json.loads(text)["order"] == 8


def test_unknown_op(capsys):
    code, _, err = run(capsys, "construct", "--op", "corona", "--g", "cycle:4")
    assert code == 2 and "total_complemented" in err


def test_closed_form_spectrum(capsys):
    code, text, _ = run(
        capsys, "spectrum", "--method", "closed-form", "--formula", "thm3.2.L", "--param", "m=2", "--h", "empty:2"
    )
    assert code == 0 and len(json.loads(text)) == 5


def test_hypothesis_error_exit_code(capsys):
    code, _, err = run(capsys, "spectrum", "--method", "closed-form", "--formula", "cor3.7", "--param", "p=1", "--param", "q=2")
    assert code == 2 and "excluded" in err


def test_charpoly(capsys, tmp_path):
    f = tmp_path / "c4.json"
    write_graph(cycle(4), f)
    code, text, _ = run(capsys, "charpoly", "--matrix", "laplacian", str(f))
    assert [int(c["num"]) for c in json.loads(text)] == [0, -16, 20, -8, 1]
    code, text, _ = run(capsys, "charpoly", "--formula", "thm3.4", "--g", "cycle:4")
    assert code == 0 and len(json.loads(text)) == 9


def test_tau_and_kirchhoff(capsys):
    code, text, _ = run(capsys, "tau", "--method", "verify", "--formula", "cor4.1.2", "--g", "cycle:3", "--h", "empty:3")
    assert code == 0 and json.loads(text)["agrees"]
    code, text, _ = run(capsys, "kirchhoff", "--method", "closed-form", "--formula", "cor4.2.4", "--param", "m=2", "--h", "empty:2")
    assert json.loads(text) == {"kirchhoff": {"num": "20", "den": "1"}}
    code, text, _ = run(capsys, "tau", "--method", "oracle", "--formula", "cor4.1.1", "--g", "cycle:4", "--h", "empty:4")
    assert json.loads(text)["tau"]["num"] == "8"
    code, _, _ = run(capsys, "tau", "--method", "verify", "--formula", "cor4.2.1", "--g", "cycle:4", "--h", "empty:4")
    assert code == 2


def test_verify_exit_codes(tmp_path, capsys):
    f = tmp_path / "suite.json"
    f.write_text(json.dumps([{"id": "x", "formula": "cor3.7", "construction": {"p": 1, "q": 2}}]))
    code, text, _ = run(capsys, "verify", "--suite", str(f), "--format", "table")
    assert code == 1 and "0/1 passed" in text
    f.write_text("[]")
    assert run(capsys, "verify", "--suite", str(f))[0] == 0


def test_verify_is_deterministic(tmp_path, capsys):
    f = tmp_path / "suite.json"
    cases = [
        {"id": f"kpp{c}", "formula": f"cor3.2.{c}", "construction": {"p": 3, "h": "kpp_matching:3"}}
        for c in range(1, 7)
    ]
    f.write_text(json.dumps(cases))
    first = run(capsys, "verify", "--suite", str(f), "--jobs", "2")[1]
    second = run(capsys, "verify", "--suite", str(f))[1]
    assert first == second and json.loads(first)["passed"] == 6


def test_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["spectrum", "--matrix", "weird"])
    assert exc.value.code == 2
