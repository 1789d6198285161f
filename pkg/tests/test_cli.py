import json

import pytest

from knot_thickness.analysis import Settings, Status, overall_status
from knot_thickness.cli import main, parse_code, read_inputs, run_verify
from knot_thickness.data import CensusRecord, load_census
from knot_thickness.diagrams import QuadrantClass
from knot_thickness.invariants import STANDARD_TABLES, GradingTables, gradings
from knot_thickness.states import enumerate_states, marked_edge

from .conftest import FIGURE_EIGHT, TREFOIL


@pytest.fixture
def trefoil_file(tmp_path):
    path = tmp_path / "trefoil.txt"
    path.write_text(f"# standard diagram\n3_1: {TREFOIL}\n")
    return path


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_code_detects_format(trefoil):
    assert parse_code(TREFOIL) == trefoil
    assert parse_code("U1- O3- U2- O1- U3- O2-") == trefoil
    assert parse_code("1 1 1").n == 3


def test_read_inputs(trefoil_file, tmp_path):
    assert read_inputs(str(trefoil_file)) == [("3_1", TREFOIL)]
    unnamed = tmp_path / "codes.txt"
    unnamed.write_text(f"{TREFOIL}\n\n{FIGURE_EIGHT}\n")
    assert [name for name, _ in read_inputs(str(unnamed))] == ["line 1", "line 3"]


def test_validate_ok(capsys, trefoil_file):
    code, out, _ = _run(capsys, "validate", str(trefoil_file))
    assert code == 0
    assert "faces: 5" in out


def test_validate_malformed(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("X[1,1,2,2] junk\n")
    code, _, err = _run(capsys, "validate", str(path))
    assert code == 2
    assert "position 11" in err


def test_validate_empty(capsys, tmp_path):
    path = tmp_path / "empty.txt"
    path.write_text("")
    code, _, err = _run(capsys, "validate", str(path))
    assert code == 2


def test_validate_link(capsys, tmp_path):
    path = tmp_path / "hopf.txt"
    path.write_text("X[1,3,2,4] X[3,1,4,2]\n")
    code, _, err = _run(capsys, "validate", str(path))
    assert code == 3
    assert "links unsupported" in err


def test_analyze_trefoil(capsys, trefoil_file):
    code, out, _ = _run(capsys, "analyze", str(trefoil_file), "--json")
    assert code == 0
    payload = json.loads(out)
    entry = payload["diagrams"][0]
    report = entry["report"]
    assert entry["name"] == "3_1"
    assert set(report["state_counts"].values()) == {3}
    assert report["max_spread"] == 0
    assert report["dalt"] == 0
    assert report["beta"] == 0
    assert report["theorem_ok"] is True
    assert entry["alexander"]["fox"] == "t^-1 - 1 + t"
    assert entry["alexander"]["state_sum"] == "t^-1 - 1 + t"
    assert entry["determinant"] == 3


def test_analyze_is_deterministic(capsys, trefoil_file):
    _, first, _ = _run(capsys, "analyze", str(trefoil_file), "--json")
    _, second, _ = _run(capsys, "analyze", str(trefoil_file), "--json")
    assert first == second


def test_analyze_single_edge_deep(capsys, trefoil_file):
    code, out, _ = _run(capsys, "analyze", str(trefoil_file), "--json", "--edge", "2", "--deep")
    report = json.loads(out)["diagrams"][0]["report"]
    assert code == 0
    assert list(report["spreads"]) == ["2"]
    assert report["pairs_checked"] == 3


def test_analyze_text(capsys, trefoil_file):
    code, out, _ = _run(capsys, "analyze", str(trefoil_file), "--text")
    assert code == 0
    assert out.startswith("3_1: pass dalt=0 beta=0 max_spread=0 theorem_ok=True")


def test_analyze_state_cap(capsys, trefoil_file):
    code, _, _ = _run(capsys, "analyze", str(trefoil_file), "--max-states", "1")
    assert code == 4


def test_state_cap_from_environment(capsys, trefoil_file, monkeypatch):
    monkeypatch.setenv("KNOT_THICKNESS_MAX_STATES", "2")
    code, _, _ = _run(capsys, "analyze", str(trefoil_file))
    assert code == 4


def test_verify_small_census(capsys, tmp_path):
    path = tmp_path / "census.csv"
    path.write_text(
        "name,pd,braid,determinant,alternating\n"
        "3_1,X[1;4;2;5] X[3;6;4;1] X[5;2;6;3],,3,true\n"
        "5_2,,1 1 1 2 -1 2,7,false\n"
    )
    code, out, _ = _run(capsys, "verify", str(path), "--deep", "--json")
    assert code == 0
    payload = json.loads(out)
    assert [record["name"] for record in payload["records"]] == ["3_1", "5_2"]
    assert payload["summary"]["pass"] == 2
    assert payload["records"][0]["report"]["pairs_checked"] == 3


def test_verify_reports_violation(capsys, tmp_path):
    path = tmp_path / "census.json"
    path.write_text(json.dumps([{"name": "3_1", "pd": TREFOIL, "determinant": 4}]))
    code, out, _ = _run(capsys, "verify", str(path))
    assert code == 1
    assert "expected_determinant" in out


def test_verify_negative_control():
    maslov = dict(STANDARD_TABLES.maslov)
    alexander = dict(STANDARD_TABLES.alexander)
    maslov[(-1, QuadrantClass.NORTH)] = 0
    alexander[(-1, QuadrantClass.NORTH)] = -2
    tables = GradingTables(maslov=maslov, alexander=alexander, name="corrupted")
    records = [CensusRecord(name="3_1", pd=TREFOIL)]
    outcomes = run_verify(records, Settings(tables=tables))
    assert outcomes[0].checks["euler_matches_fox"] is False
    assert overall_status([outcome.status for outcome in outcomes]).exit_code == 1


def test_verify_keeps_order_with_workers():
    records = [record for record in load_census() if record.name in ("0_1", "3_1", "4_1", "5_1")]
    outcomes = run_verify(records, Settings(), jobs=2)
    assert [outcome.name for outcome in outcomes] == ["0_1", "3_1", "4_1", "5_1"]
    assert all(outcome.status == Status.PASS for outcome in outcomes)


def test_exit_code_precedence():
    assert overall_status([Status.RESOURCE, Status.PARSE_ERROR]) == Status.PARSE_ERROR
    assert overall_status([Status.UNSUPPORTED, Status.VIOLATION]) == Status.VIOLATION
    assert overall_status([Status.SKIPPED, Status.PASS]) == Status.PASS


def test_analyze_lists_states(capsys, trefoil_file, trefoil):
    code, out, _ = _run(capsys, "analyze", str(trefoil_file), "--json", "--edge", "1", "--states")
    assert code == 0
    states = json.loads(out)["diagrams"][0]["states"]
    assert list(states) == ["1"]
    listed = states["1"]
    expected = enumerate_states(trefoil, marked_edge(trefoil, 1))
    assert [entry["corners"] for entry in listed] == [state.to_json() for state in expected]
    for entry, state in zip(listed, expected):
        assert entry["gradings"] == gradings(state, trefoil).to_json()
        assert entry["gradings"]["delta"] == "1"
    assert sorted(entry["gradings"]["alexander"] for entry in listed) == ["-1", "0", "1"]
    middle = next(entry["gradings"] for entry in listed if entry["gradings"]["alexander"] == "0")
    assert int(middle["maslov"]) % 2 == 1


def test_analyze_states_text(capsys, trefoil_file):
    code, out, _ = _run(capsys, "analyze", str(trefoil_file), "--text", "--edge", "1", "--states")
    assert code == 0
    assert sum(line.startswith("  edge 1 [[0, ") for line in out.splitlines()) == 3
    assert "δ=1" in out


def test_analyze_unknown_edge(capsys, trefoil_file):
    code, out, _ = _run(capsys, "analyze", str(trefoil_file), "--json", "--edge", "99")
    assert code == 2
    entry = json.loads(out)["diagrams"][0]
    assert entry["status"] == "parse_error"


def test_verify_max_crossings_zero(capsys, tmp_path):
    path = tmp_path / "census.csv"
    path.write_text("name,pd,braid,determinant,alternating\n3_1,X[1;4;2;5] X[3;6;4;1] X[5;2;6;3],,3,true\n")
    code, out, _ = _run(capsys, "verify", str(path), "--max-crossings", "0", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["summary"]["skipped"] == 1
    assert payload["records"][0]["status"] == "skipped"
