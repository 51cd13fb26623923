import json

import numpy as np
import pytest

from dnumbers import cli, measures
from dnumbers.frame import make_frame
from dnumbers.instance import load, loads, parse_subset
from dnumbers.errors import ParseError, UnknownLabel, ValidationError
from dnumbers.nonexclusivity import Strategy


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


GOLDEN_CASES = [
    (("compute", "worked_example.json"), "compute_worked_table.txt"),
    (("compute", "worked_example.json", "--format", "csv"), "compute_worked.csv"),
    (("compute", "worked_example.json", "--format", "json"), "compute_worked.json"),
    (("compute", "worked_example.json", "--subset", "a"), "compute_worked_subset_a.txt"),
    (("compute", "incomplete_table.json"), "compute_incomplete_table.txt"),
    (("verify", "worked_example.json"), "verify_worked.txt"),
    (("matrix", "worked_example.json"), "matrix_worked.csv"),
    (("matrix", "worked_example.json", "--format", "json"), "matrix_worked.json"),
]


@pytest.mark.parametrize("argv, golden", GOLDEN_CASES, ids=[g for _, g in GOLDEN_CASES])
def test_golden_output(capsys, fixtures_dir, golden_dir, argv, golden):
    cmd, name, *rest = argv
    code, out, _ = run(capsys, cmd, fixtures_dir / name, *rest)
    assert code == 0
    assert out == (golden_dir / golden).read_text(encoding="utf-8")


@pytest.mark.parametrize(
    "argv, code, needle",
    [
        (("compute", "malformed.json"), 2, "invalid JSON"),
        (("compute", "empty_key.json"), 2, "must not be empty"),
        (("compute", "worked_example.json", "--subset", ""), 2, "must not be empty"),
        (("compute", "worked_example.json", "--subset", "a||b"), 2, "empty label"),
        (("compute", "worked_example.json", "--subset", "z"), 3, "not a label"),
        (("compute", "sum_exceeds.json"), 3, "at most 1"),
        (("compute", "intersecting_pair.json"), 3, "always have degree 1"),
        (("compute", "classical_not_one.json"), 3, "sum to 1"),
        (("compute", "frame_11.json"), 4, "<= 10"),
        (("matrix", "frame_11.json"), 4, "<= 10"),
        (("verify", "frame_25.json"), 4, "<= 24"),
        (("verify", "no_such_file.json"), 2, "cannot read"),
    ],
)
def test_exit_codes(capsys, fixtures_dir, argv, code, needle):
    cmd, name, *rest = argv
    got, out, err = run(capsys, cmd, fixtures_dir / name, *rest)
    assert got == code
    assert out == ""
    assert needle in err


def test_single_subset_on_large_frame_is_allowed(capsys, fixtures_dir):
    code, out, _ = run(capsys, "compute", fixtures_dir / "frame_11.json", "--subset", "e0")
    assert code == 0
    assert out.splitlines()[1].split() == ["e0", "1", "1", "0"]


def test_full_table_first_row_is_empty_set(capsys, fixtures_dir):
    _, out, _ = run(capsys, "compute", fixtures_dir / "worked_example.json", "--format", "csv")
    rows = out.splitlines()
    assert len(rows) == 5
    assert rows[1] == "∅,0,0,0"


def test_violation_exit_code(capsys, fixtures_dir, monkeypatch):
    # no valid instance breaks the laws, so substitute a faulty Pl
    real = measures._vectors

    def faulty(d, ne):
        bel_vec, pl_vec = real(d, ne)
        return bel_vec, 0.5 * pl_vec

    monkeypatch.setattr(measures, "_vectors", faulty)
    code, out, _ = run(capsys, "verify", fixtures_dir / "worked_example.json")
    assert code == cli.EXIT_VIOLATION
    assert "FAIL" in out
    assert "result: FAIL" in out


def test_fuzz_is_reproducible(capsys, fixtures_dir):
    path = fixtures_dir / "worked_example.json"
    first = run(capsys, "verify", path, "--fuzz", "200", "--seed", "7")
    second = run(capsys, "verify", path, "--fuzz", "200", "--seed", "7")
    assert first == second
    assert first[0] == 0
    assert "200 instances, seed 7, 0 failing" in first[1]


def test_fuzz_plan_covers_space():
    plan = cli.fuzz_plan(48, 1)
    assert {size for _, size, _, _ in plan} == set(range(1, 9))
    assert {s for _, _, s, _ in plan} == set(Strategy)
    assert {c for *_, c in plan} == {True, False}


def test_matrix_exclusive_pattern(capsys, fixtures_dir):
    _, out, _ = run(capsys, "matrix", fixtures_dir / "classical.json", "--format", "json")
    doc = json.loads(out)
    n = len(doc["subsets"])
    expected = [[1.0 if i & j else 0.0 for j in range(n)] for i in range(n)]
    assert doc["U"] == expected
    assert doc["residual"] <= 1e-12


def test_matrix_residual(capsys, fixtures_dir):
    _, out, _ = run(capsys, "matrix", fixtures_dir / "worked_example.json", "--format", "json")
    doc = json.loads(out)
    assert doc["residual"] <= 1e-12
    np.testing.assert_allclose(doc["Pl"], doc["D.U"], atol=1e-12)


def test_fmt_is_fixed_precision():
    assert cli.fmt(0.1 + 0.2) == "0.3"
    assert cli.fmt(-0.0) == "0"
    assert cli.fmt(1 / 3) == "0.333333333333"
    assert cli.fmt3(1.234567e-17) == "1.23e-17"


def test_parse_subset():
    f = make_frame("abc")
    assert parse_subset(f, " a | c ") == 0b101
    assert parse_subset(f, "∅") == 0
    with pytest.raises(ParseError):
        parse_subset(f, "")
    with pytest.raises(UnknownLabel):
        parse_subset(f, "a|d")


def test_classical_instance(fixtures_dir):
    inst = load(fixtures_dir / "classical.json")
    assert inst.classical
    assert inst.nonexclusivity.strategy is Strategy.EXCLUSIVE
    assert inst.dnumber.total_mass == 1.0


@pytest.mark.parametrize(
    "doc, exc",
    [
        ({"frame": "ab", "masses": {}}, ParseError),
        ({"frame": ["a"], "masses": {"a": "1"}}, ParseError),
        ({"frame": ["a"], "masses": {"a": 1}, "extra": 1}, ParseError),
        ({"frame": ["a", "b"], "masses": {"a": 1}, "nonexclusivity": {"strategy": "fuzzy"}}, ParseError),
        ({"frame": ["a", "b"], "masses": {"a": 1},
          "nonexclusivity": {"strategy": "exclusive", "element_pairs": []}}, ParseError),
        ({"frame": ["a|b"], "masses": {}}, ValidationError),
    ],
)
def test_schema_errors(doc, exc):
    with pytest.raises(exc):
        loads(json.dumps(doc))


def test_element_pairs_symmetric_duplicates():
    doc = {"frame": ["a", "b"], "masses": {"a": 1},
           "nonexclusivity": {"strategy": "element_derived",
                              "element_pairs": [["a", "b", 0.2], ["b", "a", 0.2]]}}
    assert loads(json.dumps(doc)).nonexclusivity.u(1, 2) == 0.2
    doc["nonexclusivity"]["element_pairs"][1][2] = 0.3
    with pytest.raises(Exception, match="symmetric"):
        loads(json.dumps(doc))
