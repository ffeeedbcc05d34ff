import json

import pytest
from conftest import L10_FILL, L10_SWAPPED

from qkostka.cli import main


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def run_json(capsys, *argv):
    status, out, err = run(capsys, *argv)
    return status, json.loads(out) if out.strip() else None, err


@pytest.mark.parametrize(
    "weights, level, expected",
    [("6,6,5,5,5,2,1", 6, "One"), ("2,2,2", 2, "Zero"), ("1,1", 1, "One"), ("10,8,8,7,6,3,1,1", 10, "MoreThanOne")],
)
def test_classify(capsys, weights, level, expected):
    status, record, _ = run_json(capsys, "classify", "--level", str(level), "--weights", weights)
    assert status == 0 and record["class"] == expected


def test_classify_certificate_and_padding(capsys):
    _, record, _ = run_json(capsys, "classify", "--level", "6", "--weights", "6,6,5,5,5,2,1")
    assert (record["k"], record["p"], record["lambda_tail"]) == (2, 3, 3)
    _, padded, _ = run_json(capsys, "classify", "--level", "1", "--weights", "1,1")
    assert padded["padded"] == 1 and padded["weights"] == [1, 1, 0]


def test_classify_text_format(capsys):
    status, out, _ = run(capsys, "classify", "--level", "2", "--weights", "2,2,2", "--format", "text")
    assert status == 0
    assert any(line.split() == ["class", "Zero"] for line in out.splitlines())


@pytest.mark.parametrize(
    "argv",
    [
        ("classify", "--level", "2", "--weights", "3,1,1"),
        ("classify", "--level", "2", "--weights", "a,b"),
        ("classify", "--level", "2"),
        ("classify", "--weights", "1,1,1", "--level", "two"),
        ("bogus",),
    ],
)
def test_invalid_input_exits_1(capsys, argv):
    status, out, err = run(capsys, *argv)
    assert status == 1 and out == "" and err


def test_rank_level_ten(capsys):
    status, record, _ = run_json(
        capsys, "rank", "--level", "10", "--weights", "10,8,8,7,6,3,1,1", "--exact", "--show-tableaux", "30"
    )
    assert status == 0 and record["exact_rank"] == 23
    shown = {tuple(map(tuple, rows)) for rows in record["tableaux"]}
    assert len(shown) == 23 and L10_FILL in shown and L10_SWAPPED in shown


@pytest.mark.parametrize(
    "weights, level, expected",
    [("5,5,5,5,5,3,3,3", 5, 1), ("1,1,1", 1, 0), ("6,6,6,6,2,2,2", 6, 1)],
)
def test_rank_exact(capsys, weights, level, expected):
    status, record, _ = run_json(capsys, "rank", "--level", str(level), "--weights", weights, "--exact")
    assert status == 0 and record["exact_rank"] == expected


def test_rank_text_renders_tableaux(capsys):
    status, out, _ = run(
        capsys, "rank", "--level", "6", "--weights", "6,6,5,5,5,2,1", "--show-tableaux", "5", "--format", "text"
    )
    assert status == 0
    assert "tableau 1\n1 1 1 1 1 1\n2 2 2 2 2 2" in out and "tableau 2" not in out


def test_rank_exact_refuses_m(capsys):
    status, out, err = run(capsys, "rank", "--level", "6", "--weights", "6,6,5,5,5,2,1", "--m", "2", "--exact")
    assert status == 1 and "exact rank unsupported for m>1" in err


def test_decompose_with_verification(capsys):
    status, payload, _ = run_json(capsys, "decompose", "--level", "9", "--weights", "9,8,8,8,8,8,8,2,1", "--verify")
    assert status == 0
    assert payload["combo"] == "V_2,0 + V_3,0 + V_4,0 + V_5,0 + V_6,0 + V_7,0 + 2*V_0,8 + V_0,9"
    assert payload["verification"]["curves"] == 7770 and payload["verification"]["violations"] == 0


def test_decompose_single_term(capsys):
    status, payload, _ = run_json(capsys, "decompose", "--level", "1", "--weights", "1,1,1,1")
    assert status == 0 and payload["terms"] == [{"coefficient": 1, "support": [1, 1, 1, 1], "A": [], "B": [4]}]


def test_decompose_refuses_higher_rank(capsys):
    status, out, err = run(capsys, "decompose", "--level", "10", "--weights", "10,8,8,7,6,3,1,1")
    assert status == 1 and out == "" and "rank one" in err


def test_decompose_reports_verification_failure(capsys, monkeypatch):
    import qkostka.cli as cli
    from qkostka.chern import VerificationReport

    def broken(spec, jobs=1):
        return VerificationReport(spec, None, [{"curve": [[1], [2], [3], [4]], "lhs": 1, "rhs": 0, "ok": False}])

    monkeypatch.setattr(cli, "verify_decomposition", broken)
    status, payload, _ = run_json(capsys, "decompose", "--level", "1", "--weights", "1,1,1,1", "--verify")
    assert status == 2 and payload["verification"]["violations"] == 1


def test_invariant_violation_exits_2(capsys, monkeypatch):
    import qkostka.cli as cli
    from qkostka.errors import InvariantViolation

    def boom(spec):
        raise InvariantViolation("negative coefficient")

    monkeypatch.setattr(cli, "decompose", boom)
    status, _, err = run(capsys, "decompose", "--level", "1", "--weights", "1,1,1,1")
    assert status == 2 and "negative coefficient" in err


@pytest.mark.parametrize(
    "argv, expected",
    [
        (("--level", "1", "--weights", "1,1,1,1"), 1),
        (("--level", "2", "--weights", "2,2,2,2"), 2),
    ],
)
def test_degree4(capsys, argv, expected):
    status, record, _ = run_json(capsys, "degree", *argv)
    assert status == 0 and record["degree"] == expected


def test_degree_fcurve_and_casimir(capsys):
    status, record, _ = run_json(
        capsys, "degree", "--level", "6", "--weights", "6,6,5,5,5,2,1", "--fcurve", "1|2|3|4,5,6,7", "--casimir"
    )
    assert status == 0 and isinstance(record["degree"], int) and record["degree"] >= 0
    assert record["fcurve"] == "1|2|3|4,5,6,7"
    assert record["casimir"]["1"] == "3/2" and record["casimir"]["6"] == "24"
    _, doubled, _ = run_json(
        capsys, "degree", "--level", "6", "--weights", "6,6,5,5,5,2,1", "--fcurve", "1|2|3|4,5,6,7", "--m", "2"
    )
    assert doubled["degree"] == 2 * record["degree"]


@pytest.mark.parametrize(
    "argv",
    [
        ("--level", "6", "--weights", "6,6,5,5,5,2,1", "--fcurve", "1|2|3"),
        ("--level", "6", "--weights", "6,6,5,5,5,2,1", "--fcurve", "1|2|x|4,5,6,7"),
        ("--level", "2", "--weights", "2,2,2"),
    ],
)
def test_degree_rejects(capsys, argv):
    status, _, err = run(capsys, "degree", *argv)
    assert status == 1 and err


def test_json_output_is_byte_identical(capsys):
    argv = ("decompose", "--level", "6", "--weights", "2,6,5,1,6,5,5")
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second and first[0] == 0


@pytest.mark.parametrize("check", ["classifier", "all"])
def test_sweep_is_independent_of_jobs(capsys, check):
    serial = run(capsys, "sweep", "--n-max", "5", "--level-max", "3", "--check", check, "--jobs", "1")
    parallel = run(capsys, "sweep", "--n-max", "5", "--level-max", "3", "--check", check, "--jobs", "3")
    assert serial == parallel and serial[0] == 0


def test_sweep_csv(capsys):
    status, out, err = run(capsys, "sweep", "--n-max", "3", "--level-max", "1")
    lines = out.strip().splitlines()
    assert status == 0 and lines[0] == "level,weights,k,p,lambda,maximal,class,oracle_count,agree"
    assert lines[1] == "1,1 1 0,0,1,1,1,One,1,1"
    assert all(line.endswith(",1") for line in lines[1:])
    assert err.strip() == f"{len(lines) - 1} instances, 0 disagreements"


def test_sweep_decomposition_json(capsys):
    status, payload, _ = run_json(
        capsys, "sweep", "--n-max", "4", "--level-max", "2", "--check", "decomposition", "--format", "json"
    )
    assert status == 0 and payload["disagreements"] == 0 and payload["instances"] > 0


def test_sweep_sample_is_seeded(capsys):
    argv = ("sweep", "--n-max", "7", "--level-max", "5", "--sample", "30", "--seed", "4")
    first = run(capsys, *argv)
    assert first == run(capsys, *argv) and first[0] == 0


def test_sweep_reports_disagreement(capsys, monkeypatch):
    import qkostka.sweep as sweep

    monkeypatch.setattr(sweep, "oracle_count", lambda level, ws: 5)
    status, payload, _ = run_json(capsys, "sweep", "--n-max", "3", "--level-max", "1", "--format", "json", "--jobs", "1")
    assert status == 2 and payload["disagreements"] > 0


def test_out_file(capsys, tmp_path):
    target = tmp_path / "record.json"
    status, out, _ = run(capsys, "classify", "--level", "6", "--weights", "6,6,5,5,5,2,1", "--out", str(target))
    assert status == 0 and out == ""
    assert json.loads(target.read_text())["class"] == "One"
    csv_target = tmp_path / "sweep.csv"
    assert main(["sweep", "--n-max", "3", "--level-max", "1", "--out", str(csv_target)]) == 0
    assert csv_target.read_text().startswith("level,weights")


def test_jobs_default_from_environment(monkeypatch):
    from qkostka.cli import build_parser

    monkeypatch.setenv("QKOSTKA_JOBS", "3")
    args = build_parser().parse_args(["sweep", "--n-max", "3", "--level-max", "1"])
    assert args.jobs == 3
