"""End-to-end tests of the whitealg command line."""

import json

import pytest
import yaml

from src.main import EXIT_COMPUTATION, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def run_json(capsys, *argv):
    status, out, err = run(capsys, *argv, "--output", "json")
    assert status == EXIT_OK, err
    document = json.loads(out)
    assert document["schema"] == "whitealg/1"
    return document


class TestLieCommands:
    def test_basis(self, capsys):
        status, out, _ = run(capsys, "basis", "--space", "hp", "--dim", "21")
        assert status == EXIT_OK
        assert out.startswith("dim 21: rank 6")
        assert "[x1,[x1,[x1,x2]]]" in out

    def test_rank_table_json(self, capsys):
        document = run_json(capsys, "rank-table", "--space", "hp", "--max-dim", "21")
        assert document["type"] == "RankTable"
        rows = document["data"]["rows"]
        assert [(r["whitehead_dim"], r["rank"]) for r in rows] == [
            (5, 1),
            (9, 1),
            (13, 2),
            (17, 3),
            (21, 6),
        ]

    def test_rank_table_text(self, capsys):
        status, out, _ = run(capsys, "rank-table", "--space", "cp", "--max-dim", "9")
        assert status == EXIT_OK
        assert out.startswith("CP(3,5,7,9) up to dim 9")
        assert "[xi3,xi5]" in out

    def test_reduce(self, capsys):
        status, out, _ = run(capsys, "reduce", "--expr", "-[x1,[x1,x2]] + 2*x3")
        assert status == EXIT_OK
        assert out.strip() == "2*x3 - [x1,[x1,x2]]"

    def test_reduce_xi_alias(self, capsys):
        _, out, _ = run(capsys, "reduce", "--space", "cp", "--expr", "[xi5,xi3]")
        assert out.strip() == "-[xi3,xi5]"

    def test_samelson_notation(self, capsys):
        _, out, _ = run(
            capsys, "reduce", "--expr", "[x1,x2]", "--notation", "samelson"
        )
        assert out.strip() == "<x1,x2>"

    def test_custom_space(self, capsys):
        _, out, _ = run(
            capsys, "basis", "--space", "custom:3,5,9", "--dim", "9"
        )
        assert out.startswith("dim 9: rank 2")
        assert "[x1,[x1,x2]]" in out


class TestHopfCommands:
    def test_primitive_check_via_hurewicz(self, capsys):
        status, out, _ = run(
            capsys, "primitive-check", "--expr", "[b1,b2]", "--via-hurewicz"
        )
        assert status == EXIT_OK
        assert "primitive: true" in out
        assert "decomposable: true" in out

    def test_generator_is_not_primitive(self, capsys):
        _, out, _ = run(capsys, "primitive-check", "--expr", "b2")
        assert "primitive: false" in out

    def test_hurewicz(self, capsys):
        _, out, _ = run(capsys, "hurewicz", "--index", "2")
        assert out.strip() == "b2 - 1/2*b1.b1"

    def test_suspension_kills_products(self, capsys):
        _, out, _ = run(capsys, "suspension", "--expr", "b1.b2")
        assert out.strip() == "0"

    def test_suspension_of_lift(self, capsys):
        _, out, _ = run(capsys, "suspension", "--expr", "b3", "--via-hurewicz")
        assert out.strip() == "beta3"


class TestAutCommands:
    def test_aut_report_finite(self, capsys):
        status, out, _ = run(
            capsys, "aut-report", "--space", "hp", "--truncate", "2", "--ring", "z"
        )
        assert status == EXIT_OK
        assert "finite: true" in out
        assert "order: 4" in out
        assert "abelian: true" in out
        assert "structure: Z2 + Z2" in out

    def test_aut_report_json(self, capsys):
        document = run_json(capsys, "aut-report", "--truncate", "4")
        assert document["type"] == "AutReport"
        data = document["data"]
        assert data["is_finite"] is False
        assert data["order"] is None
        assert data["noncommuting_pair"]["discrepancy"] == "[x1,[x1,x2]]"

    def test_q_mode(self, capsys):
        _, out, _ = run(capsys, "aut-report", "--truncate", "2", "--ring", "q")
        assert "structure: Q* + Q*" in out

    def test_order(self, capsys):
        status, out, _ = run(
            capsys,
            "order",
            "--morphism",
            "x3 -> x3 + [x1,x2]",
            "--space",
            "hp",
            "--truncate",
            "3",
        )
        assert status == EXIT_OK
        assert "finite: false" in out
        assert "orbit: f^(k)(x3) = x3 + k*[x1,x2]" in out

    def test_order_finite(self, capsys):
        _, out, _ = run(
            capsys, "order", "--truncate", "2", "--morphism", "x1 -> -x1"
        )
        assert "order: 2" in out

    def test_noncommute_witness(self, capsys):
        _, out, _ = run(
            capsys, "noncommute-witness", "--m", "3", "--alpha1", "2", "--alpha2", "3"
        )
        assert "discrepancy: 6*[x1,[x1,x2]]" in out

    def test_exact_sequence(self, capsys):
        _, out, _ = run(capsys, "exact-seq", "--n", "4")
        assert "kernel rank: 2" in out
        assert "exact: true" in out

    def test_snt_witness(self, capsys):
        status, out, _ = run(capsys, "snt-witness", "--space", "hp", "--truncate", "5")
        assert status == EXIT_OK
        assert "total index: 1" in out
        assert "verdict: cokernel finite" in out

    def test_snt_witness_alpha(self, capsys):
        document = run_json(
            capsys, "snt-witness", "--truncate", "5", "--alpha", "(3,[x1,x2])=2"
        )
        assert document["data"]["total_index"] == 2


class TestExitCodes:
    @pytest.mark.parametrize(
        "argv",
        [
            ["basis"],
            ["basis", "--dim", "9", "--space", "sp"],
            ["aut-report", "--truncate", "3", "--alpha", "junk"],
            ["basis", "--dim", "9", "--degree-cap", "0"],
            ["frobnicate"],
            ["aut-report", "--truncate", "2", "--ring", "r"],
            [],
        ],
    )
    def test_usage_errors(self, capsys, argv):
        status, out, _ = run(capsys, *argv)
        assert status == EXIT_USAGE
        assert out == ""

    @pytest.mark.parametrize(
        "argv, error",
        [
            (["reduce", "--expr", "b1.b1"], "NotALieElement"),
            (["reduce", "--expr", "[x1,x2"], "UnbalancedBracket"),
            (["order", "--truncate", "2", "--morphism", "x1 -> 2*x1"], "NotInvertible"),
            (["rank-table", "--max-dim", "70"], "DegreeCapExceeded"),
            (["basis", "--dim", "21", "--degree-cap", "12"], "DegreeCapExceeded"),
            (["primitive-check", "--expr", "b6.b6.b6"], "DegreeCapExceeded"),
            (["suspension", "--expr", "[b6,[b6,b6]]"], "DegreeCapExceeded"),
            (["noncommute-witness", "--m", "2"], "IndexOutOfRange"),
        ],
    )
    def test_computation_errors(self, capsys, argv, error):
        status, out, err = run(capsys, *argv)
        assert status == EXIT_COMPUTATION
        assert out == ""
        assert f"error: {error}" in err

    def test_help(self, capsys):
        assert main(["--help"]) == EXIT_OK
        assert "rank-table" in capsys.readouterr().out


class TestConfiguration:
    def test_flag_file(self, capsys, tmp_path):
        path = tmp_path / "flags.yaml"
        path.write_text(yaml.safe_dump({"space": "cp", "max-dim": 7}), encoding="utf-8")
        document = run_json(capsys, "rank-table", "--config", str(path))
        ranks = [row["rank"] for row in document["data"]["rows"]]
        assert ranks == [1, 1, 2]

    def test_explicit_flags_win(self, capsys, tmp_path):
        path = tmp_path / "flags.yaml"
        path.write_text(yaml.safe_dump({"space": "cp", "max-dim": 7}), encoding="utf-8")
        document = run_json(
            capsys, "rank-table", "--config", str(path), "--space", "hp"
        )
        assert document["data"]["space"] == "HP(5)"

    def test_flag_file_rejects_foreign_keys(self, capsys, tmp_path):
        path = tmp_path / "flags.yaml"
        path.write_text(yaml.safe_dump({"truncate": 3}), encoding="utf-8")
        status, _, err = run(
            capsys, "rank-table", "--max-dim", "9", "--config", str(path)
        )
        assert status == EXIT_USAGE
        assert "truncate" in err

    def test_missing_flag_file(self, capsys, tmp_path):
        status, _, _ = run(
            capsys, "basis", "--dim", "5", "--config", str(tmp_path / "nope.yaml")
        )
        assert status == EXIT_USAGE

    def test_environment_output(self, capsys, monkeypatch):
        monkeypatch.setenv("WHITEALG_OUTPUT", "json")
        status, out, _ = run(capsys, "hurewicz", "--index", "1")
        assert status == EXIT_OK
        assert json.loads(out)["type"] == "TensorElement"

    def test_deterministic(self, capsys):
        argv = ["aut-report", "--truncate", "4", "--output", "json"]
        _, first, _ = run(capsys, *argv)
        _, second, _ = run(capsys, *argv)
        assert first == second
