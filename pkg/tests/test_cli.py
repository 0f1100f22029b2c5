"""End-to-end tests for the command line interface.

Every test drives `main` directly with an argv list and inspects the
captured stdout plus the integer return code, mirroring how the
console script behaves in a shell.
"""

import json

import pytest

from balsum.cli import build_parser, main


def run_cli(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out


class TestGen:
    def test_text_table(self, capsys):
        code, out = run_cli(capsys, ["gen", "--upto", "4"])
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "0\t0"
        assert lines[-1] == "4\t204"
        assert len(lines) == 5

    def test_upto_zero(self, capsys):
        code, out = run_cli(capsys, ["gen", "--upto", "0"])
        assert code == 0
        assert out.strip() == "0\t0"

    def test_methods_agree_byte_for_byte(self, capsys):
        outputs = []
        for method in ("recurrence", "fast", "binet"):
            code, out = run_cli(
                capsys, ["gen", "--upto", "50", "--method", method]
            )
            assert code == 0
            outputs.append(out)
        assert outputs[0] == outputs[1] == outputs[2]

    def test_companion_sequence(self, capsys):
        code, out = run_cli(capsys, ["gen", "--upto", "3", "--seq", "C"])
        assert code == 0
        values = [line.split("\t")[1] for line in out.strip().splitlines()]
        assert values == ["1", "3", "17", "99"]

    def test_csv_format(self, capsys):
        code, out = run_cli(
            capsys, ["gen", "--upto", "2", "--format", "csv"]
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "n,value"
        assert lines[1:] == ["0,0", "1,1", "2,6"]

    def test_json_format(self, capsys):
        code, out = run_cli(
            capsys, ["gen", "--upto", "3", "--format", "json"]
        )
        assert code == 0
        data = json.loads(out)
        assert data["seq"] == "B"
        assert data["method"] == "recurrence"
        assert data["upto"] == 3
        assert data["rows"] == [
            {"n": 0, "value": "0"},
            {"n": 1, "value": "1"},
            {"n": 2, "value": "6"},
            {"n": 3, "value": "35"},
        ]

    def test_json_is_pretty_printed(self, capsys):
        code, out = run_cli(
            capsys, ["gen", "--upto", "2", "--format", "json"]
        )
        assert code == 0
        text = out.rstrip("\n")
        assert json.dumps(json.loads(text), indent=2) == text

    def test_negative_upto_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["gen", "--upto", "-1"])
        assert excinfo.value.code == 2


class TestLinearize:
    def test_power_three_text(self, capsys):
        code, out = run_cli(capsys, ["linearize", "--power", "3"])
        assert code == 0
        assert out.strip() == "(1/32)*B(3n) - (3/32)*B(n)"

    def test_power_one_text(self, capsys):
        code, out = run_cli(capsys, ["linearize", "--power", "1"])
        assert code == 0
        assert out.strip() == "B(n)"

    def test_power_two_text(self, capsys):
        code, out = run_cli(capsys, ["linearize", "--power", "2"])
        assert code == 0
        assert out.strip() == "-(17/96)*B(2n) + (1/96)*B(2(n+1)) - 1/16"

    def test_json_round_trips(self, capsys):
        code, out = run_cli(
            capsys, ["linearize", "--power", "4", "--format", "json"]
        )
        assert code == 0
        data = json.loads(out)
        assert data["power"] == 4
        assert [t["multiplier"] for t in data["terms"]] == [4, 4, 2, 2]
        assert [t["shift"] for t in data["terms"]] == [0, 1, 0, 1]

    def test_power_zero_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["linearize", "--power", "0"])
        assert excinfo.value.code == 2


class TestSum:
    def test_plain_sum(self, capsys):
        code, out = run_cli(
            capsys, ["sum", "--m", "2", "--power", "1", "--upto", "2"]
        )
        assert code == 0
        assert out.strip() == "210"

    def test_power_sum(self, capsys):
        code, out = run_cli(
            capsys, ["sum", "--m", "1", "--power", "3", "--upto", "2"]
        )
        assert code == 0
        assert out.strip() == "217"

    def test_empty_range(self, capsys):
        code, out = run_cli(
            capsys, ["sum", "--m", "2", "--power", "1", "--upto", "0"]
        )
        assert code == 0
        assert out.strip() == "0"

    def test_oracle_agreement(self, capsys):
        code, out = run_cli(
            capsys,
            ["sum", "--m", "1", "--power", "1", "--upto", "4", "--oracle"],
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "246"
        assert lines[1] == "oracle 246"

    def test_oracle_json(self, capsys):
        code, out = run_cli(
            capsys,
            [
                "sum",
                "--m",
                "2",
                "--power",
                "2",
                "--upto",
                "3",
                "--oracle",
                "--format",
                "json",
            ],
        )
        assert code == 0
        data = json.loads(out)
        assert data["sum"] == data["oracle"]
        assert data["match"] is True

    def test_oracle_csv(self, capsys):
        code, out = run_cli(
            capsys,
            [
                "sum",
                "--m",
                "1",
                "--power",
                "2",
                "--upto",
                "5",
                "--oracle",
                "--format",
                "csv",
            ],
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "m,power,upto,sum,oracle,match"
        assert lines[1].endswith(",true")

    def test_zero_m_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["sum", "--m", "0", "--power", "1", "--upto", "3"])
        assert excinfo.value.code == 2


class TestFormula:
    def test_text_render(self, capsys):
        code, out = run_cli(capsys, ["formula", "--m", "1", "--power", "1"])
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "(1/4)*B(n+1) - (1/4)*B(n) - 1/4"
        assert lines[1] == "check n=0: 0"

    def test_stride_two_render(self, capsys):
        code, out = run_cli(capsys, ["formula", "--m", "2", "--power", "1"])
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "(1/32)*B(2n+2) - (1/32)*B(2n) - 3/16"

    def test_json_schema(self, capsys):
        code, out = run_cli(
            capsys, ["formula", "--m", "1", "--power", "1", "--format", "json"]
        )
        assert code == 0
        data = json.loads(out)
        assert list(data) == ["m", "power", "bterms", "linear_coeff", "constant"]
        assert data["bterms"] == [
            {"coeff": "1/4", "stride": 1, "offset": 1},
            {"coeff": "-1/4", "stride": 1, "offset": 0},
        ]

    def test_bad_power_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["formula", "--m", "1", "--power", "-2"])
        assert excinfo.value.code == 2


class TestVerify:
    def test_single_trivial_case(self, capsys):
        code, out = run_cli(capsys, ["verify", "--odd-max-l", "0"])
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "odd l=0: PASS"
        assert lines[-1] == "summary: 1 passed, 0 failed"

    def test_lemma_family(self, capsys):
        code, out = run_cli(capsys, ["verify", "--lemma-max-m", "5"])
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "lemma m=2: PASS"
        assert lines[-1] == "summary: 4 passed, 0 failed"

    def test_mixed_families(self, capsys):
        code, out = run_cli(
            capsys,
            ["verify", "--odd-max-l", "2", "--even-max-l", "2"],
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert "odd l=1: PASS" in lines
        assert "even l=2: PASS" in lines
        assert lines[-1] == "summary: 5 passed, 0 failed"

    def test_default_sweep(self, capsys):
        code, out = run_cli(capsys, ["verify"])
        assert code == 0
        lines = out.strip().splitlines()
        # 11 odd + 6 even + 19 lemma cases
        assert lines[-1] == "summary: 36 passed, 0 failed"


class TestParser:
    def test_missing_subcommand_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main([])
        assert excinfo.value.code == 2

    def test_unknown_subcommand_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["frobnicate"])
        assert excinfo.value.code == 2

    def test_parser_builds_once(self):
        parser = build_parser()
        args = parser.parse_args(["gen", "--upto", "7"])
        assert args.upto == 7
