import json

import pytest

from cantorlike.cli import main
from cantorlike.exact import IntervalSet
from cantorlike.families import Proportional, iterate
from fractions import Fraction as F


def run(capsys, *argv):
    code = 0
    try:
        main(list(argv))
    except SystemExit as exc:
        code = exc.code or 0
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGenerate:
    def test_json_stage_one(self, capsys):
        code, out, _ = run(capsys, "generate", "--family", "proportional",
                           "--alpha", "1/3", "--depth", "1", "--format", "json")
        assert code == 0
        assert json.loads(out) == [{"a": "0/1", "b": "1/3"}, {"a": "2/3", "b": "1/1"}]

    def test_json_round_trips_to_interval_set(self, capsys):
        _, out, _ = run(capsys, "generate", "--family", "power", "--n", "4", "--depth", "3")
        assert IntervalSet.loads(out) == iterate(__import__("cantorlike").Power(4), 3)

    def test_csv_depth_zero(self, capsys):
        code, out, _ = run(capsys, "generate", "--family", "power", "--n", "4",
                           "--depth", "0", "--format", "csv")
        assert code == 0
        assert out == "0/1,1/1\n"

    def test_csv_digit_family(self, capsys):
        code, out, _ = run(capsys, "generate", "--family", "digit", "--n", "5",
                           "--digits", "0,2,4", "--depth", "2", "--format", "csv")
        lines = out.strip().splitlines()
        assert len(lines) == 9
        assert lines[0] == "0/1,1/25"

    def test_decimal_flag_adds_columns(self, capsys):
        _, out, _ = run(capsys, "generate", "--family", "proportional", "--alpha", "1/2",
                        "--depth", "1", "--format", "csv", "--decimal")
        assert out.splitlines()[0] == "0/1,1/4,0,0.25"

    def test_family_json_escape_hatch(self, capsys):
        code, out, _ = run(capsys, "generate",
                           "--family-json", '{"family":"digit","n":5,"digits":[0,1,4]}',
                           "--depth", "1", "--format", "csv")
        assert code == 0
        assert out.strip().splitlines() == ["0/1,2/5", "4/5,1/1"]

    def test_invalid_family_exits_2(self, capsys):
        code, out, err = run(capsys, "generate", "--family", "proportional",
                             "--alpha", "5/3", "--depth", "1")
        assert code == 2
        assert out == ""
        assert "invalid family" in err

    def test_depth_over_cap_exits_3(self, capsys):
        code, _, err = run(capsys, "generate", "--family", "proportional",
                           "--alpha", "1/3", "--depth", "30")
        assert code == 3
        assert "cap" in err

    def test_svg_deterministic(self, capsys):
        args = ("generate", "--family", "proportional", "--alpha", "1/3",
                "--depth", "4", "--format", "svg")
        _, first, _ = run(capsys, *args)
        _, second, _ = run(capsys, *args)
        assert first == second
        assert first.startswith("<svg ")
        assert first.count("<rect") == 1 + 2 + 4 + 8 + 16


class TestAnalyze:
    def test_volterra_report(self, capsys):
        code, out, _ = run(capsys, "analyze", "--family", "power", "--n", "4", "--kmax", "3")
        report = json.loads(out)
        assert code == 0
        assert report["limit_measure"] == "1/2"
        seq = report["dimension_estimates"]["sequence"]
        assert seq[0][0] == 1
        assert seq[0][1] == pytest.approx(0.706695, abs=1e-6)

    def test_lambda_report(self, capsys):
        _, out, _ = run(capsys, "analyze", "--family", "lambda", "--lambda", "1/2")
        report = json.loads(out)
        assert report["limit_measure"] == "1/2"
        assert report["similarity_dimension"]["kind"] == "estimate_sequence"

    def test_proportional_half_dimension(self, capsys):
        _, out, _ = run(capsys, "analyze", "--family", "proportional", "--alpha", "1/2")
        report = json.loads(out)
        assert report["similarity_dimension"]["value"] == pytest.approx(0.5, abs=1e-12)
        assert report["similarity_dimension"]["kind"] == "exact_similarity"

    def test_power_two_report_has_note(self, capsys):
        code, out, _ = run(capsys, "analyze", "--family", "power", "--n", "2", "--depth", "3")
        report = json.loads(out)
        assert code == 0
        assert report["measure_at_depth"] == "0/1"
        assert "dimension_note" in report


class TestMember:
    def test_limit_membership_with_witness(self, capsys):
        code, out, _ = run(capsys, "member", "--x", "1/4", "--family", "digit",
                           "--n", "3", "--digits", "0,2", "--limit")
        lines = out.strip().splitlines()
        assert code == 0
        assert lines[0] == "true"
        witness = json.loads(lines[1].removeprefix("witness: "))
        assert witness == {"base": 3, "preperiod": [], "period": [0, 2]}

    def test_depth_membership_false(self, capsys):
        code, out, _ = run(capsys, "member", "--x", "1/2", "--family", "proportional",
                           "--alpha", "1/3", "--depth", "1")
        assert code == 0
        assert out.strip() == "false"

    def test_volterra_stage_two(self, capsys):
        code, out, _ = run(capsys, "member", "--x", "7/32", "--family", "power",
                           "--n", "4", "--depth", "2")
        assert out.strip() == "true"

    def test_limit_via_digit_equivalent(self, capsys):
        code, out, _ = run(capsys, "member", "--x", "1/4", "--family", "proportional",
                           "--alpha", "1/3", "--limit")
        assert code == 0
        assert out.strip().splitlines()[0] == "true"

    def test_limit_without_digit_form_exits_4(self, capsys):
        code, _, err = run(capsys, "member", "--x", "1/4", "--family", "power",
                           "--n", "4", "--limit")
        assert code == 4
        assert "digit" in err

    def test_malformed_rational_exits_2(self, capsys):
        code, _, _ = run(capsys, "member", "--x", "pi/4", "--family", "proportional",
                         "--alpha", "1/3", "--depth", "2")
        assert code == 2


class TestExpansion:
    def test_ternary_quarter(self, capsys):
        code, out, _ = run(capsys, "expansion", "--x", "1/4", "--base", "3")
        obj = json.loads(out)
        assert code == 0
        assert obj["base"] == 3 and obj["preperiod"] == [] and obj["period"] == [0, 2]

    def test_terminating_reports_alternate(self, capsys):
        _, out, _ = run(capsys, "expansion", "--x", "1/3", "--base", "3")
        obj = json.loads(out)
        assert obj["preperiod"] == [1] and obj["period"] == []
        assert obj["alternate_tail"] == {"base": 3, "preperiod": [0], "period": [2]}


class TestCantorFn:
    def test_pinned_value(self, capsys):
        code, out, _ = run(capsys, "cantor-fn", "--x", "1/4")
        assert code == 0
        assert out.strip() == "1/3"

    def test_non_member_fails(self, capsys):
        code, _, err = run(capsys, "cantor-fn", "--x", "1/2")
        assert code == 1
        assert "Cantor" in err


class TestCounterexample:
    def test_default_volterra_table(self, capsys):
        code, out, _ = run(capsys, "counterexample", "--n-max", "7")
        lines = out.strip().splitlines()
        assert code == 0
        assert lines[0] == "n,sum_removed,tail,tail_decimal"
        assert lines[1] == "0,0/1,1/2,0.5"
        assert lines[2].split(",")[2] == "1/4"
        assert lines[8].split(",")[2] == "1/16"  # end of generation 3


class TestRender:
    def test_deterministic_and_sized(self, capsys):
        args = ("render", "--family", "power", "--n", "4", "--depth", "3",
                "--width", "400", "--row-height", "20")
        _, first, _ = run(capsys, *args)
        _, second, _ = run(capsys, *args)
        assert first == second
        assert 'width="400"' in first and 'height="80"' in first
