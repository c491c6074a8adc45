import csv
import io
import json

import pytest

from splitconf import cli
from splitconf.report import Report


def run(argv, capsys):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestVerifyCommand:
    def test_single_suite_passes(self, capsys):
        code, out, err = run(["verify", "--suites", "clifford"], capsys)
        assert code == 0
        assert "21 pass" in out
        assert err == ""

    def test_unknown_suite_is_a_usage_error(self, capsys):
        code, out, err = run(["verify", "--suites", "bogus"], capsys)
        assert code == 2
        assert "unknown suite" in err

    def test_json_output_is_deterministic(self, capsys):
        args = ["verify", "--suites", "clifford,appendix", "--format", "json",
                "--seed", "3", "--samples", "40"]
        code1, out1, _ = run(args, capsys)
        code2, out2, _ = run(args, capsys)
        assert code1 == code2 == 0
        assert out1 == out2
        doc = json.loads(out1)
        assert [s["suite"] for s in doc["reports"]] == ["clifford", "appendix"]

    def test_documented_discrepancies_do_not_fail_the_run(self, capsys):
        code, out, _ = run(
            ["verify", "--suites", "appendix", "--format", "json"], capsys
        )
        assert code == 0
        doc = json.loads(out)
        statuses = [c["status"] for c in doc["reports"][0]["checks"]]
        assert statuses.count("discrepancy-documented") == 1
        assert "fail" not in statuses

    def test_format_env_fallback(self, capsys, monkeypatch):
        monkeypatch.setenv("SPLITCONF_FORMAT", "json")
        code, out, _ = run(["verify", "--suites", "clifford"], capsys)
        assert code == 0
        json.loads(out)

    def test_explicit_format_beats_the_env(self, capsys, monkeypatch):
        monkeypatch.setenv("SPLITCONF_FORMAT", "json")
        code, out, _ = run(
            ["verify", "--suites", "clifford", "--format", "text"], capsys
        )
        assert code == 0
        with pytest.raises(json.JSONDecodeError):
            json.loads(out)

    def test_a_failing_check_drives_exit_code_one(self, capsys, monkeypatch):
        def broken(config=None):
            rep = Report("broken", dict(config or {}))
            rep.add("broken[example]", False, "0", "1", "forced failure")
            return rep

        monkeypatch.setattr(cli, "SUITES", (("broken", broken),))
        code, out, err = run(["verify"], capsys)
        assert code == 1

    def test_bad_tolerance_is_a_usage_error(self, capsys):
        code, _, err = run(["verify", "--tolerance", "0"], capsys)
        assert code == 2
        assert "error:" in err

    def test_bad_samples_is_a_usage_error(self, capsys):
        code, _, err = run(["verify", "--samples", "0"], capsys)
        assert code == 2


class TestTransformCommand:
    def test_translation_of_the_origin(self, capsys):
        code, out, _ = run(
            ["transform", "--point", "0,0,0,0", "--word", "ax:2",
             "--format", "json"],
            capsys,
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["final"]["kind"] == "point"
        assert doc["final"]["x"] == pytest.approx(2)
        assert doc["final"]["t"] == 0

    def test_dilation_halves_the_point(self, capsys):
        code, out, _ = run(
            ["transform", "--point", "0,1,0,0",
             "--word", "pq:0.6931471805599453", "--format", "json"],
            capsys,
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["final"]["x"] == pytest.approx(0.5, abs=1e-12)

    def test_escape_to_infinity(self, capsys):
        code, out, _ = run(
            ["transform", "--point", "0,1,0,0", "--word", "bx:-1",
             "--format", "json"],
            capsys,
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["final"] == {"kind": "at-infinity"}

    def test_empty_word_echoes_the_input(self, capsys):
        code, out, _ = run(
            ["transform", "--point", "1,2,3,4", "--format", "json"], capsys
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["steps"] == []
        assert doc["final"]["t"] == 1
        assert doc["final"]["z"] == 4

    def test_six_component_input_stays_a_vector(self, capsys):
        code, out, _ = run(
            ["transform", "--point", "1,0,0,0,0,0", "--word", "xy:0.5",
             "--format", "json"],
            capsys,
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["final"]["kind"] == "vector"
        assert doc["final"]["p"] == 0

    def test_csv_output_parses(self, capsys):
        code, out, _ = run(
            ["transform", "--point", "0,0,0,0", "--word", "ax:1,ay:2",
             "--format", "csv"],
            capsys,
        )
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        # row 0 echoes the input, then one row per step
        assert len(rows) == 3
        assert rows[0]["step"] == "0"
        assert rows[-1]["name"] == "ay"
        assert float(rows[-1]["y"]) == pytest.approx(2)

    def test_text_output_mentions_each_step(self, capsys):
        code, out, _ = run(
            ["transform", "--point", "0,0,0,0", "--word", "ax:1"], capsys
        )
        assert code == 0
        assert "input:" in out
        assert "step 1" in out
        assert "final:" in out

    def test_unknown_step_name_is_a_usage_error(self, capsys):
        code, _, err = run(
            ["transform", "--point", "0,0,0,0", "--word", "cx:1"], capsys
        )
        assert code == 2
        assert "error:" in err

    def test_malformed_angle_is_a_usage_error(self, capsys):
        code, _, err = run(
            ["transform", "--point", "0,0,0,0", "--word", "ax:wide"], capsys
        )
        assert code == 2

    def test_wrong_point_arity_is_a_usage_error(self, capsys):
        code, _, err = run(
            ["transform", "--point", "1,2,3", "--word", "ax:1"], capsys
        )
        assert code == 2


class TestShowCommand:
    def test_gamma_grid(self, capsys):
        code, out, _ = run(["show", "gamma", "z"], capsys)
        assert code == 0
        assert out.count("\n") >= 4

    def test_dilation_generator_is_diagonal(self, capsys):
        code, out, _ = run(
            ["show", "generator", "pq", "--angle", "1.0"], capsys
        )
        assert code == 0
        assert "1.12763" in out
        assert "L" in out

    def test_real_gamma_csv_has_sixteen_columns(self, capsys):
        code, out, _ = run(
            ["show", "real-gamma", "x", "--format", "csv"], capsys
        )
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert len(rows) == 16
        assert all(len(r) == 16 for r in rows)

    def test_unknown_coordinate_is_a_usage_error(self, capsys):
        code, _, err = run(["show", "gamma", "w"], capsys)
        assert code == 2

    def test_unknown_plane_is_a_usage_error(self, capsys):
        code, _, err = run(["show", "generator", "ww"], capsys)
        assert code == 2


class TestEntryPoint:
    def test_no_arguments_is_a_usage_error(self, capsys):
        assert cli.main([]) == 2
        capsys.readouterr()

    def test_help_exits_cleanly(self, capsys):
        assert cli.main(["--help"]) == 0
        out = capsys.readouterr().out
        assert "verify" in out
