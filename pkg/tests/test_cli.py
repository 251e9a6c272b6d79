import csv
import io
import json
from importlib import resources

import jsonschema
import pytest

from pss.cli import main
from pss.perms import parse


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSort:
    def test_s12_anchor(self, capsys):
        code, out, _ = run_cli(capsys, "sort", "--map", "s12", "2,4,1,3")
        assert code == 0 and out.strip() == "2,3,1,4"

    def test_machine_iterated(self, capsys):
        code, out, _ = run_cli(
            capsys, "sort", "--map", "m12", "--times", "2", "2,4,6,1,3,5"
        )
        assert code == 0 and out.strip() == "2,1,3,4,5,6"

    def test_west(self, capsys):
        code, out, _ = run_cli(capsys, "sort", "--map", "west", "3,2,1")
        assert code == 0 and out.strip() == "1,2,3"

    def test_trace(self, capsys):
        code, out, _ = run_cli(capsys, "sort", "--map", "s12", "--trace", "2,1")
        lines = out.strip().splitlines()
        assert code == 0
        assert lines[-1] == "1,2"
        events = [line.split()[1:] for line in lines[:-1]]
        assert [e[0] for e in events].count("push") == 2

    def test_trace_needs_single_pass(self, capsys):
        code, _, err = run_cli(
            capsys, "sort", "--map", "s12", "--times", "2", "--trace", "2,1"
        )
        assert code == 2 and "trace" in err

    def test_parse_error_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "sort", "--map", "s12", "2,2,1")
        assert code == 2 and "duplicate" in err

    def test_unknown_map(self, capsys):
        code, _, _ = run_cli(capsys, "sort", "--map", "s99", "1,2")
        assert code == 2


class TestRuns:
    def test_peak(self, capsys):
        code, out, _ = run_cli(capsys, "runs", "--kind", "peak", "2,4,3,1,5")
        assert code == 0 and out.strip() == "[2][4,3,1][5]"

    def test_valley(self, capsys):
        code, out, _ = run_cli(capsys, "runs", "--kind", "valley", "2,4,3,1,5")
        assert code == 0 and out.strip() == "[2,4,3][1,5]"

    def test_singletons(self, capsys):
        code, out, _ = run_cli(capsys, "runs", "--kind", "peak", "1,2,3")
        assert code == 0 and out.strip() == "[1][2][3]"


class TestVerifyCommand:
    def test_pass_json_validates_schema(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--claim", "T3_4", "--n-min", "1", "--n-max", "5",
            "--jobs", "1", "--format", "json",
        )
        assert code == 0
        doc = json.loads(out)
        schema = json.loads(
            resources.files("pss").joinpath("schemas/verify_report.schema.json")
            .read_text()
        )
        jsonschema.validate(doc, schema)
        assert doc["overall_pass"] is True

    def test_csv_has_header(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--claim", "T4_2", "--n-max", "5", "--jobs", "1",
            "--format", "csv",
        )
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["claim", "n", "param", "expected", "observed", "pass"]
        assert all(r[5] == "true" for r in rows[1:])

    def test_table_exit_zero(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--claim", "T4_4", "--n-max", "5", "--jobs", "1"
        )
        assert code == 0 and "PASS" in out

    def test_guard_without_force(self, capsys):
        code, _, err = run_cli(
            capsys, "verify", "--claim", "T3_4", "--n-max", "20", "--jobs", "1"
        )
        assert code == 2 and "guard" in err

    def test_round_trip_of_printed_permutations(self, capsys):
        code, out, _ = run_cli(
            capsys, "image", "--map", "m12", "--n", "5", "--power", "auto",
            "--jobs", "1",
        )
        assert code == 0
        perms = [parse(line) for line in out.strip().splitlines()]
        assert len(perms) == 5


class TestOtherCommands:
    def test_image_auto_s12(self, capsys):
        code, out, _ = run_cli(
            capsys, "image", "--map", "s12", "--n", "5", "--power", "auto",
            "--jobs", "1",
        )
        assert code == 0
        assert out.strip().splitlines() == ["1,2,3,4,5", "2,1,3,4,5"]

    def test_image_auto_undefined(self, capsys):
        code, _, err = run_cli(
            capsys, "image", "--map", "s21", "--n", "4", "--power", "auto"
        )
        assert code == 2

    def test_fixed_points_list(self, capsys):
        code, out, _ = run_cli(
            capsys, "fixed-points", "--machine", "m21", "--n", "3", "--list",
            "--jobs", "1",
        )
        assert code == 0 and out.strip() == "2: 1,2,3 | 2,1,3"

    def test_orbit(self, capsys):
        code, out, _ = run_cli(capsys, "orbit", "--map", "s12", "2,3,1")
        assert code == 0
        assert out.strip() == "tail=2 cycle=1 reaches_identity_at=2 periodic=no"

    def test_orbit_json(self, capsys):
        code, out, _ = run_cli(
            capsys, "orbit", "--map", "m21", "--format", "json", "2,1,3"
        )
        doc = json.loads(out)
        assert code == 0
        assert doc["tail_length"] == 0 and doc["is_periodic_point"] is True

    def test_witness_check(self, capsys):
        code, out, _ = run_cli(
            capsys, "witness", "--family", "pi312", "--n", "5", "--check"
        )
        assert code == 0 and out.strip() == "3,5,1,2,4 → 3,1,2,4,5 PASS"

    def test_witness_bad_parity(self, capsys):
        code, _, _ = run_cli(capsys, "witness", "--family", "even", "--n", "5")
        assert code == 2

    def test_count(self, capsys):
        code, out, _ = run_cli(
            capsys, "count", "--claim", "T3_4", "--n", "9", "--t", "3"
        )
        assert code == 0 and out.strip() == "24576"

    def test_count_missing_t(self, capsys):
        code, _, _ = run_cli(capsys, "count", "--claim", "T3_4", "--n", "9")
        assert code == 2

    def test_count_json_uses_decimal_strings(self, capsys):
        code, out, _ = run_cli(
            capsys, "count", "--claim", "T4_4", "--n", "30", "--format", "json"
        )
        doc = json.loads(out)
        assert code == 0 and isinstance(doc["count"], str)
        assert int(doc["count"]) > 10**15
