"""CLI contract: envelopes, schema, exit codes, CSV shape, determinism."""

import json

import jsonschema
import pytest

from mersroot import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    envelope = json.loads(out)
    jsonschema.validate(envelope, cli.REPORT_SCHEMA)
    return code, envelope, err


class TestClassify:
    def test_mersenne_prime(self, capsys):
        code, envelope, _ = run_json(capsys, "classify", "7")
        assert code == cli.EXIT_OK
        assert envelope["command"] == "classify"
        assert envelope["results"]["mersenne"] is True
        assert envelope["results"]["t1_agree"] is True

    def test_non_prime_is_usage_error(self, capsys):
        code, out, err = run(capsys, "classify", "4")
        assert code == cli.EXIT_USAGE
        assert "not an odd prime" in err and not out

    def test_three_reduced_profile(self, capsys):
        code, envelope, _ = run_json(capsys, "classify", "3")
        assert code == cli.EXIT_OK
        results = envelope["results"]
        assert results["reduced_t1_set"] is True
        assert results["mersenne"] and results["two_rooted"]
        assert [row["statement"] for row in results["t1"]] == [1, 2, 3, 4, 8, 11]


class TestSweep:
    def test_json_summary(self, capsys):
        code, envelope, _ = run_json(capsys, "sweep", "--min", "5", "--max", "100", "--jobs", "1")
        assert code == cli.EXIT_OK
        summary = envelope["results"]["summary"]
        assert summary["two_rooted"] == [5, 11, 13, 19, 29, 37, 53, 59, 61, 67, 83]
        assert summary["disagreements"] == 0

    def test_csv_shape(self, capsys):
        code, out, err = run(capsys, "sweep", "--min", "5", "--max", "31", "--format", "csv", "--jobs", "1")
        assert code == cli.EXIT_OK
        lines = out.strip().splitlines()
        assert lines[0] == ",".join(cli.CSV_COLUMNS)
        assert len(lines) == 1 + 9  # header plus one row per prime
        assert lines[1] == "5,4,5,0,1,0,1,1,1"
        summary = json.loads(err)
        assert summary["summary"]["mersenne"] == [7, 31]

    def test_csv_booleans_are_bits(self, capsys):
        _, out, _ = run(capsys, "sweep", "--min", "7", "--max", "7", "--format", "csv", "--jobs", "1")
        row = out.strip().splitlines()[1].split(",")
        assert set(row[3:]) <= {"0", "1"}

    def test_empty_range(self, capsys):
        code, _, err = run(capsys, "sweep", "--min", "9", "--max", "5")
        assert code == cli.EXIT_USAGE and "empty range" in err


class TestFactor:
    def test_seven(self, capsys):
        code, envelope, _ = run_json(capsys, "factor", "7")
        assert code == cli.EXIT_OK
        results = envelope["results"]
        assert results["degrees"] == [1, 3, 3]
        assert results["factor_count"] == 3
        assert results["profile_ok"] is True
        assert [f["bits"] for f in results["factors"]] == ["11", "1101", "1011"]

    def test_budget_exit(self, capsys):
        code, _, err = run(capsys, "factor", "523")
        assert code == cli.EXIT_USAGE and "523" in err

    def test_seed_does_not_change_results(self, capsys):
        _, first, _ = run_json(capsys, "--seed", "0", "factor", "61")
        _, second, _ = run_json(capsys, "--seed", "99", "factor", "61")
        assert first["results"] == second["results"]


class TestUnits:
    def test_seventeen(self, capsys):
        code, envelope, _ = run_json(capsys, "units", "17")
        assert code == cli.EXIT_OK
        results = envelope["results"]
        assert results["unit_count"] == 65025
        assert results["order_p_unit_count"] == 288
        assert "oracle" not in results  # 17 is over the default cap

    def test_oracle_fields_when_in_budget(self, capsys):
        _, envelope, _ = run_json(capsys, "units", "11")
        oracle = envelope["results"]["oracle"]
        assert oracle == {"unit_count": 1023, "order_p_unit_count": 10}

    def test_env_override_cap(self, capsys, monkeypatch):
        monkeypatch.setenv("ORACLE_CAP_P", "3")
        _, envelope, _ = run_json(capsys, "units", "11")
        assert "oracle" not in envelope["results"]

    def test_oracle_cap_flag(self, capsys):
        _, envelope, _ = run_json(capsys, "classify", "11", "--oracle-cap", "0")
        kinds = {row["evaluator"] for row in envelope["results"]["t1"]}
        assert "oracle" not in kinds


class TestMatchings:
    def test_default_column(self, capsys):
        code, envelope, _ = run_json(capsys, "matchings", "7")
        assert code == cli.EXIT_OK
        results = envelope["results"]
        assert results["column"] == "1110000"
        assert results["degree"] == 3
        assert results["matching_parity"] == 1
        assert results["perfect_matchings"] == 31
        assert results["permanent_parity_consistent"] is True
        assert results["pseudopath_delta_at_p"] is True

    def test_explicit_column(self, capsys):
        _, envelope, _ = run_json(capsys, "matchings", "5", "--column", "11111")
        results = envelope["results"]
        assert results["complete_bipartite"] is True
        assert results["matching_parity"] == 0
        assert results["perfect_matchings"] == 120  # 5!

    def test_bad_column(self, capsys):
        code, _, err = run(capsys, "matchings", "5", "--column", "1111111")
        assert code == cli.EXIT_USAGE


class TestDelta:
    def test_example(self, capsys):
        code, envelope, _ = run_json(
            capsys, "delta", "--field", "3", "--group", "C2^2", "--delta", "2"
        )
        assert code == cli.EXIT_OK
        results = envelope["results"]
        assert results["is_delta_ring"] is True and results["strict"] is True
        assert results["elements"] == 81

    def test_trivial_group(self, capsys):
        _, envelope, _ = run_json(capsys, "delta", "--field", "2", "--group", "trivial", "--delta", "1")
        assert envelope["results"]["is_delta_ring"] is True

    def test_budget_env_override(self, capsys, monkeypatch):
        monkeypatch.setenv("DELTA_BUDGET", "100")
        code, _, err = run(capsys, "delta", "--field", "2", "--group", "C13", "--delta", "13")
        assert code == cli.EXIT_USAGE
        assert "budget" in err and "100" in err

    def test_bad_group_shape(self, capsys):
        code, _, err = run(capsys, "delta", "--field", "2", "--group", "D4", "--delta", "2")
        assert code == cli.EXIT_USAGE


class TestExitCodes:
    def test_disagreement_exits_two(self, capsys, monkeypatch):
        from mersroot import characterize as ch

        real = ch._t1_evaluator

        def lying_evaluator(p, k, ctx):
            if k == 9:
                return (not real(p, k, ctx)[0]), "direct"
            return real(p, k, ctx)

        monkeypatch.setattr(ch, "_t1_evaluator", lying_evaluator)
        code, out, _ = run(capsys, "classify", "7")
        assert code == cli.EXIT_DISAGREEMENT
        assert json.loads(out)["results"]["t1_agree"] is False
        code, _, _ = run(capsys, "sweep", "--min", "5", "--max", "11", "--jobs", "1")
        assert code == cli.EXIT_DISAGREEMENT

    def test_classify_large_prime_is_quick(self, capsys):
        code, envelope, _ = run_json(capsys, "classify", "8191")
        assert code == cli.EXIT_OK
        assert envelope["results"]["mersenne"] is True
        assert envelope["results"]["t1_agree"] and envelope["results"]["t2_agree"]


class TestEnvelope:
    def test_results_are_deterministic(self, capsys):
        _, first, _ = run_json(capsys, "classify", "11")
        _, second, _ = run_json(capsys, "classify", "11")
        strip = lambda env: json.dumps(
            {**env["results"], "t1": [dict(r, elapsed_s=0) for r in env["results"]["t1"]],
             "t2": [dict(r, elapsed_s=0) for r in env["results"]["t2"]]},
            sort_keys=True,
        )
        assert strip(first) == strip(second)

    def test_version_flag(self, capsys):
        with pytest.raises(SystemExit) as info:
            cli.main(["--version"])
        assert info.value.code == 0
