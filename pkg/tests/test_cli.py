import json

import pytest

import wreathperm.cli as cli
from wreathperm import CheckResult


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


class TestTable:
    def test_csv(self, capsys):
        code, out = run_cli(
            capsys, "table", "--flavor", "d", "--colors", "2", "--max-n", "5",
            "--format", "csv",
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "n,m,value"
        last_row = [line for line in lines if line.startswith("5,")]
        assert last_row == ["5,0,2329", "5,1,1281", "5,2,353", "5,3,65", "5,4,9", "5,5,1"]

    def test_trivial(self, capsys):
        code, out = run_cli(
            capsys, "table", "--flavor", "g", "--colors", "1", "--max-n", "0"
        )
        assert code == 0
        assert out.strip() == "n=0: 1"

    def test_json_matches_closed_form(self, capsys):
        from wreathperm import g_closed_form

        code, out = run_cli(
            capsys, "table", "--flavor", "g", "--colors", "3", "--max-n", "10",
            "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["ell"] == 3 and payload["flavor"] == "g"
        for n, row in enumerate(payload["rows"]):
            for m, value in enumerate(row):
                assert value == g_closed_form(3, n, m)


class TestCount:
    def test_fixed_points(self, capsys):
        code, out = run_cli(
            capsys, "count", "--colors", "2", "--n", "2", "--stat", "circ", "--k", "0"
        )
        assert code == 0
        assert out.strip() == "5 2 1"

    def test_single_color_derangements(self, capsys):
        code, out = run_cli(
            capsys, "count", "--colors", "1", "--n", "5", "--stat", "circ", "--k", "0"
        )
        assert code == 0
        assert out.split()[0] == "44"

    def test_vacuous_k(self, capsys):
        code, out = run_cli(
            capsys, "count", "--colors", "2", "--n", "3", "--stat", "circ", "--k", "3"
        )
        assert code == 0
        assert out.strip() == "48 0 0 0"

    def test_linear_k_zero_usage_error(self, capsys):
        code, _ = run_cli(
            capsys, "count", "--colors", "2", "--n", "3", "--stat", "lin", "--k", "0"
        )
        assert code == 2

    def test_budget_exit(self, capsys):
        code, _ = run_cli(
            capsys, "count", "--colors", "2", "--n", "4", "--stat", "circ",
            "--k", "0", "--budget", "10",
        )
        assert code == 3

    def test_env_budget(self, capsys, monkeypatch):
        monkeypatch.setenv("WREATH_EULER_BUDGET", "10")
        code, _ = run_cli(
            capsys, "count", "--colors", "2", "--n", "4", "--stat", "circ", "--k", "0"
        )
        assert code == 3
        # explicit flag wins over the environment
        code, out = run_cli(
            capsys, "count", "--colors", "2", "--n", "4", "--stat", "circ",
            "--k", "0", "--budget", "1000",
        )
        assert code == 0


class TestBijection:
    def test_phi_fixture(self, capsys):
        code, out = run_cli(
            capsys, "bijection", "--name", "phi", "--colors", "4", "--n", "9",
            "--input", "3^1 4 9^1 8^1 7 5^1 6 2^2 1^2",
        )
        assert code == 0
        assert out.strip() == "1^2 3^3 9 2^2 4^2 8^3 6 5^1 7^1"

    def test_delta(self, capsys):
        code, out = run_cli(capsys, "bijection", "--name", "delta", "--input", "1 2 3")
        assert code == 0
        assert out.strip() == "3 1 2"

    def test_phi_roundtrip(self, capsys):
        text = "2^1 1 4 3^2"
        _, mid = run_cli(
            capsys, "bijection", "--name", "phi", "--colors", "3", "--input", text
        )
        code, back = run_cli(
            capsys, "bijection", "--name", "phi", "--colors", "3", "--inverse",
            "--input", mid.strip(),
        )
        assert code == 0
        assert back.strip() == text

    def test_cycles_in_cycles_out(self, capsys):
        code, out = run_cli(
            capsys, "bijection", "--name", "tau", "--colors", "2", "--eps", "1",
            "--k", "3", "--input", "(1 2)",
        )
        assert code == 0
        assert out.strip() == "(3^1)(1 2)"

    def test_triple_output(self, capsys):
        code, out = run_cli(
            capsys, "bijection", "--name", "vartheta", "--colors", "3", "--m", "6",
            "--n", "9", "--input", "(1)(2 9^1 6^1 8^2)(3)(4)(5)(7^1)",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["eps"] == 1 and payload["alpha"] == 2

    def test_domain_error_exit(self, capsys):
        code, _ = run_cli(
            capsys, "bijection", "--name", "rho", "--colors", "2", "--m", "0",
            "--k", "0", "--input", "1 2 3",
        )
        assert code == 4

    def test_parse_error_exit(self, capsys):
        code, _ = run_cli(
            capsys, "bijection", "--name", "delta", "--input", "2 2"
        )
        assert code == 2

    def test_usage_error_exit(self):
        with pytest.raises(SystemExit) as err:
            cli.main(["bijection", "--input", "1 2"])
        assert err.value.code == 2


class TestVerify:
    def test_small_all_suite(self, capsys):
        code, out = run_cli(
            capsys, "verify", "--suite", "all", "--colors-max", "2", "--n-max", "3"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload and all(entry["status"] == "pass" for entry in payload)

    def test_recurrence_suite_wide(self, capsys):
        code, out = run_cli(
            capsys, "verify", "--suite", "rec", "--colors-max", "5", "--n-max", "30"
        )
        assert code == 0
        assert all(entry["status"] == "pass" for entry in json.loads(out))

    def test_jobs_do_not_change_report(self, capsys):
        args = ["verify", "--suite", "t3", "--colors-max", "3", "--n-max", "4"]
        code1, out1 = run_cli(capsys, *args, "--jobs", "1")
        code4, out4 = run_cli(capsys, *args, "--jobs", "4")
        assert code1 == code4 == 0
        assert out1 == out4

    def test_failure_exit_code(self, capsys, monkeypatch):
        fake = [CheckResult("t2", 1, 1, {}, "fail", {"k": 0, "m": 0})]
        monkeypatch.setattr(cli, "verify_suite", lambda *a, **k: fake)
        code, out = run_cli(
            capsys, "verify", "--suite", "t2", "--colors-max", "1", "--n-max", "1"
        )
        assert code == 1
        assert json.loads(out)[0]["counterexample"] == {"k": 0, "m": 0}

    def test_budget_exit(self, capsys):
        code, _ = run_cli(
            capsys, "verify", "--suite", "t2", "--colors-max", "2", "--n-max", "8",
            "--budget", "1000",
        )
        assert code == 3
