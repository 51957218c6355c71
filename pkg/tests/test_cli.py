"""Tests for the command-line interface: output, schema, exit codes."""

import json
import random
import subprocess
import sys

import pytest

from helpers import random_operator

from dunklweyl.cli import main
from dunklweyl.dsl import render


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestNf:
    def test_weyl_commutator(self, capsys):
        code, out, _ = run(capsys, ["nf", "comm(d1, x1)", "--dims", "1"])
        assert code == 0 and out.strip() == "1"

    def test_parity_conjugation(self, capsys):
        code, out, _ = run(capsys, ["nf", "R1*x1*R1", "--dims", "1"])
        assert code == 0 and out.strip() == "-x1"

    def test_deformed_square(self, capsys):
        code, out, _ = run(capsys, ["nf", "D1^2", "--dims", "1"])
        assert code == 0
        assert "2*mu1*x1^-1*d1" in out and "d1^2" in out

    def test_substitution(self, capsys):
        code, out, _ = run(capsys, ["nf", "H1", "--dims", "1", "--mu", "1/3"])
        assert code == 0 and "mu1" not in out

    def test_json_schema(self, capsys):
        code, out, _ = run(capsys,
                           ["nf", "x1*d1", "--dims", "1", "--format", "json"])
        assert code == 0
        report = json.loads(out)
        assert sorted(report) == ["command", "dims", "mu_mode", "results",
                                  "status"]
        assert report["command"] == "nf" and report["dims"] == 1
        assert report["results"][0]["normal_form"] == "x1*d1"

    def test_parse_error_exits_2(self, capsys):
        code, _, err = run(capsys, ["nf", "x1 +", "--dims", "1"])
        assert code == 2 and "error:" in err
        code, _, err = run(capsys, ["nf", "x9", "--dims", "2"])
        assert code == 2 and "position" in err

    def test_mu_arity_error(self, capsys):
        code, _, err = run(capsys, ["nf", "H1", "--dims", "2", "--mu", "1/3"])
        assert code == 2


class TestVerify:
    def test_single_family_passes(self, capsys):
        code, out, _ = run(capsys, ["verify", "hahn", "--parametric"])
        assert code == 0
        assert out.splitlines()[-1] == "status: pass"

    def test_all_numeric(self, capsys):
        code, out, _ = run(capsys, ["verify", "all", "--mu", "1/3,1/2"])
        assert code == 0 and "status: pass" in out

    def test_perturbed_fails_with_exit_1(self, capsys):
        code, out, _ = run(capsys, ["verify", "hahn", "--perturb"])
        assert code == 1
        assert "FAIL" in out and "residual" in out
        code, out, _ = run(capsys,
                           ["verify", "sd2", "--perturb", "--mu", "0,0"])
        assert code == 1

    def test_unknown_family_exits_2(self, capsys):
        code, _, err = run(capsys, ["verify", "nope"])
        assert code == 2 and "unknown relation family" in err

    def test_perturb_requires_single_family(self, capsys):
        code, _, err = run(capsys, ["verify", "all", "--perturb"])
        assert code == 2
        code, _, err = run(capsys, ["verify", "su11", "--perturb"])
        assert code == 2

    def test_json_lists_identities(self, capsys):
        code, out, _ = run(capsys,
                           ["verify", "sl12", "--format", "json"])
        assert code == 0
        report = json.loads(out)
        family = report["results"][0]
        assert family["family"] == "sl12" and family["passed"]
        assert all(row["residual_terms"] == 0
                   for row in family["identities"])

    def test_modes_are_exclusive(self, capsys):
        code, _, _ = run(capsys,
                         ["verify", "sd2", "--parametric", "--mu", "0,0"])
        assert code == 2


class TestSpectrum:
    def test_two_dim_table(self, capsys):
        code, out, _ = run(capsys, ["spectrum", "--dims", "2",
                                    "--mu", "1/3,1/2", "--levels", "3"])
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0].split() == ["level", "energy", "degeneracy"]
        rows = [tuple(line.split()) for line in lines[1:]]
        assert rows == [("0", "11/6", "1"), ("1", "17/6", "2"),
                        ("2", "23/6", "3"), ("3", "29/6", "4")]

    def test_one_dim_undeformed(self, capsys):
        code, out, _ = run(capsys, ["spectrum", "--dims", "1", "--mu", "0",
                                    "--levels", "2"])
        assert code == 0
        assert [line.split()[1] for line in out.strip().splitlines()[1:]] \
            == ["1/2", "3/2", "5/2"]

    def test_admissibility_warning(self, capsys):
        code, out, _ = run(capsys, ["spectrum", "--dims", "1", "--mu=-3/4",
                                    "--levels", "2"])
        assert code == 0 and "warning" in out
        code, out, _ = run(capsys, ["spectrum", "--dims", "1", "--mu", "1/3",
                                    "--levels", "2"])
        assert "warning" not in out

    def test_json_carries_admissible_flag(self, capsys):
        code, out, _ = run(capsys, ["spectrum", "--dims", "1", "--mu=-3/4",
                                    "--levels", "1", "--format", "json"])
        report = json.loads(out)
        assert report["results"][0]["admissible"] is False
        assert report["results"][0]["rows"][0]["energy"] == "-1/4"

    def test_usage_errors(self, capsys):
        code, _, _ = run(capsys, ["spectrum", "--dims", "3", "--mu", "1,1,1"])
        assert code == 2
        code, _, _ = run(capsys, ["spectrum", "--dims", "1", "--mu", "x"])
        assert code == 2
        code, _, _ = run(capsys, ["spectrum", "--dims", "2", "--mu", "1/3"])
        assert code == 2


class TestListRelations:
    def test_listing(self, capsys):
        code, out, _ = run(capsys, ["list-relations"])
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 21
        assert lines[0].startswith("sl12:")
        assert any(line.startswith("susy-nd:") for line in lines)


class TestDeterminism:
    @pytest.mark.parametrize("argv", [
        ["nf", "D1^2 + J+ * J-", "--dims", "2"],
        ["verify", "sd2", "--format", "json"],
        ["spectrum", "--dims", "2", "--mu", "1/3,1/2", "--levels", "4",
         "--format", "json"],
        ["list-relations"],
    ])
    def test_byte_identical_runs(self, capsys, argv):
        _, out1, _ = run(capsys, argv)
        _, out2, _ = run(capsys, argv)
        assert out1 == out2


class TestRoundTripThroughCli:
    def test_random_expressions(self, capsys):
        from dunklweyl.dsl import parse_eval
        rng = random.Random(606)
        for _ in range(40):
            n = rng.choice([1, 2])
            a = random_operator(rng, n)
            code, out, _ = run(capsys, ["nf", render(a), "--dims", str(n)])
            assert code == 0
            assert parse_eval(out.strip(), n) == a


class TestConsoleEntry:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "dunklweyl.cli", "nf", "comm(d1, x1)",
             "--dims", "1"],
            capture_output=True, text=True)
        assert proc.returncode == 0
        assert proc.stdout.strip() == "1"

    def test_verify_exit_code_propagates(self):
        proc = subprocess.run(
            [sys.executable, "-m", "dunklweyl.cli", "verify", "hahn",
             "--perturb"],
            capture_output=True, text=True)
        assert proc.returncode == 1
