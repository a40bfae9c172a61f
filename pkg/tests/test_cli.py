"""End-to-end tests of the command line front end."""

import json
import subprocess
import sys

import pytest

from treegamekit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSeq:
    def test_single_method(self, capsys):
        code, out, _ = run(capsys, "seq", "--n", "6", "--method", "stirling")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "1\t1"
        assert lines[-1] == "6\t26"

    def test_all_methods_agree(self, capsys):
        code, out, _ = run(capsys, "seq", "--n", "6", "--all-methods")
        assert code == 0
        assert all(line.endswith("OK") for line in out.strip().splitlines())

    def test_census_cap(self, capsys, monkeypatch):
        monkeypatch.delenv("TGK_MAX_N", raising=False)
        code, _, err = run(capsys, "seq", "--n", "11", "--method", "census")
        assert code == 2
        assert "TGK_MAX_N" in err

    def test_census_cap_can_be_raised(self, capsys, monkeypatch):
        monkeypatch.setenv("TGK_MAX_N", "8")
        code, out, _ = run(capsys, "seq", "--n", "8", "--method", "census")
        assert code == 0
        assert out.strip().splitlines()[-1] == "8\t1142"

    def test_bad_cap_value(self, capsys, monkeypatch):
        monkeypatch.setenv("TGK_MAX_N", "many")
        code, _, err = run(capsys, "seq", "--n", "9", "--method", "census")
        assert code == 2
        assert "TGK_MAX_N" in err

    def test_json(self, capsys):
        code, out, _ = run(capsys, "--json", "seq", "--n", "4")
        assert code == 0
        blob = json.loads(out)
        assert blob["values"][-1] == 1


class TestStirling:
    def test_row(self, capsys):
        code, out, _ = run(capsys, "stirling", "--n", "4")
        assert code == 0
        got = [int(line.split("\t")[1]) for line in out.strip().splitlines()]
        assert got == [0, 6, 11, 6, 1]

    def test_single_entry(self, capsys):
        code, out, _ = run(capsys, "stirling", "--n", "6", "--k", "3")
        assert code == 0
        assert out.strip() == "225"


class TestBijection:
    def test_gamma(self, capsys):
        code, out, _ = run(capsys, "gamma", "--perm", "1,6,2,3,5,7,4")
        assert code == 0
        assert out.strip() == "1(2(6) 3 4(5 7))"

    def test_gamma_inv(self, capsys):
        code, out, _ = run(capsys, "gamma-inv", "--tree", "1(2(6) 3 4(5 7))")
        assert code == 0
        assert out.strip() == "1,6,2,3,5,7,4"

    def test_round_trip(self, capsys):
        code, out, _ = run(capsys, "gamma", "--perm", "1,3,2,4")
        tree = out.strip()
        code2, out2, _ = run(capsys, "gamma-inv", "--tree", tree)
        assert (code, code2) == (0, 0)
        assert out2.strip() == "1,3,2,4"

    def test_bad_permutation(self, capsys):
        code, _, err = run(capsys, "gamma", "--perm", "1,2,2")
        assert code == 2
        assert err.startswith("error:")

    def test_permutation_must_fix_one(self, capsys):
        code, _, err = run(capsys, "gamma", "--perm", "2,1,3")
        assert code == 2
        assert err.startswith("error:")


class TestLabelAndAvoid:
    def test_eastpush(self, capsys):
        code, out, _ = run(
            capsys, "label", "--tree", "((()) () (()()))", "--mode", "eastpush"
        )
        assert code == 0
        assert out.strip() == "1(2(7) 3 4(5 6))"

    def test_westpop(self, capsys):
        code, out, _ = run(
            capsys, "label", "--tree", "((()) () (()()))", "--mode", "westpop"
        )
        assert code == 0
        assert out.strip() == "1(2(3) 4 5(6 7))"

    def test_avoid_true_false(self, capsys):
        code, out, _ = run(
            capsys, "avoid", "--perm", "1,7,2,3,5,6,4", "--pattern", "213"
        )
        assert (code, out.strip()) == (0, "true")
        code, out, _ = run(
            capsys, "avoid", "--perm", "1,7,2,3,5,6,4", "--pattern", "312"
        )
        assert (code, out.strip()) == (0, "false")


class TestPhi:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "phi", "--tree", "(() (() ()))")
        assert code == 0
        assert out.strip() == "1 + 2*q + 3*q^2 + 3*q^3 + q^4"

    def test_routes_agree(self, capsys):
        _, a, _ = run(capsys, "phi", "--tree", "((()) ((()())))")
        _, b, _ = run(
            capsys, "phi", "--tree", "((()) ((()())))", "--via", "prunings"
        )
        assert a == b

    def test_eval_fraction(self, capsys):
        code, out, _ = run(
            capsys, "phi", "--tree", "(() (() ()))", "--eval=-1/2"
        )
        assert code == 0
        assert "7/16" in out

    def test_eval_out_of_protocol_is_fine(self, capsys):
        code, out, _ = run(capsys, "phi", "--tree", "(() (() ()))", "--eval", "2")
        assert code == 0
        assert out.strip().splitlines()[-1].endswith("57")

    def test_json_payload(self, capsys):
        code, out, _ = run(capsys, "--json", "phi", "--tree", "(() (() ()))")
        blob = json.loads(out)
        assert blob["coefficients"] == [1, 2, 3, 3, 1]


class TestPrunings:
    def test_count_and_rgf(self, capsys):
        code, out, _ = run(
            capsys, "prunings", "--tree", "(() (() ()))", "--rgf"
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "count\t10"
        assert lines[1] == "rgf\t1 + 2*q + 3*q^2 + 3*q^3 + q^4"

    def test_list(self, capsys):
        code, out, _ = run(capsys, "prunings", "--tree", "(()())", "--list")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "count\t4"
        entries = [line.split("\t") for line in lines[1:]]
        assert [e[0] for e in entries] == ["0", "1", "1", "2"]
        assert entries[0][1] == "()"
        assert entries[-1][1] == "(() ())"

    def test_too_large(self, capsys):
        path = "()"
        for _ in range(21):
            path = f"({path})"
        code, _, err = run(capsys, "prunings", "--tree", path, "--list")
        assert code == 2
        assert "error:" in err


class TestWinner:
    def test_first_player(self, capsys):
        code, out, _ = run(capsys, "winner", "--tree", "(() (() ()))")
        assert code == 0
        assert out.strip().splitlines() == ["player1", "move 1 ()"]

    def test_second_player(self, capsys):
        code, out, _ = run(capsys, "winner", "--tree", "((()))")
        assert code == 0
        assert out.strip() == "player2"


class TestTamari:
    def test_fiber(self, capsys):
        code, out, _ = run(
            capsys, "tamari-fiber", "--tree", "((()) () (()()))"
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "top\t1,7,2,3,5,6,4"
        assert lines[1] == "bottom\t1,3,2,4,6,7,5"
        assert lines[2] == "size\t5"
        assert "member\t1,6,2,3,5,7,4" in lines

    def test_join_meet(self, capsys):
        code, out, _ = run(
            capsys, "tamari-join", "--a", "(() ())", "--b", "((()))"
        )
        assert (code, out.strip()) == (0, "((()))")
        code, out, _ = run(
            capsys, "tamari-meet", "--a", "(() ())", "--b", "((()))"
        )
        assert (code, out.strip()) == (0, "(() ())")

    def test_join_size_mismatch(self, capsys):
        code, _, err = run(capsys, "tamari-join", "--a", "()", "--b", "(())")
        assert code == 2
        assert "error:" in err

    def test_verify(self, capsys):
        code, out, _ = run(capsys, "tamari-verify", "--n", "4")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 3
        assert all("PASS" in line for line in lines)

    def test_verify_json(self, capsys):
        code, out, _ = run(capsys, "--json", "tamari-verify", "--n", "4")
        assert code == 0
        assert json.loads(out)["ok"] is True


class TestEuler:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "euler", "--tree", "(() (() ()))", "--q", "2")
        assert code == 0
        lines = dict(
            line.split("\t") for line in out.strip().splitlines()
        )
        assert lines["chi_real"] == "0"
        assert lines["chi_complex"] == "10"
        assert lines["points(2)"] == "57"

    def test_strict_non_prime_power(self, capsys):
        code, _, err = run(
            capsys,
            "euler",
            "--tree",
            "(() (() ()))",
            "--q",
            "6",
            "--strict",
        )
        assert code == 2
        assert "error:" in err

    def test_non_strict_warns_but_succeeds(self, capsys):
        with pytest.warns(UserWarning):
            code = main(
                ["euler", "--tree", "(() (() ()))", "--q", "6"]
            )
        out = capsys.readouterr().out
        assert code == 0
        assert "points(6)" in out


class TestMonteCarlo:
    def test_deterministic(self, capsys):
        args = (
            "montecarlo",
            "--tree",
            "(() (() ()))",
            "--q=-1/2",
            "--trials",
            "2000",
        )
        _, a, _ = run(capsys, *args)
        _, b, _ = run(capsys, *args)
        assert a == b
        assert "abs_error" in a

    def test_close_to_exact(self, capsys):
        code, out, _ = run(
            capsys,
            "montecarlo",
            "--tree",
            "(() (() ()))",
            "--q=-1/2",
            "--trials",
            "20000",
        )
        assert code == 0
        fields = dict(line.split("\t") for line in out.strip().splitlines())
        assert abs(float(fields["abs_error"])) < 0.03
        assert fields["exact"] == "0.437500"

    def test_rejects_positive_q(self, capsys):
        code, _, err = run(
            capsys, "montecarlo", "--tree", "(())", "--q", "0.5"
        )
        assert code == 2
        assert "error:" in err


class TestVerifyCommand:
    def test_pass(self, capsys):
        code, out, _ = run(
            capsys,
            "verify",
            "--n",
            "3",
            "--samples",
            "10",
            "--trials",
            "500",
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[-1] == "VERIFY: PASS"
        assert all(line.startswith("CHECK ") for line in lines[:-1])

    def test_json(self, capsys):
        code, out, _ = run(
            capsys,
            "--json",
            "verify",
            "--n",
            "3",
            "--samples",
            "10",
            "--trials",
            "500",
        )
        assert code == 0
        blob = json.loads(out)
        assert blob["ok"] is True
        assert len(blob["checks"]) >= 10


class TestHarness:
    def test_version(self, capsys):
        assert main(["--version"]) == 0

    def test_unknown_command(self, capsys):
        assert main(["frobnicate"]) == 2

    def test_missing_command(self, capsys):
        assert main([]) == 2

    def test_threads_flag_accepted(self, capsys):
        code, out, _ = run(
            capsys, "seq", "--n", "4", "--threads", "2"
        )
        assert code == 0

    def test_threads_must_be_positive(self, capsys):
        code, _, err = run(capsys, "seq", "--n", "4", "--threads", "0")
        assert code == 2
        assert "threads" in err

    def test_module_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "treegamekit", "gamma", "--perm", "1,3,2"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout.strip() == "1(2(3))"

    def test_console_script(self):
        proc = subprocess.run(
            ["tgk", "--version"], capture_output=True, text=True
        )
        assert proc.returncode == 0
