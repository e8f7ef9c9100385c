import json
import subprocess
import sys


from conftest import ROOT, SRC, run_cli


class TestFarey:
    def test_gen_boolean_published(self):
        code, out, _ = run_cli("farey", "gen", "--kind", "boolean", "--n", "8", "--m", "4")
        lines = out.splitlines()
        assert code == 0
        assert len(lines) == 13
        assert lines[0] == "0/1"
        assert lines[6] == "1/2"

    def test_gen_standard_and_numbound(self):
        code, out, _ = run_cli("farey", "gen", "--kind", "standard", "--n", "4")
        assert code == 0
        assert out.splitlines() == ["0/1", "1/4", "1/3", "1/2", "2/3", "3/4", "1/1"]
        code, out, _ = run_cli("farey", "gen", "--kind", "numbound", "--n", "4", "--m", "1")
        assert out.splitlines() == ["0/1", "1/4", "1/3", "1/2", "1/1"]

    def test_gen_oracle_flag(self):
        code, a, _ = run_cli("farey", "gen", "--kind", "boolean", "--n", "8", "--m", "4")
        code, b, _ = run_cli("farey", "gen", "--kind", "boolean", "--n", "8", "--m", "4", "--oracle")
        assert a == b

    def test_gen_oracle_guard_exit(self):
        code, _, err = run_cli("farey", "gen", "--kind", "boolean", "--n", "22", "--m", "11", "--oracle")
        assert code == 4
        assert "force" in err

    def test_gen_force_warns(self):
        code, _, err = run_cli(
            "farey", "gen", "--kind", "boolean", "--n", "8", "--m", "4", "--oracle", "--force"
        )
        assert code == 0
        assert "warning" in err

    def test_neighbors(self):
        code, out, _ = run_cli("farey", "neighbors", "--m", "4", "--frac", "1/2")
        assert code == 0
        assert out == "pred 3/7, succ 4/7\n"

    def test_neighbors_malformed_fraction(self):
        code, _, err = run_cli("farey", "neighbors", "--m", "4", "--frac", "half")
        assert code == 1

    def test_neighbors_out_of_sequence(self):
        code, _, _ = run_cli("farey", "neighbors", "--m", "4", "--frac", "5/11")
        assert code == 1

    def test_maps_runs(self):
        code, out, _ = run_cli("farey", "maps", "--m", "3")
        assert code == 0
        assert "half-to-fm left preserving:" in out
        assert out.count("->") == 8 * 5  # both halves and F(3) have 5 entries at m=3

    def test_verify_ok(self):
        code, out, _ = run_cli("farey", "verify", "--m-max", "6")
        assert code == 0
        assert out.splitlines()[-1] == "OK"


class TestOm:
    def test_from_arrangement(self, data_dir):
        code, out, _ = run_cli("om", "from-arrangement", str(data_dir / "triangle.arr"))
        assert code == 0
        assert out.splitlines() == ["++-", "+-+", "+--", "-++", "-+-", "--+"]

    def test_validate_ok(self, data_dir):
        code, out, _ = run_cli("om", "validate", str(data_dir / "triangle.topes"))
        assert code == 0
        assert out == "OK t=3 |T|=6\n"

    def test_validate_orphan_exit_two(self, data_dir):
        code, _, err = run_cli("om", "validate", str(data_dir / "bad-orphan.topes"))
        assert code == 2
        assert "'+-'" in err

    def test_info(self, data_dir):
        code, out, _ = run_cli("om", "info", str(data_dir / "triangle.topes"))
        assert code == 0
        assert out.splitlines() == ["t=3 |T|=6 acyclic=false", "halfspaces=3,3,3"]

    def test_missing_file(self):
        code, _, err = run_cli("om", "info", "no-such-file.topes")
        assert code == 1


class TestCommittees:
    def test_enumerate_layer_three(self, data_dir):
        code, out, _ = run_cli(
            "committees", "enumerate", str(data_dir / "triangle.topes"), "--layer", "3"
        )
        assert code == 0
        assert out == "++-,+-+,-++\n"

    def test_enumerate_empty_layer(self, data_dir):
        code, out, _ = run_cli(
            "committees", "enumerate", str(data_dir / "triangle.topes"), "--layer", "2"
        )
        assert code == 0
        assert out == ""

    def test_minimal(self, data_dir):
        code, out, _ = run_cli("committees", "minimal", str(data_dir / "triangle.topes"))
        assert code == 0
        assert out == "++-,+-+,-++\n"

    def test_all_guard_exit_four(self, data_dir):
        code, _, err = run_cli("committees", "all", str(data_dir / "bigsystem.topes"))
        assert code == 4
        assert "2^26" in err

    def test_bad_layer_exit_one(self, data_dir):
        code, _, _ = run_cli(
            "committees", "enumerate", str(data_dir / "triangle.topes"), "--layer", "9"
        )
        assert code == 1


class TestSchemes:
    def test_johnson_table(self):
        code, out, _ = run_cli("schemes", "johnson", "--n", "8", "--d", "4")
        assert code == 0
        assert "valency 2 36" in out.splitlines()
        assert "p 0 1 1 16" in out.splitlines()

    def test_hamming_table(self):
        code, out, _ = run_cli("schemes", "hamming", "--m", "2")
        assert code == 0
        assert "p 2 1 1 2" in out.splitlines()

    def test_cross_table(self):
        code, out, _ = run_cli("schemes", "cross", "--m", "3", "--d", "2")
        assert code == 0
        assert out.splitlines()[1] == "whitney 12"


class TestVerify:
    def test_prop8_pass(self, data_dir):
        code, out, _ = run_cli("verify", "prop8", str(data_dir / "triangle.topes"))
        assert code == 0
        assert all(line.startswith("PASS") for line in out.splitlines())

    def test_thm9_pass(self, data_dir):
        code, out, _ = run_cli("verify", "thm9", str(data_dir / "fourlines.topes"))
        assert code == 0

    def test_acyclic_skips_exit_three(self, data_dir):
        code, out, _ = run_cli("verify", "prop8", str(data_dir / "quadrants.topes"))
        assert code == 3
        assert out.startswith("SKIPPED-HYPOTHESIS")

    def test_schemes_suite(self):
        code, out, _ = run_cli("verify", "schemes", "--max-n", "6", "--max-m", "4")
        assert code == 0

    def test_usage_error_exit_one(self):
        code, _, _ = run_cli("verify")
        assert code == 1
        code, _, _ = run_cli("farey", "gen", "--kind", "bogus", "--n", "4")
        assert code == 1


class TestOutputContracts:
    def test_json_round_trip_idempotent(self, data_dir):
        commands = [
            ("farey", "gen", "--kind", "boolean", "--n", "8", "--m", "4", "--json"),
            ("om", "info", str(data_dir / "triangle.topes"), "--json"),
            ("committees", "all", str(data_dir / "fourlines.topes"), "--json"),
            ("schemes", "johnson", "--n", "6", "--d", "3", "--json"),
        ]
        for argv in commands:
            code, out, _ = run_cli(*argv)
            assert code == 0
            payload = json.loads(out)
            assert payload["v"] == 1
            canon = json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"
            assert canon == out
            assert json.dumps(json.loads(canon), sort_keys=True, separators=(",", ":")) + "\n" == canon

    def test_repeat_runs_identical(self, data_dir):
        commands = [
            ("farey", "neighbors", "--m", "5", "--frac", "1/3"),
            ("committees", "minimal", str(data_dir / "fourlines.topes")),
            ("verify", "thm9", str(data_dir / "triangle.topes")),
        ]
        for argv in commands:
            first = run_cli(*argv)
            second = run_cli(*argv)
            assert first == second


def test_console_entry_subprocess(data_dir):
    # one end-to-end run through the real interpreter
    proc = subprocess.run(
        [sys.executable, "-m", "topecom", "om", "info", str(data_dir / "triangle.topes")],
        capture_output=True,
        text=True,
        cwd=ROOT,
        env={"PYTHONPATH": str(SRC), "PATH": "/usr/bin:/bin", "TOPECOM_FORCE_NUMPY": "1"},
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "t=3 |T|=6 acyclic=false"
