"""Command-line interface: outputs, formats, exit codes, artifacts."""

import json

import pytest

from tnspec.cli import run
from tnspec.oracle import clear_caches


def invoke(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEig:
    def test_text(self, capsys):
        code, out, _ = invoke(capsys, ["eig", "4", "1", "1"])
        assert code == 0
        assert out == "3\n"

    def test_rectangle(self, capsys):
        code, out, _ = invoke(capsys, ["eig", "3", "3"])
        assert code == 0
        assert out == "3\n"

    def test_json(self, capsys):
        code, out, _ = invoke(capsys, ["eig", "--format", "json", "4", "1", "1"])
        assert code == 0
        assert json.loads(out) == {"eigenvalue": 3, "partition": [4, 1, 1]}

    def test_rejects_unsorted_parts(self, capsys):
        code, out, err = invoke(capsys, ["eig", "3", "4"])
        assert code == 1
        assert out == ""
        assert "nonincreasing" in err

    def test_missing_args_is_usage_error(self, capsys):
        code, _, err = invoke(capsys, ["eig"])
        assert code == 2
        assert "usage" in err


class TestConj:
    def test_text(self, capsys):
        code, out, _ = invoke(
            capsys, ["conj", "5", "4", "4", "2", "2", "2", "1", "1"]
        )
        assert code == 0
        assert out == "8 6 3 3 1\n"


class TestSpectrum:
    def test_text(self, capsys):
        code, out, _ = invoke(capsys, ["spectrum", "4"])
        assert code == 0
        assert out == "-6 -2 0 2 6\n"

    def test_json(self, capsys):
        code, out, _ = invoke(capsys, ["spectrum", "4", "--format", "json"])
        assert json.loads(out) == {"n": 4, "values": [-6, -2, 0, 2, 6]}

    def test_witnesses_flag(self, capsys):
        code, out, _ = invoke(
            capsys, ["spectrum", "4", "--format", "json", "--witnesses"]
        )
        payload = json.loads(out)
        assert payload["witnesses"]["6"] == [4]
        assert payload["witnesses"]["0"] == [2, 2]

    def test_constrained(self, capsys):
        code, out, _ = invoke(capsys, ["spectrum", "6", "--max-first-part", "2"])
        assert code == 0
        assert out == "-15 -9 -5 -3\n"

    def test_limit_flag(self, capsys):
        code, _, err = invoke(capsys, ["spectrum", "55"])
        assert code == 1
        assert "limit" in err
        code, out, _ = invoke(capsys, ["spectrum", "51", "--oracle-limit", "51"])
        assert code == 0
        assert out.split()[-1] == "1275"

    def test_limit_env_var(self, capsys, monkeypatch):
        monkeypatch.setenv("TNSPEC_ORACLE_LIMIT", "20")
        code, _, err = invoke(capsys, ["spectrum", "25"])
        assert code == 1
        assert "limit" in err


class TestContains:
    def test_absent(self, capsys):
        code, out, _ = invoke(capsys, ["contains", "18", "4"])
        assert code == 0
        assert out == "false\n"

    def test_present_shows_witness(self, capsys):
        code, out, _ = invoke(capsys, ["contains", "18", "5"])
        assert code == 0
        assert out == "true\nwitness: 8 3 2 2 1 1 1\n"

    def test_json(self, capsys):
        code, out, _ = invoke(capsys, ["contains", "18", "4", "--format", "json"])
        assert json.loads(out) == {
            "contained": False,
            "k": 4,
            "n": 18,
            "witness": None,
        }

    def test_negative_k(self, capsys):
        code, out, _ = invoke(capsys, ["contains", "18", "-5"])
        assert code == 0
        assert out.startswith("true\n")


class TestWitness:
    def test_linear_text(self, capsys):
        code, out, _ = invoke(capsys, ["witness", "31", "-15"])
        assert code == 0
        assert out == (
            "15 2 1 1 1 1 1 1 1 1 1 1 1 1 1 1\n"
            "family: S1_mid_odd+conjugate\n"
            "verified: true\n"
        )

    def test_quadratic_json(self, capsys):
        code, out, _ = invoke(
            capsys, ["witness", "--theorem", "5", "48", "413", "--format", "json"]
        )
        payload = json.loads(out)
        assert payload["partition"] == [31, 5, 3, 2, 1, 1, 1, 1, 1, 1, 1]
        assert payload["family"] == "head=31+oracle"
        assert payload["verified"] is True

    def test_below_range_without_fallback(self, capsys):
        code, out, err = invoke(capsys, ["witness", "30", "5"])
        assert code == 1
        assert "oracle fallback" in err

    def test_below_range_with_fallback(self, capsys):
        code, out, _ = invoke(capsys, ["witness", "30", "5", "--oracle-fallback"])
        assert code == 0
        assert "family: oracle" in out

    def test_invalid_theorem_value(self, capsys):
        code, _, err = invoke(capsys, ["witness", "--theorem", "4", "48", "90"])
        assert code == 2


class TestCover:
    def test_linear_text(self, capsys):
        code, out, _ = invoke(capsys, ["cover", "31"])
        assert code == 0
        assert "covered=63" in out
        assert "failures=0" in out

    def test_csv(self, capsys):
        code, out, _ = invoke(capsys, ["cover", "31", "--format", "csv"])
        lines = out.strip().splitlines()
        assert lines[0] == "target,status,family,partition,detail"
        assert len(lines) == 64

    def test_quadratic(self, capsys):
        code, out, _ = invoke(capsys, ["cover", "--theorem", "5", "48"])
        assert code == 0
        assert "covered=423" in out


class TestBounds:
    def test_text(self, capsys):
        code, out, _ = invoke(capsys, ["bounds", "48"])
        assert code == 0
        assert out == "y1=74 y2=496\n"

    def test_json(self, capsys):
        code, out, _ = invoke(capsys, ["bounds", "48", "--format", "json"])
        assert json.loads(out) == {"n": 48, "y1": 74, "y2": 496}


class TestVerify:
    def test_single_check(self, capsys):
        code, out, _ = invoke(
            capsys, ["verify", "--checks", "family:Zero", "--n-max", "40"]
        )
        assert code == 0
        assert "family:Zero" in out

    def test_unknown_check(self, capsys):
        code, _, err = invoke(capsys, ["verify", "--checks", "bogus"])
        assert code == 1
        assert "bogus" in err

    def test_artifacts(self, capsys, tmp_path):
        code, _, _ = invoke(
            capsys,
            [
                "verify",
                "--checks",
                "family:Zero,first_part_bounds",
                "--n-max",
                "35",
                "--out",
                str(tmp_path),
            ],
        )
        assert code == 0
        names = sorted(p.name for p in tmp_path.iterdir())
        assert names == [
            "verify_family_Zero.json",
            "verify_first_part_bounds.json",
            "verify_summary.json",
        ]
        summary = json.loads((tmp_path / "verify_summary.json").read_text())
        assert summary["ok"] is True


class TestConjecture:
    def test_text(self, capsys):
        code, out, _ = invoke(capsys, ["conjecture", "31"])
        assert code == 0
        first = out.splitlines()[0]
        assert first == "n=31 gap=[32, 62] present=31 absent=0"

    def test_json_deterministic(self, capsys):
        code, first, _ = invoke(capsys, ["conjecture", "40", "--format", "json"])
        clear_caches()
        code, second, _ = invoke(capsys, ["conjecture", "40", "--format", "json"])
        assert first == second


class TestCayley:
    def test_small(self, capsys):
        code, out, _ = invoke(capsys, ["cayley", "3"])
        assert code == 0
        assert out == "-3 0 3\n"

    def test_too_large(self, capsys):
        code, _, err = invoke(capsys, ["cayley", "7"])
        assert code == 1
        assert "6" in err


class TestArtifacts:
    def test_spectrum_artifact(self, capsys, tmp_path):
        code, _, _ = invoke(capsys, ["spectrum", "4", "--out", str(tmp_path)])
        assert code == 0
        payload = json.loads((tmp_path / "spectrum_4.json").read_text())
        assert payload == {"n": 4, "values": [-6, -2, 0, 2, 6]}

    def test_witness_artifact(self, capsys, tmp_path):
        invoke(capsys, ["witness", "48", "-30", "--out", str(tmp_path)])
        files = list(tmp_path.iterdir())
        assert len(files) == 1
        assert files[0].name == "witness_48_-30.json"
