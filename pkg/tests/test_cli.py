"""Command-line interface: subcommands, exit codes, determinism, JSON mode."""

import json

import pytest

from awbraid.cli import run


def _capture(capsys):
    out = capsys.readouterr()
    return out.out, out.err


class TestDim:
    def test_values(self, capsys):
        for spin, expected in ((1, "5"), (2, "15"), (3, "34"), (4, "65")):
            assert run(["dim", "--spin", str(spin)]) == 0
            out, _ = _capture(capsys)
            assert out.strip() == expected

    def test_large_spin_needs_flag(self, capsys):
        assert run(["dim", "--spin", "7"]) == 2
        assert run(["dim", "--spin", "7", "--unsafe-large-spin"]) == 0
        out, _ = _capture(capsys)
        assert out.strip() == "260"


class TestReduce:
    def test_braid_words_identical_output(self, capsys):
        assert run(["reduce", "--spin", "2", "--word", "s1 s2 s1"]) == 0
        first, _ = _capture(capsys)
        assert run(["reduce", "--spin", "2", "--word", "s2 s1 s2"]) == 0
        second, _ = _capture(capsys)
        assert first == second
        assert first  # nonempty

    def test_identity_word(self, capsys):
        assert run(["reduce", "--spin", "1", "--word", "s1 s1^-1"]) == 0
        out, _ = _capture(capsys)
        lines = out.strip().splitlines()
        assert lines == ["[0,0,0] 1", "[1,1,0] 1"]

    def test_bad_word(self, capsys):
        assert run(["reduce", "--spin", "1", "--word", "s9"]) == 2
        _, err = _capture(capsys)
        assert "unknown generator" in err


class TestMultiply:
    def test_product(self, capsys):
        assert run(["multiply", "--spin", "1", "--x", "0,1,0", "--y", "1,0,0"]) == 0
        out, _ = _capture(capsys)
        assert out.startswith("[0,0,0]")

    def test_bad_key(self, capsys):
        assert run(["multiply", "--spin", "1", "--x", "0,1", "--y", "1,0,0"]) == 2
        assert run(["multiply", "--spin", "1", "--x", "0,9,0", "--y", "1,0,0"]) == 2


class TestVerify:
    def test_named_group_passes(self, capsys):
        assert run(["verify", "--spin", "1", "--check", "core"]) == 0
        out, _ = _capture(capsys)
        assert "PASS braid-relation" in out
        assert "all checks passed" in out

    def test_single_named_check_json(self, capsys):
        assert run(["verify", "--spin", "1", "--check", "tl", "--json"]) == 0
        out, _ = _capture(capsys)
        data = json.loads(out)
        assert data["all_pass"] is True
        assert all(r["status"] == "pass" for r in data["reports"])

    def test_unknown_check(self, capsys):
        assert run(["verify", "--spin", "1", "--check", "nonsense"]) == 2

    def test_wrong_spin_for_group(self, capsys):
        assert run(["verify", "--spin", "2", "--check", "tl"]) == 2


class TestBasis:
    def test_std(self, capsys):
        assert run(["basis", "--spin", "1", "--kind", "std"]) == 0
        out, _ = _capture(capsys)
        assert out.splitlines() == ["0 0 0", "0 1 0", "1 0 0", "1 1 0", "1 1 1"]

    def test_path(self, capsys):
        assert run(["basis", "--spin", "1", "--kind", "path"]) == 0
        out, _ = _capture(capsys)
        assert out.splitlines() == ["0", "0 1", "1 0", "1", "1 1"]


class TestStructureConstants:
    def test_out_file(self, tmp_path, capsys):
        target = tmp_path / "table.json"
        assert run(["structure-constants", "--spin", "1", "--out", str(target)]) == 0
        data = json.loads(target.read_text())
        assert data["spin"] == 1
        assert len(data["basis"]) == 5
        from awbraid.serialize import structure_from_json

        sc = structure_from_json(data)
        assert len(sc.basis) == 5

    def test_matrix_method_guard(self, capsys):
        assert run(["structure-constants", "--spin", "3", "--method", "matrix"]) == 2
        assert (
            run(
                [
                    "structure-constants",
                    "--spin",
                    "1",
                    "--method",
                    "matrix",
                    "--specialization",
                    "3/5",
                ]
            )
            == 0
        )


class TestAppendixRemark:
    def test_appendix(self, capsys):
        assert run(["appendix", "--spin", "1", "--a", "1"]) == 0
        out, _ = _capture(capsys)
        assert "equal: True  nonzero: True" in out

    def test_appendix_bad_level(self, capsys):
        assert run(["appendix", "--spin", "2", "--a", "1"]) == 2

    def test_remark45(self, capsys):
        assert run(["remark45", "--spin", "2"]) == 0
        out, _ = _capture(capsys)
        assert out.strip() == "1"


class TestUsage:
    def test_no_command(self):
        assert run([]) == 2

    def test_unknown_command(self):
        assert run(["frobnicate"]) == 2

    def test_missing_spin(self):
        assert run(["dim"]) == 2
