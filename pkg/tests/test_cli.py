import re

import pytest
from click.testing import CliRunner

from triplepoint.cli import main


@pytest.fixture
def runner():
    return CliRunner()


def _gen_file(runner, tmp_path, kind, k, seed):
    path = tmp_path / f"{kind}_{k}_{seed}.txt"
    result = runner.invoke(main, ["gen", kind, str(k), "--seed", str(seed), "-o", str(path)])
    assert result.exit_code == 0, result.output
    return path


class TestSolveCommands:
    def test_solve_circle(self, runner, tmp_path):
        path = _gen_file(runner, tmp_path, "circle", 2, 3)
        result = runner.invoke(main, ["solve-circle", str(path)])
        assert result.exit_code == 0, result.output
        assert "consecutive: True" in result.output

    def test_solve_circle_trace(self, runner, tmp_path):
        path = _gen_file(runner, tmp_path, "circle", 3, 9)
        result = runner.invoke(main, ["solve-circle", str(path), "--trace"])
        assert result.exit_code == 0, result.output
        for line in result.output.splitlines():
            if line.startswith("gamma-iter"):
                m = re.match(
                    r"gamma-iter (\d+) before=(\d+) after=(\d+) touched=\d+,\d+,\d+",
                    line,
                )
                assert m, line
                assert int(m.group(3)) < int(m.group(2))

    def test_solve_lines(self, runner, tmp_path):
        path = _gen_file(runner, tmp_path, "lines2d", 2, 5)
        result = runner.invoke(main, ["solve-lines", str(path)])
        assert result.exit_code == 0, result.output
        assert "witness:" in result.output

    def test_solve_lines_svg_out(self, runner, tmp_path):
        path = _gen_file(runner, tmp_path, "lines2d", 1, 2)
        svg_path = tmp_path / "out.svg"
        result = runner.invoke(
            main, ["solve-lines", str(path), "--svg-out", str(svg_path)]
        )
        assert result.exit_code == 0, result.output
        assert svg_path.read_text().startswith("<?xml")

    def test_oracle(self, runner, tmp_path):
        path = _gen_file(runner, tmp_path, "circle", 2, 7)
        result = runner.invoke(main, ["oracle", str(path)])
        assert result.exit_code == 0, result.output
        count = int(result.output.split()[0])
        assert count >= 1

    def test_render(self, runner, tmp_path):
        path = _gen_file(runner, tmp_path, "circle", 2, 8)
        svg_path = tmp_path / "circle.svg"
        result = runner.invoke(main, ["render", str(path), "--svg-out", str(svg_path)])
        assert result.exit_code == 0, result.output
        assert "<svg" in svg_path.read_text()


class TestExitCodes:
    def test_validation_failure_exit_2(self, runner, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text(
            "kind circle\nk 1\ncolors red blue green\n"
            "point 1 0 red\npoint -2 0 blue\npoint 0 1 green\n"
        )
        result = runner.invoke(main, ["solve-circle", str(bad)])
        assert result.exit_code == 2
        assert "antipodal" in result.output

    def test_parse_failure_exit_2(self, runner, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("kind circle\nk 1\ncolors a b c\nwhat 1 2 3\n")
        result = runner.invoke(main, ["solve-circle", str(bad)])
        assert result.exit_code == 2

    def test_cap_exceeded_exit_3(self, runner, tmp_path):
        path = _gen_file(runner, tmp_path, "circle", 3, 1)
        result = runner.invoke(main, ["solve-circle", str(path), "--cap", "2"])
        assert result.exit_code == 3

    def test_verifier_mismatch_exit_4(self, runner, monkeypatch):
        import triplepoint.cli as cli_module
        from triplepoint.counterexamples import Figure1Report

        monkeypatch.setattr(
            cli_module,
            "verify_figure1",
            lambda: Figure1Report(partitions=(), not_convex_position=False),
        )
        result = runner.invoke(main, ["verify-figure1"])
        assert result.exit_code == 4


class TestVerifyCommands:
    def test_verify_figure1(self, runner):
        result = runner.invoke(main, ["verify-figure1"])
        assert result.exit_code == 0, result.output
        assert "all 4 partitions verified" in result.output

    def test_verify_octahedron(self, runner):
        result = runner.invoke(main, ["verify-octahedron"])
        assert result.exit_code == 0, result.output
        assert "t=1: infeasible" in result.output
        assert "t=2: feasible" in result.output

    def test_verify_3d(self, runner):
        result = runner.invoke(main, ["verify-3d"])
        assert result.exit_code == 0, result.output
        assert "all 8 rows verified" in result.output
        assert "(1,2,3,4,5,6,7,8) (-,-,+,-,+,-,+,-) (1,2,5,7) [ok]" in result.output

    def test_verify_nonconvex(self, runner):
        result = runner.invoke(main, ["verify-nonconvex"])
        assert result.exit_code == 0, result.output
        assert "all 15 colorings verified" in result.output

    def test_gen_stdout_deterministic(self, runner):
        a = runner.invoke(main, ["gen", "circle", "2", "--seed", "5"])
        b = runner.invoke(main, ["gen", "circle", "2", "--seed", "5"])
        assert a.exit_code == 0 and a.output == b.output
