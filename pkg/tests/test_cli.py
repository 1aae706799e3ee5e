"""Tests for the command line."""

from dataclasses import replace
from fractions import Fraction as F

import pandas as pd
import pytest

from ukp_fptas.harness import generate_instance, parse_result, render_instance
from ukp_fptas.harness.cli import (
    EXIT_BUDGET,
    EXIT_GUARANTEE,
    EXIT_INPUT,
    EXIT_OK,
    main,
    run_verify,
)
from ukp_fptas.model import SolutionMultiset
from ukp_fptas.solver import solve


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


class TestSolveCommand:

    def test_machine_output(self, star_file, capsys):
        assert main(["solve", "--input", str(star_file), "--eps", "1/4", "--emit", "machine"]) == EXIT_OK
        parsed = parse_result(capsys.readouterr().out)
        assert parsed['profit'] == F(31, 25)
        assert parsed['takes'] == {0: 2, 2: 4}

    def test_text_output(self, star_file, capsys):
        assert main(["solve", "--input", str(star_file), "--eps", "0.25"]) == EXIT_OK
        assert "Profit: 31/25" in capsys.readouterr().out

    @pytest.mark.parametrize("eps", ["0", "1", "3/2", "abc"])
    def test_invalid_eps(self, star_file, eps):
        assert main(["solve", "--input", str(star_file), "--eps", eps]) == EXIT_INPUT

    def test_empty_file(self, tmp_path):
        path = write(tmp_path, "empty.txt", "# no items\nc 1\n")
        assert main(["solve", "--input", path]) == EXIT_INPUT

    def test_parse_error(self, tmp_path):
        path = write(tmp_path, "bad.txt", "item 1/2\n")
        assert main(["solve", "--input", path]) == EXIT_INPUT

    def test_missing_file(self, tmp_path):
        assert main(["solve", "--input", str(tmp_path / "missing.txt")]) == EXIT_INPUT

    @pytest.mark.parametrize("command", ["solve", "verify"])
    def test_undecodable_file(self, tmp_path, command):
        path = tmp_path / "latin.txt"
        path.write_bytes(b"item 1/2 \xff\xfe\n")
        assert main([command, "--input", str(path)]) == EXIT_INPUT

    def test_usage_error_exits_two(self):
        with pytest.raises(SystemExit) as info:
            main(["solve"])
        assert info.value.code == 2


class TestVerifyCommand:

    def test_star_dp(self, star_file, capsys):
        assert main(["verify", "--input", str(star_file), "--eps", "1/4", "--oracle", "dp"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "opt 31/25" in out
        assert "ratio 1/1" in out

    def test_star_brute(self, star_file):
        assert main(["verify", "--input", str(star_file), "--eps", "1/4", "--oracle", "brute"]) == EXIT_OK

    def test_budget_exceeded(self, tmp_path):
        path = write(tmp_path, "big.txt", render_instance(generate_instance(30, 64, 3)))
        assert main(["verify", "--input", path, "--oracle", "dp", "--budget", "10"]) == EXIT_BUDGET

    def test_tampered_profit(self, star):
        def inflated(instance, eps):
            result = solve(instance, eps)
            return replace(result, profit=result.profit + 1)

        assert run_verify(star, F(1, 4), solve_fn=inflated) == EXIT_GUARANTEE

    def test_tampered_certificate(self, star):
        def forged(instance, eps):
            forged_solution = SolutionMultiset(counts={0: 3}, total_profit=F(3, 2), total_size=F(6, 5))
            return replace(solve(instance, eps), solution=forged_solution, profit=F(3, 2))

        assert run_verify(star, F(1, 4), solve_fn=forged) == EXIT_GUARANTEE

    def test_weak_solution(self, star):
        def weak(instance, eps):
            weak_solution = SolutionMultiset.from_counts({1: 1}, instance.by_index())
            return replace(solve(instance, eps), solution=weak_solution, profit=weak_solution.total_profit)

        assert run_verify(star, F(1, 4), solve_fn=weak) == EXIT_GUARANTEE


class TestGenCommand:

    def test_stdout(self, capsys):
        assert main(["gen", "--n", "5", "-D", "8", "--seed", "4"]) == EXIT_OK
        assert capsys.readouterr().out == render_instance(generate_instance(5, 8, 4))

    def test_file(self, tmp_path):
        path = tmp_path / "inst.txt"
        assert main(["gen", "--n", "5", "-D", "8", "--profile", "correlated", "--output", str(path)]) == EXIT_OK
        assert path.read_text(encoding="utf-8").startswith("# 5 items")

    def test_invalid(self):
        assert main(["gen", "--n", "0", "-D", "8"]) == EXIT_INPUT


class TestBenchCommand:

    def test_cross_product(self, tmp_path):
        csv_path = tmp_path / "bench.csv"
        code = main([
            "bench", "--eps-list", "1/4,1/8", "--sizes", "8:16", "--seeds", "0,1", "--csv", str(csv_path),
        ])
        assert code == EXIT_OK
        frame = pd.read_csv(csv_path)
        assert len(frame) == 4
        counters = ["tuples", "glue_ops", "slots", "dominance_removals"]
        assert (frame[counters] >= 0).all().all()
        assert list(frame.columns) == [
            'id', 'n', 'D', 'eps', 'profit', 'opt', 'ratio', 'wall_ns',
            'tuples', 'glue_ops', 'slots', 'dominance_removals',
        ]

    def test_calibrate(self, tmp_path, capsys):
        csv_path = tmp_path / "bench.csv"
        code = main([
            "bench", "--eps-list", "1/4,1/8", "--sizes", "20:32", "--seeds", "0..1",
            "--profile", "correlated", "--csv", str(csv_path), "--calibrate",
        ])
        assert code == EXIT_OK
        assert "within_bound" in capsys.readouterr().out

    def test_calibrate_without_reference_eps(self, tmp_path, caplog):
        csv_path = tmp_path / "bench.csv"
        code = main([
            "bench", "--eps-list", "1/8,1/16", "--sizes", "10:16", "--seeds", "0",
            "--csv", str(csv_path), "--calibrate",
        ])
        assert code == EXIT_INPUT
        assert "eps=1/4" in caplog.text
        assert "exceeds the calibrated bound" not in caplog.text

    def test_bad_sizes(self, tmp_path):
        assert main(["bench", "--sizes", "8x16", "--csv", str(tmp_path / "b.csv")]) == EXIT_INPUT

    def test_unwritable_csv(self, tmp_path):
        target = tmp_path / "missing" / "b.csv"
        args = ["bench", "--sizes", "4:8", "--seeds", "0", "--eps-list", "1/4", "--csv", str(target)]
        assert main(args) == EXIT_INPUT
