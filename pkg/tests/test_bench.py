"""Tests for the benchmark runner and the complexity calibration."""

from fractions import Fraction as F

import pytest

from ukp_fptas.exceptions import InvalidParameterError
from ukp_fptas.harness import BenchRunner, calibrate_complexity, records_to_frame
from ukp_fptas.harness.bench import CSV_COLUMNS, complexity_factor, run_job


class TestBenchRunner:

    def test_jobs_cross_product(self):
        runner = BenchRunner([F(1, 4), F(1, 8)])
        jobs = runner.jobs([(10, 16)], [0, 1])
        assert len(jobs) == 4
        assert {job[5] for job in jobs} == {F(1, 4), F(1, 8)}

    def test_run_records_sorted(self):
        runner = BenchRunner([F(1, 8), F(1, 4)])
        records = runner.run([(8, 16)], [1, 0])
        keys = [(record.id, record.eps) for record in records]
        assert keys == sorted(keys)
        assert len(runner.get_records_frame()) == 4

    def test_ratio_within_guarantee(self):
        for record in BenchRunner([F(1, 4)]).run([(10, 16)], range(3)):
            assert record.opt is not None
            assert record.profit >= F(3, 4) * record.opt
            assert 0.75 <= record.ratio <= 1.0

    def test_oracle_skipped_over_budget(self):
        record = run_job(("x", 6, 16, 0, "uniform", F(1, 4), 5))
        assert record.opt is None
        assert record.as_row()['opt'] == ''

    def test_reset(self):
        runner = BenchRunner([F(1, 4)])
        runner.run([(4, 8)], [0])
        runner.reset()
        assert runner.get_records_frame().empty

    @pytest.mark.parametrize("eps_list", [[], [F(0)], [F(1)]])
    def test_invalid_eps(self, eps_list):
        with pytest.raises(InvalidParameterError):
            BenchRunner(eps_list)

    def test_parallel_matches_serial(self):
        serial = BenchRunner([F(1, 4)], workers=1).run([(6, 16)], [0, 1])
        parallel = BenchRunner([F(1, 4)], workers=2).run([(6, 16)], [0, 1])
        assert [(r.id, r.profit, r.tuples) for r in serial] == [(r.id, r.profit, r.tuples) for r in parallel]


class TestFrames:

    def test_columns_and_rationals(self):
        records = BenchRunner([F(1, 4)]).run([(5, 8)], [0])
        frame = records_to_frame(records)
        assert list(frame.columns) == CSV_COLUMNS
        assert frame.loc[0, 'eps'] == '1/4'
        assert '/' in frame.loc[0, 'profit']


class TestCalibration:

    def test_factor(self):
        assert complexity_factor(F(1, 4)) == pytest.approx(16 * 64)

    def test_calibrated_bound_holds(self):
        records = BenchRunner([F(1, 4), F(1, 8)], profile="correlated").run([(60, 32)], [0, 1])
        report = calibrate_complexity(records)
        assert len(report) == 4
        assert report['within_bound'].all()
        assert (report['C'] > 0).all()

    def test_empty(self):
        assert calibrate_complexity([]).empty

    def test_missing_reference_eps(self):
        records = BenchRunner([F(1, 8)]).run([(10, 16)], [0])
        with pytest.raises(InvalidParameterError, match="eps=1/4"):
            calibrate_complexity(records)
