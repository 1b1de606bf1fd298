"""Tests for the acceptance suites"""

import math

import pytest

from ulamk.bench import SUITES, _shard, bdj_target, bench
from ulamk.exceptions import UnknownSuiteError


class TestBench:
    """Test bench dispatch and reports"""

    def test_figure1_suite(self):
        """The example suite passes and names its criteria"""
        report = bench("figure1", 0)
        assert report.passed
        assert report.suite == "figure1"
        assert [c.name for c in report.criteria] == [
            "distance_and_removed_set",
            "two_move_path",
            "deterministic_frames",
        ]
        assert report.elapsed_s >= 0

    def test_unknown_suite(self):
        """Typos get a suggestion and the list of suites"""
        with pytest.raises(UnknownSuiteError) as exc_info:
            bench("bdjj", 0)
        suggestions = exc_info.value.suggestions
        assert suggestions[0] == "Did you mean: bdj?"
        assert suggestions[-1].startswith("Known suites:")
        assert exc_info.value.exit_code == 2

    def test_registered_suites(self):
        """All acceptance suites are available"""
        assert {
            "oracle",
            "sat",
            "graph",
            "power",
            "path",
            "metric",
            "bdj",
            "approx",
        } <= set(SUITES)

    def test_shard_preserves_order(self):
        """Sharded results come back in task order"""
        tasks = [-x for x in range(10)]
        assert _shard(abs, tasks, 1) == list(range(10))
        assert _shard(abs, tasks, 2) == list(range(10))

    def test_bdj_target(self):
        """2 sqrt(n) - 1.77108 n^(1/6)"""
        assert bdj_target(64) == pytest.approx(16 - 1.77108 * 2)
        assert bdj_target(400) == pytest.approx(40 - 1.77108 * math.pow(400, 1 / 6))


@pytest.mark.slow
class TestSuites:
    """Run the full acceptance suites"""

    @pytest.mark.parametrize(
        "suite",
        ["oracle", "approx", "fpt", "sat", "graph", "power", "path", "metric", "bdj"],
    )
    def test_suite_passes(self, suite):
        """Every criterion passes for seed 0"""
        report = bench(suite, 0)
        failed = [c.name for c in report.criteria if not c.passed]
        assert report.passed, failed

    def test_deterministic_per_seed(self):
        """Same seed, same measurements"""
        first = bench("metric", 3)
        second = bench("metric", 3)
        assert [c.measured for c in first.criteria] == [
            c.measured for c in second.criteria
        ]

    def test_workers_do_not_change_results(self):
        """Sharding only splits the work"""
        serial = bench("oracle", 1, workers=1)
        sharded = bench("oracle", 1, workers=2)
        assert [c.measured for c in serial.criteria] == [
            c.measured for c in sharded.criteria
        ]
