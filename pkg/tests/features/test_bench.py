"""Tests for timing sweeps."""

import pytest

from symbolique.features.bench import BenchRow, run_benchmark
from symbolique.features.sides import Side
from symbolique.features.symbolic_engine import symbolic_power

# Floor for timings too short for the clock
TICK = 1e-9


class TestRunBenchmark:
    """Tests for engine and oracle timing rows."""

    def test_rows(self, fano):
        rows = run_benchmark(fano, [1, 2, 3], oracle_level=2)
        assert [(row.level, row.method) for row in rows] == [
            (1, "fast"),
            (2, "fast"),
            (3, "fast"),
            (2, "bruteforce"),
        ]
        assert rows[1].generators == rows[3].generators
        assert all(row.seconds >= 0 for row in rows)

    def test_row_dict(self):
        row = BenchRow(4, "fast", 0.5, 12)
        assert row.to_dict() == {"l": 4, "method": "fast", "seconds": 0.5, "count": 12}

    def test_stanley_reisner_side(self, running):
        rows = run_benchmark(running, [1, 2], side=Side.SR)
        assert rows[0].generators == 4
        assert rows[1].generators == len(symbolic_power(running, 2, Side.SR))

    @pytest.mark.slow
    def test_growth_fano(self, fano):
        rows = run_benchmark(fano, range(10, 21), loops=3)
        assert [row.level for row in rows] == list(range(10, 21))
        counts = {row.level: row.generators for row in rows}
        assert counts[10] == 210
        assert counts[20] == 770
        seconds = {row.level: max(row.seconds, TICK) for row in rows}
        assert seconds[20] < 5.0
        assert seconds[20] / seconds[10] <= 10

    @pytest.mark.slow
    def test_oracle_slower_fano(self, fano):
        fast, oracle = run_benchmark(fano, [6], oracle_level=6, loops=3)
        assert fast.method == "fast"
        assert oracle.method == "bruteforce"
        assert fast.generators == oracle.generators
        assert oracle.seconds >= 10 * max(fast.seconds, TICK)
