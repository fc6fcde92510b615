"""Timing sweeps of the symbolic power engine against the brute-force oracle."""

import logging
import time
from dataclasses import dataclass
from typing import Callable, Iterable, List, Optional, Tuple

from symbolique.core.ideal import MonomialIdeal
from symbolique.core.matroid import Matroid
from symbolique.features.oracle import symbolic_power_bruteforce
from symbolique.features.sides import Side, cover_matroid
from symbolique.features.symbolic_engine import squarefree_layer, symbolic_power

logger = logging.getLogger("symbolique")


@dataclass(frozen=True)
class BenchRow:
    level: int
    method: str
    seconds: float
    generators: int

    def to_dict(self):
        return {
            "l": self.level,
            "method": self.method,
            "seconds": self.seconds,
            "count": self.generators,
        }


def _timed(func: Callable[[], MonomialIdeal], loops: int) -> Tuple[float, MonomialIdeal]:
    timer = time.perf_counter
    best = None
    result = None
    for _ in range(loops):
        t0 = timer()
        result = func()
        elapsed = timer() - t0
        best = elapsed if best is None else min(best, elapsed)
    return best, result


def warm_cache(matroid: Matroid, side: Side) -> None:
    """Compute every squarefree layer so sweeps time the chain walk only."""
    for level in range(1, cover_matroid(matroid, side).rank + 1):
        squarefree_layer(matroid, side, level)


def run_benchmark(
    matroid: Matroid,
    levels: Iterable[int],
    side: Side = Side.COVER,
    oracle_level: Optional[int] = None,
    loops: int = 1,
) -> List[BenchRow]:
    """
    Time symbolic powers level by level with a warm squarefree-layer cache.

    Args:
        matroid: The matroid.
        levels: Exponents to time with the fast engine.
        side: Which ideal.
        oracle_level: If given, also time the brute-force oracle at this exponent.
        loops: Repetitions per measurement; the fastest is reported.

    Returns:
        One row per measurement, engine rows first.
    """
    side = Side(side)
    warm_cache(matroid, side)
    rows = []
    for level in levels:
        seconds, ideal = _timed(lambda: symbolic_power(matroid, level, side), loops)
        logger.info("l=%d: %d generators in %.4fs", level, len(ideal), seconds)
        rows.append(BenchRow(level, "fast", seconds, len(ideal)))
    if oracle_level is not None:
        seconds, ideal = _timed(
            lambda: symbolic_power_bruteforce(matroid, oracle_level, side), loops
        )
        logger.info("oracle l=%d: %d generators in %.4fs", oracle_level, len(ideal), seconds)
        rows.append(BenchRow(oracle_level, "bruteforce", seconds, len(ideal)))
    return rows
