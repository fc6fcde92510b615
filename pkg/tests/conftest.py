"""
Shared test fixtures and utilities for symbolique tests.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import List, Sequence, Tuple

import pytest

from symbolique.config import configure, get_settings
from symbolique.core.matroid import (
    Matroid,
    exchange_violation,
    matroid_from_bases,
    matroid_from_circuits,
    steiner_matroid,
)
from symbolique.core.monomial import Monomial
from symbolique.core.subsets import from_elements, subsets_of_size
from symbolique.features.symbolic_engine import clear_cache
from symbolique.parser import parse_generators


# =============================================================================
# Named matroids
# =============================================================================

FANO_BLOCKS = [(0, 1, 2), (0, 3, 6), (0, 4, 5), (1, 3, 5), (1, 4, 6), (2, 3, 4), (2, 5, 6)]

# Rank 3 on six elements; paving but not sparse paving
PAVING6_BASES = [
    (0, 1, 4), (0, 1, 5), (0, 2, 4), (0, 2, 5), (0, 3, 4), (0, 3, 5), (0, 4, 5),
    (1, 2, 4), (1, 2, 5), (1, 3, 4), (1, 3, 5), (2, 3, 4), (2, 3, 5), (2, 4, 5),
    (3, 4, 5),
]

# Supports of (af, cd, bde, bce)
RUNNING_CIRCUITS = [(0, 5), (2, 3), (1, 3, 4), (1, 2, 4)]


def family(*sets: Sequence[int]) -> List[int]:
    return [from_elements(s) for s in sets]


def mono(text: str, n: int) -> Monomial:
    """Single monomial from text such as ``a^2bc``."""
    (g,) = parse_generators(text, n).gens
    return g


def gens(text: str, n: int) -> set:
    """Generator set of an ideal given as comma-separated monomials."""
    return set(parse_generators(text, n).gens)


@pytest.fixture
def fano() -> Matroid:
    return steiner_matroid(7, 2, 3, family(*FANO_BLOCKS))


@pytest.fixture
def paving6() -> Matroid:
    return matroid_from_bases(6, family(*PAVING6_BASES))


@pytest.fixture
def running() -> Matroid:
    """The matroid whose Stanley–Reisner ideal is (af, cd, bde, bce)."""
    return matroid_from_circuits(6, family(*RUNNING_CIRCUITS))


@pytest.fixture(autouse=True)
def fresh_state():
    """Reset the layer cache and the runtime settings around every test."""
    saved = get_settings()
    clear_cache()
    yield
    configure(debug=saved.debug, oracle_budget=saved.oracle_budget)
    clear_cache()


@pytest.fixture
def debug_mode():
    configure(debug=True)


# =============================================================================
# Exhaustive small-matroid corpus
# =============================================================================


def _canonical_form(n: int, bases: Tuple[int, ...]) -> Tuple[int, ...]:
    best = None
    for perm in permutations(range(n)):
        relabelled = tuple(
            sorted(sum(1 << perm[e] for e in range(n) if b >> e & 1) for b in bases)
        )
        if best is None or relabelled < best:
            best = relabelled
    return best


@lru_cache(maxsize=None)
def small_matroids(max_n: int) -> Tuple[Matroid, ...]:
    """Every matroid on 1..max_n elements, up to relabelling."""
    found = []
    for n in range(1, max_n + 1):
        seen = set()
        for c in range(n + 1):
            candidates = list(subsets_of_size(n, c))
            for k in range(1, len(candidates) + 1):
                for bases in combinations(candidates, k):
                    if exchange_violation(bases) is not None:
                        continue
                    key = _canonical_form(n, bases)
                    if key in seen:
                        continue
                    seen.add(key)
                    found.append(Matroid(n, key))
    return tuple(found)


@pytest.fixture(scope="session")
def corpus() -> Tuple[Matroid, ...]:
    return small_matroids(4)


@pytest.fixture(scope="session")
def corpus5() -> Tuple[Matroid, ...]:
    return small_matroids(5)


@dataclass
class GeneratorCase:
    """A worked example: an ideal, a level and the expected generators."""

    name: str
    ideal: str
    n: int
    level: int
    expected: str
