"""Tests for the brute-force oracle and its agreement with the engine."""

from itertools import combinations
from typing import List, Sequence, Tuple

import pytest
from hypothesis import given, settings
from hypothesis.strategies import composite, integers, lists, tuples

from symbolique.config import configure
from symbolique.core.ideal import power
from symbolique.core.matroid import direct_sum, matroid_from_bases, uniform_matroid
from symbolique.core.subsets import from_elements
from symbolique.exceptions import (
    BudgetExceededError,
    NotSquarefreeError,
    ParameterOutOfRangeError,
    ZeroOrUnitIdealError,
)
from symbolique.features.oracle import (
    intersect_prime_powers,
    minimal_primes,
    noether_number_bruteforce,
    raw_height,
    sdefect_direct,
    symbolic_power_bruteforce,
    symbolic_power_raw,
)
from symbolique.features.sides import Side
from symbolique.features.symbolic_engine import symbolic_power
from symbolique.parser import parse_generators
from tests.conftest import family, gens


def gf2_rank(columns: List[int]) -> int:
    basis: List[int] = []
    for v in columns:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    return len(basis)


def binary_matroid(columns: List[int]):
    """Column matroid over GF(2) of the given column vectors."""
    n = len(columns)
    rank = gf2_rank(columns)
    bases = [
        from_elements(combo)
        for combo in combinations(range(n), rank)
        if gf2_rank([columns[i] for i in combo]) == rank
    ]
    return matroid_from_bases(n, bases)


def gf3_rank(vectors: Sequence[Tuple[int, ...]]) -> int:
    rows = [list(v) for v in vectors]
    rank = 0
    width = len(rows[0]) if rows else 0
    for col in range(width):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        # 1 and 2 are their own inverses mod 3
        scale = rows[rank][col]
        rows[rank] = [x * scale % 3 for x in rows[rank]]
        for i, row in enumerate(rows):
            if i != rank and row[col]:
                factor = row[col]
                rows[i] = [(a - factor * b) % 3 for a, b in zip(row, rows[rank])]
        rank += 1
    return rank


def ternary_matroid(columns: List[Tuple[int, ...]]):
    """Column matroid over GF(3) of the given column vectors."""
    n = len(columns)
    rank = gf3_rank(columns)
    bases = [
        from_elements(combo)
        for combo in combinations(range(n), rank)
        if gf3_rank([columns[i] for i in combo]) == rank
    ]
    return matroid_from_bases(n, bases)


class TestIntersections:
    """Tests for prime-power intersections."""

    def test_three_primes(self):
        result = symbolic_power_bruteforce(uniform_matroid(3, 2), 2)
        assert set(result.gens) == gens("abc, a^2b^2, a^2c^2, b^2c^2", 3)

    def test_no_primes(self):
        assert intersect_prime_powers(3, [], 2).is_unit()

    def test_empty_prime(self):
        assert intersect_prime_powers(3, [0], 2).is_zero()

    def test_level_range(self):
        with pytest.raises(ParameterOutOfRangeError):
            intersect_prime_powers(3, [0b11], 0)

    def test_budget_estimate(self):
        with pytest.raises(BudgetExceededError):
            symbolic_power_bruteforce(uniform_matroid(3, 2), 2, budget=5)

    def test_budget_from_settings(self):
        configure(oracle_budget=5)
        with pytest.raises(BudgetExceededError):
            symbolic_power_bruteforce(uniform_matroid(3, 2), 2)


class TestRawIdeals:
    """Tests for ideals given only by generators."""

    def test_minimal_primes(self):
        primes = minimal_primes(parse_generators("ab, ac, bcd"))
        assert set(primes) == set(family((0, 1), (0, 2), (0, 3), (1, 2)))
        assert raw_height(parse_generators("ab, ac, bcd")) == 2

    def test_principal(self):
        ideal = parse_generators("abc")
        for level in range(1, 4):
            assert symbolic_power_raw(ideal, level) == power(ideal, level)

    def test_not_squarefree(self):
        with pytest.raises(NotSquarefreeError):
            symbolic_power_raw(parse_generators("a^2b"), 2)

    def test_zero(self):
        with pytest.raises(ZeroOrUnitIdealError):
            symbolic_power_raw(parse_generators("1", 2), 2)

    def test_squarefree_part_of_non_matroidal(self):
        ideal = parse_generators("ae, af, bdf, be, cdf, ce")
        second = symbolic_power_raw(ideal, 2)
        squarefree = {g for g in second.gens if g.is_squarefree()}
        assert squarefree == gens("abef, acef, bcdef", 6)


class TestSymbolicDefect:
    """Tests for counting the symbolic defect directly."""

    def test_non_matroidal(self):
        ideal = parse_generators("ab, ac, bcd")
        assert sdefect_direct(ideal, 2, symbolic_power_raw(ideal, 2)) == 1

    def test_ten(self):
        ideal = parse_generators("ab, ace, ade, aef, bce, cd, cf, bde, bef, df")
        second = symbolic_power_raw(ideal, 2)
        assert len(second) == 23
        assert sdefect_direct(ideal, 2, second) == 10

    def test_complete_intersection(self):
        ideal = parse_generators("ab, cd, ef")
        for level in range(1, 4):
            assert sdefect_direct(ideal, level, symbolic_power_raw(ideal, level)) == 0


class TestNoether:
    """Tests for the brute-force symbolic Noether number."""

    def test_fano(self, fano):
        assert noether_number_bruteforce(fano) == 3

    def test_two_components(self):
        m = direct_sum(uniform_matroid(2, 1), uniform_matroid(2, 1))
        assert noether_number_bruteforce(m) == 1

    def test_uniform(self):
        assert noether_number_bruteforce(uniform_matroid(3, 2)) == 2


@composite
def ternary_columns(draw):
    dimension = draw(integers(2, 4))
    vector = tuples(*[integers(0, 2)] * dimension).filter(any)
    return draw(lists(vector, min_size=6, max_size=7))


def assert_engine_matches_oracle(m):
    for side in Side:
        for level in range(1, 5):
            assert symbolic_power(m, level, side) == symbolic_power_bruteforce(
                m, level, side
            ), (m, side, level)


@pytest.mark.slow
@settings(max_examples=200, deadline=None)
@given(lists(integers(1, 7), min_size=6, max_size=7))
def test_random_binary_matroids(columns):
    assert_engine_matches_oracle(binary_matroid(columns))


@pytest.mark.slow
@settings(max_examples=200, deadline=None)
@given(ternary_columns())
def test_random_ternary_matroids(columns):
    assert_engine_matches_oracle(ternary_matroid(columns))
