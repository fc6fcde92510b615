"""
Brute-force reference computations.

Nothing here relies on matroid structure beyond reading off the associated
primes: symbolic powers are intersections of prime powers, the symbolic
defect is counted generator by generator, and the symbolic Noether number is
found by testing which squarefree generators are products of lower pieces.
These routes exist to validate the fast paths.
"""

import logging
from typing import Dict, Iterable, Optional

from symbolique.config import get_settings
from symbolique.core.ideal import (
    MonomialIdeal,
    graded_products,
    intersect,
    mu,
    power,
    prime_power_generators,
    squarefree_part,
    unit_ideal,
    zero_ideal,
)
from symbolique.core.matroid import Matroid
from symbolique.core.subsets import GroundSubset, SubsetFamily, size
from symbolique.core.transversal import minimal_transversals
from symbolique.exceptions import (
    BudgetExceededError,
    NotSquarefreeError,
    ParameterOutOfRangeError,
    ZeroOrUnitIdealError,
)
from symbolique.features.sides import Side, cover_matroid
from symbolique.utils import binomial

logger = logging.getLogger("symbolique")


def intersect_prime_powers(
    n: int,
    primes: Iterable[GroundSubset],
    level: int,
    budget: Optional[int] = None,
) -> MonomialIdeal:
    """
    Intersection of p_F^level over the given variable sets F.

    Args:
        n: Number of variables.
        primes: Supports of the primes, folded in ascending order.
        level: Exponent, at least 1.
        budget: Pairwise LCM operations allowed; defaults to the settings.

    Raises:
        BudgetExceededError: If the estimate or the running count exceeds the budget.
    """
    if level < 1:
        raise ParameterOutOfRangeError(f"Symbolic power exponent must be >= 1, got {level}")
    budget = get_settings().oracle_budget if budget is None else budget
    family = sorted(set(primes))
    if not family:
        return unit_ideal(n)
    if 0 in family:
        return zero_ideal(n)

    widest = max(size(p) for p in family)
    estimate = len(family) * binomial(level + widest - 1, widest - 1)
    if estimate > budget:
        raise BudgetExceededError(
            f"Estimated {estimate} operations exceed the oracle budget of {budget}"
        )

    result = unit_ideal(n)
    spent = 0
    for prime in family:
        factor = prime_power_generators(prime, level, n)
        spent += len(result.gens) * len(factor.gens)
        if spent > budget:
            raise BudgetExceededError(
                f"Intersection used more than {budget} LCM operations"
            )
        result = intersect(result, factor)
    logger.debug(
        "Intersected %d prime powers at level %d: %d generators, %d LCMs",
        len(family),
        level,
        len(result.gens),
        spent,
    )
    return result


def symbolic_power_bruteforce(
    matroid: Matroid, level: int, side: Side = Side.COVER, budget: Optional[int] = None
) -> MonomialIdeal:
    """
    I^(level) as the intersection of the level-th powers of the associated primes.

    The primes of the cover ideal are indexed by the bases; those of the
    Stanley–Reisner ideal by the basis complements.
    """
    facets = cover_matroid(matroid, side).bases
    return intersect_prime_powers(matroid.n, facets, level, budget)


def _check_raw(ideal: MonomialIdeal) -> None:
    if ideal.is_zero() or ideal.is_unit():
        raise ZeroOrUnitIdealError("Expected a nonzero proper ideal")
    if not ideal.is_squarefree():
        raise NotSquarefreeError(f"{ideal} is not squarefree")


def minimal_primes(ideal: MonomialIdeal) -> SubsetFamily:
    """Supports of the minimal primes of a squarefree monomial ideal."""
    _check_raw(ideal)
    return minimal_transversals(ideal.n, ideal.supports())


def raw_height(ideal: MonomialIdeal) -> int:
    return min(size(p) for p in minimal_primes(ideal))


def symbolic_power_raw(
    ideal: MonomialIdeal, level: int, budget: Optional[int] = None
) -> MonomialIdeal:
    """
    Symbolic power of a squarefree ideal given only by generators.

    Raises:
        NotSquarefreeError: If a generator is not squarefree.
        ZeroOrUnitIdealError: For the zero or the unit ideal.
    """
    return intersect_prime_powers(ideal.n, minimal_primes(ideal), level, budget)


def sdefect_direct(ideal: MonomialIdeal, level: int, symb: MonomialIdeal) -> int:
    """
    Minimal generators of I^(level) that do not lie in I^level.

    Args:
        ideal: The ideal I.
        level: The exponent.
        symb: I^(level), from any route.
    """
    ordinary = power(ideal, level)
    in_power = sum(1 for g in symb.gens if ordinary.contains(g))
    return mu(symb) - in_power


def noether_number_bruteforce(matroid: Matroid, side: Side = Side.COVER) -> int:
    """
    Largest degree of a minimal algebra generator of the symbolic Rees algebra.

    Degree k contributes a generator when some squarefree minimal generator of
    I^(k) is not in the sum of I^(i) I^(k-i), 1 <= i < k.
    """
    height = cover_matroid(matroid, side).rank
    if height == 0:
        return 0
    powers: Dict[int, MonomialIdeal] = {1: symbolic_power_bruteforce(matroid, 1, side)}
    largest = 1
    for k in range(2, height + 1):
        powers[k] = symbolic_power_bruteforce(matroid, k, side)
        lower = graded_products(powers, k)
        fresh = [g for g in squarefree_part(powers[k]).gens if not lower.contains(g)]
        if fresh:
            largest = k
    return largest
