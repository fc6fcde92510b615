"""
Monomial ideals.

A `MonomialIdeal` is stored through its unique minimal generating set, sorted
by `grlex_key`. The zero ideal has no generators and the unit ideal has the
constant monomial as its only generator.
"""

import logging
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Dict, Iterable, List, Optional, Tuple

from symbolique.config import SQUAREFREE_BRUTEFORCE_LIMIT, get_settings
from symbolique.core.monomial import Monomial, grlex_key
from symbolique.core.subsets import GroundSubset, elements, full_set, submasks
from symbolique.exceptions import (
    EmptySupportError,
    InternalInconsistencyError,
    MixedAmbientError,
    NegativePowerError,
    ParameterOutOfRangeError,
    ZeroIdealError,
)
from symbolique.utils import variable_names

logger = logging.getLogger("symbolique")


@dataclass(frozen=True)
class MonomialIdeal:
    """
    A monomial ideal in n variables.

    Build through `minimalize` unless the generators are already known to be
    an antichain under divisibility.

    Attributes:
        n: Number of variables.
        gens: Minimal generators in canonical order.
    """

    n: int
    gens: Tuple[Monomial, ...]

    def __post_init__(self):
        for g in self.gens:
            if g.n != self.n:
                raise MixedAmbientError(
                    f"Generator {g} does not live in {self.n} variables"
                )
        object.__setattr__(self, "gens", tuple(sorted(self.gens, key=grlex_key)))

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_one()

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.gens)

    def contains(self, m: Monomial) -> bool:
        """Membership: some minimal generator divides m."""
        if m.n != self.n:
            raise MixedAmbientError(f"{m} does not live in {self.n} variables")
        target = m.exponents
        return any(_divides(g.exponents, target) for g in self.gens)

    def supports(self) -> Tuple[GroundSubset, ...]:
        return tuple(g.support for g in self.gens)

    def format(self) -> str:
        names = variable_names(self.n)
        if self.is_zero():
            return "(0)"
        return "(" + ", ".join(g.format(names) for g in self.gens) + ")"

    def __str__(self) -> str:
        return self.format()


def _divides(a: Tuple[int, ...], b: Tuple[int, ...]) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def zero_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, ())


def unit_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, (Monomial.one(n),))


def minimalize(gens: Iterable[Monomial], n: Optional[int] = None) -> MonomialIdeal:
    """
    The ideal generated by `gens`, reduced to its minimal generators.

    Args:
        gens: Monomials in a common number of variables.
        n: Number of variables; required when `gens` is empty.

    Raises:
        MixedAmbientError: If the monomials disagree on the number of variables.
    """
    unique = set(gens)
    if n is None:
        if not unique:
            raise ParameterOutOfRangeError("Cannot infer the variable count of no generators")
        n = next(iter(unique)).n
    for g in unique:
        if g.n != n:
            raise MixedAmbientError(f"Generator {g} does not live in {n} variables")

    # A proper divisor has strictly smaller degree, so one ascending pass suffices
    kept: List[Tuple[int, ...]] = []
    result: List[Monomial] = []
    for g in sorted(unique, key=grlex_key):
        exps = g.exponents
        if not any(_divides(k, exps) for k in kept):
            kept.append(exps)
            result.append(g)
    return MonomialIdeal(n, tuple(result))


def _check_same_ambient(first: MonomialIdeal, second: MonomialIdeal) -> None:
    if first.n != second.n:
        raise MixedAmbientError(
            f"Ideals in {first.n} and {second.n} variables cannot be combined"
        )


def intersect(first: MonomialIdeal, second: MonomialIdeal) -> MonomialIdeal:
    """Intersection, generated by the pairwise LCMs of the generators."""
    _check_same_ambient(first, second)
    return minimalize((f.lcm(g) for f in first.gens for g in second.gens), first.n)


def product(first: MonomialIdeal, second: MonomialIdeal) -> MonomialIdeal:
    _check_same_ambient(first, second)
    return minimalize((f * g for f in first.gens for g in second.gens), first.n)


def ideal_sum(first: MonomialIdeal, second: MonomialIdeal) -> MonomialIdeal:
    _check_same_ambient(first, second)
    return minimalize(first.gens + second.gens, first.n)


def power(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 0:
        raise NegativePowerError(f"Negative power {k}")
    result = unit_ideal(ideal.n)
    for _ in range(k):
        result = product(result, ideal)
    return result


def bracket_power(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    """The ideal generated by the k-th powers of the minimal generators."""
    if k < 0:
        raise NegativePowerError(f"Negative power {k}")
    return minimalize((g**k for g in ideal.gens), ideal.n)


def _squarefree_part_bruteforce(ideal: MonomialIdeal) -> MonomialIdeal:
    members = (
        Monomial.from_support(mask, ideal.n)
        for mask in submasks(full_set(ideal.n))
    )
    return minimalize((m for m in members if ideal.contains(m)), ideal.n)


def squarefree_part(ideal: MonomialIdeal) -> MonomialIdeal:
    """
    The ideal of all squarefree monomials in `ideal`.

    A squarefree monomial is divisible only by squarefree monomials, so the
    squarefree minimal generators already generate it.
    """
    result = MonomialIdeal(
        ideal.n, tuple(g for g in ideal.gens if g.is_squarefree())
    )
    if get_settings().debug and ideal.n <= SQUAREFREE_BRUTEFORCE_LIMIT:
        logger.debug("Cross-checking the squarefree part in %d variables", ideal.n)
        expected = _squarefree_part_bruteforce(ideal)
        if expected != result:
            raise InternalInconsistencyError(
                f"Squarefree part {result} differs from enumeration {expected}"
            )
    return result


def alpha(ideal: MonomialIdeal) -> int:
    """Initial degree: the least degree of a minimal generator."""
    if ideal.is_zero():
        raise ZeroIdealError("The zero ideal has no initial degree")
    return min(g.degree for g in ideal.gens)


def mu(ideal: MonomialIdeal) -> int:
    """Number of minimal generators."""
    return len(ideal.gens)


def prime_power_generators(subset: GroundSubset, level: int, n: int) -> MonomialIdeal:
    """
    The power p_F^level of the prime generated by the variables of F.

    Raises:
        EmptySupportError: If F is empty.
    """
    if subset == 0:
        raise EmptySupportError("The prime of an empty variable set is the zero ideal")
    if level < 1:
        raise ParameterOutOfRangeError(f"Prime power exponent must be >= 1, got {level}")
    variables = elements(subset)
    gens = []
    for combo in combinations_with_replacement(variables, level):
        exps = [0] * n
        for v in combo:
            exps[v] += 1
        gens.append(Monomial(tuple(exps)))
    return MonomialIdeal(n, tuple(gens))


def graded_products(powers: Dict[int, MonomialIdeal], degree: int) -> MonomialIdeal:
    """
    Sum of powers[i] * powers[degree - i] over 1 <= i < degree.

    Args:
        powers: Ideals indexed by degree, covering 1..degree-1.
        degree: Target degree, at least 2.
    """
    if degree < 2:
        raise ParameterOutOfRangeError(f"Graded products need degree >= 2, got {degree}")
    n = powers[1].n
    gens: List[Monomial] = []
    for i in range(1, degree // 2 + 1):
        gens.extend(product(powers[i], powers[degree - i]).gens)
    return minimalize(gens, n)
