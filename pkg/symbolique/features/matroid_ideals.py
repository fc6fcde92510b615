"""
Ideals attached to matroids.

Cover ideals intersect the primes of the bases, Stanley–Reisner ideals the
primes of the basis complements. This module also computes the squarefree
parts SF_l of symbolic powers (by skeletons and by chains of LCMs), matches
them with flats, and decides whether a raw squarefree ideal comes from a
matroid.
"""

import enum
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Set, Tuple

from symbolique.core.ideal import (
    MonomialIdeal,
    bracket_power,
    intersect,
    minimalize,
    squarefree_part,
    unit_ideal,
    zero_ideal,
)
from symbolique.core.matroid import Matroid, matroid_from_circuits
from symbolique.core.monomial import Monomial, grlex_key
from symbolique.core.subsets import (
    GroundSubset,
    SubsetFamily,
    canonical_family,
    elements,
    is_subset,
    minimal_sets,
)
from symbolique.exceptions import (
    LevelOutOfRangeError,
    NotAMatroidError,
    NotAMinimalGeneratorError,
    NotSquarefreeError,
    ZeroOrUnitIdealError,
)
from symbolique.features.oracle import raw_height, symbolic_power_raw
from symbolique.features.sides import Side, cover_matroid

logger = logging.getLogger("symbolique")


class Origin(str, enum.Enum):
    COVER = "cover"
    STANLEY_REISNER = "stanley-reisner"
    RAW = "raw"


@dataclass(frozen=True)
class IdealWithOrigin:
    ideal: MonomialIdeal
    origin: Origin
    matroid: Optional[Matroid] = None


def cover_ideal_of_facets(n: int, facets: SubsetFamily) -> MonomialIdeal:
    """Intersection of the primes generated by the variables of each facet."""
    result = unit_ideal(n)
    for facet in facets:
        if facet == 0:
            return zero_ideal(n)
        prime = MonomialIdeal(n, tuple(Monomial.variable(i, n) for i in elements(facet)))
        result = intersect(result, prime)
    return result


def cover_ideal(matroid: Matroid) -> IdealWithOrigin:
    return IdealWithOrigin(
        cover_ideal_of_facets(matroid.n, matroid.bases), Origin.COVER, matroid
    )


def stanley_reisner(matroid: Matroid) -> IdealWithOrigin:
    ideal = cover_ideal_of_facets(matroid.n, matroid.dual().bases)
    return IdealWithOrigin(ideal, Origin.STANLEY_REISNER, matroid)


def ideal_of(matroid: Matroid, side: Side) -> MonomialIdeal:
    if Side(side) is Side.COVER:
        return cover_ideal(matroid).ideal
    return stanley_reisner(matroid).ideal


def sf_symbolic_skeleton(matroid: Matroid, level: int, side: Side) -> MonomialIdeal:
    """
    SF_level through skeletons.

    On the cover side this is the cover ideal of the truncation by level - 1;
    on the Stanley–Reisner side the Stanley–Reisner ideal of the elongation
    by level - 1.

    Raises:
        LevelOutOfRangeError: If level is not in 1..height.
    """
    height = cover_matroid(matroid, side).rank
    if not 1 <= level <= height:
        raise LevelOutOfRangeError(f"Level {level} is outside 1..{height}")
    if Side(side) is Side.COVER:
        return cover_ideal(matroid.truncation(level - 1)).ideal
    return stanley_reisner(matroid.elongation(level - 1)).ideal


def _check_squarefree_proper(ideal: MonomialIdeal) -> None:
    if ideal.is_zero() or ideal.is_unit():
        raise ZeroOrUnitIdealError("Expected a nonzero proper ideal")
    if not ideal.is_squarefree():
        raise NotSquarefreeError(f"{ideal} is not squarefree")


def sf_symbolic_lcm(ideal: MonomialIdeal, level: int) -> MonomialIdeal:
    """
    SF_level as the LCMs of level generators forming a non-divisibility chain.

    A chain m_1, ..., m_level has m_i not dividing LCM(m_1, ..., m_{i-1}).
    Only the minimal LCMs of each chain length are extended, since any chain
    through a larger LCM also extends the smaller one.

    Args:
        ideal: A squarefree, C-matroidal ideal.
        level: Chain length, between 1 and the height.
    """
    _check_squarefree_proper(ideal)
    height = raw_height(ideal)
    if not 1 <= level <= height:
        raise LevelOutOfRangeError(f"Level {level} is outside 1..{height}")
    supports = ideal.supports()
    frontier = minimal_sets(supports)
    for _ in range(level - 1):
        grown = {lcm | s for lcm in frontier for s in supports if not is_subset(s, lcm)}
        frontier = minimal_sets(grown)
    return minimalize((Monomial.from_support(s, ideal.n) for s in frontier), ideal.n)


def lcm_witness(
    ideal: MonomialIdeal, generator: Monomial, level: int
) -> Tuple[Monomial, ...]:
    """
    Generators m_1..m_level of `ideal` forming a non-divisibility chain whose
    LCM divides `generator`.

    Raises:
        NotAMinimalGeneratorError: If no such chain exists.
    """
    candidates = [g for g in ideal.gens if g.divides(generator)]
    dead: Set[Tuple[GroundSubset, int]] = set()

    def extend(lcm: Monomial, chain: List[Monomial]) -> Optional[List[Monomial]]:
        if len(chain) == level:
            return chain
        key = (lcm.support, len(chain))
        if key in dead:
            return None
        for g in candidates:
            if not g.divides(lcm):
                found = extend(lcm.lcm(g), chain + [g])
                if found is not None:
                    return found
        dead.add(key)
        return None

    found = extend(Monomial.one(ideal.n), [])
    if found is None:
        raise NotAMinimalGeneratorError(
            f"No chain of {level} generators of {ideal} divides {generator}"
        )
    return tuple(found)


def flats_correspondence(matroid: Matroid, level: int) -> List[Tuple[GroundSubset, Monomial]]:
    """
    Flats of rank rank - level paired with their complement monomials.

    The complements are exactly the minimal generators of SF_level of the
    cover ideal.
    """
    if not 1 <= level <= matroid.rank:
        raise LevelOutOfRangeError(f"Level {level} is outside 1..{matroid.rank}")
    ground = matroid.ground
    pairs = [
        (flat, Monomial.from_support(ground & ~flat, matroid.n))
        for flat in matroid.flats_of_rank(matroid.rank - level)
    ]
    return sorted(pairs, key=lambda pair: grlex_key(pair[1]))


@dataclass(frozen=True)
class DetectionReport:
    is_matroidal: bool
    circuits: Optional[SubsetFamily] = None
    witness: Optional[Monomial] = None

    def to_dict(self) -> Dict[str, object]:
        data: Dict[str, object] = {"is_matroidal": self.is_matroidal}
        if self.circuits is not None:
            data["circuits"] = [elements(c) for c in self.circuits]
        if self.witness is not None:
            data["witness"] = list(self.witness.exponents)
        return data


def detect_matroid(ideal: MonomialIdeal) -> DetectionReport:
    """
    Decide whether a squarefree ideal is the Stanley–Reisner ideal of a matroid.

    The test compares the minimal generators of I^(2) with the squares of the
    generators of I together with the squarefree part of I^(2).

    Raises:
        NotSquarefreeError: If a generator is not squarefree.
        ZeroOrUnitIdealError: For the zero or the unit ideal.
    """
    _check_squarefree_proper(ideal)
    second = symbolic_power_raw(ideal, 2)
    expected = set(bracket_power(ideal, 2).gens) | set(squarefree_part(second).gens)
    actual = set(second.gens)
    if actual == expected:
        circuits = canonical_family(ideal.supports())
        logger.debug("Ideal %s is matroidal with %d circuits", ideal, len(circuits))
        return DetectionReport(True, circuits=circuits)
    extra = sorted(actual - expected, key=grlex_key) or sorted(expected - actual, key=grlex_key)
    return DetectionReport(False, witness=extra[0])


def matroid_of_ideal(ideal: MonomialIdeal) -> Matroid:
    """
    The matroid whose Stanley–Reisner ideal is `ideal`.

    Raises:
        NotAMatroidError: If the ideal is not C-matroidal.
    """
    report = detect_matroid(ideal)
    if not report.is_matroidal:
        raise NotAMatroidError(
            f"{ideal} is not the Stanley–Reisner ideal of a matroid", witness=report.witness
        )
    return matroid_from_circuits(ideal.n, report.circuits)
