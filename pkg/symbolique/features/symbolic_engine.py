"""
Fast symbolic powers of matroid ideals.

Every minimal generator of I^(l) is a product m_1^{n_1} ... m_t^{n_t} of
squarefree generators m_i of SF_{c_i} with c_1 > ... > c_t, nested supports
and sum of n_i * c_i equal to l; different such products are different
generators. The engine therefore walks, for each partition of l into parts at
most the height, the chains of support-nested squarefree generators and
multiplies them out. Nothing has to be minimalized.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Sequence, Tuple

from symbolique.config import SF_CACHE_SIZE, get_settings
from symbolique.core.ideal import (
    MonomialIdeal,
    graded_products,
    minimalize,
    power,
    product,
    unit_ideal,
    zero_ideal,
)
from symbolique.core.matroid import Matroid
from symbolique.core.monomial import Monomial
from symbolique.core.subsets import GroundSubset, elements, is_subset
from symbolique.exceptions import (
    InternalInconsistencyError,
    MixedAmbientError,
    NegativePowerError,
    NotAMinimalGeneratorError,
)
from symbolique.features.matroid_ideals import sf_symbolic_skeleton
from symbolique.features.sides import Side, cover_matroid

logger = logging.getLogger("symbolique")

Multiplicities = Tuple[Tuple[int, int], ...]


@dataclass(frozen=True)
class SymbolicType:
    """Non-increasing parts of a tower decomposition."""

    parts: Tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def multiplicities(self) -> Multiplicities:
        grouped: List[Tuple[int, int]] = []
        for part in self.parts:
            if grouped and grouped[-1][0] == part:
                grouped[-1] = (part, grouped[-1][1] + 1)
            else:
                grouped.append((part, 1))
        return tuple(grouped)


@dataclass(frozen=True)
class TowerLayer:
    generator: Monomial
    part: int
    count: int


@dataclass(frozen=True)
class TowerDecomposition:
    layers: Tuple[TowerLayer, ...]
    product: Monomial

    @property
    def symbolic_type(self) -> SymbolicType:
        parts: List[int] = []
        for layer in self.layers:
            parts.extend([layer.part] * layer.count)
        return SymbolicType(tuple(sorted(parts, reverse=True)))

    def to_dict(self) -> Dict[str, object]:
        return {
            "generator": list(self.product.exponents),
            "layers": [
                {
                    "generator": list(layer.generator.exponents),
                    "part": layer.part,
                    "count": layer.count,
                }
                for layer in self.layers
            ],
            "type": list(self.symbolic_type.parts),
        }


@lru_cache(maxsize=SF_CACHE_SIZE)
def squarefree_layer(matroid: Matroid, side: Side, level: int) -> MonomialIdeal:
    """Memoized SF_level of the ideal of `side`."""
    logger.debug("Computing SF_%d for %r on the %s side", level, matroid, Side(side).value)
    return sf_symbolic_skeleton(matroid, level, side)


def clear_cache() -> None:
    squarefree_layer.cache_clear()


def bounded_partitions(total: int, largest: int) -> Iterator[Multiplicities]:
    """
    Partitions of `total` into parts at most `largest`, in multiplicity form.

    Yields tuples of (part, count) with strictly decreasing parts; the
    partitions come in decreasing lexicographic order.
    """
    if total == 0:
        yield ()
        return
    for part in range(min(largest, total), 0, -1):
        for count in range(total // part, 0, -1):
            for rest in bounded_partitions(total - part * count, part - 1):
                yield ((part, count),) + rest


class _ChainWalker:
    """Depth-first walk over support-nested generators of consecutive layers."""

    def __init__(self, layers: Dict[int, Tuple[Monomial, ...]], n: int):
        self.n = n
        self.supports: Dict[int, Tuple[GroundSubset, ...]] = {
            level: tuple(g.support for g in gens) for level, gens in layers.items()
        }
        self._nested: Dict[Tuple[int, int, int], Tuple[int, ...]] = {}

    def nested_under(self, level: int, index: int, lower: int) -> Tuple[int, ...]:
        key = (level, index, lower)
        found = self._nested.get(key)
        if found is None:
            outer = self.supports[level][index]
            found = tuple(
                j for j, s in enumerate(self.supports[lower]) if is_subset(s, outer)
            )
            self._nested[key] = found
        return found

    def products(self, partition: Multiplicities) -> Iterator[Monomial]:
        levels = [part for part, _ in partition]
        counts = [count for _, count in partition]

        def walk(depth: int, index: int, exps: List[int]) -> Iterator[Monomial]:
            level = levels[depth]
            bumped = list(exps)
            for i in elements(self.supports[level][index]):
                bumped[i] += counts[depth]
            if depth + 1 == len(levels):
                yield Monomial(tuple(bumped))
                return
            for child in self.nested_under(level, index, levels[depth + 1]):
                yield from walk(depth + 1, child, bumped)

        start = [0] * self.n
        for index in range(len(self.supports[levels[0]])):
            yield from walk(0, index, start)


def symbolic_power(matroid: Matroid, level: int, side: Side = Side.COVER) -> MonomialIdeal:
    """
    The symbolic power I^(level) of the cover or Stanley–Reisner ideal.

    Args:
        matroid: A validated matroid.
        level: The exponent; 0 gives the unit ideal.
        side: Which ideal of the matroid.

    Returns:
        The ideal with its minimal generators.

    Raises:
        NegativePowerError: If level is negative.
    """
    if level < 0:
        raise NegativePowerError(f"Negative symbolic power {level}")
    side = Side(side)
    n = matroid.n
    if level == 0:
        return unit_ideal(n)
    height = cover_matroid(matroid, side).rank
    if height == 0:
        return zero_ideal(n)

    cap = min(height, level)
    layers = {h: squarefree_layer(matroid, side, h).gens for h in range(1, cap + 1)}
    walker = _ChainWalker(layers, n)
    emitted: List[Monomial] = []
    for partition in bounded_partitions(level, cap):
        emitted.extend(walker.products(partition))
    logger.debug("Symbolic power %d: %d generators", level, len(emitted))

    if get_settings().debug:
        _check_minimal(emitted, n)
    return MonomialIdeal(n, tuple(emitted))


def _check_minimal(emitted: Sequence[Monomial], n: int) -> None:
    if len(set(emitted)) != len(emitted):
        raise InternalInconsistencyError("A generator was emitted by two partitions")
    if len(minimalize(emitted, n)) != len(emitted):
        raise InternalInconsistencyError("An emitted generator divides another")


def symbolic_power_by_sums(
    matroid: Matroid, level: int, side: Side = Side.COVER
) -> MonomialIdeal:
    """I^(level) as the sum of SF_1^{a_1} ... SF_c^{a_c} over sum of h * a_h = level."""
    if level < 0:
        raise NegativePowerError(f"Negative symbolic power {level}")
    side = Side(side)
    n = matroid.n
    if level == 0:
        return unit_ideal(n)
    height = cover_matroid(matroid, side).rank
    if height == 0:
        return zero_ideal(n)
    cap = min(height, level)
    gens: List[Monomial] = []
    for partition in bounded_partitions(level, cap):
        term = unit_ideal(n)
        for part, count in partition:
            term = product(term, power(squarefree_layer(matroid, side, part), count))
        gens.extend(term.gens)
    return minimalize(gens, n)


def _criterion_sums(m: Monomial, matroid: Matroid, side: Side) -> Iterator[int]:
    if m.n != matroid.n:
        raise MixedAmbientError(f"{m} does not live in {matroid.n} variables")
    exps = m.exponents
    for basis in cover_matroid(matroid, side).bases:
        yield sum(exps[i] for i in elements(basis))


def symbolic_membership(m: Monomial, matroid: Matroid, level: int, side: Side = Side.COVER) -> bool:
    """Whether m lies in I^(level): every basis carries total exponent >= level."""
    return all(s >= level for s in _criterion_sums(m, matroid, side))


def max_symbolic_degree(m: Monomial, matroid: Matroid, side: Side = Side.COVER) -> int:
    """Largest t with m in I^(t); 0 when m is outside the radical."""
    return min(_criterion_sums(m, matroid, side))


def symbolic_type_of(
    m: Monomial, matroid: Matroid, level: int, side: Side = Side.COVER
) -> TowerDecomposition:
    """
    Tower decomposition of a minimal generator of I^(level).

    The support monomial is peeled off repeatedly; each peeled layer must be a
    minimal generator of SF_t for its largest symbolic degree t.

    Raises:
        NotAMinimalGeneratorError: If a layer is not a squarefree minimal
            generator or the parts do not add up to level.
    """
    side = Side(side)
    height = cover_matroid(matroid, side).rank
    layers: List[TowerLayer] = []
    rest = m
    while not rest.is_one():
        generator = Monomial.from_support(rest.support, m.n)
        part = max_symbolic_degree(generator, matroid, side)
        if not 1 <= part <= height or generator not in set(
            squarefree_layer(matroid, side, part).gens
        ):
            raise NotAMinimalGeneratorError(
                f"Layer {generator} of {m} is not a minimal squarefree generator"
            )
        if layers and layers[-1].generator == generator:
            previous = layers[-1]
            layers[-1] = TowerLayer(generator, part, previous.count + 1)
        else:
            layers.append(TowerLayer(generator, part, 1))
        rest = rest / generator

    total = sum(layer.part * layer.count for layer in layers)
    if total != level:
        raise NotAMinimalGeneratorError(
            f"Tower parts of {m} add up to {total}, not {level}"
        )
    return TowerDecomposition(tuple(layers), m)


def symbolic_rees_generators(
    matroid: Matroid, side: Side = Side.COVER
) -> Dict[int, Tuple[Monomial, ...]]:
    """
    Minimal algebra generators of the symbolic Rees algebra, by degree.

    Degree 1 contributes the generators of I; degree k >= 2 the squarefree
    generators of I^(k) outside the sum of I^(i) I^(k-i).
    """
    side = Side(side)
    height = cover_matroid(matroid, side).rank
    if height == 0:
        return {}
    powers = {1: symbolic_power(matroid, 1, side)}
    found = {1: powers[1].gens}
    for k in range(2, height + 1):
        powers[k] = symbolic_power(matroid, k, side)
        lower = graded_products(powers, k)
        fresh = tuple(
            g for g in squarefree_layer(matroid, side, k).gens if not lower.contains(g)
        )
        if fresh:
            found[k] = fresh
    return found
