"""
Matroids on the ground set {0, ..., n-1}.

A matroid is stored as its ground-set size and its family of bases; every
other combinatorial object (independent sets, circuits, flats, duals,
truncations, ...) is derived from the bases.

Public constructors validate the basis-exchange axiom eagerly. Operations that
provably return matroids (dual, truncation, elongation, restriction, direct
sum) build the result directly without re-validating.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from symbolique.config import FLAT_ENUMERATION_LIMIT, MAX_GROUND_SET
from symbolique.core.subsets import (
    GroundSubset,
    SubsetFamily,
    canonical_family,
    compress,
    elements,
    format_subset,
    from_elements,
    full_set,
    in_ground,
    is_antichain,
    is_subset,
    size,
    subsets_of_size,
    submasks,
)
from symbolique.exceptions import (
    EmptyFamilyError,
    GroundSetTooLargeError,
    InvalidSteinerSystemError,
    NotAMatroidError,
    ParameterOutOfRangeError,
    RankOutOfRangeError,
)
from symbolique.utils import INFINITE, IntOrInfinite

logger = logging.getLogger("symbolique")


@dataclass(frozen=True)
class Matroid:
    """
    A matroid given by its bases.

    Construct through `matroid_from_bases`, `matroid_from_circuits`,
    `uniform_matroid` or `steiner_matroid`; the dataclass constructor itself
    does not check the axioms.

    Attributes:
        n: Size of the ground set.
        bases: Bases as bitmasks, sorted ascending.
    """

    n: int
    bases: SubsetFamily

    def __post_init__(self):
        object.__setattr__(self, "bases", canonical_family(self.bases))

    def __repr__(self) -> str:
        return f"Matroid(n={self.n}, rank={self.rank}, bases={len(self.bases)})"

    @property
    def ground(self) -> GroundSubset:
        return full_set(self.n)

    @property
    def rank(self) -> int:
        return size(self.bases[0])

    @cached_property
    def _basis_set(self) -> FrozenSet[int]:
        return frozenset(self.bases)

    def is_basis(self, subset: GroundSubset) -> bool:
        return subset in self._basis_set

    def rank_of(self, subset: GroundSubset) -> int:
        """Largest |F ∩ A| over the bases F."""
        best = 0
        for basis in self.bases:
            best = max(best, size(basis & subset))
        return best

    @cached_property
    def independent_sets(self) -> FrozenSet[int]:
        found = set()
        for basis in self.bases:
            found.update(submasks(basis))
        return frozenset(found)

    def is_independent(self, subset: GroundSubset) -> bool:
        return subset in self.independent_sets

    def closure(self, subset: GroundSubset) -> GroundSubset:
        if not in_ground(subset, self.n):
            raise ParameterOutOfRangeError(
                f"Subset {format_subset(subset)} is not contained in the ground set"
            )
        r = self.rank_of(subset)
        closed = subset
        for e in elements(self.ground & ~subset):
            if self.rank_of(subset | 1 << e) == r:
                closed |= 1 << e
        return closed

    def is_flat(self, subset: GroundSubset) -> bool:
        return self.closure(subset) == subset

    def flats_of_rank(self, r: int) -> SubsetFamily:
        """
        All flats of rank r.

        Every flat of rank r is the closure of an independent set of size r, so
        only those closures are enumerated.

        Raises:
            RankOutOfRangeError: If r is not in 0..rank.
        """
        if not 0 <= r <= self.rank:
            raise RankOutOfRangeError(f"Rank {r} is outside 0..{self.rank}")
        if self.n > FLAT_ENUMERATION_LIMIT:
            logger.warning(
                "Enumerating flats on %d elements (desk-scale limit is %d)",
                self.n,
                FLAT_ENUMERATION_LIMIT,
            )
        return canonical_family(
            self.closure(s) for s in self.independent_sets if size(s) == r
        )

    def hyperplanes(self) -> SubsetFamily:
        if self.rank == 0:
            return ()
        return self.flats_of_rank(self.rank - 1)

    @cached_property
    def circuits(self) -> SubsetFamily:
        """Circuits, read off as the fundamental circuits of every basis."""
        found = set()
        for basis in self.bases:
            for e in elements(self.ground & ~basis):
                circuit = 1 << e
                for f in elements(basis):
                    if self.is_basis((basis ^ 1 << f) | 1 << e):
                        circuit |= 1 << f
                found.add(circuit)
        return canonical_family(found)

    @cached_property
    def cocircuits(self) -> SubsetFamily:
        return self.dual().circuits

    def girth(self) -> IntOrInfinite:
        if not self.circuits:
            return INFINITE
        return min(size(c) for c in self.circuits)

    @cached_property
    def loops(self) -> GroundSubset:
        covered = 0
        for basis in self.bases:
            covered |= basis
        return self.ground & ~covered

    @cached_property
    def coloops(self) -> GroundSubset:
        common = self.ground
        for basis in self.bases:
            common &= basis
        return common

    def has_loops(self) -> bool:
        return self.loops != 0

    def has_coloops(self) -> bool:
        return self.coloops != 0

    def is_paving(self) -> bool:
        g = self.girth()
        return g is INFINITE or g >= self.rank

    def is_sparse_paving(self) -> bool:
        return self.is_paving() and self.dual().is_paving()

    def is_uniform(self) -> bool:
        return len(self.bases) == comb(self.n, self.rank)

    def dual(self) -> "Matroid":
        ground = self.ground
        return Matroid(self.n, tuple(ground & ~b for b in self.bases))

    def truncation(self, h: int) -> "Matroid":
        """Matroid whose bases are the independent sets of size rank - h."""
        if not 0 <= h <= self.rank:
            raise ParameterOutOfRangeError(
                f"Truncation depth {h} is outside 0..{self.rank}"
            )
        target = self.rank - h
        return Matroid(
            self.n, tuple(s for s in self.independent_sets if size(s) == target)
        )

    def elongation(self, h: int) -> "Matroid":
        """Matroid whose independent sets H satisfy |H| - r(H) <= h."""
        if not 0 <= h <= self.n - self.rank:
            raise ParameterOutOfRangeError(
                f"Elongation depth {h} is outside 0..{self.n - self.rank}"
            )
        # Bases are the spanning sets of size rank + h
        found = set()
        for basis in self.bases:
            outside = elements(self.ground & ~basis)
            for extra in combinations(outside, h):
                found.add(basis | from_elements(extra))
        return Matroid(self.n, tuple(found))

    def restriction(self, subset: GroundSubset) -> "Matroid":
        """
        Restriction to `subset`, relabelled onto 0..|subset|-1 in increasing order.
        """
        if subset == 0 or not in_ground(subset, self.n):
            raise ParameterOutOfRangeError(
                f"Cannot restrict to {format_subset(subset)} on {self.n} elements"
            )
        r = self.rank_of(subset)
        return Matroid(
            size(subset),
            tuple(
                compress(b & subset, subset)
                for b in self.bases
                if size(b & subset) == r
            ),
        )

    def connected_components(self) -> List[Tuple[GroundSubset, "Matroid"]]:
        """Connected components with their restrictions, ordered by least element."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        for circuit in self.circuits:
            members = elements(circuit)
            graph.add_edges_from(zip(members, members[1:]))
        parts = sorted(
            (from_elements(component) for component in nx.connected_components(graph)),
            key=lambda mask: mask & -mask,
        )
        return [(part, self.restriction(part)) for part in parts]

    def is_connected(self) -> bool:
        return len(self.connected_components()) == 1


def _check_ground_size(n: int) -> None:
    if n < 1:
        raise ParameterOutOfRangeError(f"Ground set size must be at least 1, got {n}")
    if n > MAX_GROUND_SET:
        raise GroundSetTooLargeError(
            f"Ground set size {n} exceeds the limit of {MAX_GROUND_SET}"
        )


def _check_members(n: int, family: Iterable[GroundSubset], what: str) -> None:
    for subset in family:
        if not in_ground(subset, n):
            raise ParameterOutOfRangeError(
                f"{what} {format_subset(subset)} is not contained in 0..{n - 1}"
            )


def exchange_violation(
    bases: Sequence[GroundSubset],
) -> Optional[Tuple[GroundSubset, GroundSubset, int]]:
    """
    Find (F, G, v) with v in F - G such that no w in G - F makes F - v + w a basis.

    Returns:
        The violating triple, or None when the exchange axiom holds.
    """
    basis_set = set(bases)
    for first in bases:
        for second in bases:
            if first == second:
                continue
            candidates = elements(second & ~first)
            for v in elements(first & ~second):
                reduced = first ^ 1 << v
                if not any(reduced | 1 << w in basis_set for w in candidates):
                    return first, second, v
    return None


def matroid_from_bases(n: int, bases: Iterable[GroundSubset]) -> Matroid:
    """
    Build a matroid from its bases, validating the axioms.

    Raises:
        EmptyFamilyError: If no basis is given.
        GroundSetTooLargeError: If n exceeds the word size.
        NotAMatroidError: If the bases are not equicardinal or exchange fails.
    """
    _check_ground_size(n)
    family = canonical_family(bases)
    if not family:
        raise EmptyFamilyError("A matroid needs at least one basis")
    _check_members(n, family, "Basis")

    sizes = {size(b) for b in family}
    if len(sizes) > 1:
        raise NotAMatroidError(
            f"Bases have different cardinalities {sorted(sizes)}", witness=family
        )

    violation = exchange_violation(family)
    if violation is not None:
        first, second, v = violation
        raise NotAMatroidError(
            f"Basis exchange fails for F={format_subset(first)}, "
            f"G={format_subset(second)}, v={v}",
            witness=violation,
        )
    return Matroid(n, family)


def _independent_sets_avoiding(n: int, circuits: SubsetFamily) -> List[GroundSubset]:
    """Sets containing no circuit, grown by appending elements above the maximum."""
    independent = [0]
    frontier = [0]
    while frontier:
        grown = []
        for s in frontier:
            start = s.bit_length()
            for e in range(start, n):
                candidate = s | 1 << e
                if not any(is_subset(c, candidate) for c in circuits):
                    grown.append(candidate)
        independent.extend(grown)
        frontier = grown
    return independent


def matroid_from_circuits(n: int, circuits: Iterable[GroundSubset]) -> Matroid:
    """
    Build a matroid from its circuits.

    Raises:
        NotAMatroidError: If the family is not an antichain of nonempty sets,
            the circuit elimination axiom fails, or the maximal independent
            sets are not equicardinal.
    """
    _check_ground_size(n)
    family = canonical_family(circuits)
    _check_members(n, family, "Circuit")
    if 0 in family:
        raise NotAMatroidError("The empty set cannot be a circuit", witness=0)
    if not is_antichain(family):
        raise NotAMatroidError("Circuits must form an antichain", witness=family)

    for first, second in combinations(family, 2):
        union = first | second
        for x in elements(first & second):
            target = union & ~(1 << x)
            if not any(is_subset(c, target) for c in family):
                raise NotAMatroidError(
                    f"Circuit elimination fails for {format_subset(first)}, "
                    f"{format_subset(second)} at {x}",
                    witness=(first, second, x),
                )

    independent = set(_independent_sets_avoiding(n, family))
    maximal = [
        s
        for s in independent
        if all(s >> e & 1 or (s | 1 << e) not in independent for e in range(n))
    ]
    sizes = {size(s) for s in maximal}
    if len(sizes) > 1:
        raise NotAMatroidError(
            f"Maximal independent sets have cardinalities {sorted(sizes)}",
            witness=canonical_family(maximal),
        )
    return matroid_from_bases(n, maximal)


def uniform_matroid(n: int, c: int) -> Matroid:
    """U(c, n): every c-subset of an n-set is a basis."""
    _check_ground_size(n)
    if not 1 <= c <= n:
        raise ParameterOutOfRangeError(f"Uniform rank {c} is outside 1..{n}")
    return Matroid(n, tuple(subsets_of_size(n, c)))


def direct_sum(first: Matroid, second: Matroid) -> Matroid:
    """Direct sum; the second ground set is shifted past the first."""
    n = first.n + second.n
    _check_ground_size(n)
    shift = first.n
    return Matroid(
        n, tuple(a | b << shift for a in first.bases for b in second.bases)
    )


def steiner_matroid(
    n: int, d: int, t: int, blocks: Iterable[GroundSubset]
) -> Matroid:
    """
    Sparse paving matroid of a Steiner system S(n, d, t).

    The bases are the t-subsets of the ground set that are not blocks.

    Raises:
        InvalidSteinerSystemError: If some d-subset does not lie in exactly
            one block, or a block has the wrong size.
    """
    _check_ground_size(n)
    if not 1 <= d < t < n:
        raise ParameterOutOfRangeError(f"Steiner parameters need 1 <= d < t < n, got {d}, {t}, {n}")
    block_list = list(blocks)
    _check_members(n, block_list, "Block")
    for block in block_list:
        if size(block) != t:
            raise InvalidSteinerSystemError(
                f"Block {format_subset(block)} does not have {t} elements",
                witness=block,
            )

    coverage: Counter = Counter()
    for block in block_list:
        for combo in combinations(elements(block), d):
            coverage[from_elements(combo)] += 1
    for subset in subsets_of_size(n, d):
        if coverage[subset] != 1:
            raise InvalidSteinerSystemError(
                f"{d}-subset {format_subset(subset)} lies in {coverage[subset]} blocks",
                witness=subset,
            )

    block_set = set(block_list)
    bases = [s for s in subsets_of_size(n, t) if s not in block_set]
    logger.debug("Steiner system S(%d,%d,%d) gives %d bases", n, d, t, len(bases))
    return matroid_from_bases(n, bases)
