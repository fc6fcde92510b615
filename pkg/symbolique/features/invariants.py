"""
Closed-form invariants of matroid ideals.

Symbolic defects, the symbolic Noether number, initial degrees of symbolic
powers, the Waldschmidt constant, the uniformity threshold, the paving
characterisations and resurgence bounds. Where several proven-equal routes
exist they are all evaluated and a disagreement raises
`InternalInconsistencyError`.
"""

import logging
from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Dict, Mapping, Optional, Tuple

from symbolique.core.ideal import MonomialIdeal, alpha, mu
from symbolique.core.matroid import Matroid
from symbolique.core.monomial import Monomial
from symbolique.core.subsets import is_subset, size, subsets_of_size
from symbolique.exceptions import (
    InternalInconsistencyError,
    ParameterOutOfRangeError,
    ZeroIdealError,
)
from symbolique.features.circuit_graph import (
    circuit_graph,
    independence_number,
    independent_sets_of_size,
    is_2_locally_connected,
    support_graph,
)
from symbolique.features.matroid_ideals import ideal_of
from symbolique.features.oracle import sdefect_direct
from symbolique.features.sides import Side, circuit_matroid, cover_matroid
from symbolique.features.symbolic_engine import squarefree_layer, symbolic_power
from symbolique.utils import INFINITE, IntOrInfinite, binomial

logger = logging.getLogger("symbolique")


# Symbolic defects


def mgrade(ideal: MonomialIdeal) -> int:
    """Largest number of pairwise support-disjoint minimal generators."""
    return independence_number(support_graph(ideal.supports()))


def a_r(ideal: MonomialIdeal, r: int, symb_r: MonomialIdeal) -> int:
    """
    Squarefree products of r pairwise disjoint generators that are minimal
    generators of I^(r).

    Args:
        ideal: A squarefree ideal.
        r: Number of factors, at least 1.
        symb_r: The symbolic power I^(r).
    """
    if r < 1:
        raise ParameterOutOfRangeError(f"r must be at least 1, got {r}")
    graph = support_graph(ideal.supports())
    targets = set(symb_r.gens)
    count = 0
    for chosen in independent_sets_of_size(graph, r):
        union = 0
        for i in chosen:
            union |= graph.vertices[i]
        if Monomial.from_support(union, ideal.n) in targets:
            count += 1
    return count


def sdefect_formula(
    ideal: MonomialIdeal, level: int, symb: MonomialIdeal, a_table: Mapping[int, int]
) -> int:
    """mu(I^(level)) minus the sum of a_r * C(level - 1, level - r)."""
    return mu(symb) - sum(a * binomial(level - 1, level - r) for r, a in a_table.items())


def a_table_for(matroid: Matroid, side: Side) -> Dict[int, int]:
    """a_r for r = 1..mgrade of the ideal of `side`."""
    ideal = ideal_of(matroid, side)
    return {
        r: a_r(ideal, r, symbolic_power(matroid, r, side))
        for r in range(1, mgrade(ideal) + 1)
    }


@dataclass(frozen=True)
class MaxSdefectReport:
    """
    Attributes:
        bounds: level -> mu(I^(level)) - mu(I), the largest possible defect.
        is_maximal: Whether the defect attains the bound.
        equivalences: The five equivalent conditions, in order: 2-local
            connectivity, maximal at every tested level, maximal at some
            tested level, maximal at level 2, and the divisor condition.
    """

    bounds: Dict[int, int]
    is_maximal: bool
    equivalences: Tuple[bool, bool, bool, bool, bool]


def _divisor_condition(ideal: MonomialIdeal) -> bool:
    supports = ideal.supports()
    for i, first in enumerate(supports):
        for j in range(i + 1, len(supports)):
            second = supports[j]
            if first & second:
                continue
            union = first | second
            if not any(
                k not in (i, j) and is_subset(s, union) for k, s in enumerate(supports)
            ):
                return False
    return True


def max_sdefect_report(
    matroid: Matroid, side: Side = Side.COVER, levels: Tuple[int, ...] = (2, 3)
) -> MaxSdefectReport:
    """
    Evaluate independently when the symbolic defect is as large as possible.

    Raises:
        InternalInconsistencyError: If the conditions disagree.
    """
    ideal = ideal_of(matroid, side)
    locally_connected = is_2_locally_connected(circuit_graph(circuit_matroid(matroid, side)))

    bounds: Dict[int, int] = {}
    maximal: Dict[int, bool] = {}
    for level in sorted(set(levels) | {2}):
        symb = symbolic_power(matroid, level, side)
        bounds[level] = mu(symb) - mu(ideal)
        maximal[level] = sdefect_direct(ideal, level, symb) == bounds[level]

    tested = [maximal[level] for level in levels]
    conditions = (
        locally_connected,
        all(tested),
        any(tested),
        maximal[2],
        _divisor_condition(ideal),
    )
    if len(set(conditions)) != 1:
        raise InternalInconsistencyError(
            f"Maximal symbolic defect conditions disagree: {conditions}"
        )
    return MaxSdefectReport(bounds, conditions[0], conditions)


# Noether number


def noether_number(matroid: Matroid, side: Side = Side.COVER) -> int:
    """Largest rank of a connected component of the cover-side matroid."""
    components = cover_matroid(matroid, side).connected_components()
    return max(component.rank for _, component in components)


# Initial degrees and Waldschmidt constants


def alpha_costs(matroid: Matroid, side: Side = Side.COVER) -> Dict[int, int]:
    """
    alpha(SF_h) for h = 1..height, through three independent routes.

    The routes are the squarefree layer itself, the girth of the elongation of
    the circuit-side matroid by h - 1, and n minus the largest flat of rank
    height - h of the cover-side matroid.

    Raises:
        ZeroIdealError: If the ideal is zero.
    """
    cover = cover_matroid(matroid, side)
    circuits = circuit_matroid(matroid, side)
    height = cover.rank
    if height == 0:
        raise ZeroIdealError("The ideal of this matroid is zero")
    costs = {}
    for h in range(1, height + 1):
        layer = alpha(squarefree_layer(matroid, side, h))
        girth = circuits.elongation(h - 1).girth()
        largest_flat = max(size(f) for f in cover.flats_of_rank(height - h))
        by_flats = matroid.n - largest_flat
        if not layer == girth == by_flats:
            raise InternalInconsistencyError(
                f"alpha(SF_{h}) routes disagree: {layer}, {girth}, {by_flats}"
            )
        costs[h] = layer
    logger.debug("alpha of the squarefree layers: %s", costs)
    return costs


def _knapsack(costs: Mapping[int, int], level: int) -> int:
    best = [0] * (level + 1)
    for k in range(1, level + 1):
        best[k] = min(best[k - h] + cost for h, cost in costs.items() if h <= k)
    return best[level]


def alpha_symbolic(matroid: Matroid, level: int, side: Side = Side.COVER) -> int:
    """
    alpha(I^(level)) as an unbounded knapsack over the squarefree layers:
    the least sum of a_h * alpha(SF_h) subject to sum of h * a_h = level.
    """
    if level < 1:
        raise ParameterOutOfRangeError(f"Level must be at least 1, got {level}")
    return _knapsack(alpha_costs(matroid, side), level)


def alpha_table(matroid: Matroid, max_level: int, side: Side = Side.COVER) -> Dict[int, int]:
    costs = alpha_costs(matroid, side)
    return {level: _knapsack(costs, level) for level in range(1, max_level + 1)}


def sparse_paving_alpha(n: int, c: int, level: int, has_coloop: bool = False) -> int:
    """
    alpha of the level-th symbolic power of the cover ideal of a non-uniform
    sparse paving matroid of rank c on n elements.
    """
    if level < 1:
        raise ParameterOutOfRangeError(f"Level must be at least 1, got {level}")
    if has_coloop:
        return level
    # level = q * c + b with 1 <= b <= c
    q, b = divmod(level - 1, c)
    b += 1
    if b == 1:
        return (q + 1) * n - c
    return (q + 1) * n - c + b


def mediant_holds(d1: int, s1: int, d2: int, s2: int) -> bool:
    """(d1 + d2) / (s1 + s2) is at least min(d1 / s1, d2 / s2)."""
    return Fraction(d1 + d2, s1 + s2) >= min(Fraction(d1, s1), Fraction(d2, s2))


def waldschmidt(matroid: Matroid, side: Side = Side.COVER) -> Fraction:
    """
    Waldschmidt constant: the least alpha(SF_h) / h over h = 1..height.

    The value is checked against the minimum up to the uniformity threshold
    and, where they apply, the paving and sparse paving closed forms.

    Raises:
        ZeroIdealError: If the ideal is zero.
    """
    cover = cover_matroid(matroid, side)
    costs = alpha_costs(matroid, side)
    value = min(Fraction(cost, h) for h, cost in costs.items())

    n, c = cover.n, cover.rank
    checks: Dict[str, Fraction] = {}
    threshold = uniformity_threshold(cover)
    if threshold is not INFINITE:
        checks["threshold"] = min(
            [Fraction(costs[h], h) for h in range(1, threshold)] + [Fraction(n, c)]
        )
    if not cover.has_loops():
        if cover.is_paving():
            checks["paving"] = min(Fraction(costs[1]), Fraction(n, c))
        if cover.is_sparse_paving():
            checks["sparse paving"] = Fraction(1) if cover.has_coloops() else Fraction(n, c)
    for route, expected in checks.items():
        if expected != value:
            raise InternalInconsistencyError(
                f"Waldschmidt constant {value} differs from the {route} form {expected}"
            )
    return value


# Uniformity threshold and paving


def uniformity_threshold(matroid: Matroid) -> IntOrInfinite:
    """
    Least u for which the truncation by u - 1 is uniform; infinite with loops.

    For loopless matroids with a circuit this equals rank + 2 - girth.
    """
    if matroid.has_loops():
        return INFINITE
    threshold = next(
        u for u in range(1, matroid.rank + 1) if matroid.truncation(u - 1).is_uniform()
    )
    girth = matroid.girth()
    if girth is not INFINITE and threshold != matroid.rank + 2 - girth:
        raise InternalInconsistencyError(
            f"Uniformity threshold {threshold} differs from rank + 2 - girth "
            f"= {matroid.rank + 2 - girth}"
        )
    return threshold


def star_configuration(n: int, height: int) -> MonomialIdeal:
    """Cover ideal of U(height, n): all squarefree monomials of degree n - height + 1."""
    return MonomialIdeal(
        n,
        tuple(Monomial.from_support(s, n) for s in subsets_of_size(n, n - height + 1)),
    )


def paving_equivalences(matroid: Matroid) -> Tuple[bool, bool, bool, bool, bool]:
    """
    Five equivalent characterisations of paving matroids through the cover ideal.

    In order: paving; SF_l is a star configuration of height c - l + 1 for
    2 <= l <= c; alpha(SF_l) = n - c + l for 2 <= l <= c; SF_2 is a star
    configuration of height c - 1; alpha(SF_2) = n - c + 2.

    Raises:
        ParameterOutOfRangeError: If the rank is at most 1.
        InternalInconsistencyError: If the conditions disagree.
    """
    n, c = matroid.n, matroid.rank
    if c <= 1:
        raise ParameterOutOfRangeError(f"Rank must exceed 1, got {c}")
    layers = {level: squarefree_layer(matroid, Side.COVER, level) for level in range(2, c + 1)}
    stars = {level: layers[level] == star_configuration(n, c - level + 1) for level in layers}
    degrees = {level: alpha(layers[level]) == n - c + level for level in layers}
    conditions = (
        matroid.is_paving(),
        all(stars.values()),
        all(degrees.values()),
        stars[2],
        degrees[2],
    )
    if len(set(conditions)) != 1:
        raise InternalInconsistencyError(f"Paving conditions disagree: {conditions}")
    return conditions


# Resurgence


@dataclass(frozen=True)
class ResurgenceBounds:
    lower: Fraction
    upper: Fraction
    points_upper: Fraction
    sparse_paving: Optional[Tuple[Fraction, Fraction]] = None


def resurgence_bounds(matroid: Matroid, side: Side = Side.SR) -> ResurgenceBounds:
    """
    Bounds on the resurgence from the initial degrees c_h = alpha(SF_h).

    The lower bound is the largest h * c_1 / c_h, the general upper bound the
    height, and the bound for point configurations the largest
    h * (n - c + 1) / c_h. For non-uniform sparse paving cover-side matroids
    without loops or coloops the closed forms c(n - c)/n and c(n - c + 1)/n
    are compared with the general ones.
    """
    cover = cover_matroid(matroid, side)
    costs = alpha_costs(matroid, side)
    n, c = matroid.n, cover.rank
    lower = max(Fraction(h * costs[1], cost) for h, cost in costs.items())
    points_upper = max(Fraction(h * (n - c + 1), cost) for h, cost in costs.items())

    sparse = None
    if (
        cover.is_sparse_paving()
        and not cover.is_uniform()
        and not cover.has_loops()
        and not cover.has_coloops()
    ):
        sparse = (Fraction(c * (n - c), n), Fraction(c * (n - c + 1), n))
        if sparse != (lower, points_upper):
            raise InternalInconsistencyError(
                f"Sparse paving resurgence bounds {sparse} differ from {(lower, points_upper)}"
            )
    return ResurgenceBounds(lower, Fraction(c), points_upper, sparse)


# Aggregate report


@dataclass(frozen=True)
class InvariantReport:
    """
    Invariants of one ideal of a matroid.

    `rank` is the rank of the input matroid; `girth`, `uniformity_threshold`
    and the paving flags refer to the matroid whose cover ideal is analysed,
    whose rank is `height`.
    """

    side: str
    height: int
    rank: int
    girth: IntOrInfinite
    components: int
    noether_number: int
    uniformity_threshold: IntOrInfinite
    waldschmidt: Optional[Fraction]
    is_paving: bool
    is_sparse_paving: bool
    is_2_locally_connected: bool
    mgrade: int
    alpha_table: Dict[int, int]

    def to_dict(self) -> Dict[str, object]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def analyze(matroid: Matroid, side: Side = Side.COVER, max_level: int = 6) -> InvariantReport:
    side = Side(side)
    cover = cover_matroid(matroid, side)
    ideal = ideal_of(matroid, side)
    height = cover.rank
    girth = cover.girth()
    threshold = uniformity_threshold(cover)
    if threshold is not INFINITE and girth is not INFINITE and threshold != height + 2 - girth:
        raise InternalInconsistencyError("Uniformity threshold and girth disagree")
    nonzero = height > 0
    return InvariantReport(
        side=side.value,
        height=height,
        rank=matroid.rank,
        girth=girth,
        components=len(cover.connected_components()),
        noether_number=noether_number(matroid, side),
        uniformity_threshold=threshold,
        waldschmidt=waldschmidt(matroid, side) if nonzero else None,
        is_paving=cover.is_paving(),
        is_sparse_paving=cover.is_sparse_paving(),
        is_2_locally_connected=is_2_locally_connected(
            circuit_graph(circuit_matroid(matroid, side))
        ),
        mgrade=mgrade(ideal),
        alpha_table=alpha_table(matroid, max_level, side) if nonzero else {},
    )
