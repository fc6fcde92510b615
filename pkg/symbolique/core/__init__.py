"""Data model: ground subsets, matroids, monomials and monomial ideals."""

from symbolique.core.ideal import (
    MonomialIdeal,
    alpha,
    bracket_power,
    ideal_sum,
    intersect,
    minimalize,
    mu,
    power,
    prime_power_generators,
    product,
    squarefree_part,
    unit_ideal,
    zero_ideal,
)
from symbolique.core.matroid import (
    Matroid,
    direct_sum,
    matroid_from_bases,
    matroid_from_circuits,
    steiner_matroid,
    uniform_matroid,
)
from symbolique.core.monomial import Monomial, grlex_key
from symbolique.core.star import check_star_property, check_star_star_property
from symbolique.core.transversal import minimal_transversals

__all__ = [
    "Matroid",
    "Monomial",
    "MonomialIdeal",
    "alpha",
    "bracket_power",
    "check_star_property",
    "check_star_star_property",
    "direct_sum",
    "grlex_key",
    "ideal_sum",
    "intersect",
    "matroid_from_bases",
    "matroid_from_circuits",
    "minimal_transversals",
    "minimalize",
    "mu",
    "power",
    "prime_power_generators",
    "product",
    "squarefree_part",
    "steiner_matroid",
    "uniform_matroid",
    "unit_ideal",
    "zero_ideal",
]
