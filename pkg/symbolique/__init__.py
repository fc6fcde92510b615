"""Symbolic powers and invariants of matroid ideals."""

from symbolique.core import (
    Matroid,
    Monomial,
    MonomialIdeal,
    matroid_from_bases,
    matroid_from_circuits,
    steiner_matroid,
    uniform_matroid,
)
from symbolique.features import Side, symbolic_power, symbolic_power_bruteforce

__all__ = [
    "Matroid",
    "Monomial",
    "MonomialIdeal",
    "Side",
    "matroid_from_bases",
    "matroid_from_circuits",
    "steiner_matroid",
    "symbolic_power",
    "symbolic_power_bruteforce",
    "uniform_matroid",
]
