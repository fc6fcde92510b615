"""
Star and star* exchange properties of pure simplicial complexes.

For a subset A of the ground set, let h_A be the least |A - H| and c_A the
least |A ∩ H| over the facets H. The complex has the star property if for
every A and every facet F there is a facet G with |A - G| = h_A and
A - G ⊆ A - F; the star* property asks the same of A ∩ G ⊆ A ∩ F with
|A ∩ G| = c_A. Matroids satisfy both.
"""

from typing import Callable, Iterable

from symbolique.core.subsets import GroundSubset, full_set, size, submasks


def _exchange_holds(
    n: int,
    facets: Iterable[GroundSubset],
    part: Callable[[GroundSubset, GroundSubset], GroundSubset],
) -> bool:
    family = sorted(set(facets))
    if not family:
        return True
    for subset in submasks(full_set(n)):
        parts = [part(subset, facet) for facet in family]
        least = min(size(p) for p in parts)
        extremal = [p for p in parts if size(p) == least]
        for p in parts:
            if not any(q & ~p == 0 for q in extremal):
                return False
    return True


def check_star_property(n: int, facets: Iterable[GroundSubset]) -> bool:
    """
    Exhaustively check the star property.

    Args:
        n: Size of the ground set.
        facets: Facets as bitmasks; no matroid validation is assumed.

    Returns:
        True if the property holds for every subset and facet.
    """
    return _exchange_holds(n, facets, lambda subset, facet: subset & ~facet)


def check_star_star_property(n: int, facets: Iterable[GroundSubset]) -> bool:
    """Exhaustively check the star* property (see `check_star_property`)."""
    return _exchange_holds(n, facets, lambda subset, facet: subset & facet)
