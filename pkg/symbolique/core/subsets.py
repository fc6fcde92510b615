"""
Subsets of the ground set {0, ..., n-1} encoded as integer bitmasks.

Bit i of a mask is set iff element i belongs to the subset. Families of
subsets are tuples of masks sorted ascending as integers.
"""

from itertools import combinations
from typing import Iterable, Iterator, List, Sequence, Tuple

GroundSubset = int
SubsetFamily = Tuple[int, ...]


def full_set(n: int) -> GroundSubset:
    return (1 << n) - 1


def from_elements(elements: Iterable[int]) -> GroundSubset:
    mask = 0
    for e in elements:
        mask |= 1 << e
    return mask


def elements(mask: GroundSubset) -> List[int]:
    """Members of a subset in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def size(mask: GroundSubset) -> int:
    return bin(mask).count("1")


def is_subset(a: GroundSubset, b: GroundSubset) -> bool:
    return a & ~b == 0


def in_ground(mask: GroundSubset, n: int) -> bool:
    return mask >= 0 and mask >> n == 0


def subsets_of_size(n: int, k: int) -> Iterator[GroundSubset]:
    for combo in combinations(range(n), k):
        yield from_elements(combo)


def submasks(mask: GroundSubset) -> Iterator[GroundSubset]:
    """All subsets of `mask`, including the empty set and `mask` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def canonical_family(family: Iterable[GroundSubset]) -> SubsetFamily:
    return tuple(sorted(set(family)))


def minimal_sets(family: Iterable[GroundSubset]) -> SubsetFamily:
    """Inclusion-minimal members of a family."""
    ordered = sorted(set(family), key=lambda s: (size(s), s))
    kept: List[int] = []
    for s in ordered:
        if not any(k & ~s == 0 for k in kept):
            kept.append(s)
    return canonical_family(kept)


def is_antichain(family: Sequence[GroundSubset]) -> bool:
    for i, a in enumerate(family):
        for j, b in enumerate(family):
            if i != j and is_subset(a, b):
                return False
    return True


def compress(mask: GroundSubset, within: GroundSubset) -> GroundSubset:
    """Relabel `mask` ⊆ `within` onto 0..|within|-1 preserving order."""
    out = 0
    for position, e in enumerate(elements(within)):
        if mask >> e & 1:
            out |= 1 << position
    return out


def expand(mask: GroundSubset, within: GroundSubset) -> GroundSubset:
    """Inverse of `compress`."""
    out = 0
    for position, e in enumerate(elements(within)):
        if mask >> position & 1:
            out |= 1 << e
    return out


def format_subset(mask: GroundSubset) -> str:
    return "{" + ",".join(str(e) for e in elements(mask)) + "}"
