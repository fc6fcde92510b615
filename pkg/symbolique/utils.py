"""Small helpers shared across symbolique."""

import enum
from math import comb
from typing import List, Union


class Unbounded(enum.Enum):
    """Sentinel for quantities that are infinite (girth of a free matroid, ...)."""

    INFINITE = "infinite"

    def __repr__(self) -> str:
        return "INFINITE"


INFINITE = Unbounded.INFINITE

IntOrInfinite = Union[int, Unbounded]


def variable_names(n: int) -> List[str]:
    """
    Names of the variables of a polynomial ring in n variables.

    Single letters a..z are used when n <= 26, otherwise x1..xn.
    """
    if n <= 26:
        return [chr(ord("a") + i) for i in range(n)]
    return [f"x{i + 1}" for i in range(n)]


def binomial(n: int, k: int) -> int:
    """C(n, k) with C(n, k) = 0 whenever k < 0 or k > n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)
