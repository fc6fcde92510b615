"""
Monomials as exponent vectors.

A `Monomial` over n variables is the tuple of its n exponents. Monomials are
ordered by degree first and then lexicographically with variable 0 heaviest,
so that a², ab, b² come out in that order.
"""

from dataclasses import dataclass
from typing import Sequence, Tuple

from symbolique.config import MAX_EXPONENT
from symbolique.core.subsets import GroundSubset
from symbolique.exceptions import MixedAmbientError, ParameterOutOfRangeError
from symbolique.utils import variable_names


@dataclass(frozen=True, slots=True)
class Monomial:
    exponents: Tuple[int, ...]

    def __post_init__(self):
        for e in self.exponents:
            if e < 0 or e > MAX_EXPONENT:
                raise ParameterOutOfRangeError(
                    f"Exponent {e} is outside 0..{MAX_EXPONENT}"
                )

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @classmethod
    def variable(cls, index: int, n: int) -> "Monomial":
        if not 0 <= index < n:
            raise ParameterOutOfRangeError(f"Variable {index} is outside 0..{n - 1}")
        return cls(tuple(1 if i == index else 0 for i in range(n)))

    @classmethod
    def from_support(cls, mask: GroundSubset, n: int) -> "Monomial":
        """The squarefree monomial x_A for a subset A."""
        if mask >> n:
            raise ParameterOutOfRangeError(f"Support {mask:#x} exceeds {n} variables")
        return cls(tuple(mask >> i & 1 for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> GroundSubset:
        mask = 0
        for i, e in enumerate(self.exponents):
            if e:
                mask |= 1 << i
        return mask

    def is_one(self) -> bool:
        return not any(self.exponents)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def _check_ambient(self, other: "Monomial") -> None:
        if len(self.exponents) != len(other.exponents):
            raise MixedAmbientError(
                f"Monomials in {self.n} and {other.n} variables cannot be combined"
            )

    def divides(self, other: "Monomial") -> bool:
        self._check_ambient(other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: "Monomial") -> "Monomial":
        self._check_ambient(other)
        return Monomial(tuple(map(max, self.exponents, other.exponents)))

    def gcd(self, other: "Monomial") -> "Monomial":
        self._check_ambient(other)
        return Monomial(tuple(map(min, self.exponents, other.exponents)))

    def __mul__(self, other: "Monomial") -> "Monomial":
        self._check_ambient(other)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __pow__(self, k: int) -> "Monomial":
        if k < 0:
            raise ParameterOutOfRangeError(f"Negative exponent {k}")
        return Monomial(tuple(e * k for e in self.exponents))

    def __truediv__(self, other: "Monomial") -> "Monomial":
        if not other.divides(self):
            raise ParameterOutOfRangeError(f"{other} does not divide {self}")
        return Monomial(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def format(self, names: Sequence[str] = ()) -> str:
        """Human-readable form such as ``a^2bc`` or ``x1^2*x2``."""
        names = list(names) or variable_names(self.n)
        if self.is_one():
            return "1"
        single_letters = all(len(name) == 1 for name in names)
        pieces = []
        for name, e in zip(names, self.exponents):
            if e == 1:
                pieces.append(name)
            elif e > 1:
                pieces.append(f"{name}^{e}")
        return "".join(pieces) if single_letters else "*".join(pieces)

    def __str__(self) -> str:
        return self.format()


def grlex_key(m: Monomial) -> Tuple[int, Tuple[int, ...]]:
    """Sort key: ascending degree, then larger exponents on earlier variables first."""
    return sum(m.exponents), tuple(-e for e in m.exponents)
