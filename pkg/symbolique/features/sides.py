"""
Which ideal of a matroid a computation refers to.

Every C-matroidal ideal is both the Stanley–Reisner ideal of one matroid and
the cover ideal of its dual. Computations are phrased on the cover side, so
the helpers here translate a (matroid, side) pair into the matroid whose cover
ideal is meant, or the one whose circuits are the generator supports.
"""

import enum

from symbolique.core.matroid import Matroid


class Side(str, enum.Enum):
    COVER = "cover"
    SR = "sr"


def cover_matroid(matroid: Matroid, side: Side) -> Matroid:
    """The matroid whose cover ideal is the ideal of `side`."""
    return matroid if Side(side) is Side.COVER else matroid.dual()


def circuit_matroid(matroid: Matroid, side: Side) -> Matroid:
    """The matroid whose Stanley–Reisner ideal is the ideal of `side`."""
    return matroid.dual() if Side(side) is Side.COVER else matroid


def ideal_height(matroid: Matroid, side: Side) -> int:
    return cover_matroid(matroid, side).rank
