"""Tests for minimal transversals."""

from symbolique.core.subsets import from_elements
from symbolique.core.transversal import minimal_transversals
from tests.conftest import family


def test_no_edges():
    assert minimal_transversals(3, []) == (0,)


def test_triangle():
    edges = family((0, 1), (1, 2), (0, 2))
    assert set(minimal_transversals(3, edges)) == set(family((0, 1), (1, 2), (0, 2)))


def test_primes_of_running_ideal():
    # Minimal primes of (af, cd, bde, bce) are the basis complements
    edges = family((0, 5), (2, 3), (1, 3, 4), (1, 2, 4))
    found = minimal_transversals(6, edges)
    assert from_elements((0, 2, 4)) in found
    assert from_elements((0, 2, 3, 4)) not in found
    assert all(bin(t).count("1") == 3 for t in found)


def test_cocircuits_of_fano(fano):
    assert minimal_transversals(7, fano.bases) == fano.cocircuits
