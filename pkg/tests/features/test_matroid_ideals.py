"""Tests for cover ideals, Stanley–Reisner ideals and squarefree layers."""

import pytest

from symbolique.core.ideal import squarefree_part
from symbolique.core.matroid import direct_sum, uniform_matroid
from symbolique.core.monomial import Monomial
from symbolique.core.subsets import from_elements, size
from symbolique.exceptions import (
    LevelOutOfRangeError,
    NotAMatroidError,
    NotAMinimalGeneratorError,
    NotSquarefreeError,
    ZeroOrUnitIdealError,
)
from symbolique.features.matroid_ideals import (
    Origin,
    cover_ideal,
    detect_matroid,
    flats_correspondence,
    lcm_witness,
    matroid_of_ideal,
    sf_symbolic_lcm,
    sf_symbolic_skeleton,
    stanley_reisner,
)
from symbolique.features.oracle import symbolic_power_raw
from symbolique.features.sides import Side, circuit_matroid, cover_matroid, ideal_height
from symbolique.parser import parse_generators
from tests.conftest import FANO_BLOCKS, GeneratorCase, family, gens, mono


LCM_CASES = [
    GeneratorCase(
        name="running example",
        ideal="af, cd, bde, bce",
        n=6,
        level=2,
        expected="acdf, bcde, abcef, abdef",
    ),
    GeneratorCase(
        name="five variables",
        ideal="abe, ace, ad, bc, bde, cde",
        n=5,
        level=2,
        expected="abcd, abce, abde, acde, bcde",
    ),
    GeneratorCase(
        name="top layer",
        ideal="af, cd, bde, bce",
        n=6,
        level=3,
        expected="abcdef",
    ),
]


class TestIdeals:
    """Tests for the two ideals of a matroid."""

    def test_fano_cover_ideal(self, fano):
        result = cover_ideal(fano)
        assert result.origin is Origin.COVER
        complements = {
            Monomial.from_support(fano.ground & ~from_elements(b), 7) for b in FANO_BLOCKS
        }
        assert set(result.ideal.gens) == complements

    def test_paving_cover_ideal(self, paving6):
        # Cocircuits are the complements of the hyperplanes {1,2,3,4}, {2,5,6}
        # and the six two-element lines
        expected = gens("ef, acd, bcdf, abdf, abcf, bcde, abce, abde", 6)
        assert set(cover_ideal(paving6).ideal.gens) == expected

    def test_principal(self):
        assert cover_ideal(uniform_matroid(4, 1)).ideal.gens == (mono("abcd", 4),)

    def test_stanley_reisner_generators_are_circuits(self, running):
        result = stanley_reisner(running)
        assert result.origin is Origin.STANLEY_REISNER
        assert set(result.ideal.gens) == gens("af, cd, bde, bce", 6)

    def test_stanley_reisner_is_cover_of_dual(self, corpus):
        for m in corpus:
            assert stanley_reisner(m).ideal == cover_ideal(m.dual()).ideal

    def test_free_matroid(self):
        assert stanley_reisner(uniform_matroid(3, 3)).ideal.is_zero()

    def test_side_heights(self, running):
        # Height of the cover ideal is the rank, of the Stanley–Reisner ideal the corank
        assert ideal_height(running, Side.COVER) == running.rank
        assert ideal_height(running, Side.SR) == running.n - running.rank
        assert cover_matroid(running, Side.SR) == running.dual()
        assert circuit_matroid(running, Side.COVER) == running.dual()


class TestSquarefreeLayers:
    """Tests for SF_l through skeletons and through LCM chains."""

    def test_skeleton_running(self, running):
        assert set(sf_symbolic_skeleton(running, 2, Side.SR).gens) == gens(
            "acdf, bcde, abcef, abdef", 6
        )
        assert sf_symbolic_skeleton(running, 3, Side.SR).gens == (mono("abcdef", 6),)

    def test_first_layer_is_ideal(self, running):
        assert sf_symbolic_skeleton(running, 1, Side.SR) == stanley_reisner(running).ideal

    def test_elongation_gives_second_layer(self, running):
        assert stanley_reisner(running.elongation(1)).ideal == sf_symbolic_skeleton(
            running, 2, Side.SR
        )

    def test_level_range(self, running):
        with pytest.raises(LevelOutOfRangeError):
            sf_symbolic_skeleton(running, 4, Side.SR)
        with pytest.raises(LevelOutOfRangeError):
            sf_symbolic_skeleton(running, 0, Side.COVER)

    @pytest.mark.parametrize("case", LCM_CASES, ids=lambda c: c.name)
    def test_lcm_chains(self, case):
        ideal = parse_generators(case.ideal, case.n)
        assert set(sf_symbolic_lcm(ideal, case.level).gens) == gens(case.expected, case.n)

    def test_lcm_first_layer(self):
        ideal = parse_generators("af, cd, bde, bce", 6)
        assert sf_symbolic_lcm(ideal, 1) == ideal

    def test_routes_agree(self, corpus):
        for m in corpus:
            for level in range(1, m.rank + 1):
                assert sf_symbolic_lcm(cover_ideal(m).ideal, level) == sf_symbolic_skeleton(
                    m, level, Side.COVER
                ), m

    def test_routes_agree_with_oracle(self, fano):
        ideal = cover_ideal(fano).ideal
        for level in range(1, 4):
            expected = squarefree_part(symbolic_power_raw(ideal, level))
            assert sf_symbolic_skeleton(fano, level, Side.COVER) == expected

    def test_non_squarefree(self):
        with pytest.raises(NotSquarefreeError):
            sf_symbolic_lcm(parse_generators("a^2, b", 2), 1)

    def test_unit(self):
        with pytest.raises(ZeroOrUnitIdealError):
            sf_symbolic_lcm(parse_generators("1", 2), 1)


class TestWitness:
    """Tests for LCM chain witnesses."""

    def test_chain_divides(self, running):
        ideal = stanley_reisner(running).ideal
        chain = lcm_witness(ideal, mono("abcef", 6), 2)
        assert len(chain) == 2
        assert not chain[1].divides(chain[0])
        assert chain[0].lcm(chain[1]).divides(mono("abcef", 6))

    def test_no_chain(self, running):
        ideal = stanley_reisner(running).ideal
        with pytest.raises(NotAMinimalGeneratorError):
            lcm_witness(ideal, mono("acd", 6), 2)


class TestFlats:
    """Tests for the flat/generator correspondence."""

    def test_counts_match(self, corpus):
        for m in corpus:
            for level in range(1, m.rank + 1):
                pairs = flats_correspondence(m, level)
                layer = sf_symbolic_skeleton(m, level, Side.COVER)
                assert [g for _, g in pairs] == list(layer.gens), m

    def test_top_level(self, fano):
        [(flat, generator)] = flats_correspondence(fano, 3)
        assert flat == 0
        assert generator == mono("abcdefg", 7)

    def test_uniform_hyperplanes(self):
        pairs = flats_correspondence(uniform_matroid(5, 3), 1)
        assert len(pairs) == 10
        assert all(g.degree == 3 for _, g in pairs)
        assert all(size(flat) == 2 for flat, _ in pairs)


class TestDetection:
    """Tests for deciding matroidality of raw ideals."""

    def test_matroidal(self):
        ideal = parse_generators("ab, acd, ace, ade, bcd, bce, bde, cde")
        report = detect_matroid(ideal)
        assert report.is_matroidal
        circuits = family(
            (0, 1), (0, 2, 3), (1, 2, 3), (0, 2, 4), (1, 2, 4), (0, 3, 4), (1, 3, 4), (2, 3, 4)
        )
        assert set(report.circuits) == set(circuits)
        assert sorted(circuits) == [3, 13, 14, 21, 22, 25, 26, 28]

    def test_matroidal_second_power(self):
        ideal = parse_generators("ab, acd, ace, ade, bcd, bce, bde, cde")
        second = symbolic_power_raw(ideal, 2)
        assert len(second) == 13
        assert set(second.gens) == gens(
            "a^2b^2, a^2c^2d^2, a^2c^2e^2, a^2d^2e^2, b^2c^2d^2, b^2c^2e^2, b^2d^2e^2, "
            "c^2d^2e^2, abcd, abce, abde, acde, bcde",
            5,
        )

    def test_non_matroidal(self):
        report = detect_matroid(parse_generators("abc, abd, acd, bcde"))
        assert not report.is_matroidal
        assert report.witness is not None
        assert "witness" in report.to_dict()

    def test_matroid_of_ideal(self, running):
        assert matroid_of_ideal(parse_generators("af, cd, bde, bce")) == running

    def test_matroid_of_ideal_refuses(self):
        with pytest.raises(NotAMatroidError):
            matroid_of_ideal(parse_generators("abc, abd, acd, bcde"))

    def test_corpus_is_matroidal(self, corpus):
        for m in corpus:
            ideal = stanley_reisner(m).ideal
            if ideal.is_zero() or ideal.is_unit():
                continue
            report = detect_matroid(ideal)
            assert report.is_matroidal, m
            assert set(report.circuits) == set(m.circuits)

    def test_cover_ideal_recovers_dual_circuits(self, corpus):
        for m in corpus:
            ideal = cover_ideal(m).ideal
            if ideal.is_zero() or ideal.is_unit():
                continue
            report = detect_matroid(ideal)
            assert report.is_matroidal, m
            assert set(report.circuits) == set(m.dual().circuits), m

    def test_direct_sum_detected(self):
        m = direct_sum(uniform_matroid(3, 2), uniform_matroid(2, 1))
        ideal = stanley_reisner(m).ideal
        assert matroid_of_ideal(ideal) == m
