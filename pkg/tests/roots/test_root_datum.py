# tests/roots/test_root_datum.py
from fractions import Fraction

import pytest

from hecke_spectra.errors import InvalidParameter, NotARoot, RankTooLarge, UnknownPreset
from hecke_spectra.roots.lattice import determinant, integer_kernel, smith_invariants
from hecke_spectra.roots.presets import available_presets, cartan_matrix, preset
from hecke_spectra.roots.root_datum import HeckeParams, RootDatum, pair

# --- Test Fixtures / Mock Data ---

ROOT_COUNTS = {"A1-sc": 2, "A1-adj": 2, "C1": 2, "A2-sc": 6, "A2-adj": 6, "B2-adj": 8, "G2": 12, "T2": 0}


class TestPresets:
    @pytest.mark.parametrize("name, count", sorted(ROOT_COUNTS.items()))
    def test_root_counts(self, name, count):
        rd = preset(name)
        assert len(rd.roots) == count
        assert len(rd.positive_roots()) == count // 2

    def test_a1_lattices(self):
        assert preset("A1-sc").simple_roots == ((1,),)
        assert preset("A1-sc").simple_coroots == ((2,),)
        assert preset("A1-adj").simple_roots == ((2,),)
        assert preset("A1-adj").simple_coroots == ((1,),)

    def test_every_root_pairs_to_two_with_its_coroot(self):
        for name in ("B2-adj", "G2", "A3-sc", "C3-adj"):
            rd = preset(name)
            assert all(pair(r, c) == 2 for r, c in zip(rd.roots, rd.coroots))

    def test_g2_orbits_and_marks(self):
        rd = preset("G2")
        assert rd.orbit_representatives() == [0, 1]
        assert rd.marks() == (2, 3)

    def test_a2_marks(self):
        assert preset("A2-adj").marks() == (1, 1)

    def test_cartan_matrix_of_b2(self):
        assert cartan_matrix("B", 2) == ((2, -2), (-1, 2))

    def test_unknown_names(self):
        with pytest.raises(UnknownPreset):
            preset("E8")
        with pytest.raises(UnknownPreset):
            preset("A2")
        with pytest.raises(UnknownPreset):
            preset("G3")

    def test_rank_limit(self):
        with pytest.raises((RankTooLarge, UnknownPreset)):
            preset("A7-sc")

    def test_available_presets_all_build(self):
        for name in available_presets():
            assert preset(name).name == name

    def test_not_a_root(self):
        with pytest.raises(NotARoot):
            preset("A2-sc").root_index((5, 5))

    def test_round_trip_through_dict(self):
        rd = preset("B2-adj")
        assert RootDatum.from_dict(rd.to_dict()) == rd


class TestHeckeParams:
    def test_equal_parameters(self):
        rd = preset("G2")
        params = HeckeParams.equal(rd, 2)
        assert params.for_root(rd, rd.roots[0]) == (Fraction(2), Fraction(0))

    def test_missing_orbit(self):
        with pytest.raises(InvalidParameter):
            HeckeParams.create(preset("G2"), {0: 2})

    def test_unknown_orbit(self):
        with pytest.raises(InvalidParameter):
            HeckeParams.create(preset("A2-sc"), {0: 2, 1: 2})

    def test_second_parameter_needs_doubled_coroot(self):
        with pytest.raises(InvalidParameter):
            HeckeParams.create(preset("A1-adj"), {0: 2}, {0: 1})
        params = HeckeParams.create(preset("C1"), {0: 3}, {0: 1})
        assert params.minus(0) == 1

    def test_scaling(self):
        params = HeckeParams.create(preset("C1"), {0: "3/2"}, {0: "1/2"}).scaled(2)
        assert params.plus(0) == 3
        assert params.minus(0) == 1


class TestLattice:
    def test_determinant(self):
        assert determinant(((2, -1), (-1, 2))) == 3
        assert determinant(()) == 1

    def test_integer_kernel_is_saturated(self):
        kernel = integer_kernel([(2, 4)], 2)
        assert len(kernel) == 1
        assert abs(kernel[0][0]) == 2 and abs(kernel[0][1]) == 1

    def test_smith_invariants(self):
        assert smith_invariants([(2, -1), (-1, 2)], 2) == (3,)
        assert smith_invariants([(1, 0), (0, 1)], 2) == ()
