# tests/stm/test_diagram.py
import pytest

from hecke_spectra.algebra.units import TorusPoint
from hecke_spectra.errors import InvalidParameter, NotInAlcovePosition, RelationViolated
from hecke_spectra.roots.presets import preset
from hecke_spectra.spectral.residual import ResidualCoset, pole_zero_counts
from hecke_spectra.stm.diagram import AFFINE_NODE, DiagramData, affine_marks, diagram_weights
from hecke_spectra.stm.spectral_map import SpectralMap

# --- Test Fixtures / Mock Data ---

def point_map(source, target, s, y) -> SpectralMap:
    point = TorusPoint.from_strings(s, y)
    subset = tuple(range(target.rank))
    coset = ResidualCoset(subset, point, pole_zero_counts(target, subset, point))
    return SpectralMap.onto_point(source, target, coset)


class TestAffineMarks:
    def test_marks(self):
        assert affine_marks(preset("A2-adj")) == (1, 1, 1)
        assert affine_marks(preset("G2")) == (1, 2, 3)
        assert sorted(affine_marks(preset("B2-adj"))) == [1, 1, 2]

    def test_torus_has_no_diagram(self):
        with pytest.raises(InvalidParameter):
            affine_marks(preset("T1"))


class TestDiagramWeights:
    def test_identity_has_no_constant_nodes(self, a1_iwahori):
        data = diagram_weights(SpectralMap.identity(a1_iwahori), DiagramData.skeleton(affine_marks(a1_iwahori.rd)))
        assert data.j_nodes == ()
        assert data.k_nodes == (0, 1)

    def test_cuspidal_a1(self, a1_iwahori, cuspidal_source):
        m = point_map(cuspidal_source(1), a1_iwahori, ["0"], ["1"])
        data = diagram_weights(m, DiagramData.skeleton((1, 1)))
        assert data.j_nodes == (0, 1)
        assert data.k_nodes == ()
        assert data.to_dict()["d"] == {"0": "-2", "1": "2"}

    def test_g2_principal_point(self, g2_iwahori, cuspidal_source):
        m = point_map(cuspidal_source(1), g2_iwahori, ["0", "0"], ["2", "2"])
        data = diagram_weights(m, DiagramData.skeleton(affine_marks(g2_iwahori.rd)))
        assert [w.vexp for w in data.weights] == [-10, 2, 2]

    def test_wrong_marks(self, g2_iwahori, cuspidal_source):
        m = point_map(cuspidal_source(1), g2_iwahori, ["0", "0"], ["2", "2"])
        with pytest.raises(RelationViolated) as excinfo:
            diagram_weights(m, DiagramData.skeleton((1, 1, 1)))
        assert excinfo.value.product
        with pytest.raises(InvalidParameter):
            diagram_weights(m, DiagramData.skeleton((1, 1)))

    def test_declared_constant_node_that_varies(self, a1_iwahori):
        with pytest.raises(NotInAlcovePosition):
            diagram_weights(SpectralMap.identity(a1_iwahori), DiagramData.skeleton((1, 1), j_nodes=[1]))

    def test_negative_exponent_outside_the_alcove(self, a1_iwahori, cuspidal_source):
        m = point_map(cuspidal_source(1), a1_iwahori, ["0"], ["-1"])
        with pytest.raises(NotInAlcovePosition):
            diagram_weights(m, DiagramData.skeleton((1, 1)))

    def test_affine_node_may_be_negative(self, a1_iwahori, cuspidal_source):
        m = point_map(cuspidal_source(1), a1_iwahori, ["0"], ["1"])
        data = diagram_weights(m, DiagramData.skeleton((1, 1), j_nodes=[AFFINE_NODE]))
        assert data.weights[AFFINE_NODE].vexp < 0
        assert data.k_nodes == (1,)
