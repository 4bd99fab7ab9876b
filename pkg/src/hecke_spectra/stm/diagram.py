# src/hecke_spectra/stm/diagram.py
"""
Kac-diagram weight bookkeeping for a map in alcove position.

Node 0 is the affine node with gradient -theta (theta the highest root of the target);
node i >= 1 is the simple root alpha_{i-1}. The weight w_i is the pullback of the node's
gradient character along the map, a Unit on the source lattice.
"""
import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from ..algebra.factored import FactoredFunction
from ..algebra.units import Unit, fraction_str
from ..errors import InvalidParameter, NotInAlcovePosition, RelationViolated
from ..roots.root_datum import RootDatum
from .spectral_map import SpectralMap

_logger = logging.getLogger(__name__)

AFFINE_NODE = 0


def affine_marks(rd: RootDatum) -> Tuple[int, ...]:
    """(1, highest-root coefficients): the untwisted affine marks of an irreducible datum."""
    if rd.semisimple_rank == 0:
        raise InvalidParameter(f"{rd.name} has no roots and no affine diagram.")
    return (1,) + tuple(rd.marks())


def gradients(rd: RootDatum) -> Tuple[Tuple[int, ...], ...]:
    top = rd.highest_root()
    return (tuple(-c for c in top),) + tuple(rd.simple_roots)


def unit_str(unit: Unit) -> str:
    return str(FactoredFunction.monomial(unit))


@dataclass(frozen=True)
class DiagramData:
    marks: Tuple[int, ...]
    j_nodes: Optional[Tuple[int, ...]] = None
    k_nodes: Optional[Tuple[int, ...]] = None
    weights: Tuple[Unit, ...] = ()

    @classmethod
    def skeleton(cls, marks: Sequence[int], j_nodes: Optional[Sequence[int]] = None) -> "DiagramData":
        return cls(tuple(int(n) for n in marks), None if j_nodes is None else tuple(sorted(set(j_nodes))))

    def to_dict(self) -> dict:
        return {
            "marks": list(self.marks),
            "J": None if self.j_nodes is None else list(self.j_nodes),
            "K": None if self.k_nodes is None else list(self.k_nodes),
            "weights": [unit_str(w) for w in self.weights],
            "d": {str(j): fraction_str(self.weights[j].vexp) for j in (self.j_nodes or ())},
        }


def diagram_weights(m: SpectralMap, kac: DiagramData) -> DiagramData:
    """
    Fills in the weights w_i, splits the nodes into J (constant weights) and K, and checks the
    affine relation prod w_i^{n_i} = 1 and that every non-affine w_j in J is v^{d_j}, d_j >= 0.
    """
    rd = m.target.rd
    nodes = rd.semisimple_rank + 1
    if len(kac.marks) != nodes or any(n < 1 for n in kac.marks):
        raise InvalidParameter(f"{rd.name} needs {nodes} positive marks, got {list(kac.marks)}.")

    total = m.total_matrix()
    base = m.total_base()
    weights = []
    for grad in gradients(rd):
        value = base.value(grad)
        x = tuple(sum(row[j] * grad[j] for j in range(len(grad))) for row in total)
        weights.append(Unit(value.mag, value.phase, value.vexp, x))

    product = Unit.one(m.source.rank)
    for w, n in zip(weights, kac.marks):
        product = product * w ** n
    if not product.is_identity():
        raise RelationViolated(f"prod w_i^n_i = {unit_str(product)} with marks {list(kac.marks)}.",
                               product=unit_str(product))

    constant = tuple(i for i, w in enumerate(weights) if w.is_v_only())
    if kac.j_nodes is not None:
        moving = [j for j in kac.j_nodes if not weights[j].is_v_only()]
        if moving:
            raise NotInAlcovePosition(f"Nodes {moving} were declared constant but their weights vary.",
                                      weights=[unit_str(weights[j]) for j in moving])
        j_nodes = kac.j_nodes
    else:
        j_nodes = constant
    for j in j_nodes:
        if j == AFFINE_NODE:
            continue
        w = weights[j]
        if w.phase != 0 or w.vexp < 0 or w.mag != 1:
            raise NotInAlcovePosition(f"w_{j} = {unit_str(w)} is not a nonnegative power of v.", node=j)

    k_nodes = tuple(i for i in range(nodes) if i not in j_nodes)
    _logger.debug("Diagram of %s: J = %s, K = %s", rd.name, j_nodes, k_nodes)
    return DiagramData(kac.marks, tuple(j_nodes), k_nodes, tuple(weights))
