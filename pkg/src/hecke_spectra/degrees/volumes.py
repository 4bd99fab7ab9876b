# src/hecke_spectra/degrees/volumes.py
import logging
from dataclasses import dataclass

from ..algebra.factored import FactoredFunction
from ..algebra.unipoly import UniPoly
from ..errors import InvalidParameter
from .group_orders import GroupOrderSpec, companion_matrix, group_order, split_torus_order

_logger = logging.getLogger(__name__)

POSITIVITY_CHECKS = (2, 3, 4)


def parahoric_volume(quotient_order: UniPoly, quotient_dim: int) -> FactoredFunction:
    """Vol(P) = v^{-dim} |P_bar| with q = v^2; raises NotFactorable outside cyclotomic shapes."""
    if quotient_dim < 0:
        raise InvalidParameter(f"Quotient dimension must be nonnegative, got {quotient_dim}.")
    if quotient_order.var != "q":
        raise InvalidParameter("Group orders are polynomials in q.")
    return FactoredFunction.v_power(-quotient_dim) * quotient_order.to_v().to_factored()


def iwahori_volume(rank: int) -> FactoredFunction:
    """Volume of an Iwahori subgroup of a split group: the reductive quotient is a split torus."""
    return parahoric_volume(split_torus_order(rank), rank)


@dataclass(frozen=True)
class CuspidalDatum:
    quotient_order: UniPoly
    quotient_dim: int
    deg_sigma: UniPoly
    omega_p: int = 1
    label: str = ""

    def __post_init__(self):
        if self.omega_p < 1:
            raise InvalidParameter(f"{self.label}: |Omega^P| must be positive, got {self.omega_p}.")
        if self.quotient_dim < 0:
            raise InvalidParameter(f"{self.label}: quotient dimension must be nonnegative.")
        for q in POSITIVITY_CHECKS:
            if self.quotient_order.evaluate(q) <= 0 or self.deg_sigma.evaluate(q) <= 0:
                raise InvalidParameter(f"{self.label}: order and degree must be positive at q = {q}.")

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "quotient_order": str(self.quotient_order),
            "quotient_dim": self.quotient_dim,
            "deg_sigma": str(self.deg_sigma),
            "omega_p": self.omega_p,
        }


def cuspidal_fdeg(datum: CuspidalDatum) -> FactoredFunction:
    """fdeg = deg(sigma) / (|Omega^P| Vol(P))."""
    volume = parahoric_volume(datum.quotient_order, datum.quotient_dim)
    degree = datum.deg_sigma.to_v().to_factored()
    return degree / (volume * datum.omega_p)


def pgl_anisotropic_datum(m: int) -> CuspidalDatum:
    """
    Depth-zero datum of the anisotropic form of PGL_{m+1}: the parahoric quotient is the
    norm-one torus of order (q^{m+1} - 1)/(q - 1), deg(sigma) = 1 and |Omega| = m + 1.
    """
    order = group_order(GroupOrderSpec(torus_twist=companion_matrix(m)))
    _logger.debug("PGL_%d anisotropic quotient order %s", m + 1, order)
    return CuspidalDatum(order, m, UniPoly.constant(1, "q"), m + 1, label=f"PGL{m + 1}[aniso]")
