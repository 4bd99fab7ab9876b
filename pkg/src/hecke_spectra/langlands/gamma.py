# src/hecke_spectra/langlands/gamma.py
"""
Adjoint L-functions and gamma-factors at s = 0.

L is a function of z = q^{-s} on an auxiliary rank-1 lattice. The epsilon factor of an
unramified parameter has modulus one and is dropped, so gamma(s) = L(1 - s) / L(s) and at
s = 0 it is L(z = v^{-2}) / L(z = 1), each side regularized.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

from ..algebra.factored import FactoredFunction
from ..algebra.units import TorusPoint
from ..errors import NotDiscrete
from .parameters import (EnhancementData, IsotypicTable, UnramifiedParam, relative_isotypics,
                         sl2_isotypics)

_logger = logging.getLogger(__name__)

Z_AT_ONE = TorusPoint((Fraction(0),), (Fraction(-2),))   # s = 1: z = q^{-1}
Z_AT_ZERO = TorusPoint((Fraction(0),), (Fraction(0),))   # s = 0: z = 1


@dataclass(frozen=True)
class GammaValue:
    """gamma(s) near s = 0: ``order`` is the order of vanishing; ``value`` the leading coefficient."""
    value: FactoredFunction
    order: int

    @property
    def at_zero(self) -> FactoredFunction:
        return self.value if self.order == 0 else FactoredFunction.zero()

    def to_dict(self) -> dict:
        return {"order": self.order, "value": str(self.value), "gamma0": str(self.at_zero)}


def l_function(table: IsotypicTable) -> FactoredFunction:
    """prod over (n, zeta) of (1 - e^{2 pi i zeta} v^{-n} z)^{-m_n(zeta)}."""
    raw = [(zeta, Fraction(-n), (1,), -m) for (n, zeta), m in table.entries]
    return FactoredFunction.from_factors(raw, 1)


def adjoint_L(p: UnramifiedParam) -> FactoredFunction:
    return l_function(sl2_isotypics(p))


def gamma_from_l(l_fn: FactoredFunction) -> GammaValue:
    at_one, poles_at_one = l_fn.regularized_restriction((), Z_AT_ONE)
    at_zero, poles_at_zero = l_fn.regularized_restriction((), Z_AT_ZERO)
    return GammaValue(at_one / at_zero, poles_at_zero - poles_at_one)


def gamma0(p: UnramifiedParam) -> GammaValue:
    value = gamma_from_l(adjoint_L(p))
    _logger.debug("gamma(0) for %s: order %d", p.to_dict(), value.order)
    return value


def relative_gamma0(p: UnramifiedParam) -> GammaValue:
    """gamma at s = 0 for the root spaces outside the Levi of ``p``; the torus is excluded."""
    return gamma_from_l(l_function(relative_isotypics(p)))


def hii_fdeg(p: UnramifiedParam, enhancement: EnhancementData = EnhancementData()) -> FactoredFunction:
    """(dim rho / |S_phi|) |gamma(0, Ad phi)|; raises NotDiscrete when gamma vanishes at 0."""
    gamma = gamma0(p)
    if gamma.order > 0:
        raise NotDiscrete(f"gamma(0) vanishes to order {gamma.order}; the parameter is not discrete.",
                          order=gamma.order)
    return FactoredFunction.scalar(enhancement.ratio) * gamma.value.magnitude()
