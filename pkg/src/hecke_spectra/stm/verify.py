# src/hecke_spectra/stm/verify.py
"""Checking that a map pulls the target density back to a rational multiple of the source mu."""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

from ..algebra.factored import FactoredFunction, RationalMonomial, ratio_class
from ..algebra.units import TorusPoint, fraction_str
from ..errors import NonConstantRatio
from ..roots.lattice import mat_mul
from ..roots.weyl import WeylElement, orbit_key, reflection_matrix, weyl_group
from ..spectral.mu import mu
from ..spectral.residual import mu_L
from .spectral_map import SpectralMap

_logger = logging.getLogger(__name__)

VERIFIED = "verified"
NEAR_MISS = "near_miss"


@dataclass(frozen=True)
class Verification:
    """Psi^*(mu_2^L) = D v^{v_exp} mu_1; the map is spectral exactly when v_exp = 0."""
    d: Fraction
    v_exp: Fraction
    diagnostics: Dict = field(default_factory=dict, compare=False)

    @property
    def status(self) -> str:
        return VERIFIED if self.v_exp == 0 else NEAR_MISS

    @property
    def is_verified(self) -> bool:
        return self.v_exp == 0

    def to_dict(self) -> dict:
        return {"status": self.status, "D": fraction_str(self.d), "vExp": fraction_str(self.v_exp),
                "diagnostics": dict(self.diagnostics)}


def pulled_density(m: SpectralMap) -> FactoredFunction:
    """Psi^*(mu_2^L), the target density on L pulled back to the source torus."""
    return mu_L(m.target, m.coset).pullback(m.matrix, m.base)


def verify_stm(m: SpectralMap, check_witnesses: bool = False) -> Verification:
    """
    Returns the constant D (and its v-exponent) with Psi^*(mu_2^L) = D mu_1. Raises NotResidual
    for a non-residual coset and NonConstantRatio when the quotient is not a rational monomial.
    """
    pulled = pulled_density(m)
    source_mu = mu(m.source)
    ratio = ratio_class(pulled, source_mu)
    if not isinstance(ratio, RationalMonomial):
        raise NonConstantRatio(f"Pullback along {m.matrix} is not a rational multiple of mu({m.source.name}).",
                               leftover=ratio.leftover, ratio_class=type(ratio).__name__)
    diagnostics = {}
    if ratio.k != 0:
        diagnostics["hint"] = "the ratio is a v-power: check d and the q(w_0) ledger setting"
    if check_witnesses:
        found = weyl_witnesses(m)
        diagnostics["weyl_witnesses"] = [None if w is None else list(w.word) for w in found]
    _logger.debug("verify_stm: D = %s, v-exponent %s", ratio.c, ratio.k)
    return Verification(ratio.c, ratio.k, diagnostics)


def weyl_witnesses(m: SpectralMap) -> List[Optional[WeylElement]]:
    """
    For each simple reflection w_1 of the source, a target Weyl element w_2 with
    Psi o w_1 = w_2 o Psi, or None when there is none.
    """
    total = m.total_matrix()
    base = m.total_base()
    rd = m.source.rd
    group = weyl_group(m.target.rd, m.target.weyl_bound)
    fixing = [w for w in group if w.act_on_point(base).key() == base.key()]
    witnesses = []
    for a, c in zip(rd.simple_roots, rd.simple_coroots):
        left = mat_mul(reflection_matrix(a, c), total, m.source.rank)
        witness = None
        for w in fixing:
            if mat_mul(total, w.matrix, m.target.rank) == left:
                witness = w
                break
        witnesses.append(witness)
    return witnesses


def image_point(m: SpectralMap, point: TorusPoint) -> TorusPoint:
    """Psi(point): theta_x takes the value b(x) point(M x)."""
    total = m.total_matrix()
    base = m.total_base()
    n = m.target.rank
    s = tuple(base.s[j] + sum((total[i][j] * point.s[i] for i in range(len(total))), Fraction(0)) for j in range(n))
    y = tuple(base.y[j] + sum((total[i][j] * point.y[i] for i in range(len(total))), Fraction(0)) for j in range(n))
    return TorusPoint(s, y)


def image_orbit_key(m: SpectralMap, point: TorusPoint):
    return orbit_key(m.target.rd, image_point(m, point), m.target.weyl_bound)
