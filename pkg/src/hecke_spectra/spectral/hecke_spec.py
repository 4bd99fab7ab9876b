# src/hecke_spectra/spectral/hecke_spec.py
import logging
from dataclasses import dataclass, field

from ..algebra.factored import FactoredFunction
from ..algebra.units import Rational, as_fraction
from ..errors import InvalidParameter, PoleAtValue
from ..roots.root_datum import HeckeParams, RootDatum
from ..roots.weyl import DEFAULT_WEYL_BOUND, longest_weight, poincare_q
from .ledger import DEFAULT_LEDGER, ConventionLedger

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HeckeSpec:
    """A normalized affine Hecke algebra, seen through its spectral data."""
    rd: RootDatum
    params: HeckeParams
    d: FactoredFunction
    omega_order: int = 1
    ledger: ConventionLedger = field(default=DEFAULT_LEDGER)
    weyl_bound: int = field(default=DEFAULT_WEYL_BOUND, compare=False)

    def __post_init__(self):
        if self.omega_order < 1:
            raise InvalidParameter(f"Omega order must be positive, got {self.omega_order}.")
        if self.d.is_zero:
            raise InvalidParameter("The normalization d must be nonzero.")
        if self.d.rank != 0 or not self.d.is_v_only():
            raise InvalidParameter(f"The normalization d must be a function of v alone, got {self.d}.")
        try:
            value = self.d.numeric(2.0)
        except PoleAtValue:
            raise InvalidParameter(f"The normalization d has a pole at v = 2: {self.d}.")
        if value.real <= 0 or abs(value.imag) > 1e-9 * abs(value):
            raise InvalidParameter(f"The normalization d must be positive at v = 2, got {value}.")

    @property
    def rank(self) -> int:
        return self.rd.rank

    @property
    def name(self) -> str:
        return self.rd.name

    def q_w0(self) -> FactoredFunction:
        if self.ledger.q_w0 == "poincare":
            return poincare_q(self.rd, self.params, self.weyl_bound).to_factored()
        return FactoredFunction.v_power(longest_weight(self.rd, self.params))

    def mass_constant(self) -> FactoredFunction:
        """d / q(w_0), the factor in front of the c-function product in mu."""
        return self.d / self.q_w0()

    def with_d(self, d: FactoredFunction, omega_order: int = None) -> "HeckeSpec":
        return HeckeSpec(self.rd, self.params, d, self.omega_order if omega_order is None else omega_order,
                         self.ledger, self.weyl_bound)

    def with_ledger(self, ledger: ConventionLedger) -> "HeckeSpec":
        return HeckeSpec(self.rd, self.params, self.d, self.omega_order, ledger, self.weyl_bound)

    def to_dict(self) -> dict:
        return {
            "root_datum": self.rd.to_dict(),
            "params": self.params.to_dict(),
            "d": str(self.d),
            "omega_order": self.omega_order,
            "ledger": self.ledger.to_dict(),
        }


def scale_spec(spec: HeckeSpec, eps: Rational) -> HeckeSpec:
    """The family member v -> v^eps: parameters and d rescaled together."""
    eps = as_fraction(eps)
    if eps <= 0:
        raise InvalidParameter(f"Scaling exponent must be positive, got {eps}.")
    return HeckeSpec(spec.rd, spec.params.scaled(eps), spec.d.substitute_v(eps), spec.omega_order,
                     spec.ledger, spec.weyl_bound)
