# src/hecke_spectra/spectral/presets.py
from typing import Dict, Optional

from ..algebra.factored import FactoredFunction
from ..algebra.units import Rational
from ..degrees.volumes import iwahori_volume
from ..roots.lattice import determinant
from ..roots.presets import preset
from ..roots.root_datum import HeckeParams, RootDatum
from .hecke_spec import HeckeSpec
from .ledger import DEFAULT_LEDGER, ConventionLedger


def omega_order(rd: RootDatum) -> int:
    """Index of the root lattice in X for semisimple data; 1 otherwise."""
    if rd.semisimple_rank != rd.rank or rd.rank == 0:
        return 1
    return abs(determinant(rd.simple_roots))


def iwahori_spec(name: str, k_plus: Rational = 2, ledger: ConventionLedger = DEFAULT_LEDGER) -> HeckeSpec:
    """Equal-parameter Iwahori spec: d = 1/Vol(I), |Omega| from the lattice."""
    rd = preset(name)
    d = iwahori_volume(rd.rank).inverse()
    return HeckeSpec(rd, HeckeParams.equal(rd, k_plus), d, omega_order(rd), ledger)


def make_spec(name: str, k_plus: Dict[int, Rational], k_minus: Optional[Dict[int, Rational]] = None,
              d: Optional[FactoredFunction] = None, omega: int = 1,
              ledger: ConventionLedger = DEFAULT_LEDGER) -> HeckeSpec:
    rd = preset(name)
    params = HeckeParams.create(rd, k_plus, k_minus)
    return HeckeSpec(rd, params, d if d is not None else FactoredFunction.one(), omega, ledger)
