# src/hecke_spectra/spectral/mu.py
"""Harish-Chandra c-functions and the mu-function of a HeckeSpec."""
from functools import lru_cache
from fractions import Fraction
from typing import Sequence

from ..algebra.factored import FactoredFunction
from ..algebra.units import HALF
from .hecke_spec import HeckeSpec


def c_function(spec: HeckeSpec, root: Sequence[int]) -> FactoredFunction:
    """
    c_alpha = (1 - theta_{-2 alpha})^{-1} (1 + v^{-k_minus} theta_{-alpha}) (1 - v^{-k_plus} theta_{-alpha}).

    Raises NotARoot when ``root`` is not a root of the datum.
    """
    root = tuple(root)
    k_plus, k_minus = spec.params.for_root(spec.rd, root)
    neg = tuple(-c for c in root)
    neg2 = tuple(-2 * c for c in root)
    return FactoredFunction.from_factors([
        (Fraction(0), Fraction(0), neg2, -1),
        (HALF, -k_minus, neg, 1),
        (Fraction(0), -k_plus, neg, 1),
    ], spec.rank)


@lru_cache(maxsize=128)
def mu_factors(spec: HeckeSpec) -> FactoredFunction:
    """prod over all roots of c_alpha^{-1}: mu without the constant d / q(w_0)."""
    result = FactoredFunction.one(spec.rank)
    for root in spec.rd.roots:
        result = result / c_function(spec, root)
    return result


def mu(spec: HeckeSpec) -> FactoredFunction:
    """mu = (d / q(w_0)) / prod_{alpha > 0} c_alpha c_{-alpha}."""
    return spec.mass_constant() * mu_factors(spec)
