# src/hecke_spectra/algebra/__init__.py
from .units import CycloFactor, TorusPoint, Unit, as_fraction, canonicalize, fraction_str
from .factored import (ONE, ZERO, AlgebraicConstant, FactoredFunction, NonConstant, RationalMonomial,
                       compose_transports, ratio_class)
from .unipoly import UniPoly
from .serialization import dumps_factored, loads_factored, parse_factored
from .qnumbers import gaussian_integer, q_factorial, q_integer

__all__ = [
    "CycloFactor", "TorusPoint", "Unit", "as_fraction", "canonicalize", "fraction_str",
    "ONE", "ZERO", "AlgebraicConstant", "FactoredFunction", "NonConstant", "RationalMonomial",
    "compose_transports", "ratio_class", "UniPoly", "dumps_factored", "loads_factored",
    "parse_factored", "gaussian_integer", "q_factorial", "q_integer",
]
