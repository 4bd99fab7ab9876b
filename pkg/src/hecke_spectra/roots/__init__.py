# src/hecke_spectra/roots/__init__.py
from .root_datum import HeckeParams, RootDatum, pair
from .presets import MAX_RANK, available_presets, cartan_matrix, preset
from .weyl import (DEFAULT_WEYL_BOUND, WeylElement, longest_element, longest_weight, orbit, orbit_key,
                   poincare_q, reflection_matrix, weyl_group)
from .parabolic import ParabolicSplit, parabolic

__all__ = [
    "HeckeParams", "RootDatum", "pair", "MAX_RANK", "available_presets", "cartan_matrix", "preset",
    "DEFAULT_WEYL_BOUND", "WeylElement", "longest_element", "longest_weight", "orbit", "orbit_key",
    "poincare_q", "reflection_matrix", "weyl_group", "ParabolicSplit", "parabolic",
]
