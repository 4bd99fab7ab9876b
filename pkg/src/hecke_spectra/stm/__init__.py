# src/hecke_spectra/stm/__init__.py
from .spectral_map import SpectralMap, compose, describe, full_torus, is_equivalent
from .verify import (NEAR_MISS, VERIFIED, Verification, image_orbit_key, image_point, pulled_density,
                     verify_stm, weyl_witnesses)
from .discovery import (DEFAULT_BOUND, DEFAULT_SEARCH_LIMIT, DiscoveryReport, discover_stms, integer_matrices,
                        phase_grid, search_space_size, search_stms)
from .diagram import AFFINE_NODE, DiagramData, affine_marks, diagram_weights

__all__ = [
    "SpectralMap", "compose", "describe", "full_torus", "is_equivalent",
    "NEAR_MISS", "VERIFIED", "Verification", "image_orbit_key", "image_point", "pulled_density",
    "verify_stm", "weyl_witnesses",
    "DEFAULT_BOUND", "DEFAULT_SEARCH_LIMIT", "DiscoveryReport", "discover_stms", "integer_matrices",
    "phase_grid", "search_space_size", "search_stms",
    "AFFINE_NODE", "DiagramData", "affine_marks", "diagram_weights",
]
