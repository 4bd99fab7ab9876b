# src/hecke_spectra/spectral/__init__.py
from .ledger import DEFAULT_LEDGER, ConventionLedger
from .hecke_spec import HeckeSpec, scale_spec
from .mu import c_function, mu, mu_factors
from .residual import (Certificate, ResidualCoset, enumerate_residual_cosets, enumerate_residual_points,
                       formal_degree, formal_degree_magnitude, is_residual, iter_subsets, m_r, mu_L,
                       pole_zero_counts, residual_candidates, residual_point_table, scale_point)
from .presets import iwahori_spec, make_spec, omega_order

__all__ = [
    "DEFAULT_LEDGER", "ConventionLedger", "HeckeSpec", "scale_spec", "c_function", "mu", "mu_factors",
    "Certificate", "ResidualCoset", "enumerate_residual_cosets", "enumerate_residual_points",
    "formal_degree", "formal_degree_magnitude", "is_residual", "iter_subsets", "m_r", "mu_L",
    "pole_zero_counts", "residual_candidates", "residual_point_table", "scale_point",
    "iwahori_spec", "make_spec", "omega_order",
]
