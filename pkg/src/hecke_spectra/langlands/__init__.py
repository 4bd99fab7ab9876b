# src/hecke_spectra/langlands/__init__.py
from .parameters import (EnhancementData, IsotypicTable, UnramifiedParam, param_from_residual_point,
                         relative_isotypics, residual_point_from_param, sl2_isotypics, table_from_weights)
from .gamma import GammaValue, adjoint_L, gamma0, gamma_from_l, hii_fdeg, l_function, relative_gamma0

__all__ = [
    "EnhancementData", "IsotypicTable", "UnramifiedParam", "param_from_residual_point",
    "relative_isotypics", "residual_point_from_param", "sl2_isotypics", "table_from_weights",
    "GammaValue", "adjoint_L", "gamma0", "gamma_from_l", "hii_fdeg", "l_function", "relative_gamma0",
]
