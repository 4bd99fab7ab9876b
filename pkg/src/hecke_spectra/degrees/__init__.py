# src/hecke_spectra/degrees/__init__.py
from .group_orders import (GroupOrderSpec, companion_matrix, group_order, q_minus_one, split_torus_order,
                           torus_order)
from .volumes import CuspidalDatum, cuspidal_fdeg, iwahori_volume, parahoric_volume, pgl_anisotropic_datum
from .degree_table import DEFAULT_DEGREE_TABLE, DegreeTable, load_degree_table, parse_order_tokens

__all__ = [
    "GroupOrderSpec", "companion_matrix", "group_order", "q_minus_one", "split_torus_order", "torus_order",
    "CuspidalDatum", "cuspidal_fdeg", "iwahori_volume", "parahoric_volume", "pgl_anisotropic_datum",
    "DEFAULT_DEGREE_TABLE", "DegreeTable", "load_degree_table", "parse_order_tokens",
]
