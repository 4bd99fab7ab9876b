# src/hecke_spectra/algebra/qnumbers.py
"""q-integers in product form, with q = v^2."""
from fractions import Fraction

from .factored import FactoredFunction


def gaussian_integer(n: int) -> FactoredFunction:
    """1 + q + ... + q^{n-1} = (1 - v^{2n}) / (1 - v^2)."""
    if n < 1:
        raise ValueError(f"q-integers are defined for n >= 1, got {n}")
    return FactoredFunction.factor(0, 2 * n, ()) / FactoredFunction.factor(0, 2, ())


def q_integer(n: int) -> FactoredFunction:
    """[n]_q = (v^n - v^{-n}) / (v - v^{-1}), the bar-invariant form used in degree formulas."""
    return gaussian_integer(n) * FactoredFunction.v_power(Fraction(-(n - 1)))


def q_factorial(n: int) -> FactoredFunction:
    result = FactoredFunction.one()
    for i in range(1, n + 1):
        result = result * q_integer(i)
    return result
