# src/hecke_spectra/algebra/unipoly.py
"""
Univariate Laurent polynomials with rational exponents, in v or in q = v^2.

These carry the sums the product form cannot: Poincare polynomials and finite group orders.
``to_factored`` converts back to product form when the polynomial is a product of
cyclotomic polynomials in some root of v.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Dict, Iterable, Tuple, Union

import sympy

from ..errors import NotFactorable
from .factored import FactoredFunction
from .units import Rational, Unit, as_fraction, fraction_str

_logger = logging.getLogger(__name__)

VARIABLES = ("v", "q")


@dataclass(frozen=True)
class UniPoly:
    terms: Tuple[Tuple[Fraction, Fraction], ...]
    var: str = "v"

    def __post_init__(self):
        if self.var not in VARIABLES:
            raise ValueError(f"Unknown polynomial variable {self.var!r}; expected one of {VARIABLES}.")

    # --- Constructors ---

    @classmethod
    def from_dict(cls, coefficients: Dict[Rational, Rational], var: str = "v") -> "UniPoly":
        collected: Dict[Fraction, Fraction] = {}
        for exponent, coefficient in coefficients.items():
            e = as_fraction(exponent)
            collected[e] = collected.get(e, Fraction(0)) + as_fraction(coefficient)
        return cls(tuple(sorted((e, c) for e, c in collected.items() if c != 0)), var)

    @classmethod
    def constant(cls, value: Rational, var: str = "v") -> "UniPoly":
        return cls.from_dict({0: value}, var)

    @classmethod
    def monomial(cls, exponent: Rational, coefficient: Rational = 1, var: str = "v") -> "UniPoly":
        return cls.from_dict({exponent: coefficient}, var)

    @classmethod
    def cyclotomic(cls, n: int, var: str = "q") -> "UniPoly":
        x = sympy.Symbol("x")
        coeffs = sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()
        degree = len(coeffs) - 1
        return cls.from_dict({degree - i: int(c) for i, c in enumerate(coeffs)}, var)

    # --- Ring structure ---

    def as_dict(self) -> Dict[Fraction, Fraction]:
        return dict(self.terms)

    def _check_var(self, other: "UniPoly") -> None:
        if self.var != other.var:
            raise ValueError(f"Cannot combine polynomials in {self.var} and {other.var}; convert with to_v().")

    def _coerce(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            self._check_var(other)
            return other
        return UniPoly.constant(other, self.var)

    def __add__(self, other) -> "UniPoly":
        other = self._coerce(other)
        total = self.as_dict()
        for e, c in other.terms:
            total[e] = total.get(e, Fraction(0)) + c
        return UniPoly.from_dict(total, self.var)

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple((e, -c) for e, c in self.terms), self.var)

    def __sub__(self, other) -> "UniPoly":
        return self + (-self._coerce(other))

    def __mul__(self, other) -> "UniPoly":
        other = self._coerce(other)
        product: Dict[Fraction, Fraction] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                product[e1 + e2] = product.get(e1 + e2, Fraction(0)) + c1 * c2
        return UniPoly.from_dict(product, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("UniPoly only supports non-negative powers.")
        result = UniPoly.constant(1, self.var)
        for _ in range(n):
            result = result * self
        return result

    # --- Queries ---

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> Fraction:
        return self.terms[-1][0] if self.terms else Fraction(0)

    def lowest(self) -> Fraction:
        return self.terms[0][0] if self.terms else Fraction(0)

    def coefficient(self, exponent: Rational) -> Fraction:
        return self.as_dict().get(as_fraction(exponent), Fraction(0))

    def evaluate(self, value: Rational) -> Fraction:
        """Exact value for exponents that are integers; use a float otherwise."""
        value = as_fraction(value)
        total = Fraction(0)
        for e, c in self.terms:
            if e.denominator != 1:
                raise ValueError(f"Exact evaluation needs integer exponents, found {e}.")
            total += c * value ** int(e)
        return total

    def is_palindromic(self) -> bool:
        """True when the coefficients read the same from both ends."""
        top, bottom = self.degree(), self.lowest()
        coeffs = self.as_dict()
        return all(coeffs.get(top + bottom - e) == c for e, c in self.terms)

    def to_v(self) -> "UniPoly":
        """Substitutes q = v^2."""
        if self.var == "v":
            return self
        return UniPoly(tuple((2 * e, c) for e, c in self.terms), "v")

    def substitute(self, eps: Rational) -> "UniPoly":
        eps = as_fraction(eps)
        return UniPoly.from_dict({e * eps: c for e, c in self.terms}, self.var)

    # --- Conversion to product form ---

    def to_factored(self) -> FactoredFunction:
        """
        Writes the polynomial (in v) as c * v^l * prod (1 - zeta v^{1/N})^m. Raises
        NotFactorable when a non-cyclotomic factor remains.
        """
        poly_v = self.to_v()
        if poly_v.is_zero():
            return FactoredFunction.zero(0)
        level = lcm(*(e.denominator for e, _ in poly_v.terms))
        low = poly_v.lowest()
        w = sympy.Symbol("w")
        expr = sum(sympy.Rational(c.numerator, c.denominator) * w ** int((e - low) * level)
                   for e, c in poly_v.terms)
        remaining = sympy.Poly(expr, w, domain=sympy.QQ)

        raw = []
        sign = 1
        n = 1
        while remaining.degree() > 0:
            bound = 2 * remaining.degree() ** 2 + 2
            if n > bound:
                raise NotFactorable(f"{self} is not a product of cyclotomic polynomials.",
                                    leftover=str(remaining.as_expr()))
            if sympy.totient(n) <= remaining.degree():
                cyclo = sympy.Poly(sympy.cyclotomic_poly(n, w), w, domain=sympy.QQ)
                quotient, rest = remaining.div(cyclo)
                if rest.is_zero:
                    remaining = quotient
                    raw.extend(_cyclotomic_roots(n, level))
                    if n == 1:
                        sign = -sign
                    continue
            n += 1

        lead = sympy.Rational(remaining.as_expr())
        constant = sign * Fraction(int(lead.p), int(lead.q))
        unit = Unit.scalar(constant) * Unit.v_power(low)
        return FactoredFunction.from_factors(raw, 0, unit)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for e, c in reversed(self.terms):
            if e == 0:
                out.append(fraction_str(c))
            else:
                out.append(f"{fraction_str(c)}*{self.var}^({fraction_str(e)})")
        return " + ".join(out)

    def to_json(self) -> dict:
        return {"var": self.var, "terms": {fraction_str(e): fraction_str(c) for e, c in self.terms}}


def _cyclotomic_roots(n: int, level: int) -> Iterable[Tuple[Fraction, Fraction, tuple, int]]:
    """Raw factors of Phi_n(v^{1/level}); the sign of Phi_1(w) = -(1 - w) is left to the caller."""
    if n == 1:
        yield (Fraction(0), Fraction(1, level), (), 1)
        return
    for j in range(1, n):
        if sympy.igcd(j, n) == 1:
            yield (Fraction(j, n), Fraction(1, level), (), 1)
