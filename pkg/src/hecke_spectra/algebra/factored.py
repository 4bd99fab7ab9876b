# src/hecke_spectra/algebra/factored.py
"""
Exact product-form rational functions on a torus.

A FactoredFunction is ``unit * prod (1 - zeta v^k theta_x)^m`` with every factor in canonical
position, or the distinguished zero. Only products, quotients, powers, pullbacks and
evaluations are offered; sums live in ``unipoly``.

Normal form
-----------
Factors with a nonzero character are canonical after ``units.canonicalize``. Pure v-factors
``(1 - zeta v^{1/b})`` are first refined to a common level L (all exponents 1/L), cancelled,
then merged back down one prime at a time whenever the phase multiset is invariant under the
shift by 1/p. The result does not depend on how the function was built, so structural
equality is equality of functions.
"""
import logging
from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
import sympy

from ..errors import DimensionMismatch, LatticeMismatch, PoleAtPoint, PoleAtValue, ZeroDenominator
from .units import (HALF, CycloFactor, Rational, TorusPoint, Unit, as_fraction, canonicalize, dot,
                    fraction_str, is_zero_raw, is_zero_vector, mod_one)

_logger = logging.getLogger(__name__)

Matrix = Sequence[Sequence[int]]
RawFactor = Tuple[Rational, Rational, Sequence[int], int]

POLE_TOLERANCE = 1e-14
REAL_TOLERANCE = 1e-9


# --- Normalization of pure v-factors ---

def _merge_levels(fine: Dict[Fraction, int], level: int) -> Tuple[Dict[Fraction, int], int]:
    while fine and level > 1:
        for p in sympy.primefactors(level):
            shift = Fraction(1, p)
            if all(fine.get(mod_one(phi + shift), 0) == m for phi, m in fine.items()):
                fine = {mod_one(phi * p): m for phi, m in fine.items()}
                level //= p
                break
        else:
            break
    return fine, level


def _normal_factors(rank: int, counts: Dict[CycloFactor, int]) -> Tuple[Tuple[CycloFactor, int], ...]:
    settled: Counter = Counter()
    v_only: Counter = Counter()
    for f, m in counts.items():
        if m == 0:
            continue
        if f.is_v_only() and f.vexp > 0:
            v_only[f] += m
        else:
            settled[f] += m

    if v_only:
        level = lcm(*(f.vexp.denominator for f in v_only))
        fine: Counter = Counter()
        for f, m in v_only.items():
            r = level * f.vexp.numerator // f.vexp.denominator
            for j in range(r):
                fine[mod_one((f.phase + j) / r)] += m
        fine_map, level = _merge_levels({phi: m for phi, m in fine.items() if m}, level)
        zero = (0,) * rank
        for phi, m in fine_map.items():
            settled[CycloFactor(zero, Fraction(1, level), phi)] += m

    return tuple(sorted((f, m) for f, m in settled.items() if m != 0))


# --- Ratio classes ---

@dataclass(frozen=True)
class RationalMonomial:
    c: Fraction
    k: Fraction

    def to_dict(self) -> dict:
        return {"class": "RationalMonomial", "c": fraction_str(self.c), "k": fraction_str(self.k)}


@dataclass(frozen=True)
class AlgebraicConstant:
    leftover: str

    def to_dict(self) -> dict:
        return {"class": "AlgebraicConstant", "leftover": self.leftover}


@dataclass(frozen=True)
class NonConstant:
    leftover: str

    def to_dict(self) -> dict:
        return {"class": "NonConstant", "leftover": self.leftover}


RatioClass = Union[RationalMonomial, AlgebraicConstant, NonConstant]


def _root_of_unity(phase: Fraction):
    return sympy.exp(2 * sympy.pi * sympy.I * sympy.Rational(phase.numerator, phase.denominator))


def _exact_rational(unit: Unit, factors: Sequence[Tuple[CycloFactor, int]]) -> Optional[Fraction]:
    """The constant unit * prod (1 - zeta)^m as a Fraction, or None when it is irrational."""
    by_order: Dict[int, Dict[int, int]] = defaultdict(dict)
    for f, m in factors:
        by_order[f.phase.denominator][f.phase.numerator] = m

    value = unit.mag
    orbit_wise = unit.phase in (0, HALF)
    for n, mults in by_order.items():
        if not orbit_wise:
            break
        if n == 2:
            value *= Fraction(2) ** mults[1]
            continue
        orbit = {j for j in range(1, n) if gcd(j, n) == 1}
        if set(mults) != orbit or len(set(mults.values())) != 1:
            orbit_wise = False
            break
        value *= Fraction(int(sympy.cyclotomic_poly(n, 1))) ** next(iter(mults.values()))
    if orbit_wise:
        return -value if unit.phase == HALF else value

    # Galois orbits do not line up; ask for the minimal polynomial instead.
    z = sympy.Symbol("z")
    expr = sympy.Rational(unit.mag.numerator, unit.mag.denominator) * _root_of_unity(unit.phase)
    for f, m in factors:
        expr *= (1 - _root_of_unity(f.phase)) ** m
    poly = sympy.Poly(sympy.minimal_polynomial(expr, z), z)
    if poly.degree() != 1:
        return None
    a, b = poly.all_coeffs()
    root = -sympy.Rational(b) / sympy.Rational(a)
    return Fraction(int(root.p), int(root.q))


# --- The function type ---

@dataclass(frozen=True)
class FactoredFunction:
    """
    Normalized product form. Build instances through the classmethods; the raw constructor
    trusts its arguments to already be in normal form.
    """
    rank: int
    unit: Unit
    factors: Tuple[Tuple[CycloFactor, int], ...] = ()
    is_zero: bool = False

    # --- Constructors ---

    @classmethod
    def build(cls, rank: int, unit: Optional[Unit] = None,
              counts: Optional[Dict[CycloFactor, int]] = None) -> "FactoredFunction":
        unit = (unit or Unit.one(rank)).lifted(rank)
        counts = counts or {}
        for f in counts:
            if f.rank != rank:
                raise LatticeMismatch(f"Factor on rank {f.rank} used in a rank-{rank} function.")
        return cls(rank, unit, _normal_factors(rank, counts))

    @classmethod
    def from_factors(cls, raw: Iterable[RawFactor], rank: int,
                     unit: Optional[Unit] = None) -> "FactoredFunction":
        """Builds unit * prod (1 - e^{2 pi i phase} v^vexp theta_x)^mult from raw tuples."""
        unit = (unit or Unit.one(rank)).lifted(rank)
        counts: Counter = Counter()
        for phase, vexp, x, mult in raw:
            if len(x) != rank:
                raise LatticeMismatch(f"Factor character {tuple(x)} does not live on rank {rank}.")
            if mult == 0:
                continue
            pieces, compensator = canonicalize(phase, vexp, x)
            unit = unit * compensator ** mult
            for piece in pieces:
                counts[piece] += mult
        return cls.build(rank, unit, counts)

    @classmethod
    def one(cls, rank: int = 0) -> "FactoredFunction":
        return cls(rank, Unit.one(rank))

    @classmethod
    def zero(cls, rank: int = 0) -> "FactoredFunction":
        return cls(rank, Unit.one(rank), (), True)

    @classmethod
    def scalar(cls, value: Rational, rank: int = 0) -> "FactoredFunction":
        value = as_fraction(value)
        if value == 0:
            return cls.zero(rank)
        return cls(rank, Unit.scalar(value, rank))

    @classmethod
    def monomial(cls, unit: Unit) -> "FactoredFunction":
        return cls(unit.rank, unit)

    @classmethod
    def v_power(cls, k: Rational, rank: int = 0) -> "FactoredFunction":
        return cls(rank, Unit.v_power(k, rank))

    @classmethod
    def factor(cls, phase: Rational, vexp: Rational, x: Sequence[int], mult: int = 1) -> "FactoredFunction":
        return cls.from_factors([(phase, vexp, x, mult)], len(x))

    # --- Group structure ---

    def lifted(self, rank: int) -> "FactoredFunction":
        if rank == self.rank:
            return self
        if self.rank != 0:
            raise LatticeMismatch(f"Cannot use a rank-{self.rank} function on a rank-{rank} lattice.")
        if self.is_zero:
            return FactoredFunction.zero(rank)
        return FactoredFunction(rank, self.unit.lifted(rank), tuple((f.lifted(rank), m) for f, m in self.factors))

    def _aligned(self, other: "FactoredFunction") -> Tuple["FactoredFunction", "FactoredFunction"]:
        if self.rank == other.rank:
            return self, other
        if self.rank == 0:
            return self.lifted(other.rank), other
        if other.rank == 0:
            return self, other.lifted(self.rank)
        raise LatticeMismatch(f"Functions on lattices of rank {self.rank} and {other.rank} cannot be combined.")

    @staticmethod
    def _coerce(other) -> "FactoredFunction":
        if isinstance(other, FactoredFunction):
            return other
        if isinstance(other, Unit):
            return FactoredFunction.monomial(other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return FactoredFunction.scalar(other)
        raise TypeError(f"Cannot combine a FactoredFunction with {type(other).__name__}")

    def __mul__(self, other) -> "FactoredFunction":
        a, b = self._aligned(self._coerce(other))
        if a.is_zero or b.is_zero:
            return FactoredFunction.zero(a.rank)
        counts: Counter = Counter()
        for f, m in a.factors + b.factors:
            counts[f] += m
        return FactoredFunction.build(a.rank, a.unit * b.unit, counts)

    __rmul__ = __mul__

    def inverse(self) -> "FactoredFunction":
        if self.is_zero:
            raise ZeroDenominator("The zero function has no inverse.")
        return FactoredFunction(self.rank, self.unit.inverse(), tuple((f, -m) for f, m in self.factors))

    def __truediv__(self, other) -> "FactoredFunction":
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other) -> "FactoredFunction":
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "FactoredFunction":
        if n == 0:
            return FactoredFunction.one(self.rank)
        if n < 0:
            return self.inverse() ** (-n)
        if self.is_zero:
            return self
        return FactoredFunction(self.rank, self.unit ** n, tuple((f, m * n) for f, m in self.factors))

    # --- Queries ---

    def multiplicity(self, factor: CycloFactor) -> int:
        return dict(self.factors).get(factor, 0)

    def is_v_only(self) -> bool:
        return self.is_zero or (is_zero_vector(self.unit.x) and all(f.is_v_only() for f, _ in self.factors))

    def is_constant(self) -> bool:
        return self.is_zero or (self.unit.vexp == 0 and is_zero_vector(self.unit.x)
                                and all(f.is_constant() for f, _ in self.factors))

    def magnitude(self) -> "FactoredFunction":
        """
        The absolute value of a real function of v alone, with the sign read off at v = 2.
        Raises ValueError when the function depends on the torus or is not real.
        """
        if self.is_zero:
            return self
        if not self.is_v_only():
            raise ValueError(f"magnitude needs a function of v alone, got {self}")
        try:
            value = self.numeric(2.0)
        except PoleAtValue as e:
            raise ValueError(f"Cannot read the sign of {self} at v = 2") from e
        if abs(value.imag) > REAL_TOLERANCE * abs(value):
            raise ValueError(f"magnitude needs a real function, got {self}")
        return self if value.real > 0 else self * FactoredFunction.scalar(-1)

    def substitute_v(self, eps: Rational) -> "FactoredFunction":
        """Replaces v by v^eps throughout."""
        eps = as_fraction(eps)
        if eps <= 0:
            raise ValueError(f"Substitution exponent must be positive, got {eps}")
        if self.is_zero:
            return self
        unit = Unit(self.unit.mag, self.unit.phase, self.unit.vexp * eps, self.unit.x)
        raw = [(f.phase, f.vexp * eps, f.x, m) for f, m in self.factors]
        return FactoredFunction.from_factors(raw, self.rank, unit)

    # --- Pullback and evaluation ---

    def _transport(self, matrix: Matrix, base: TorusPoint,
                   regularize: bool) -> Tuple["FactoredFunction", int]:
        rows = [tuple(int(c) for c in row) for row in matrix]
        if base.rank != self.rank:
            raise DimensionMismatch(f"Base point has rank {base.rank}, function has rank {self.rank}.")
        for row in rows:
            if len(row) != self.rank:
                raise DimensionMismatch(f"Matrix row {row} does not act on a rank-{self.rank} lattice.")
        target_rank = len(rows)
        if self.is_zero:
            return FactoredFunction.zero(target_rank), 0

        def image(x: Sequence[int]) -> Tuple[int, ...]:
            return tuple(sum(row[j] * x[j] for j in range(self.rank)) for row in rows)

        u = self.unit
        unit = Unit(u.mag, u.phase + dot(base.s, u.x), u.vexp + dot(base.y, u.x), image(u.x))
        counts: Counter = Counter()
        vanishing: List[Tuple[CycloFactor, int]] = []
        for f, m in self.factors:
            phase = f.phase + dot(base.s, f.x)
            vexp = f.vexp + dot(base.y, f.x)
            x = image(f.x)
            if is_zero_raw(phase, vexp, x):
                vanishing.append((f, m))
                continue
            pieces, compensator = canonicalize(phase, vexp, x)
            unit = unit * compensator ** m
            for piece in pieces:
                counts[piece] += m

        order = -sum(m for _, m in vanishing)
        if not regularize and vanishing:
            poles = [f for f, m in vanishing if m < 0]
            if poles:
                raise PoleAtPoint(f"Denominator factor vanishes identically at {base}.",
                                  factor=str(FactoredFunction(self.rank, Unit.one(self.rank), ((poles[0], 1),))))
            return FactoredFunction.zero(target_rank), order
        return FactoredFunction.build(target_rank, unit, counts), order

    def eval(self, point: TorusPoint) -> "FactoredFunction":
        """Evaluates at an exact point; the result is v-only."""
        if point.rank != self.rank:
            raise LatticeMismatch(f"Rank-{point.rank} point for a rank-{self.rank} function.")
        return self._transport((), point, regularize=False)[0]

    def pullback(self, matrix: Matrix, base: TorusPoint) -> "FactoredFunction":
        """theta_x -> base(x) theta_{Bx}, where B has one row per target coordinate."""
        return self._transport(matrix, base, regularize=False)[0]

    def regularized_restriction(self, matrix: Matrix, base: TorusPoint) -> Tuple["FactoredFunction", int]:
        """
        Pullback that omits the factors vanishing identically on the image, returning the
        remaining product and the order (pole count minus zero count, with multiplicity).
        """
        return self._transport(matrix, base, regularize=True)

    # --- Numerics ---

    def numeric(self, v0: float, point: Optional[TorusPoint] = None) -> complex:
        f = self.eval(point) if point is not None else self
        if f.is_zero:
            return 0j
        if not f.is_v_only():
            raise LatticeMismatch("Numeric evaluation needs a v-only function or a point.")
        v0 = float(v0)
        value = float(f.unit.mag) * v0 ** float(f.unit.vexp) * np.exp(2j * np.pi * float(f.unit.phase))
        if not f.factors:
            return complex(value)
        phases = np.array([float(c.phase) for c, _ in f.factors])
        exps = np.array([float(c.vexp) for c, _ in f.factors])
        mults = np.array([m for _, m in f.factors])
        terms = 1 - np.exp(2j * np.pi * phases) * v0 ** exps
        if np.any((np.abs(terms) < POLE_TOLERANCE) & (mults < 0)):
            raise PoleAtValue(f"Denominator vanishes at v = {v0}.", function=str(f))
        return complex(value * np.prod(terms ** mults))

    # --- Text and JSON ---

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        u = self.unit
        if u.phase in (0, HALF):
            parts = [fraction_str(u.signed_scalar())]
        else:
            parts = [fraction_str(u.mag), f"zeta^({fraction_str(u.phase)})"]
        if u.vexp:
            parts.append(f"v^({fraction_str(u.vexp)})")
        if not is_zero_vector(u.x):
            parts.append(_theta_text(u.x))
        for f, m in self.factors:
            parts.append(f"(1 - {' '.join(_monomial_text(f.phase, f.vexp, f.x))})^{m}")
        return " * ".join(parts)

    def to_dict(self) -> dict:
        return {
            "rank": self.rank,
            "zero": self.is_zero,
            "unit": {
                "mag": fraction_str(self.unit.mag),
                "phase": fraction_str(self.unit.phase),
                "vexp": fraction_str(self.unit.vexp),
                "x": list(self.unit.x),
            },
            "factors": [
                {"phase": fraction_str(f.phase), "vexp": fraction_str(f.vexp), "x": list(f.x), "mult": m}
                for f, m in self.factors
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "FactoredFunction":
        rank = int(data["rank"])
        if data.get("zero"):
            return cls.zero(rank)
        u = data.get("unit", {})
        unit = Unit(as_fraction(u.get("mag", "1")), as_fraction(u.get("phase", "0")),
                    as_fraction(u.get("vexp", "0")), tuple(u.get("x", [0] * rank)))
        raw = [(f["phase"], f["vexp"], tuple(f["x"]), int(f["mult"])) for f in data.get("factors", [])]
        return cls.from_factors([(as_fraction(p), as_fraction(k), x, m) for p, k, x, m in raw], rank, unit)


def _theta_text(x: Sequence[int]) -> str:
    return f"theta[{','.join(str(c) for c in x)}]"


def _monomial_text(phase: Fraction, vexp: Fraction, x: Sequence[int]) -> List[str]:
    parts = []
    if phase:
        parts.append(f"zeta^({fraction_str(phase)})")
    if vexp:
        parts.append(f"v^({fraction_str(vexp)})")
    if not is_zero_vector(x):
        parts.append(_theta_text(x))
    return parts


ZERO = FactoredFunction.zero(0)
ONE = FactoredFunction.one(0)


def ratio_class(a: FactoredFunction, b: FactoredFunction) -> RatioClass:
    """Classifies a/b as a rational monomial c*v^k, an irrational constant, or non-constant."""
    if b.is_zero:
        raise ZeroDenominator("Cannot classify a ratio with zero denominator.")
    if a.is_zero:
        return NonConstant("0")
    q = a / b
    if not is_zero_vector(q.unit.x) or any(not f.is_constant() for f, _ in q.factors):
        return NonConstant(str(q))
    value = _exact_rational(q.unit, q.factors)
    if value is None:
        return AlgebraicConstant(str(q))
    return RationalMonomial(value, q.unit.vexp)


def compose_transports(inner: Matrix, inner_base: TorusPoint,
                       outer: Matrix, outer_base: TorusPoint) -> Tuple[Tuple[Tuple[int, ...], ...], TorusPoint]:
    """
    Returns (M, base) such that pulling back along (inner, inner_base) and then along
    (outer, outer_base) equals pulling back along (M, base) once.
    """
    inner = [tuple(r) for r in inner]
    outer = [tuple(r) for r in outer]
    mid = len(inner)
    if outer_base.rank != mid:
        raise DimensionMismatch(f"Outer base has rank {outer_base.rank}, expected {mid}.")
    cols = inner_base.rank
    product = tuple(
        tuple(sum(outer[i][k] * inner[k][j] for k in range(mid)) for j in range(cols))
        for i in range(len(outer))
    )
    s = tuple(inner_base.s[j] + sum((inner[k][j] * outer_base.s[k] for k in range(mid)), Fraction(0))
              for j in range(cols))
    y = tuple(inner_base.y[j] + sum((inner[k][j] * outer_base.y[k] for k in range(mid)), Fraction(0))
              for j in range(cols))
    return product, TorusPoint(s, y)
