# src/hecke_spectra/algebra/units.py
"""
Monomials and cyclotomic-shape factors.

A Unit is the monomial ``mag * e^{2 pi i phase} * v^vexp * theta_x``; a CycloFactor is
``(1 - e^{2 pi i phase} v^vexp theta_x)`` kept in canonical position. TorusPoint lives here
as well because evaluating a character at a point produces a Unit.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, List, Sequence, Tuple, Union

from ..errors import LatticeMismatch, ZeroFactor

Rational = Union[int, Fraction, str]
Vector = Tuple[int, ...]

HALF = Fraction(1, 2)


def as_fraction(value: Rational) -> Fraction:
    """Parses ints, Fractions and "p/q" strings into a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError(f"Not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"Not an exact rational: {value!r}")
    raise ValueError(f"Not an exact rational: {value!r}")


def fraction_str(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def mod_one(value: Fraction) -> Fraction:
    return value - (value.numerator // value.denominator)


def content(x: Sequence[int]) -> int:
    return reduce(gcd, (abs(c) for c in x), 0)


def is_zero_vector(x: Sequence[int]) -> bool:
    return all(c == 0 for c in x)


def lex_negative(x: Sequence[int]) -> bool:
    for c in x:
        if c != 0:
            return c < 0
    return False


def dot(x: Sequence, y: Sequence):
    return sum((a * b for a, b in zip(x, y)), Fraction(0))


def mat_vec(matrix: Sequence[Sequence[int]], x: Sequence[int]) -> Vector:
    return tuple(sum(row[j] * x[j] for j in range(len(x))) for row in matrix)


def transpose_vec(matrix: Sequence[Sequence[int]], s: Sequence[Fraction], cols: int) -> Tuple[Fraction, ...]:
    """Computes matrix^T s for a matrix with len(s) rows and ``cols`` columns."""
    return tuple(sum((Fraction(matrix[i][j]) * s[i] for i in range(len(s))), Fraction(0)) for j in range(cols))


@dataclass(frozen=True, order=True)
class Unit:
    mag: Fraction
    phase: Fraction
    vexp: Fraction
    x: Vector

    def __post_init__(self):
        if self.mag <= 0:
            raise ValueError(f"Unit magnitude must be positive, got {self.mag}")
        object.__setattr__(self, "phase", mod_one(Fraction(self.phase)))
        object.__setattr__(self, "mag", Fraction(self.mag))
        object.__setattr__(self, "vexp", Fraction(self.vexp))
        object.__setattr__(self, "x", tuple(int(c) for c in self.x))

    @classmethod
    def one(cls, rank: int = 0) -> "Unit":
        return cls(Fraction(1), Fraction(0), Fraction(0), (0,) * rank)

    @classmethod
    def scalar(cls, value: Rational, rank: int = 0) -> "Unit":
        value = as_fraction(value)
        if value == 0:
            raise ValueError("A Unit cannot be zero.")
        return cls(abs(value), HALF if value < 0 else Fraction(0), Fraction(0), (0,) * rank)

    @classmethod
    def v_power(cls, k: Rational, rank: int = 0) -> "Unit":
        return cls(Fraction(1), Fraction(0), as_fraction(k), (0,) * rank)

    @property
    def rank(self) -> int:
        return len(self.x)

    def __mul__(self, other: "Unit") -> "Unit":
        if self.rank != other.rank:
            raise LatticeMismatch(f"Cannot multiply units on lattices of rank {self.rank} and {other.rank}.")
        return Unit(self.mag * other.mag, self.phase + other.phase, self.vexp + other.vexp,
                    tuple(a + b for a, b in zip(self.x, other.x)))

    def inverse(self) -> "Unit":
        return Unit(1 / self.mag, -self.phase, -self.vexp, tuple(-c for c in self.x))

    def __pow__(self, n: int) -> "Unit":
        return Unit(self.mag ** n, self.phase * n, self.vexp * n, tuple(c * n for c in self.x))

    def lifted(self, rank: int) -> "Unit":
        if self.rank == rank:
            return self
        if self.rank != 0:
            raise LatticeMismatch(f"Cannot lift a rank-{self.rank} unit to rank {rank}.")
        return Unit(self.mag, self.phase, self.vexp, (0,) * rank)

    def is_identity(self) -> bool:
        return self.mag == 1 and self.phase == 0 and self.vexp == 0 and is_zero_vector(self.x)

    def is_v_only(self) -> bool:
        return is_zero_vector(self.x)

    def signed_scalar(self) -> Fraction:
        """The rational value mag * e^{2 pi i phase}; only defined for phases 0 and 1/2."""
        if self.phase == 0:
            return self.mag
        if self.phase == HALF:
            return -self.mag
        raise ValueError(f"Unit phase {self.phase} is not a sign.")


@dataclass(frozen=True, order=True)
class CycloFactor:
    """The factor (1 - e^{2 pi i phase} v^vexp theta_x). Field order is the sort order."""
    x: Vector
    vexp: Fraction
    phase: Fraction

    @property
    def rank(self) -> int:
        return len(self.x)

    def is_v_only(self) -> bool:
        return is_zero_vector(self.x)

    def is_constant(self) -> bool:
        return self.is_v_only() and self.vexp == 0

    def lifted(self, rank: int) -> "CycloFactor":
        if self.rank == rank:
            return self
        if self.rank != 0:
            raise LatticeMismatch(f"Cannot lift a rank-{self.rank} factor to rank {rank}.")
        return CycloFactor((0,) * rank, self.vexp, self.phase)


def is_zero_raw(phase: Fraction, vexp: Fraction, x: Sequence[int]) -> bool:
    return is_zero_vector(x) and vexp == 0 and mod_one(phase) == 0


def canonicalize(phase: Rational, vexp: Rational, x: Sequence[int],
                 allow_zero: bool = False) -> Tuple[List[CycloFactor], Unit]:
    """
    Rewrites the raw factor (1 - e^{2 pi i phase} v^vexp theta_x) as a product of canonical
    factors times a compensating Unit.

    Returns ([], identity) for the zero factor when ``allow_zero`` is set; callers that allow
    it must check ``is_zero_raw`` themselves.
    """
    phase = mod_one(as_fraction(phase))
    vexp = as_fraction(vexp)
    x = tuple(int(c) for c in x)
    rank = len(x)
    compensator = Unit.one(rank)

    if is_zero_vector(x) and vexp == 0:
        if phase == 0:
            if allow_zero:
                return [], compensator
            raise ZeroFactor("The factor (1 - 1) is identically zero.")
        return [CycloFactor(x, vexp, phase)], compensator

    # (1 - u) = (-u)(1 - u^{-1})
    if lex_negative(x) or (is_zero_vector(x) and vexp < 0):
        compensator = Unit(Fraction(1), phase + HALF, vexp, x)
        phase, vexp, x = mod_one(-phase), -vexp, tuple(-c for c in x)

    if not is_zero_vector(x):
        g = content(x)
        if g == 1:
            return [CycloFactor(x, vexp, phase)], compensator
        base = tuple(c // g for c in x)
        pieces = [CycloFactor(base, vexp / g, mod_one((phase + j) / g)) for j in range(g)]
        return pieces, compensator

    # v-only: split into factors linear in v^{1/b}
    a, b = vexp.numerator, vexp.denominator
    pieces = [CycloFactor(x, Fraction(1, b), mod_one((phase + j) / a)) for j in range(a)]
    return pieces, compensator


@dataclass(frozen=True)
class TorusPoint:
    """
    An exact point of the torus Hom(X, C^x): theta_x evaluates to
    e^{2 pi i s.x} v^{y.x}. Phases are kept reduced mod 1.
    """
    s: Tuple[Fraction, ...]
    y: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.s) != len(self.y):
            raise LatticeMismatch(f"Point has {len(self.s)} phases but {len(self.y)} exponents.")
        object.__setattr__(self, "s", tuple(mod_one(as_fraction(c)) for c in self.s))
        object.__setattr__(self, "y", tuple(as_fraction(c) for c in self.y))

    @classmethod
    def trivial(cls, rank: int) -> "TorusPoint":
        return cls((Fraction(0),) * rank, (Fraction(0),) * rank)

    @classmethod
    def from_strings(cls, s: Iterable[Rational], y: Iterable[Rational]) -> "TorusPoint":
        return cls(tuple(as_fraction(c) for c in s), tuple(as_fraction(c) for c in y))

    @property
    def rank(self) -> int:
        return len(self.s)

    def value(self, x: Sequence[int]) -> Unit:
        """theta_x at this point, as a rank-0 Unit."""
        if len(x) != self.rank:
            raise LatticeMismatch(f"Character of rank {len(x)} evaluated at a rank-{self.rank} point.")
        return Unit(Fraction(1), dot(self.s, x), dot(self.y, x), ())

    def scaled(self, eps: Rational) -> "TorusPoint":
        eps = as_fraction(eps)
        return TorusPoint(self.s, tuple(eps * c for c in self.y))

    def twisted(self, phases: Sequence[Fraction]) -> "TorusPoint":
        return TorusPoint(tuple(a + b for a, b in zip(self.s, phases)), self.y)

    def is_real(self) -> bool:
        return all(c == 0 for c in self.s)

    def key(self) -> Tuple:
        return (self.s, self.y)

    def to_dict(self) -> dict:
        return {"s": [fraction_str(c) for c in self.s], "y": [fraction_str(c) for c in self.y]}

    @classmethod
    def from_dict(cls, data: dict) -> "TorusPoint":
        return cls.from_strings(data.get("s", []), data.get("y", []))

    def __str__(self) -> str:
        s = ", ".join(fraction_str(c) for c in self.s)
        y = ", ".join(fraction_str(c) for c in self.y)
        return f"(s=[{s}], y=[{y}])"
