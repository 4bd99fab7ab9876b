# src/hecke_spectra/langlands/parameters.py
"""
Split unramified Langlands parameters as (torsion semisimple part, SL_2 grading).

The Frobenius eigenvalue on the root space g_alpha is e^{2 pi i s(alpha)} v^{<alpha, h>}; the
SL_2 weight of g_alpha is <alpha, h>.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Optional, Sequence, Tuple

from ..algebra.units import Rational, TorusPoint, as_fraction, dot, fraction_str, mod_one
from ..errors import InvalidParameter, NonIntegralGrading
from ..roots.parabolic import parabolic
from ..roots.root_datum import RootDatum, pair
from ..roots.weyl import WeylElement

_logger = logging.getLogger(__name__)

Weights = Counter  # (weight, phase) -> dimension


@dataclass(frozen=True)
class UnramifiedParam:
    dual: RootDatum
    s_phases: Tuple[Fraction, ...]
    h: Tuple[int, ...]
    levi: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if len(self.s_phases) != self.dual.rank or len(self.h) != self.dual.rank:
            raise InvalidParameter(
                f"Parameter on {self.dual.name} needs {self.dual.rank} phases and grading entries.")
        object.__setattr__(self, "s_phases", tuple(mod_one(as_fraction(c)) for c in self.s_phases))
        try:
            object.__setattr__(self, "h", tuple(_as_int(c) for c in self.h))
        except ValueError as e:
            raise NonIntegralGrading(str(e), h=[str(c) for c in self.h])
        if self.levi is not None:
            levi = tuple(sorted(set(self.levi)))
            if any(not 0 <= j < self.dual.semisimple_rank for j in levi):
                raise InvalidParameter(f"Levi {list(levi)} is not a set of simple indices of {self.dual.name}.")
            object.__setattr__(self, "levi", levi)

    @classmethod
    def create(cls, dual: RootDatum, s_phases: Iterable[Rational], h: Iterable[Rational],
               levi: Optional[Sequence[int]] = None) -> "UnramifiedParam":
        return cls(dual, tuple(as_fraction(c) for c in s_phases), tuple(as_fraction(c) for c in h),
                   None if levi is None else tuple(levi))

    def phase(self, root: Sequence[int]) -> Fraction:
        return mod_one(dot(self.s_phases, root))

    def weight(self, root: Sequence[int]) -> int:
        return pair(root, self.h)

    def as_point(self) -> TorusPoint:
        return TorusPoint(self.s_phases, tuple(Fraction(c) for c in self.h))

    def conjugate(self, w: WeylElement) -> "UnramifiedParam":
        image = w.act_on_point(self.as_point())
        return UnramifiedParam(self.dual, image.s, tuple(image.y), self.levi)

    def to_dict(self) -> dict:
        return {
            "dual": self.dual.name,
            "s_phases": [fraction_str(c) for c in self.s_phases],
            "h": list(self.h),
            "levi": None if self.levi is None else list(self.levi),
        }


def _as_int(value) -> int:
    value = as_fraction(value) if not isinstance(value, int) else Fraction(value)
    if value.denominator != 1:
        raise ValueError(f"Grading entry {value} is not an integer.")
    return int(value)


@dataclass(frozen=True)
class IsotypicTable:
    """Multiplicities m_n(zeta) of V_n (x) Sym^n in each Frobenius eigenphase zeta."""
    entries: Tuple[Tuple[Tuple[int, Fraction], int], ...]

    def multiplicity(self, n: int, zeta: Rational = 0) -> int:
        return dict(self.entries).get((n, mod_one(as_fraction(zeta))), 0)

    def dimension(self) -> int:
        return sum((n + 1) * m for (n, _), m in self.entries)

    def as_dict(self) -> Dict[Tuple[int, Fraction], int]:
        return dict(self.entries)

    def to_dict(self) -> dict:
        return {"entries": [{"n": n, "zeta": fraction_str(z), "m": m} for (n, z), m in self.entries],
                "dimension": self.dimension()}


@dataclass(frozen=True)
class EnhancementData:
    dim_rho: int = 1
    s_nat_card: int = 1

    def __post_init__(self):
        if self.dim_rho < 1 or self.s_nat_card < 1:
            raise InvalidParameter(f"Enhancement constants must be positive, got {self.dim_rho}, {self.s_nat_card}.")

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.dim_rho, self.s_nat_card)


def table_from_weights(weights: Weights) -> IsotypicTable:
    """
    m_n(zeta) = dim g_n^zeta - dim g_{n+2}^zeta for n >= 0. Raises InvalidParameter when the
    weights in some eigenphase are not symmetric or a multiplicity comes out negative.
    """
    entries = {}
    for zeta in sorted(set(z for _, z in weights)):
        graded = {k: d for (k, z), d in weights.items() if z == zeta and d}
        for k, d in graded.items():
            if graded.get(-k, 0) != d:
                raise InvalidParameter(
                    f"Weights in eigenphase {zeta} are not symmetric: dim g_{k} = {d}, dim g_{-k} = {graded.get(-k, 0)}.")
        top = max(graded) if graded else 0
        for n in range(0, top + 1):
            m = graded.get(n, 0) - graded.get(n + 2, 0)
            if m < 0:
                raise InvalidParameter(f"Negative multiplicity m_{n}({zeta}) = {m}: the grading is not an sl2 grading.")
            if m:
                entries[(n, zeta)] = m
    return IsotypicTable(tuple(sorted(entries.items())))


def root_weights(p: UnramifiedParam, roots: Iterable[Sequence[int]]) -> Weights:
    weights: Weights = Counter()
    for root in roots:
        weights[(p.weight(root), p.phase(root))] += 1
    return weights


def sl2_isotypics(p: UnramifiedParam) -> IsotypicTable:
    """Isotypic table of the adjoint action on g/z: all root spaces plus the Cartan at (0, 0)."""
    weights = root_weights(p, p.dual.roots)
    if p.dual.semisimple_rank:
        weights[(0, Fraction(0))] += p.dual.semisimple_rank
    return table_from_weights(weights)


def relative_isotypics(p: UnramifiedParam) -> IsotypicTable:
    """Isotypic table on the root spaces outside the Levi of ``p``."""
    if p.levi is None:
        raise InvalidParameter("A relative table needs a Levi subset on the parameter.")
    inside = set(parabolic(p.dual, p.levi).levi.roots)
    return table_from_weights(root_weights(p, [r for r in p.dual.roots if r not in inside]))


def param_from_residual_point(dual, point: TorusPoint, levi: Optional[Sequence[int]] = None) -> UnramifiedParam:
    """
    s := phases of the point, h := its v-exponents (which must be integral). ``dual`` is the
    RootDatum of the parameter torus or a HeckeSpec carrying it.
    """
    dual = getattr(dual, "rd", dual)
    if point.rank != dual.rank:
        raise InvalidParameter(f"Point of rank {point.rank} on a rank-{dual.rank} datum.")
    if any(c.denominator != 1 for c in point.y):
        raise NonIntegralGrading(f"{point} has non-integral exponents; it defines no sl2 grading.",
                                 y=[fraction_str(c) for c in point.y])
    return UnramifiedParam(dual, point.s, tuple(int(c) for c in point.y), None if levi is None else tuple(levi))


def residual_point_from_param(p: UnramifiedParam) -> TorusPoint:
    return p.as_point()
