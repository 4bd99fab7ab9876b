# src/hecke_spectra/stm/spectral_map.py
"""
Spectral transfer maps as torus morphisms T_1 -> L = r_L T^L.

A map is stored on characters: theta_u for u in X^L pulls back to base(u) theta_{B u}, so B
has one row per source coordinate and one column per T^L coordinate. The point r_L of the
coset is applied first; ``base`` is an additional twist inside T^L.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from ..algebra.factored import compose_transports
from ..algebra.units import TorusPoint, fraction_str
from ..errors import DimensionMismatch, IncompatibleMaps, InvalidParameter
from ..roots.lattice import IntMatrix, determinant, identity, transpose
from ..roots.parabolic import parabolic
from ..roots.weyl import WeylElement, weyl_group
from ..spectral.hecke_spec import HeckeSpec
from ..spectral.residual import Certificate, ResidualCoset

_logger = logging.getLogger(__name__)


def full_torus(spec: HeckeSpec) -> ResidualCoset:
    """The coset T itself (empty parabolic subset)."""
    return ResidualCoset((), TorusPoint.trivial(spec.rank), Certificate(0, 0, 0), ((), ((), ())))


@dataclass(frozen=True)
class SpectralMap:
    source: HeckeSpec
    target: HeckeSpec
    coset: ResidualCoset
    matrix: IntMatrix
    base: TorusPoint

    def __post_init__(self):
        object.__setattr__(self, "matrix", tuple(tuple(int(c) for c in row) for row in self.matrix))
        if self.coset.point.rank != self.target.rank:
            raise DimensionMismatch(
                f"Coset point of rank {self.coset.point.rank} on the rank-{self.target.rank} target {self.target.name}.")
        if self.coset.dim != self.source.rank:
            raise DimensionMismatch(
                f"A coset of dimension {self.coset.dim} cannot receive the rank-{self.source.rank} torus of {self.source.name}.",
                coset_dim=self.coset.dim, source_rank=self.source.rank)
        if len(self.matrix) != self.source.rank or any(len(row) != self.coset.dim for row in self.matrix):
            raise DimensionMismatch(f"B must be {self.source.rank} x {self.coset.dim}, got {self.matrix}.")
        if self.base.rank != self.coset.dim:
            raise DimensionMismatch(f"Base twist of rank {self.base.rank} on a {self.coset.dim}-dimensional coset.")
        if determinant(self.matrix) == 0:
            raise DimensionMismatch(f"B = {self.matrix} is singular; the map has infinite fibres.")

    @classmethod
    def identity(cls, spec: HeckeSpec) -> "SpectralMap":
        return cls(spec, spec, full_torus(spec), identity(spec.rank), TorusPoint.trivial(spec.rank))

    @classmethod
    def onto_point(cls, source: HeckeSpec, target: HeckeSpec, coset: ResidualCoset) -> "SpectralMap":
        """The map from a rank-0 source onto a residual point of the target."""
        if source.rank != 0:
            raise InvalidParameter(f"Only a rank-0 source maps onto a point; {source.name} has rank {source.rank}.")
        return cls(source, target, coset, (), TorusPoint((), ()))

    @property
    def is_onto_full_torus(self) -> bool:
        return self.coset.subset == ()

    def total_matrix(self) -> IntMatrix:
        """M = B pi: characters of the whole target torus pulled back to the source."""
        pi = parabolic(self.target.rd, self.coset.subset).pi
        cols = self.target.rank
        return tuple(
            tuple(sum(row[k] * pi[k][j] for k in range(len(pi))) for j in range(cols))
            for row in self.matrix
        )

    def total_base(self) -> TorusPoint:
        """The point b of T with theta_x(Psi(t)) = b(x) t(M x)."""
        pi = parabolic(self.target.rd, self.coset.subset).pi
        n = self.target.rank
        s = tuple(self.coset.point.s[j] + sum((pi[i][j] * self.base.s[i] for i in range(len(pi))), Fraction(0))
                  for j in range(n))
        y = tuple(self.coset.point.y[j] + sum((pi[i][j] * self.base.y[i] for i in range(len(pi))), Fraction(0))
                  for j in range(n))
        return TorusPoint(s, y)

    def conjugated(self, w: WeylElement) -> "SpectralMap":
        """w o Psi for a target Weyl element; only maps onto the full torus move."""
        if not self.is_onto_full_torus:
            raise InvalidParameter("Weyl conjugation is implemented for maps onto the full torus only.")
        w_inverse = transpose(w.inverse_transpose)
        matrix = tuple(
            tuple(sum(row[k] * w_inverse[k][j] for k in range(len(row))) for j in range(len(row)))
            for row in self.matrix
        )
        return SpectralMap(self.source, self.target, self.coset, matrix, w.act_on_point(self.base))

    def canonical(self) -> "SpectralMap":
        """The W_0-equivalent map with the smallest (B, base); points are already canonical."""
        if not self.is_onto_full_torus or self.target.rank == 0:
            return self
        images = [self.conjugated(w) for w in weyl_group(self.target.rd, self.target.weyl_bound)]
        return min(images, key=lambda m: (m.matrix, m.base.key()))

    def key(self) -> Tuple:
        return (self.coset.key, self.matrix, self.base.key())

    def to_dict(self) -> dict:
        return {
            "source": self.source.name,
            "target": self.target.name,
            "coset": self.coset.to_dict(),
            "B": [list(row) for row in self.matrix],
            "base": self.base.to_dict(),
        }


def is_equivalent(a: SpectralMap, b: SpectralMap) -> bool:
    if a.source != b.source or a.target != b.target or a.coset.key != b.coset.key:
        return False
    return a.canonical().key() == b.canonical().key()


def compose(outer: SpectralMap, inner: SpectralMap) -> SpectralMap:
    """outer o inner; ``inner`` must land on the full torus of ``outer.source``."""
    if inner.target != outer.source:
        raise IncompatibleMaps(f"Inner map lands in {inner.target.name}, outer map starts at {outer.source.name}.")
    if not inner.is_onto_full_torus:
        raise IncompatibleMaps("The inner map must land on the full torus of the middle algebra.",
                               coset=inner.coset.to_dict())
    matrix, base = compose_transports(outer.matrix, outer.base, inner.matrix, inner.base)
    _logger.debug("Composed %s -> %s -> %s", inner.source.name, inner.target.name, outer.target.name)
    return SpectralMap(inner.source, outer.target, outer.coset, matrix, base)


def matrix_str(matrix: IntMatrix) -> str:
    return "[" + "; ".join(" ".join(str(c) for c in row) for row in matrix) + "]"


def describe(m: SpectralMap) -> str:
    phases = ", ".join(fraction_str(c) for c in m.base.s)
    return (f"{m.source.name} -> {m.target.name} on {list(m.coset.subset)} at {m.coset.point}, "
            f"B = {matrix_str(m.matrix)}, twist = [{phases}]")
