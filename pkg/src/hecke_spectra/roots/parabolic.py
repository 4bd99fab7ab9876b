# src/hecke_spectra/roots/parabolic.py
"""
Standard parabolic sub-data and the splitting T = T^L . T_L.

For a subset J of simple indices: T^L is the subtorus with cocharacters Y^L = {y : <alpha_j, y> = 0},
T_L is the subtorus generated by the coroots of J, and K_L = T^L n T_L is the finite group
X / ((X n Sigma_L^perp) + (X n Q Sigma_L)).
"""
from dataclasses import dataclass
from functools import lru_cache
from math import prod
from typing import Sequence, Tuple

from ..errors import InvalidParameter
from .lattice import IntMatrix, IntVector, integer_kernel, smith_invariants
from .root_datum import RootDatum


@dataclass(frozen=True)
class ParabolicSplit:
    subset: Tuple[int, ...]
    levi: RootDatum
    pi: IntMatrix
    x_basis: Tuple[IntVector, ...]
    coroot_basis: Tuple[IntVector, ...]
    k_invariants: Tuple[int, ...]

    @property
    def k_order(self) -> int:
        return prod(self.k_invariants)

    @property
    def dim(self) -> int:
        """Dimension of T^L (the free directions of a coset)."""
        return len(self.pi)

    @property
    def codim(self) -> int:
        return len(self.subset)

    def restrict_character(self, x: Sequence[int]) -> IntVector:
        """theta_x restricted to T^L, in the basis dual to ``pi``."""
        return tuple(sum(r[j] * x[j] for j in range(len(x))) for r in self.pi)


@lru_cache(maxsize=256)
def parabolic(rd: RootDatum, subset: Tuple[int, ...]) -> ParabolicSplit:
    subset = tuple(sorted(set(subset)))
    for j in subset:
        if not 0 <= j < rd.semisimple_rank:
            raise InvalidParameter(f"{j} is not a simple index of {rd.name}.")
    n = rd.rank
    roots_j = [rd.simple_roots[j] for j in subset]
    coroots_j = [rd.simple_coroots[j] for j in subset]
    levi = RootDatum.from_simple(f"{rd.name}[{','.join(map(str, subset))}]", n, roots_j, coroots_j)

    pi = tuple(integer_kernel(roots_j, n))
    x_basis = tuple(integer_kernel(pi, n))
    perp = integer_kernel(coroots_j, n)
    coroot_basis = tuple(integer_kernel(perp, n))
    invariants = smith_invariants(list(perp) + list(x_basis), n)
    return ParabolicSplit(subset, levi, pi, x_basis, coroot_basis, invariants)
