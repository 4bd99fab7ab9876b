# src/hecke_spectra/roots/weyl.py
"""Finite Weyl groups by breadth-first enumeration of their integer matrices on X."""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Dict, List, Sequence, Tuple

import sympy

from ..algebra.unipoly import UniPoly
from ..algebra.units import TorusPoint
from ..errors import GroupTooLarge
from .lattice import IntMatrix, identity, mat_mul, mat_vec
from .root_datum import HeckeParams, RootDatum

_logger = logging.getLogger(__name__)

DEFAULT_WEYL_BOUND = 100000


@dataclass(frozen=True)
class WeylElement:
    matrix: IntMatrix
    length: int
    word: Tuple[int, ...]

    def act(self, x: Sequence[int]) -> Tuple[int, ...]:
        return mat_vec(self.matrix, x)

    @cached_property
    def inverse_transpose(self) -> IntMatrix:
        inv = sympy.Matrix([list(r) for r in self.matrix]).inv()
        return tuple(tuple(int(inv[j, i]) for j in range(inv.rows)) for i in range(inv.cols))

    def act_on_point(self, point: TorusPoint) -> TorusPoint:
        """The point r' with r'(wx) = r(x), i.e. y' = (w^{-1})^T y."""
        n = point.rank
        inv_t = self.inverse_transpose
        s = tuple(sum((inv_t[i][j] * point.s[j] for j in range(n)), Fraction(0)) for i in range(n))
        y = tuple(sum((inv_t[i][j] * point.y[j] for j in range(n)), Fraction(0)) for i in range(n))
        return TorusPoint(s, y)


def reflection_matrix(root: Sequence[int], coroot: Sequence[int]) -> IntMatrix:
    """x -> x - <x, coroot> root, as a matrix on column vectors."""
    n = len(root)
    return tuple(tuple((1 if i == j else 0) - root[i] * coroot[j] for j in range(n)) for i in range(n))


@lru_cache(maxsize=64)
def weyl_group(rd: RootDatum, bound: int = DEFAULT_WEYL_BOUND) -> Tuple[WeylElement, ...]:
    """
    All elements of W_0, sorted by (length, matrix). Raises GroupTooLarge once more than
    ``bound`` elements have been found.
    """
    generators = [reflection_matrix(a, c) for a, c in zip(rd.simple_roots, rd.simple_coroots)]
    positive = rd.positive_roots()
    positive_set = set(positive)

    start = identity(rd.rank)
    words: Dict[IntMatrix, Tuple[int, ...]] = {start: ()}
    frontier = [start]
    while frontier:
        next_frontier = []
        for w in frontier:
            for i, s in enumerate(generators):
                ws = mat_mul(w, s, rd.rank)
                if ws in words:
                    continue
                words[ws] = words[w] + (i,)
                next_frontier.append(ws)
                if len(words) > bound:
                    raise GroupTooLarge(f"W_0 of {rd.name} has more than {bound} elements.", bound=bound)
        frontier = next_frontier

    elements = []
    for m, word in words.items():
        length = sum(1 for r in positive if mat_vec(m, r) not in positive_set)
        elements.append(WeylElement(m, length, word))
    elements.sort(key=lambda e: (e.length, e.matrix))
    _logger.debug("Enumerated %d Weyl group elements for %s", len(elements), rd.name)
    return tuple(elements)


def longest_element(rd: RootDatum, bound: int = DEFAULT_WEYL_BOUND) -> WeylElement:
    return weyl_group(rd, bound)[-1]


def word_weight(rd: RootDatum, params: HeckeParams, word: Sequence[int]) -> Fraction:
    """Sum of (k_plus + k_minus) over the simple reflections of a reduced word."""
    total = Fraction(0)
    for i in word:
        kp, km = params.for_root(rd, rd.simple_roots[i])
        total += kp + km
    return total


def poincare_q(rd: RootDatum, params: HeckeParams, bound: int = DEFAULT_WEYL_BOUND) -> UniPoly:
    """q(W_0) = sum over w of q(w), with q(s_i) = v^{k_plus + k_minus} on the reflection's orbit."""
    terms: Dict[Fraction, Fraction] = {}
    for w in weyl_group(rd, bound):
        e = word_weight(rd, params, w.word)
        terms[e] = terms.get(e, Fraction(0)) + 1
    return UniPoly.from_dict(terms, "v")


def longest_weight(rd: RootDatum, params: HeckeParams) -> Fraction:
    """Sum of (k_plus + k_minus) over the positive roots: the exponent of q(w_0)."""
    total = Fraction(0)
    for root in rd.positive_roots():
        kp, km = params.for_root(rd, root)
        total += kp + km
    return total


def orbit(rd: RootDatum, point: TorusPoint, bound: int = DEFAULT_WEYL_BOUND) -> List[TorusPoint]:
    seen = {}
    for w in weyl_group(rd, bound):
        image = w.act_on_point(point)
        seen.setdefault(image.key(), image)
    return sorted(seen.values(), key=lambda p: p.key())


def orbit_key(rd: RootDatum, point: TorusPoint, bound: int = DEFAULT_WEYL_BOUND) -> Tuple:
    """Canonical representative key of the W_0-orbit of a point."""
    return min(w.act_on_point(point).key() for w in weyl_group(rd, bound))
