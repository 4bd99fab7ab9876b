# src/hecke_spectra/roots/root_datum.py
"""
Based root data on Z^rank.

X and Y are both Z^rank with the standard dot product as pairing. A datum is generated from
its simple roots and simple coroots; the remaining roots, their coroots and their expansions
in the simple roots come from closing under the simple reflections.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from ..algebra.units import Rational, as_fraction, fraction_str
from ..errors import InternalInvariantViolation, InvalidParameter, NotARoot
from .lattice import IntMatrix, IntVector

_logger = logging.getLogger(__name__)


def pair(x: Sequence[int], y: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(x, y))


@dataclass(frozen=True)
class RootDatum:
    name: str
    rank: int
    simple_roots: Tuple[IntVector, ...]
    simple_coroots: Tuple[IntVector, ...]
    roots: Tuple[IntVector, ...] = field(default=(), compare=False)
    coroots: Tuple[IntVector, ...] = field(default=(), compare=False)
    coefficients: Tuple[IntVector, ...] = field(default=(), compare=False)
    orbit_labels: Tuple[int, ...] = field(default=(), compare=False)

    @classmethod
    def from_simple(cls, name: str, rank: int, simple_roots: Sequence[Sequence[int]],
                    simple_coroots: Sequence[Sequence[int]]) -> "RootDatum":
        simple_roots = tuple(tuple(int(c) for c in a) for a in simple_roots)
        simple_coroots = tuple(tuple(int(c) for c in a) for a in simple_coroots)
        if len(simple_roots) != len(simple_coroots):
            raise InvalidParameter(f"{name}: {len(simple_roots)} simple roots but {len(simple_coroots)} coroots.")
        for a in simple_roots + simple_coroots:
            if len(a) != rank:
                raise InvalidParameter(f"{name}: vector {a} does not have length {rank}.")
        for i, (a, c) in enumerate(zip(simple_roots, simple_coroots)):
            if pair(a, c) != 2:
                raise InvalidParameter(f"{name}: <alpha_{i}, alpha_{i}^v> = {pair(a, c)}, expected 2.")

        roots, coroots, coefficients, labels = _close_under_reflections(simple_roots, simple_coroots)
        # positive roots first, each half by height
        order = sorted(range(len(roots)),
                       key=lambda i: (_is_negative(coefficients[i]), abs(sum(coefficients[i])), roots[i]))
        datum = cls(
            name=name,
            rank=rank,
            simple_roots=simple_roots,
            simple_coroots=simple_coroots,
            roots=tuple(roots[i] for i in order),
            coroots=tuple(coroots[i] for i in order),
            coefficients=tuple(coefficients[i] for i in order),
            orbit_labels=tuple(labels[i] for i in order),
        )
        datum._check()
        return datum

    # --- Structure ---

    @property
    def semisimple_rank(self) -> int:
        return len(self.simple_roots)

    @property
    def cartan(self) -> IntMatrix:
        return tuple(tuple(pair(a, c) for c in self.simple_coroots) for a in self.simple_roots)

    def positive_indices(self) -> List[int]:
        return [i for i, c in enumerate(self.coefficients) if not _is_negative(c)]

    def positive_roots(self) -> List[IntVector]:
        return [self.roots[i] for i in self.positive_indices()]

    def root_index(self, root: Sequence[int]) -> int:
        try:
            return self._index()[tuple(root)]
        except KeyError:
            raise NotARoot(f"{tuple(root)} is not a root of {self.name}.")

    def _index(self) -> Dict[IntVector, int]:
        cached = self.__dict__.get("_root_index")
        if cached is None:
            cached = {r: i for i, r in enumerate(self.roots)}
            object.__setattr__(self, "_root_index", cached)
        return cached

    def is_positive(self, root: Sequence[int]) -> bool:
        return not _is_negative(self.coefficients[self.root_index(root)])

    def coroot_of(self, root: Sequence[int]) -> IntVector:
        return self.coroots[self.root_index(root)]

    def orbit_of(self, root: Sequence[int]) -> int:
        """Smallest simple index in the W_0-orbit of the root."""
        return self.orbit_labels[self.root_index(root)]

    def orbit_representatives(self) -> List[int]:
        return sorted(set(self.orbit_labels[i] for i in range(len(self.roots))))

    def doubled_coroot_orbits(self) -> List[int]:
        """Orbits whose coroots all lie in 2Y; only these may carry a second parameter."""
        reps = []
        for rep in self.orbit_representatives():
            members = [i for i, label in enumerate(self.orbit_labels) if label == rep]
            if all(c % 2 == 0 for i in members for c in self.coroots[i]):
                reps.append(rep)
        return reps

    def highest_root(self) -> Optional[IntVector]:
        """Highest root of an irreducible datum (largest height, long)."""
        if not self.roots:
            return None
        best = max(self.positive_indices(), key=lambda i: (sum(self.coefficients[i]), self.coefficients[i]))
        return self.roots[best]

    def marks(self) -> Tuple[int, ...]:
        top = self.highest_root()
        if top is None:
            return ()
        return self.coefficients[self.root_index(top)]

    def _check(self) -> None:
        roots = set(self.roots)
        for r, c in zip(self.roots, self.coroots):
            if pair(r, c) != 2:
                raise InternalInvariantViolation(f"{self.name}: <{r}, {c}> != 2")
            if tuple(-a for a in r) not in roots:
                raise InternalInvariantViolation(f"{self.name}: root set not closed under negation at {r}")
        for coeffs in self.coefficients:
            if not (all(a >= 0 for a in coeffs) or all(a <= 0 for a in coeffs)):
                raise InternalInvariantViolation(f"{self.name}: mixed-sign root expansion {coeffs}")

    # --- Serialization ---

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "rank": self.rank,
            "simple_roots": [list(a) for a in self.simple_roots],
            "simple_coroots": [list(a) for a in self.simple_coroots],
            "roots": [list(a) for a in self.roots],
            "coroots": [list(a) for a in self.coroots],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "RootDatum":
        return cls.from_simple(data.get("name", "custom"), int(data["rank"]),
                               data.get("simple_roots", []), data.get("simple_coroots", []))


def _is_negative(coeffs: Sequence[int]) -> bool:
    return any(c < 0 for c in coeffs)


def _close_under_reflections(simple_roots, simple_coroots):
    n_simple = len(simple_roots)
    parent = list(range(n_simple))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n_simple):
        for j in range(i + 1, n_simple):
            cij, cji = pair(simple_roots[i], simple_coroots[j]), pair(simple_roots[j], simple_coroots[i])
            if cij == cji == -1:
                ri, rj = find(i), find(j)
                parent[max(ri, rj)] = min(ri, rj)

    seen: Dict[IntVector, int] = {}
    roots: List[IntVector] = []
    coroots: List[IntVector] = []
    coefficients: List[IntVector] = []
    origins: List[int] = []
    frontier = []
    for i in range(n_simple):
        unit = tuple(1 if k == i else 0 for k in range(n_simple))
        frontier.append((simple_roots[i], simple_coroots[i], unit, i))
    while frontier:
        next_frontier = []
        for root, coroot, coeffs, origin in frontier:
            if root in seen:
                continue
            seen[root] = len(roots)
            roots.append(root)
            coroots.append(coroot)
            coefficients.append(coeffs)
            origins.append(origin)
            for j in range(n_simple):
                a, c = simple_roots[j], simple_coroots[j]
                n = pair(root, c)
                m = pair(a, coroot)
                new_root = tuple(r - n * x for r, x in zip(root, a))
                new_coroot = tuple(r - m * x for r, x in zip(coroot, c))
                new_coeffs = tuple(k - (n if idx == j else 0) for idx, k in enumerate(coeffs))
                if new_root not in seen:
                    next_frontier.append((new_root, new_coroot, new_coeffs, origin))
        frontier = next_frontier

    labels = [min(k for k in range(n_simple) if find(k) == find(o)) for o in origins]
    return roots, coroots, coefficients, labels


@dataclass(frozen=True)
class HeckeParams:
    """
    Parameter exponents per W_0-orbit of roots: q_alpha^+ = v^{k_plus}, q_alpha^- = v^{k_minus}.
    Orbits are keyed by their smallest simple index.
    """
    k_plus: Tuple[Tuple[int, Fraction], ...]
    k_minus: Tuple[Tuple[int, Fraction], ...] = ()

    @classmethod
    def create(cls, rd: RootDatum, k_plus: Dict[int, Rational],
               k_minus: Optional[Dict[int, Rational]] = None) -> "HeckeParams":
        reps = rd.orbit_representatives()
        plus = {int(k): as_fraction(v) for k, v in k_plus.items()}
        minus = {int(k): as_fraction(v) for k, v in (k_minus or {}).items()}
        for key in list(plus) + list(minus):
            if key not in reps:
                raise InvalidParameter(f"{key} is not an orbit representative of {rd.name}; expected one of {reps}.")
        missing = [r for r in reps if r not in plus]
        if missing:
            raise InvalidParameter(f"No k_plus given for orbits {missing} of {rd.name}.")
        allowed = set(rd.doubled_coroot_orbits())
        for key, value in minus.items():
            if value != 0 and key not in allowed:
                raise InvalidParameter(
                    f"k_minus must vanish on orbit {key} of {rd.name}: its coroots are not in 2Y.")
        return cls(tuple(sorted(plus.items())), tuple(sorted((k, v) for k, v in minus.items() if v != 0)))

    @classmethod
    def equal(cls, rd: RootDatum, k_plus: Rational = 2) -> "HeckeParams":
        return cls.create(rd, {rep: k_plus for rep in rd.orbit_representatives()})

    def plus(self, orbit: int) -> Fraction:
        return dict(self.k_plus).get(orbit, Fraction(0))

    def minus(self, orbit: int) -> Fraction:
        return dict(self.k_minus).get(orbit, Fraction(0))

    def for_root(self, rd: RootDatum, root: Sequence[int]) -> Tuple[Fraction, Fraction]:
        orbit = rd.orbit_of(root)
        return self.plus(orbit), self.minus(orbit)

    def scaled(self, eps: Rational) -> "HeckeParams":
        eps = as_fraction(eps)
        return HeckeParams(tuple((k, v * eps) for k, v in self.k_plus),
                           tuple((k, v * eps) for k, v in self.k_minus))

    def to_dict(self) -> dict:
        return {
            "k_plus": {str(k): fraction_str(v) for k, v in self.k_plus},
            "k_minus": {str(k): fraction_str(v) for k, v in self.k_minus},
        }
