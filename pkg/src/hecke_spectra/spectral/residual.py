# src/hecke_spectra/spectral/residual.py
"""
Residual cosets and points, their certificates, regularized residues and formal degrees.

A coset L = r_L T^L is indexed by a subset J of simple roots and is determined by the values
of r_L on the saturated lattice E = X n Q Sigma_J. Candidates come from solving
beta_i(r) = +-v^{+-k} for every independent choice of positive roots of the Levi; phases run
over all solutions modulo the lattice spanned by the chosen roots. Candidates are reduced to
a canonical representative of their W_L-orbit before the residue test.
"""
import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from tqdm import tqdm

from ..algebra.factored import FactoredFunction
from ..algebra.units import HALF, Rational, TorusPoint, as_fraction, mod_one
from ..errors import InternalInvariantViolation, InvalidParameter, NotResidual, RankTooLarge
from ..roots.lattice import determinant, inverse_rational
from ..roots.parabolic import ParabolicSplit, parabolic
from ..roots.presets import MAX_RANK
from ..roots.root_datum import pair
from ..roots.weyl import weyl_group
from ..utils.workers import check_threads, map_chunks
from .hecke_spec import HeckeSpec
from .mu import mu_factors

_logger = logging.getLogger(__name__)

Subset = Tuple[int, ...]


# --- Certificates ---

@dataclass(frozen=True)
class Certificate:
    poles: int
    zeros: int
    codim: int

    @property
    def excess(self) -> int:
        return self.poles - self.zeros

    @property
    def residual(self) -> bool:
        return self.excess == self.codim

    def to_dict(self) -> dict:
        return {"poles": self.poles, "zeros": self.zeros, "codim": self.codim, "residual": self.residual}


@dataclass(frozen=True)
class ResidualCoset:
    """The coset r_L T^L for the parabolic ``subset``; ``point`` is r_L, a point of T_L."""
    subset: Subset
    point: TorusPoint
    certificate: Certificate
    key: Tuple = ()

    @property
    def codim(self) -> int:
        return len(self.subset)

    @property
    def dim(self) -> int:
        return self.point.rank - self.codim

    @property
    def is_point(self) -> bool:
        return self.dim == 0

    def tempered_center(self) -> TorusPoint:
        """r_L itself: it lies in T_L, so it has no component along T^L."""
        return self.point

    def tempered_point(self, split: ParabolicSplit, phases: Sequence[Rational]) -> TorusPoint:
        """The point r_L t of L^temp, where t in the compact part of T^L has the given phases."""
        if len(phases) != split.dim:
            raise InvalidParameter(f"Expected {split.dim} phases for T^L, got {len(phases)}.")
        u = [as_fraction(p) for p in phases]
        shift = tuple(sum((split.pi[i][j] * u[i] for i in range(split.dim)), Fraction(0))
                      for j in range(self.point.rank))
        return self.tempered_center().twisted(shift)

    def to_dict(self) -> dict:
        return {
            "parabolic": list(self.subset),
            "point": self.point.to_dict(),
            "dim": self.dim,
            "certificate": self.certificate.to_dict(),
        }


def _is_pole(phase: Fraction, y: Fraction, k_plus: Fraction, k_minus: Fraction) -> bool:
    return (phase == 0 and y == k_plus) or (phase == HALF and y == k_minus)


def _is_zero(phase: Fraction, y: Fraction) -> bool:
    return y == 0 and phase in (0, HALF)


def pole_zero_counts(spec: HeckeSpec, subset: Sequence[int], point: TorusPoint) -> Certificate:
    """
    Counts roots constant on r T^L with alpha(r) = v^{k_plus} or -v^{k_minus} (poles) and with
    alpha(r) = +-1 (zeros).
    """
    split = parabolic(spec.rd, tuple(subset))
    poles = zeros = 0
    for root in split.levi.roots:
        value = point.value(root)
        k_plus, k_minus = spec.params.for_root(spec.rd, root)
        if _is_pole(value.phase, value.vexp, k_plus, k_minus):
            poles += 1
        if _is_zero(value.phase, value.vexp):
            zeros += 1
    return Certificate(poles, zeros, split.codim)


def is_residual(spec: HeckeSpec, subset: Sequence[int], point: TorusPoint) -> Tuple[bool, Certificate]:
    certificate = pole_zero_counts(spec, subset, point)
    if certificate.excess > certificate.codim:
        raise InternalInvariantViolation(
            f"Pole excess {certificate.excess} exceeds codimension {certificate.codim} at {point}.",
            subset=list(subset))
    return certificate.residual, certificate


# --- Enumeration ---

@dataclass(frozen=True)
class _LeviFrame:
    split: ParabolicSplit
    root_coords: Tuple[Tuple[int, ...], ...]
    positive_coords: Tuple[Tuple[int, ...], ...]
    root_params: Tuple[Tuple[Fraction, Fraction], ...]
    positive_params: Tuple[Tuple[Fraction, Fraction], ...]
    lift: Tuple[Tuple[Fraction, ...], ...]
    weyl_coords: Tuple[Tuple[Tuple[int, ...], ...], ...]


def _coordinates(basis: Sequence[Sequence[int]], x: Sequence[int],
                 gram_inverse: Sequence[Sequence[Fraction]]) -> Tuple[int, ...]:
    projections = [pair(b, x) for b in basis]
    coords = [sum((gram_inverse[i][j] * projections[j] for j in range(len(basis))), Fraction(0))
              for i in range(len(basis))]
    if any(c.denominator != 1 for c in coords):
        raise InternalInvariantViolation(f"{tuple(x)} is not in the lattice spanned by {basis}.")
    return tuple(int(c) for c in coords)


@lru_cache(maxsize=256)
def _levi_frame(spec: HeckeSpec, subset: Subset) -> _LeviFrame:
    split = parabolic(spec.rd, subset)
    basis = split.x_basis
    k = len(basis)
    levi = split.levi
    if k == 0:
        return _LeviFrame(split, (), (), (), (), tuple(() for _ in range(spec.rank)), ((),))

    gram_inverse = inverse_rational([[pair(a, b) for b in basis] for a in basis])
    coords = tuple(_coordinates(basis, root, gram_inverse) for root in levi.roots)
    params = tuple(spec.params.for_root(spec.rd, root) for root in levi.roots)
    positive = levi.positive_indices()

    coroots = [spec.rd.simple_coroots[j] for j in subset]
    pairing_inverse = inverse_rational([[pair(e, c) for c in coroots] for e in basis])
    lift = tuple(
        tuple(sum((coroots[i][a] * pairing_inverse[i][j] for i in range(k)), Fraction(0)) for j in range(k))
        for a in range(spec.rank)
    )
    weyl_coords = tuple(
        tuple(_coordinates(basis, w.act(e), gram_inverse) for e in basis)
        for w in weyl_group(levi, spec.weyl_bound)
    )
    return _LeviFrame(split, coords, tuple(coords[i] for i in positive), params,
                      tuple(params[i] for i in positive), lift, weyl_coords)


def _apply(matrix: Sequence[Sequence[int]], vector: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    return tuple(sum((row[j] * vector[j] for j in range(len(vector))), Fraction(0)) for row in matrix)


def _orbit_key(frame: _LeviFrame, s: Sequence[Fraction], y: Sequence[Fraction]) -> Tuple:
    best = None
    for m in frame.weyl_coords:
        y_w = _apply(m, y)
        s_w = tuple(mod_one(c) for c in _apply(m, s))
        key = (tuple(-c for c in y_w), s_w)
        if best is None or key < best:
            best = key
    return best


def _key_certificate(frame: _LeviFrame, key: Tuple) -> Certificate:
    y = tuple(-c for c in key[0])
    s = key[1]
    poles = zeros = 0
    for a, (k_plus, k_minus) in zip(frame.root_coords, frame.root_params):
        phase = mod_one(sum((c * x for c, x in zip(a, s)), Fraction(0)))
        vexp = sum((c * x for c, x in zip(a, y)), Fraction(0))
        if _is_pole(phase, vexp, k_plus, k_minus):
            poles += 1
        if _is_zero(phase, vexp):
            zeros += 1
    return Certificate(poles, zeros, len(frame.split.subset))


def _key_point(frame: _LeviFrame, key: Tuple) -> TorusPoint:
    y_j = tuple(-c for c in key[0])
    s_j = key[1]
    return TorusPoint(_apply(frame.lift, s_j), _apply(frame.lift, y_j))


def _right_hand_sides(params: Tuple[Fraction, Fraction]) -> List[Tuple[Fraction, Fraction]]:
    k_plus, k_minus = params
    options = {(Fraction(0), k_plus), (Fraction(0), -k_plus), (HALF, k_minus), (HALF, -k_minus)}
    return sorted(options)


def _keys_for_systems(combos: Sequence[Tuple[int, ...]], frame: _LeviFrame) -> Set[Tuple]:
    """Orbit keys of every solution of the linear systems picked out by ``combos``."""
    k = len(frame.split.subset)
    keys = set()
    for combo in combos:
        rows = [frame.positive_coords[i] for i in combo]
        det = determinant(rows)
        if det == 0:
            continue
        inverse = inverse_rational(rows)
        rhs_choices = [_right_hand_sides(frame.positive_params[i]) for i in combo]
        for rhs in itertools.product(*rhs_choices):
            y = _apply(inverse, [e for _, e in rhs])
            for shift in itertools.product(range(abs(det)), repeat=k):
                s = _apply(inverse, [p + u for (p, _), u in zip(rhs, shift)])
                keys.add(_orbit_key(frame, s, y))
    return keys


def _candidate_keys(frame: _LeviFrame, progress: bool = False, desc: str = "",
                    threads: int = 1) -> List[Tuple]:
    k = len(frame.split.subset)
    if k == 0:
        return [((), ())]
    keys = set()
    combos = list(itertools.combinations(range(len(frame.positive_coords)), k))
    with tqdm(total=len(combos), desc=desc or "Candidate systems", disable=not progress) as pbar:
        for chunk, found in map_chunks(_keys_for_systems, combos, threads, frame=frame):
            pbar.update(len(chunk))
            keys |= found
    return sorted(keys)


def iter_subsets(spec: HeckeSpec) -> Iterable[Subset]:
    simple = range(spec.rd.semisimple_rank)
    for k in range(spec.rd.semisimple_rank + 1):
        yield from itertools.combinations(simple, k)


def _check_rank(spec: HeckeSpec) -> None:
    if spec.rank > MAX_RANK:
        raise RankTooLarge(f"{spec.name} has rank {spec.rank}; enumeration supports at most {MAX_RANK}.")


def residual_candidates(spec: HeckeSpec, subset: Optional[Sequence[int]] = None,
                        progress: bool = False, threads: int = 1) -> List[ResidualCoset]:
    """
    Every W_L-orbit of candidate coset before the residue filter, with its certificate.
    ``subset`` defaults to all simple roots (candidate points).
    """
    _check_rank(spec)
    check_threads(threads)
    subset = tuple(range(spec.rd.semisimple_rank)) if subset is None else tuple(sorted(set(subset)))
    frame = _levi_frame(spec, subset)
    candidates = []
    for key in _candidate_keys(frame, progress, f"{spec.name} {list(subset)}", threads):
        certificate = _key_certificate(frame, key)
        if certificate.excess > certificate.codim:
            raise InternalInvariantViolation(
                f"Pole excess {certificate.excess} exceeds codimension {certificate.codim}.", key=str(key))
        candidates.append(ResidualCoset(subset, _key_point(frame, key), certificate, (subset, key)))
    return candidates


def enumerate_residual_cosets(spec: HeckeSpec, subset: Optional[Sequence[int]] = None,
                              progress: bool = False, threads: int = 1) -> List[ResidualCoset]:
    """Residual cosets r_L T^L, for one parabolic subset or (by default) for all of them."""
    _check_rank(spec)
    subsets = [tuple(sorted(set(subset)))] if subset is not None else list(iter_subsets(spec))
    found = []
    for s in subsets:
        found += [c for c in residual_candidates(spec, s, progress, threads) if c.certificate.residual]
    _logger.debug("%s: %d residual cosets over %d parabolic subsets", spec.name, len(found), len(subsets))
    return found


def enumerate_residual_points(spec: HeckeSpec, progress: bool = False, threads: int = 1) -> List[ResidualCoset]:
    """One representative per W_0-orbit of residual points."""
    _check_rank(spec)
    if spec.rank > spec.rd.semisimple_rank:
        return []
    return enumerate_residual_cosets(spec, tuple(range(spec.rank)), progress, threads)


# --- Residues and densities ---

def m_r(spec: HeckeSpec, point: TorusPoint) -> FactoredFunction:
    """
    Regularized residue of mu (without d / q(w_0)) at a point: the product with identically
    vanishing factors omitted, or ZERO when the pole order falls short of the rank.
    """
    value, order = mu_factors(spec).regularized_restriction((), point)
    if order > spec.rank:
        raise InternalInvariantViolation(f"Pole order {order} exceeds rank {spec.rank} at {point}.")
    if order < spec.rank:
        return FactoredFunction.zero()
    return value


def mu_L(spec: HeckeSpec, coset: ResidualCoset) -> FactoredFunction:
    """
    The density of L = r_L T^L in the coordinates of T^L, including d / q(w_0) and the
    regularized Levi constant; the rational constant c_L is not included.
    """
    split = parabolic(spec.rd, coset.subset)
    value, order = mu_factors(spec).regularized_restriction(split.pi, coset.point)
    if order > split.codim:
        raise InternalInvariantViolation(f"Pole order {order} exceeds codimension {split.codim}.")
    if order < split.codim:
        raise NotResidual(f"Coset at {coset.point} over {list(coset.subset)} is not residual.",
                          order=order, codim=split.codim)
    return spec.mass_constant() * value


def scale_point(point: TorusPoint, eps: Rational) -> TorusPoint:
    eps = as_fraction(eps)
    if eps <= 0:
        raise InvalidParameter(f"Scaling exponent must be positive, got {eps}.")
    return point.scaled(eps)


def formal_degree(spec: HeckeSpec, point: TorusPoint, d_h_delta: Rational = 1) -> FactoredFunction:
    """d_{H,delta} d / (q(w_0) |Omega|) m_r, signed."""
    d_h_delta = as_fraction(d_h_delta)
    if d_h_delta <= 0:
        raise InvalidParameter(f"d_H,delta must be positive, got {d_h_delta}.")
    residue = m_r(spec, point)
    if residue.is_zero:
        raise NotResidual(f"{point} is not a residual point of {spec.name}.")
    return FactoredFunction.scalar(d_h_delta / spec.omega_order) * spec.mass_constant() * residue


def formal_degree_magnitude(spec: HeckeSpec, point: TorusPoint, d_h_delta: Rational = 1) -> FactoredFunction:
    """The formal degree with its sign dropped."""
    return formal_degree(spec, point, d_h_delta).magnitude()



def residual_point_table(spec: HeckeSpec, progress: bool = False) -> List[Dict]:
    """Report rows for the residual points: representative, certificate and m_r."""
    rows = []
    for coset in enumerate_residual_points(spec, progress):
        rows.append({**coset.to_dict(), "m_r": str(m_r(spec, coset.point))})
    return rows
