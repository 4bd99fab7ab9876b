# src/hecke_spectra/stm/discovery.py
"""
Brute-force search for spectral transfer maps between two HeckeSpecs.

Candidates are (residual coset L of the target with dim L = rank of the source, nonsingular
integer B with entries in [-bound, bound], phase twist inside T^L with denominators up to
``phase_bound``). Maps onto the full torus are reduced to their W_0-canonical representative,
so each equivalence class is reported once.
"""
import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from tqdm import tqdm

from ..algebra.factored import FactoredFunction, RationalMonomial, ratio_class
from ..algebra.units import TorusPoint
from ..errors import InvalidParameter, SearchSpaceTooLarge
from ..roots.lattice import IntMatrix, determinant
from ..spectral.hecke_spec import HeckeSpec
from ..spectral.mu import mu
from ..spectral.residual import ResidualCoset, enumerate_residual_cosets, mu_L
from ..utils.workers import check_threads, map_chunks
from .spectral_map import SpectralMap
from .verify import Verification

_logger = logging.getLogger(__name__)

DEFAULT_SEARCH_LIMIT = 200000
DEFAULT_BOUND = 2


@dataclass
class DiscoveryReport:
    maps: List[Tuple[SpectralMap, Verification]] = field(default_factory=list)
    near_misses: List[Tuple[SpectralMap, Verification]] = field(default_factory=list)
    candidates: int = 0
    rejected: int = 0

    def to_dict(self) -> dict:
        return {
            "candidates": self.candidates,
            "rejected": self.rejected,
            "maps": [{"map": m.to_dict(), "verification": v.to_dict()} for m, v in self.maps],
            "near_misses": [{"map": m.to_dict(), "verification": v.to_dict()} for m, v in self.near_misses],
        }


def phase_grid(phase_bound: int) -> List[Fraction]:
    """All j/n in [0, 1) with n <= phase_bound."""
    return sorted({Fraction(j, n) for n in range(1, phase_bound + 1) for j in range(n)})


def integer_matrices(size: int, bound: int) -> List[Tuple[Tuple[int, ...], ...]]:
    """Nonsingular size x size integer matrices with entries in [-bound, bound]."""
    if size == 0:
        return [()]
    entries = range(-bound, bound + 1)
    found = []
    for flat in itertools.product(entries, repeat=size * size):
        matrix = tuple(tuple(flat[i * size:(i + 1) * size]) for i in range(size))
        if determinant(matrix) != 0:
            found.append(matrix)
    return found


def search_space_size(cosets: Sequence[ResidualCoset], bound: int, phase_bound: int) -> int:
    grid = len(phase_grid(phase_bound))
    return sum((2 * bound + 1) ** (c.dim * c.dim) * grid ** c.dim for c in cosets)


def _screen_matrices(matrices: Sequence[IntMatrix], density: FactoredFunction, source_mu: FactoredFunction,
                     grid: Sequence[Fraction], dim: int) -> Tuple[List[Tuple], int]:
    """Pulls ``density`` back along every (matrix, twist) pair; keeps those with a monomial ratio."""
    zeros = (Fraction(0),) * dim
    hits = []
    rejected = 0
    for matrix in matrices:
        for phases in itertools.product(grid, repeat=dim):
            base = TorusPoint(tuple(phases), zeros)
            ratio = ratio_class(density.pullback(matrix, base), source_mu)
            if isinstance(ratio, RationalMonomial):
                hits.append((matrix, base, ratio))
            else:
                rejected += 1
    return hits, rejected


def search_stms(source: HeckeSpec, target: HeckeSpec, bound: int = DEFAULT_BOUND,
                phase_bound: Optional[int] = None, limit: int = DEFAULT_SEARCH_LIMIT,
                progress: bool = False, threads: int = 1) -> DiscoveryReport:
    """
    Every candidate map with its verdict. ``phase_bound`` defaults to the order of Omega of the
    target, the largest denominator a lattice twist can need. Matrices are screened in chunks
    over ``threads`` worker processes; the report does not depend on the worker count.
    """
    if bound < 0:
        raise InvalidParameter(f"Entry bound must be nonnegative, got {bound}.")
    phase_bound = target.omega_order if phase_bound is None else phase_bound
    if phase_bound < 1:
        raise InvalidParameter(f"Phase denominator bound must be positive, got {phase_bound}.")
    check_threads(threads)

    cosets = [c for c in enumerate_residual_cosets(target, threads=threads) if c.dim == source.rank]
    cardinality = search_space_size(cosets, bound, phase_bound)
    if cardinality > limit:
        raise SearchSpaceTooLarge(
            f"{cardinality} candidates for {source.name} -> {target.name} exceed the limit {limit}.",
            cardinality=cardinality, limit=limit)
    _logger.debug("Searching %d candidates over %d cosets of %s", cardinality, len(cosets), target.name)

    report = DiscoveryReport(candidates=cardinality)
    source_mu = mu(source)
    grid = phase_grid(phase_bound)
    seen = set()
    with tqdm(total=cardinality, desc=f"STMs {source.name} -> {target.name}", disable=not progress) as pbar:
        for coset in cosets:
            density = mu_L(target, coset)
            screened = map_chunks(_screen_matrices, integer_matrices(coset.dim, bound), threads,
                                  density=density, source_mu=source_mu, grid=grid, dim=coset.dim)
            for chunk, (hits, rejected) in screened:
                pbar.update(len(chunk) * len(grid) ** coset.dim)
                report.rejected += rejected
                for matrix, base, ratio in hits:
                    candidate = SpectralMap(source, target, coset, matrix, base).canonical()
                    if candidate.key() in seen:
                        continue
                    seen.add(candidate.key())
                    verdict = Verification(ratio.c, ratio.k)
                    if verdict.is_verified:
                        report.maps.append((candidate, verdict))
                    else:
                        report.near_misses.append((candidate, verdict))

    report.maps.sort(key=lambda item: item[0].key())
    report.near_misses.sort(key=lambda item: item[0].key())
    _logger.info("%s -> %s: %d maps, %d near misses", source.name, target.name,
                 len(report.maps), len(report.near_misses))
    return report


def discover_stms(source: HeckeSpec, target: HeckeSpec, bound: int = DEFAULT_BOUND,
                  phase_bound: Optional[int] = None, limit: int = DEFAULT_SEARCH_LIMIT,
                  progress: bool = False, threads: int = 1) -> List[SpectralMap]:
    """The verified maps only (pure rational D), in canonical order."""
    report = search_stms(source, target, bound, phase_bound, limit, progress, threads)
    return [m for m, _ in report.maps]
