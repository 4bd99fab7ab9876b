# src/hecke_spectra/roots/presets.py
"""
Named root data.

Names look like ``A2-sc``, ``B3-adj``, ``G2`` or ``T3``. For ``-sc`` the simple roots are the
standard basis of X (so every root is primitive); for ``-adj`` they are the rows of the Cartan
matrix, i.e. X is the weight lattice. ``C1`` is A1-sc under its other name; its coroot lies
in 2Y, so it accepts a second parameter.
"""
import re
from functools import lru_cache
from typing import List

from ..errors import RankTooLarge, UnknownPreset
from .lattice import IntMatrix
from .root_datum import RootDatum

MAX_RANK = 6

_NAME_RE = re.compile(r"^(?P<family>[ABCDGFT])(?P<n>\d+)(?:-(?P<lattice>sc|adj))?$")


def cartan_matrix(family: str, n: int) -> IntMatrix:
    """Cartan matrix C_ij = <alpha_i, alpha_j^v> in Bourbaki numbering."""
    c = [[0] * n for _ in range(n)]
    for i in range(n):
        c[i][i] = 2
    if family in "ABCD":
        chain = n - 1 if family == "D" else n
        for i in range(chain - 1):
            c[i][i + 1] = c[i + 1][i] = -1
        if family == "B":
            c[n - 2][n - 1] = -2
        elif family == "C":
            c[n - 1][n - 2] = -2
        elif family == "D":
            c[n - 3][n - 1] = c[n - 1][n - 3] = -1
    elif family == "G":
        c = [[2, -3], [-1, 2]]
    elif family == "F":
        c = [[2, -1, 0, 0], [-1, 2, -2, 0], [0, -1, 2, -1], [0, 0, -1, 2]]
    return tuple(tuple(row) for row in c)


def _valid_rank(family: str, n: int) -> bool:
    return {
        "A": n >= 1, "B": n >= 2, "C": n >= 1, "D": n >= 4, "G": n == 2, "F": n == 4, "T": n >= 0,
    }[family]


@lru_cache(maxsize=None)
def preset(name: str) -> RootDatum:
    match = _NAME_RE.match(name.strip())
    if not match:
        raise UnknownPreset(f"Unknown root datum preset {name!r}.", available=available_presets())
    family, n, lattice = match.group("family"), int(match.group("n")), match.group("lattice")
    if not _valid_rank(family, n):
        raise UnknownPreset(f"{family}{n} is not a valid Dynkin type.")
    if n > MAX_RANK:
        raise RankTooLarge(f"{name} has rank {n}; at most {MAX_RANK} is supported.")

    if family == "T":
        if lattice is not None:
            raise UnknownPreset(f"Tori take no lattice suffix: {name!r}.")
        return RootDatum.from_simple(name, n, [], [])
    if family == "C" and n == 1:
        if lattice is not None:
            raise UnknownPreset("C1 is fixed as A1-sc; use A1-adj for the other lattice.")
        return RootDatum.from_simple("C1", 1, [(1,)], [(2,)])

    c = cartan_matrix(family, n)
    if lattice is None:
        if family not in "GF":
            raise UnknownPreset(f"{name!r} needs a lattice suffix -sc or -adj.")
        lattice = "sc"
    if lattice == "sc":
        roots = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
        coroots = [tuple(c[i][j] for i in range(n)) for j in range(n)]
    else:
        roots = [c[i] for i in range(n)]
        coroots = [tuple(1 if k == j else 0 for k in range(n)) for j in range(n)]
    return RootDatum.from_simple(name, n, roots, coroots)


def available_presets() -> List[str]:
    names = []
    for family, ranks in (("A", range(1, 7)), ("B", range(2, 7)), ("C", range(2, 7)), ("D", range(4, 7))):
        names += [f"{family}{n}-{lat}" for n in ranks for lat in ("sc", "adj")]
    return names + ["C1", "G2", "F4"] + [f"T{n}" for n in range(0, 7)]
