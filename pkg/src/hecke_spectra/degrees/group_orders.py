# src/hecke_spectra/degrees/group_orders.py
"""Orders of finite reductive groups and tori over F_q, as polynomials in q."""
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import sympy

from ..algebra.unipoly import UniPoly
from ..errors import InvalidParameter

IntMatrix = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class GroupOrderSpec:
    """
    q^{q_power} * prod (q^d - 1) over ``degrees``, times |det(q A - 1)| for an optional
    twisted torus with Frobenius matrix A.
    """
    q_power: int = 0
    degrees: Tuple[int, ...] = ()
    torus_twist: Optional[IntMatrix] = None

    def __post_init__(self):
        if self.q_power < 0:
            raise InvalidParameter(f"q-power must be nonnegative, got {self.q_power}.")
        if any(d < 1 for d in self.degrees):
            raise InvalidParameter(f"Degrees must be positive, got {list(self.degrees)}.")
        if self.torus_twist is not None:
            n = len(self.torus_twist)
            if any(len(row) != n for row in self.torus_twist):
                raise InvalidParameter("The torus Frobenius matrix must be square.")
            if n and abs(int(sympy.Matrix([list(r) for r in self.torus_twist]).det())) != 1:
                raise InvalidParameter("The torus Frobenius matrix must be invertible over Z.")

    def to_dict(self) -> dict:
        return {
            "q_power": self.q_power,
            "degrees": list(self.degrees),
            "torus_twist": None if self.torus_twist is None else [list(r) for r in self.torus_twist],
        }


def q_minus_one(d: int) -> UniPoly:
    return UniPoly.from_dict({d: 1, 0: -1}, "q")


def split_torus_order(rank: int) -> UniPoly:
    """|GL_1(F_q)^rank| = (q - 1)^rank."""
    return q_minus_one(1) ** rank


def torus_order(frobenius: Sequence[Sequence[int]]) -> UniPoly:
    """|det(q A - 1)|, normalized to a positive leading coefficient."""
    n = len(frobenius)
    if n == 0:
        return UniPoly.constant(1, "q")
    q = sympy.Symbol("q")
    matrix = sympy.Matrix([list(r) for r in frobenius]) * q - sympy.eye(n)
    poly = sympy.Poly(sympy.expand(matrix.det()), q)
    if poly.LC() < 0:
        poly = -poly
    return UniPoly.from_dict({exp[0]: int(c) for exp, c in poly.terms()}, "q")


def group_order(spec: GroupOrderSpec) -> UniPoly:
    result = UniPoly.monomial(spec.q_power, 1, "q")
    for d in spec.degrees:
        result = result * q_minus_one(d)
    if spec.torus_twist is not None:
        result = result * torus_order(spec.torus_twist)
    return result


def companion_matrix(m: int) -> IntMatrix:
    """Companion matrix of 1 + x + ... + x^m: Frobenius of the norm-one torus of degree m + 1."""
    if m < 1:
        raise InvalidParameter(f"Companion matrix needs m >= 1, got {m}.")
    rows = [[0] * m for _ in range(m)]
    for i in range(1, m):
        rows[i][i - 1] = 1
    for i in range(m):
        rows[i][m - 1] = -1
    return tuple(tuple(r) for r in rows)
