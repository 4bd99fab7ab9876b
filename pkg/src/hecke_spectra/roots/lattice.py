# src/hecke_spectra/roots/lattice.py
"""Integer lattice helpers. Vectors are tuples of ints; matrices are tuples of rows."""
from fractions import Fraction
from typing import List, Sequence, Tuple

import sympy
from sympy.matrices.normalforms import smith_normal_form

IntVector = Tuple[int, ...]
IntMatrix = Tuple[IntVector, ...]


def identity(n: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(matrix: Sequence[Sequence[int]], cols: int = 0) -> IntMatrix:
    if not matrix:
        return tuple(() for _ in range(cols))
    return tuple(tuple(row[j] for row in matrix) for j in range(len(matrix[0])))


def mat_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], inner: int = 0) -> IntMatrix:
    inner = len(b) if b else inner
    cols = len(b[0]) if b else 0
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)) for i in range(len(a)))


def mat_vec(matrix: Sequence[Sequence[int]], x: Sequence) -> tuple:
    return tuple(sum((row[j] * x[j] for j in range(len(x))), 0) for row in matrix)


def integer_kernel(rows: Sequence[Sequence[int]], n: int) -> List[IntVector]:
    """
    A Z-basis of {y in Z^n : r.y = 0 for every row r}. Column operations on the rows are
    mirrored on a unimodular matrix, so the returned basis spans the saturated kernel.
    """
    a = [list(r) for r in rows]
    u = [list(r) for r in identity(n)]
    m = len(a)

    def column_op(i: int, j: int, c: int) -> None:
        # column j -= c * column i
        for row in a:
            row[j] -= c * row[i]
        for row in u:
            row[j] -= c * row[i]

    def swap(i: int, j: int) -> None:
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in u:
            row[i], row[j] = row[j], row[i]

    pivot = 0
    for r in range(m):
        if pivot >= n:
            break
        while True:
            nonzero = [j for j in range(pivot, n) if a[r][j] != 0]
            if not nonzero:
                break
            best = min(nonzero, key=lambda j: abs(a[r][j]))
            swap(pivot, best)
            done = True
            for j in range(pivot + 1, n):
                if a[r][j] != 0:
                    column_op(pivot, j, a[r][j] // a[r][pivot])
                    if a[r][j] != 0:
                        done = False
            if done:
                break
        if a[r][pivot] != 0:
            pivot += 1

    return [tuple(u[i][j] for i in range(n)) for j in range(pivot, n)]


def rank_of(rows: Sequence[Sequence[int]]) -> int:
    if not rows:
        return 0
    return sympy.Matrix([list(r) for r in rows]).rank()


def determinant(matrix: Sequence[Sequence[int]]) -> int:
    if not matrix:
        return 1
    return int(sympy.Matrix([list(r) for r in matrix]).det())


def smith_invariants(columns: Sequence[Sequence[int]], n: int) -> Tuple[int, ...]:
    """Invariant factors (> 1) of Z^n modulo the span of ``columns``; requires full rank."""
    if n == 0:
        return ()
    matrix = sympy.Matrix(n, len(columns), lambda i, j: columns[j][i])
    snf = smith_normal_form(matrix, domain=sympy.ZZ)
    diagonal = [abs(int(snf[i, i])) for i in range(min(snf.shape))]
    if len(diagonal) < n or 0 in diagonal:
        raise ValueError("Sublattice does not have full rank.")
    return tuple(sorted(d for d in diagonal if d != 1))


def solve_rational(matrix: Sequence[Sequence[int]], rhs: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    """Solves matrix * x = rhs exactly for a square nonsingular integer matrix."""
    m = sympy.Matrix([list(r) for r in matrix])
    b = sympy.Matrix([sympy.Rational(c.numerator, c.denominator) for c in rhs])
    x = m.LUsolve(b)
    return tuple(Fraction(int(sympy.Rational(c).p), int(sympy.Rational(c).q)) for c in x)


def inverse_rational(matrix: Sequence[Sequence[int]]) -> Tuple[Tuple[Fraction, ...], ...]:
    m = sympy.Matrix([list(r) for r in matrix]).inv()
    return tuple(
        tuple(Fraction(int(sympy.Rational(m[i, j]).p), int(sympy.Rational(m[i, j]).q)) for j in range(m.cols))
        for i in range(m.rows)
    )
