"""Exact rational scalars and the handful of dense linear-algebra helpers the
package needs.

Every coefficient in the package is a :class:`gmpy2.mpq`.  Dense matrices are
plain tuples of tuples of ``mpq`` (hashable, immutable); rank, inversion and
row reduction go through sympy's ``DomainMatrix`` over ``QQ``, whose ground
type is the same ``mpq``.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from gmpy2 import mpq
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

Q = mpq
ZERO = mpq(0)
ONE = mpq(1)

Matrix = tuple  # tuple[tuple[mpq, ...], ...]


def q(value) -> mpq:
    """Coerce ints, Fractions, mpq or ``"p/q"`` strings to ``mpq``."""
    if isinstance(value, str):
        return mpq(value.strip())
    return mpq(value)


def qstr(value) -> str:
    """Serialize a rational as ``"p/q"`` (denominator always written)."""
    value = mpq(value)
    return f"{value.numerator}/{value.denominator}"


def matrix(rows: Iterable[Iterable]) -> Matrix:
    return tuple(tuple(mpq(x) for x in row) for row in rows)


def zeros(n: int, m: int | None = None) -> Matrix:
    m = n if m is None else m
    return tuple((ZERO,) * m for _ in range(n))


def identity(n: int) -> Matrix:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def unit(n: int, i: int, j: int) -> Matrix:
    """Matrix unit e_ij of size n (0-based)."""
    return tuple(tuple(ONE if (a, b) == (i, j) else ZERO for b in range(n)) for a in range(n))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), ZERO) for col in cols) for row in a)


def add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(a, b))


def scale(c, a: Matrix) -> Matrix:
    c = mpq(c)
    return tuple(tuple(c * x for x in row) for row in a)


def lincomb(coeffs: Sequence, mats: Sequence[Matrix]) -> Matrix:
    n, m = len(mats[0]), len(mats[0][0])
    out = [[ZERO] * m for _ in range(n)]
    for c, mat in zip(coeffs, mats):
        if not c:
            continue
        for i, row in enumerate(mat):
            for j, x in enumerate(row):
                if x:
                    out[i][j] += c * x
    return tuple(tuple(r) for r in out)


def bracket(a: Matrix, b: Matrix) -> Matrix:
    return add(matmul(a, b), scale(-1, matmul(b, a)))


def trace(a: Matrix) -> mpq:
    return sum((a[i][i] for i in range(len(a))), ZERO)


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def is_scalar(a: Matrix) -> bool:
    c = a[0][0]
    return all(x == (c if i == j else 0) for i, row in enumerate(a) for j, x in enumerate(row))


def _dm(a: Sequence[Sequence]) -> DomainMatrix:
    rows = [list(r) for r in a]
    if not rows:
        return DomainMatrix([], (0, 0), QQ)
    return DomainMatrix([[mpq(x) for x in r] for r in rows], (len(rows), len(rows[0])), QQ)


def _from_dm(dm: DomainMatrix) -> Matrix:
    return tuple(tuple(mpq(x) for x in row) for row in dm.to_list())


def rank(a: Sequence[Sequence]) -> int:
    if not a or not len(a[0]):
        return 0
    return _dm(a).rank()


def inverse(a: Matrix) -> Matrix:
    """Exact inverse; raises ``ZeroDivisionError`` for singular input."""
    dm = _dm(a)
    if dm.det() == 0:
        raise ZeroDivisionError("matrix is singular")
    return _from_dm(dm.inv())


def det(a: Matrix) -> mpq:
    return mpq(_dm(a).det())


def rref_pivots(a: Sequence[Sequence]) -> tuple[int, ...]:
    _, pivots = _dm(a).rref()
    return tuple(pivots)


def solve(a: Matrix, b: Sequence) -> tuple[mpq, ...]:
    """Solve the square nonsingular system ``a x = b``."""
    x = _dm(a).lu_solve(_dm([[v] for v in b]))
    return tuple(mpq(row[0]) for row in x.to_list())
