"""Operators on (C^N)^{otimes m} with entries in any ring.

A :class:`TensorOperator` with ``legs == m`` is a sparse N^m x N^m matrix whose
row and column labels are m-tuples of indices in ``range(N)``.  Entries may be
rationals (Casimir tensors, permutation operators) or enveloping-algebra
elements (generator matrices), so products keep factor order: entry products
are always ``left * right``.  Legs are numbered from 1.
"""

from __future__ import annotations

import itertools
from typing import Callable, Iterable, Mapping

from .rational import ONE, Matrix, q


def _is_zero(v) -> bool:
    return not v


class TensorOperator:
    __slots__ = ("N", "legs", "entries")

    def __init__(self, N: int, legs: int, entries: Mapping):
        self.N = N
        self.legs = legs
        self.entries = {k: v for k, v in entries.items() if not _is_zero(v)}

    # -- constructors -----------------------------------------------------------

    @classmethod
    def from_matrix(cls, m, N: int | None = None) -> "TensorOperator":
        """One-leg operator from a dense matrix (nested sequences) or a dict."""
        if isinstance(m, Mapping):
            return cls(N, 1, {((i,), (j,)): v for (i, j), v in m.items()})
        N = len(m)
        return cls(N, 1, {((i,), (j,)): m[i][j] for i in range(N) for j in range(N)})

    @classmethod
    def identity(cls, N: int, legs: int = 1) -> "TensorOperator":
        return cls(N, legs, {(idx, idx): ONE for idx in itertools.product(range(N), repeat=legs)})

    @classmethod
    def permutation(cls, N: int) -> "TensorOperator":
        """P_12 = sum_ij e_ij (x) e_ji."""
        return cls(N, 2, {((i, j), (j, i)): ONE for i in range(N) for j in range(N)})

    @classmethod
    def kron(cls, a: "TensorOperator", b: "TensorOperator") -> "TensorOperator":
        out = {}
        for (ra, ca), va in a.entries.items():
            for (rb, cb), vb in b.entries.items():
                out[(ra + rb, ca + cb)] = va * vb
        return cls(a.N, a.legs + b.legs, out)

    def embed(self, legs: int, positions: Iterable[int]) -> "TensorOperator":
        """Place this operator on the given legs of an m-leg space, identity elsewhere.

        ``positions`` lists the target leg (1-based) of each of this operator's legs.
        """
        positions = tuple(p - 1 for p in positions)
        if len(positions) != self.legs or len(set(positions)) != self.legs:
            raise ValueError("positions must name one distinct target leg per operator leg")
        if any(not 0 <= p < legs for p in positions):
            raise ValueError(f"target leg out of range 1..{legs}")
        others = [p for p in range(legs) if p not in positions]
        out = {}
        for (r, c), v in self.entries.items():
            for free in itertools.product(range(self.N), repeat=len(others)):
                row, col = [0] * legs, [0] * legs
                for p, a, b in zip(positions, r, c):
                    row[p], col[p] = a, b
                for p, a in zip(others, free):
                    row[p] = col[p] = a
                out[(tuple(row), tuple(col))] = v
        return TensorOperator(self.N, legs, out)

    # -- arithmetic -------------------------------------------------------------

    def _same_shape(self, other: "TensorOperator") -> None:
        if (self.N, self.legs) != (other.N, other.legs):
            raise ValueError(f"shape mismatch: {(self.N, self.legs)} vs {(other.N, other.legs)}")

    def __add__(self, other: "TensorOperator") -> "TensorOperator":
        self._same_shape(other)
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out[k] + v if k in out else v
        return TensorOperator(self.N, self.legs, out)

    def __neg__(self) -> "TensorOperator":
        return TensorOperator(self.N, self.legs, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other: "TensorOperator") -> "TensorOperator":
        return self + (-other)

    def scale(self, c) -> "TensorOperator":
        return TensorOperator(self.N, self.legs, {k: c * v for k, v in self.entries.items()})

    def __matmul__(self, other: "TensorOperator") -> "TensorOperator":
        self._same_shape(other)
        by_row: dict = {}
        for (r, c), v in other.entries.items():
            by_row.setdefault(r, []).append((c, v))
        out: dict = {}
        for (r, mid), a in self.entries.items():
            for c, b in by_row.get(mid, ()):
                p = a * b
                k = (r, c)
                out[k] = out[k] + p if k in out else p
        return TensorOperator(self.N, self.legs, out)

    def map(self, fn: Callable) -> "TensorOperator":
        return TensorOperator(self.N, self.legs, {k: fn(v) for k, v in self.entries.items()})

    # -- leg calculus -----------------------------------------------------------

    def _leg(self, leg: int) -> int:
        if not 1 <= leg <= self.legs:
            raise ValueError(f"leg {leg} out of range 1..{self.legs}")
        return leg - 1

    def partial_trace(self, leg: int) -> "TensorOperator":
        a = self._leg(leg)
        out: dict = {}
        for (r, c), v in self.entries.items():
            if r[a] != c[a]:
                continue
            k = (r[:a] + r[a + 1:], c[:a] + c[a + 1:])
            out[k] = out[k] + v if k in out else v
        return TensorOperator(self.N, self.legs - 1, out)

    def partial_transpose(self, leg: int) -> "TensorOperator":
        a = self._leg(leg)
        out = {}
        for (r, c), v in self.entries.items():
            out[(r[:a] + (c[a],) + r[a + 1:], c[:a] + (r[a],) + c[a + 1:])] = v
        return TensorOperator(self.N, self.legs, out)

    def transpose(self) -> "TensorOperator":
        return TensorOperator(self.N, self.legs, {(c, r): v for (r, c), v in self.entries.items()})

    def trace(self):
        """Full trace; returns ``0`` (int) when every diagonal entry is zero."""
        total = None
        for (r, c), v in self.entries.items():
            if r == c:
                total = v if total is None else total + v
        return 0 if total is None else total

    # -- inspection -------------------------------------------------------------

    def __getitem__(self, key):
        r, c = key
        if isinstance(r, int):
            r, c = (r,), (c,)
        return self.entries.get((tuple(r), tuple(c)), 0)

    def is_zero(self) -> bool:
        return not self.entries

    def first_nonzero(self):
        """A deterministic witness entry ``((row, col), value)`` or None."""
        if not self.entries:
            return None
        k = min(self.entries)
        return k, self.entries[k]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorOperator):
            return NotImplemented
        return (self.N, self.legs) == (other.N, other.legs) and (self - other).is_zero()

    __hash__ = None

    def to_dense(self) -> Matrix:
        """Dense matrix (rational entries only), rows in lexicographic leg order."""
        labels = list(itertools.product(range(self.N), repeat=self.legs))
        pos = {lab: i for i, lab in enumerate(labels)}
        n = len(labels)
        rows = [[q(0)] * n for _ in range(n)]
        for (r, c), v in self.entries.items():
            rows[pos[r]][pos[c]] = q(v)
        return tuple(tuple(r) for r in rows)

    def __repr__(self) -> str:
        return f"TensorOperator(N={self.N}, legs={self.legs}, nnz={len(self.entries)})"


def partial_trace(t: TensorOperator, leg: int) -> TensorOperator:
    return t.partial_trace(leg)


def partial_transpose(t: TensorOperator, leg: int) -> TensorOperator:
    return t.partial_transpose(leg)


def trace_of_power(t: TensorOperator, m: int):
    """tr(t^m) for m >= 1, multiplying left to right; only the diagonal of the
    last product is formed."""
    if m < 1:
        raise ValueError("power must be >= 1")
    if m == 1:
        return t.trace()
    p = t
    for _ in range(m - 2):
        p = p @ t
    by_row: dict = {}
    for (r, c), v in t.entries.items():
        by_row.setdefault(r, []).append((c, v))
    total = None
    for (r, mid), a in p.entries.items():
        for c, b in by_row.get(mid, ()):
            if c == r:
                prod = a * b
                total = prod if total is None else total + prod
    return 0 if total is None else total
