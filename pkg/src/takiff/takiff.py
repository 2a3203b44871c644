"""Takiff algebras g_ell = g[v]/(v^{ell+1}), the matrix polynomial F(u), its
trace powers and Pfaffian, and certificates for centrality and algebraic
independence."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

from gmpy2 import mpq

from . import rational as rq
from .liealg import LieAlgebraData, Representation
from .pbw import CommPoly, EnvelopingAlgebra, Gen, GenSpace, NCPoly, commutator, symbol
from .rational import ZERO
from .tensor import TensorOperator, trace_of_power

# Degrees of basic invariants of S(g)^g.  Exceptional rows are reference data only.
INVARIANT_DEGREES: dict[str, Callable[[int], list[int]]] = {
    "A": lambda n: list(range(2, n + 2)),
    "B": lambda n: list(range(2, 2 * n + 1, 2)),
    "C": lambda n: list(range(2, 2 * n + 1, 2)),
    "D": lambda n: list(range(2, 2 * n - 1, 2)) + [n],
}
EXCEPTIONAL_DEGREES = {
    "E6": [2, 5, 6, 8, 9, 12],
    "E7": [2, 6, 8, 10, 12, 14, 18],
    "E8": [2, 8, 12, 14, 18, 20, 24, 30],
    "F4": [2, 6, 8, 12],
    "G2": [2, 6],
}


class UPoly:
    """Polynomial in a commuting variable u with coefficients in any ring."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict):
        self.coeffs = {r: c for r, c in coeffs.items() if c}

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "UPoly") -> "UPoly":
        out = dict(self.coeffs)
        for r, c in other.coeffs.items():
            out[r] = out[r] + c if r in out else c
        return UPoly(out)

    def __neg__(self) -> "UPoly":
        return UPoly({r: -c for r, c in self.coeffs.items()})

    def __sub__(self, other: "UPoly") -> "UPoly":
        return self + (-other)

    def __mul__(self, other) -> "UPoly":
        if not isinstance(other, UPoly):
            return UPoly({r: c * other for r, c in self.coeffs.items()})
        out: dict = {}
        for r, a in self.coeffs.items():
            for s, b in other.coeffs.items():
                p = a * b
                out[r + s] = out[r + s] + p if r + s in out else p
        return UPoly(out)

    def __rmul__(self, other) -> "UPoly":
        return UPoly({r: other * c for r, c in self.coeffs.items()})

    def degree(self) -> int:
        return max(self.coeffs, default=-1)

    def __getitem__(self, r: int):
        return self.coeffs.get(r, 0)

    def __repr__(self) -> str:
        return " + ".join(f"({c})*u^{r}" for r, c in sorted(self.coeffs.items())) or "0"


@dataclass
class UCoefficients:
    """Coefficients of a u-polynomial of NCPolys, with the band claimed central."""

    coeffs: dict  # r -> NCPoly, every r in 0..top present
    band: range

    def __getitem__(self, r: int) -> NCPoly:
        return self.coeffs[r]

    def banded(self) -> dict:
        return {r: self.coeffs[r] for r in self.band}

    @property
    def top(self) -> int:
        return max((r for r, c in self.coeffs.items() if c), default=-1)


class TakiffAlgebra:
    """g_ell with basis J_i v^r; the bracket truncates above v^ell."""

    def __init__(self, base: LieAlgebraData, ell: int):
        if ell < 0:
            raise ValueError("ell must be >= 0")
        self.base = base
        self.ell = ell
        self.space = GenSpace(base.dim, ell)
        self.enveloping = EnvelopingAlgebra(self.space, self._bracket, names=self._name)

    @property
    def dim(self) -> int:
        return self.base.dim * (self.ell + 1)

    def _name(self, key: int) -> str:
        g = self.space.gen(key)
        return f"{self.base.basis_names[g.index]}^({g.degree})"

    def _bracket(self, x: int, y: int):
        sp = self.space
        r, s = sp.degree(x), sp.degree(y)
        if r + s > self.ell:
            return (), ZERO
        terms = self.base.bracket(sp.index(x), sp.index(y))
        return tuple((sp.key(k, r + s), c) for k, c in terms), ZERO

    def gen(self, index: int, degree: int = 0) -> NCPoly:
        return self.enveloping.gen(index, degree)

    def generators(self, degrees: Iterable[int] | None = None) -> list[int]:
        return self.space.keys(degrees)

    def pairing_form(self, x: int, y: int) -> mpq:
        """<X v^r, Y v^s>_ell = <X, Y> when r + s = ell, else 0."""
        sp = self.space
        if sp.degree(x) + sp.degree(y) != self.ell:
            return ZERO
        return self.base.gram[sp.index(x)][sp.index(y)]

    def pairing_gram(self) -> rq.Matrix:
        keys = self.generators()
        return tuple(tuple(self.pairing_form(x, y) for y in keys) for x in keys)


def takiff_extend(alg: LieAlgebraData, ell: int) -> TakiffAlgebra:
    return TakiffAlgebra(alg, ell)


def matrix_polynomial(rep: Representation, env: EnvelopingAlgebra, ell: int,
                      mode: int | None = None) -> TensorOperator:
    """sum_r F^(r) u^r with entries of F^(r) at Takiff degree r (and loop mode ``mode``)."""
    sp = env.space
    out = {}
    for (a, b), coeffs in rep.F_coefficients.items():
        out[((a,), (b,))] = UPoly({
            r: env.linear({sp.key(i, r, mode): c for i, c in coeffs.items()}) for r in range(ell + 1)
        })
    return TensorOperator(rep.N, 1, out)


def F_of_u(tak: TakiffAlgebra, rep: Representation) -> TensorOperator:
    return matrix_polynomial(rep, tak.enveloping, tak.ell)


def _coefficients(value, env: EnvelopingAlgebra, top: int, band: range) -> UCoefficients:
    coeffs = {r: env.zero() for r in range(top + 1)}
    if isinstance(value, UPoly):
        for r, c in value.coeffs.items():
            coeffs[r] = c
    return UCoefficients(coeffs, band)


def trace_power_coefficients(Fu: TensorOperator, env: EnvelopingAlgebra, ell: int, m: int) -> UCoefficients:
    """Coefficients of tr F(u)^m; the band is r in [m ell - ell, m ell]."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return _coefficients(trace_of_power(Fu, m), env, m * ell, range(m * ell - ell, m * ell + 1))


def theta(tak: TakiffAlgebra, rep: Representation, m: int) -> UCoefficients:
    return trace_power_coefficients(F_of_u(tak, rep), tak.enveloping, tak.ell, m)


# -- Pfaffians ---------------------------------------------------------------------


def perfect_matchings(items: Sequence) -> Iterator[list[tuple]]:
    """Matchings with sigma(1) < sigma(3) < ... and sigma(2k-1) < sigma(2k)."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for i, partner in enumerate(rest):
        for tail in perfect_matchings(rest[:i] + rest[i + 1:]):
            yield [(first, partner)] + tail


def permutation_sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def pfaffian(entry: Callable[[int, int], object], size: int, zero=0):
    """sum over matchings of sgn(sigma) * F_{s1 s2} F_{s3 s4} ..., factors in that order."""
    if size % 2:
        raise ValueError("Pfaffian needs an even size")
    total = zero
    for matching in perfect_matchings(range(size)):
        sign = permutation_sign([x for pair in matching for x in pair])
        prod = None
        for a, b in matching:
            e = entry(a, b)
            prod = e if prod is None else prod * e
        if prod is None:  # size 0
            prod = 1
        total = total + (prod if sign > 0 else -prod)
    return total


def pfaffian_matrix_polynomial(Fu: TensorOperator, env: EnvelopingAlgebra, n: int, ell: int) -> UCoefficients:
    value = pfaffian(lambda a, b: Fu[a, b] if Fu[a, b] else UPoly({}), 2 * n, UPoly({}))
    return _coefficients(value, env, n * ell, range(n * ell - ell, n * ell + 1))


def _require_d(alg: LieAlgebraData) -> int:
    if alg.series != "D":
        raise ValueError(f"Pfaffian elements need type D, got {alg.label}")
    return alg.rank


def pfaffian_coeffs(tak: TakiffAlgebra, rep: Representation) -> UCoefficients:
    n = _require_d(tak.base)
    return pfaffian_matrix_polynomial(F_of_u(tak, rep), tak.enveloping, n, tak.ell)


# -- centrality --------------------------------------------------------------------


@dataclass
class Verdict:
    ok: bool
    witness: tuple | None = None  # (generator key, nonzero residual)
    checked: int = 0

    def witness_json(self, space: GenSpace) -> dict | None:
        if self.witness is None:
            return None
        key, res = self.witness
        g = space.gen(key)
        return {"generator": [g.index, g.degree, g.mode], "residual": res.to_json(), "terms": len(res)}


def centrality_test_generators(tak: TakiffAlgebra) -> list[int]:
    """Degree 0 and 1 generators suffice when g = [g, g]; gl_n needs all."""
    if tak.base.is_reductive:
        return tak.generators()
    return tak.generators(range(min(1, tak.ell) + 1))


def verify_central(x: NCPoly, tak: TakiffAlgebra) -> Verdict:
    env = tak.enveloping
    gens = centrality_test_generators(tak)
    for k in gens:
        res = commutator(x, env.from_key(k))
        if res:
            return Verdict(False, (k, res), len(gens))
    return Verdict(True, None, len(gens))


# -- algebraic independence --------------------------------------------------------


def random_point(variables: Iterable[int], seed: int, bound: int = 100) -> dict[int, mpq]:
    rng = random.Random(seed)
    return {v: mpq(rng.randint(-bound, bound), rng.randint(1, bound)) for v in sorted(variables)}


@dataclass
class RankReport:
    count: int
    rank: int
    seeds: list = field(default_factory=list)
    variables: int = 0

    @property
    def full(self) -> bool:
        return self.rank == self.count

    @property
    def status(self) -> str:
        return "independent" if self.full else "inconclusive at this point"

    def to_json(self) -> dict:
        return {"count": self.count, "rank": self.rank, "seeds": list(self.seeds),
                "variables": self.variables, "status": self.status}


def jacobian_rank(polys: Sequence[CommPoly], seed: int, retries: int = 2) -> RankReport:
    """Exact rank of the Jacobian at seeded random rational points.

    Full rank certifies algebraic independence.  On deficiency up to
    ``retries`` further seeds are tried; a deficient rank is never read as
    dependence.
    """
    variables = sorted(set().union(*(p.variables() for p in polys))) if polys else []
    report = RankReport(len(polys), 0, [], len(variables))
    for attempt in range(retries + 1):
        s = seed + attempt
        point = random_point(variables, s)
        rows = []
        for p in polys:
            grad = p.gradient(point)
            rows.append([grad.get(v, ZERO) for v in variables])
        report.seeds.append(s)
        report.rank = max(report.rank, rq.rank(rows) if variables else 0)
        if report.full:
            break
    return report


def independence_certificate(elements: Sequence[NCPoly], seed: int = 0, retries: int = 2) -> RankReport:
    if any(not e for e in elements):
        raise ValueError("elements must be nonzero")
    return jacobian_rank([symbol(e) for e in elements], seed, retries)


def center_generators(tak: TakiffAlgebra, rep: Representation) -> list[tuple[str, NCPoly]]:
    """theta_m^(r) over the invariant degrees and their bands; for D_n the
    degree-n generator is the Pfaffian band."""
    base = tak.base
    if base.series not in INVARIANT_DEGREES:
        raise ValueError(f"no generating family for {base.label}")
    n, ell = base.rank, tak.ell
    degrees = INVARIANT_DEGREES[base.series](n)
    out = []
    if base.series == "D":
        degrees = degrees[:-1]
    for m in degrees:
        th = theta(tak, rep, m)
        out.extend((f"theta_{m}^({r})", th[r]) for r in th.band)
    if base.series == "D":
        pf = pfaffian_coeffs(tak, rep)
        out.extend((f"pi^({r})", pf[r]) for r in pf.band)
    return out
