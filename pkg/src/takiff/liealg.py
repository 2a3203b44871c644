"""Classical Lie algebras from matrix presentations.

Basis conventions (indices 1-based in names, 0-based in code):

* ``A_n`` = sl_{n+1}: Cartan elements ``h_i = e_ii - e_{i+1,i+1}`` first, then
  ``e_ij`` for i != j in lexicographic order.
* ``B_n`` = so_{2n+1} and ``D_n`` = so_{2n}: ``f_ij = e_ij - e_ji`` for i < j.
* ``C_n`` = sp_{2n} preserving ``[[0, I], [-I, 0]]``: ``a_ij = e_ij - e_{n+j,n+i}``,
  then ``b_ij = e_{i,n+j} + e_{j,n+i}`` and ``c_ij = e_{n+i,j} + e_{n+j,i}`` (i <= j).
* ``gl_n``: ``E_ij`` lexicographic.

For simple types the form is the trace form of the vector representation
divided by its Dynkin index (1 for A and C, 2 for B and D), i.e. the invariant
form in which long roots have squared length 2.  The dual Coxeter number is
then read off the adjoint action of the Casimir element.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from gmpy2 import mpq

from . import rational as rq
from .pbw import CommPoly, EnvelopingAlgebra, GenSpace, NCPoly, symbol
from .rational import ONE, ZERO, Matrix, q, qstr
from .tensor import TensorOperator, trace_of_power

SUPPORTED = {"A": 1, "B": 2, "C": 2, "D": 2, "gl": 1}
VECTOR_INDEX = {"A": 1, "B": 2, "C": 1, "D": 2}


class UnsupportedAlgebraError(ValueError):
    pass


class InvariantError(ValueError):
    """A Lie-algebra or representation invariant failed; ``witness`` names where."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NotSimpleError(ValueError):
    pass


class MissingWeightsError(ValueError):
    pass


def parse_label(label) -> tuple[str, int]:
    """``"A2"``, ``"A_2"``, ``("A", 2)`` or ``"gl3"`` -> ``(series, rank)``."""
    if isinstance(label, (tuple, list)):
        series, rank = label
    else:
        m = re.fullmatch(r"\s*([A-Da-d]|gl|GL)_?(\d+)\s*", str(label))
        if not m:
            raise UnsupportedAlgebraError(f"cannot parse algebra label {label!r}; supported: {supported_labels()}")
        series, rank = m.group(1), int(m.group(2))
    series = "gl" if series.lower() == "gl" else series.upper()
    rank = int(rank)
    if series not in SUPPORTED or rank < SUPPORTED[series]:
        raise UnsupportedAlgebraError(f"unsupported algebra {series}{rank}; supported: {supported_labels()}")
    return series, rank


def supported_labels() -> str:
    return "A_n (n>=1), B_n (n>=2), C_n (n>=2), D_n (n>=2), gl_n (n>=1)"


@dataclass(frozen=True, eq=False)
class LieAlgebraData:
    label: str
    basis_names: tuple[str, ...]
    structure_constants: dict  # (i, j) -> ((k, c), ...), only nonzero brackets
    gram: Matrix
    dual_coxeter: mpq | None
    is_reductive: bool = False
    series: str | None = None
    rank: int | None = None

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    def bracket(self, i: int, j: int) -> tuple:
        return self.structure_constants.get((i, j), ())

    def c(self, i: int, j: int, k: int) -> mpq:
        for kk, v in self.bracket(i, j):
            if kk == k:
                return v
        return ZERO

    @cached_property
    def gram_inverse(self) -> Matrix:
        try:
            return rq.inverse(self.gram)
        except ZeroDivisionError:
            raise InvariantError(f"{self.label}: invariant form is degenerate") from None

    @cached_property
    def ad(self) -> tuple[Matrix, ...]:
        """ad(J_i) as d x d matrices: column j holds the coordinates of [J_i, J_j]."""
        d = self.dim
        mats = []
        for i in range(d):
            m = [[ZERO] * d for _ in range(d)]
            for j in range(d):
                for k, v in self.bracket(i, j):
                    m[k][j] = v
            mats.append(tuple(tuple(r) for r in m))
        return tuple(mats)

    def form(self, x: Sequence, y: Sequence) -> mpq:
        """<X, Y> for coordinate vectors."""
        return sum((x[i] * self.gram[i][j] * y[j] for i in range(self.dim) for j in range(self.dim)
                    if x[i] and y[j]), ZERO)

    @cached_property
    def enveloping(self) -> EnvelopingAlgebra:
        """U(g) with generators J_i (mode-free, Takiff degree 0)."""
        sc = self.structure_constants
        return EnvelopingAlgebra(
            GenSpace(self.dim),
            lambda x, y: (sc.get((x, y), ()), ZERO),
            names=lambda k: self.basis_names[k],
        )


@dataclass(frozen=True, eq=False)
class Representation:
    algebra: LieAlgebraData
    matrices: tuple[Matrix, ...]
    cartan_indices: tuple[int, ...] | None = None
    weights: tuple[tuple[mpq, ...], ...] | None = None

    @property
    def N(self) -> int:
        return len(self.matrices[0])

    @cached_property
    def dual_matrices(self) -> tuple[Matrix, ...]:
        """rho(J^i) where J^i = sum_j G^{-1}_{ji} J_j is the dual basis."""
        ginv = self.algebra.gram_inverse
        d = self.algebra.dim
        return tuple(rq.lincomb([ginv[j][i] for j in range(d)], self.matrices) for i in range(d))

    @cached_property
    def F_coefficients(self) -> dict:
        """(a, b) -> {i: coefficient of J_i in F_ab}, F_ab = -sum_i rho(J^i)_ab J_i."""
        out: dict = {}
        for i, m in enumerate(self.dual_matrices):
            for a, row in enumerate(m):
                for b, v in enumerate(row):
                    if v:
                        out.setdefault((a, b), {})[i] = -v
        return out

    def conjugate(self, A: Matrix) -> "Representation":
        """The equivalent representation X -> A rho(X) A^{-1} (weights dropped)."""
        Ainv = rq.inverse(A)
        mats = tuple(rq.matmul(rq.matmul(A, m), Ainv) for m in self.matrices)
        return Representation(self.algebra, mats)


# -- construction ------------------------------------------------------------------


def _coordinates_solver(matrices: Sequence[Matrix]):
    flat = [[x for row in m for x in row] for m in matrices]
    # d matrix positions on which the basis is already independent
    pos = rq.rref_pivots(flat)
    if len(pos) != len(matrices):
        raise InvariantError("basis matrices are linearly dependent (representation not faithful)")
    square = tuple(tuple(flat[i][p] for i in range(len(flat))) for p in pos)
    sq_inv = rq.inverse(square)

    def coords(m: Matrix) -> tuple:
        v = [x for row in m for x in row]
        c = tuple(sum((sq_inv[i][j] * v[p] for j, p in enumerate(pos)), ZERO) for i in range(len(flat)))
        if rq.lincomb(c, matrices) != m:
            raise InvariantError("matrix span is not closed under the commutator")
        return c

    return coords


def algebra_from_matrices(
    label: str,
    names: Sequence[str],
    matrices: Sequence[Matrix],
    trace_index=1,
    is_reductive: bool = False,
    series: str | None = None,
    rank: int | None = None,
    cartan_indices: Sequence[int] | None = None,
) -> tuple[LieAlgebraData, Representation]:
    """Build structure constants and form from a faithful matrix basis.

    The form is ``tr(XY) / trace_index``.  For non-reductive input the dual
    Coxeter number is computed from the adjoint Casimir eigenvalue.
    """
    matrices = tuple(rq.matrix(m) for m in matrices)
    coords = _coordinates_solver(matrices)
    d = len(matrices)
    sc = {}
    for i in range(d):
        for j in range(d):
            if i == j:
                continue
            c = coords(rq.bracket(matrices[i], matrices[j]))
            nz = tuple((k, v) for k, v in enumerate(c) if v)
            if nz:
                sc[(i, j)] = nz
    ti = q(trace_index)
    gram = tuple(tuple(rq.trace(rq.matmul(a, b)) / ti for b in matrices) for a in matrices)
    alg = LieAlgebraData(label, tuple(names), sc, gram, None, is_reductive, series, rank)
    if not is_reductive:
        h = adjoint_casimir_eigenvalue(alg) / 2
        alg = LieAlgebraData(label, tuple(names), sc, gram, h, False, series, rank)
    weights = None
    if cartan_indices is not None:
        weights = _weights(alg, matrices, tuple(cartan_indices))
    rep = Representation(alg, matrices, tuple(cartan_indices) if cartan_indices is not None else None, weights)
    return alg, rep


def _weights(alg: LieAlgebraData, matrices, cartan) -> tuple:
    """Coordinates of each weight Lambda_a on the Cartan basis, via the form."""
    for i in cartan:
        m = matrices[i]
        if any(m[a][b] for a in range(len(m)) for b in range(len(m)) if a != b):
            raise InvariantError(f"Cartan element {alg.basis_names[i]} is not diagonal")
    gh = tuple(tuple(alg.gram[i][j] for j in cartan) for i in cartan)
    out = []
    for a in range(len(matrices[0])):
        diag = [matrices[i][a][a] for i in cartan]
        out.append(rq.solve(gh, diag))
    return tuple(out)


def _type_a(n: int):
    N = n + 1
    names, mats = [], []
    for i in range(n):
        names.append(f"h{i + 1}")
        mats.append(rq.add(rq.unit(N, i, i), rq.scale(-1, rq.unit(N, i + 1, i + 1))))
    for i in range(N):
        for j in range(N):
            if i != j:
                names.append(f"e{i + 1}{j + 1}" if N < 10 else f"e{i + 1}_{j + 1}")
                mats.append(rq.unit(N, i, j))
    return names, mats, tuple(range(n))


def _type_so(N: int):
    names, mats = [], []
    for i in range(N):
        for j in range(i + 1, N):
            names.append(f"f{i + 1}{j + 1}" if N < 10 else f"f{i + 1}_{j + 1}")
            mats.append(rq.add(rq.unit(N, i, j), rq.scale(-1, rq.unit(N, j, i))))
    return names, mats


def _type_c(n: int):
    N = 2 * n
    names, mats = [], []
    for i in range(n):
        for j in range(n):
            names.append(f"a{i + 1}{j + 1}")
            mats.append(rq.add(rq.unit(N, i, j), rq.scale(-1, rq.unit(N, n + j, n + i))))
    for i in range(n):
        for j in range(i, n):
            names.append(f"b{i + 1}{j + 1}")
            m = rq.unit(N, i, n + j)
            mats.append(m if i == j else rq.add(m, rq.unit(N, j, n + i)))
    for i in range(n):
        for j in range(i, n):
            names.append(f"c{i + 1}{j + 1}")
            m = rq.unit(N, n + i, j)
            mats.append(m if i == j else rq.add(m, rq.unit(N, n + j, i)))
    return names, mats


def _type_gl(n: int):
    names, mats = [], []
    for i in range(n):
        for j in range(n):
            names.append(f"E{i + 1}{j + 1}" if n < 10 else f"E{i + 1}_{j + 1}")
            mats.append(rq.unit(n, i, j))
    return names, mats


def build_algebra(label) -> tuple[LieAlgebraData, Representation]:
    """The algebra with its defining (vector) representation."""
    series, n = parse_label(label)
    name = f"{series}{n}"
    if series == "A":
        names, mats, cartan = _type_a(n)
        return algebra_from_matrices(name, names, mats, 1, series=series, rank=n, cartan_indices=cartan)
    if series == "B":
        names, mats = _type_so(2 * n + 1)
    elif series == "D":
        names, mats = _type_so(2 * n)
    elif series == "C":
        names, mats = _type_c(n)
    else:
        names, mats = _type_gl(n)
        return algebra_from_matrices(name, names, mats, 1, is_reductive=True, series=series, rank=n)
    return algebra_from_matrices(name, names, mats, VECTOR_INDEX[series], series=series, rank=n)


# -- invariants --------------------------------------------------------------------


def adjoint_casimir_eigenvalue(alg: LieAlgebraData) -> mpq:
    """Eigenvalue of sum_i ad(J_i) ad(J^i); raises NotSimpleError if not scalar."""
    ginv = alg.gram_inverse
    d = alg.dim
    ad = alg.ad
    total = rq.zeros(d)
    for i in range(d):
        dual = rq.lincomb([ginv[j][i] for j in range(d)], ad)
        total = rq.add(total, rq.matmul(ad[i], dual))
    if not rq.is_scalar(total):
        raise NotSimpleError(f"{alg.label}: Casimir is not scalar on the adjoint representation")
    return total[0][0]


def check_algebra(alg: LieAlgebraData) -> None:
    """Antisymmetry, Jacobi, form symmetry/nondegeneracy/invariance and, for
    simple types, agreement with the Killing form scaled by 1/(2 h)."""
    d = alg.dim
    for i in range(d):
        if alg.bracket(i, i):
            raise InvariantError(f"[J{i}, J{i}] != 0", (i, i))
        for j in range(i + 1, d):
            a = dict(alg.bracket(i, j))
            b = dict(alg.bracket(j, i))
            if any(a.get(k, 0) + b.get(k, 0) for k in set(a) | set(b)):
                raise InvariantError(f"antisymmetry fails for ({i}, {j})", (i, j))
    ad = alg.ad
    for i in range(d):
        for j in range(i + 1, d):
            for k in range(j + 1, d):
                # [Ji,[Jj,Jk]] + [Jj,[Jk,Ji]] + [Jk,[Ji,Jj]]
                tot: dict = {}
                for x, (y, z) in ((i, (j, k)), (j, (k, i)), (k, (i, j))):
                    for w, c in alg.bracket(y, z):
                        for v, c2 in alg.bracket(x, w):
                            tot[v] = tot.get(v, 0) + c * c2
                if any(tot.values()):
                    raise InvariantError(f"Jacobi identity fails on ({i}, {j}, {k})", (i, j, k))
    g = alg.gram
    if any(g[i][j] != g[j][i] for i in range(d) for j in range(d)):
        raise InvariantError("form is not symmetric")
    if rq.det(g) == 0:
        raise InvariantError("form is degenerate")
    for x in range(d):
        for y in range(d):
            for z in range(d):
                # <[X,Y],Z> + <Y,[X,Z]>
                v = sum((c * g[k][z] for k, c in alg.bracket(x, y)), ZERO)
                v += sum((c * g[y][k] for k, c in alg.bracket(x, z)), ZERO)
                if v:
                    raise InvariantError(f"form is not invariant on ({x}, {y}, {z})", (x, y, z))
    if not alg.is_reductive:
        if alg.dual_coxeter is None or alg.dual_coxeter <= 0:
            raise InvariantError("simple algebra without a positive dual Coxeter number")
        two_h = 2 * alg.dual_coxeter
        for x in range(d):
            for y in range(d):
                kil = rq.trace(rq.matmul(ad[x], ad[y]))
                if kil / two_h != g[x][y]:
                    raise InvariantError(f"form differs from normalized Killing form at ({x}, {y})", (x, y))


def check_representation(rep: Representation) -> None:
    alg = rep.algebra
    mats = rep.matrices
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            lhs = rq.bracket(mats[i], mats[j])
            terms = alg.bracket(i, j)
            rhs = rq.lincomb([c for _, c in terms], [mats[k] for k, _ in terms]) if terms else rq.zeros(rep.N)
            if lhs != rhs:
                raise InvariantError(f"rho is not a homomorphism on ({i}, {j})", (i, j))
    if rq.rank([[x for row in m for x in row] for m in mats]) != alg.dim:
        raise InvariantError("representation is not faithful")
    if rep.weights is not None:
        for w_idx, i in enumerate(rep.cartan_indices):
            m = mats[i]
            for a in range(rep.N):
                for b in range(rep.N):
                    if a != b and m[a][b]:
                        raise InvariantError(f"Cartan element {i} is not diagonal", (i, a, b))
                lam = rep.weights[a]
                coords = [ZERO] * alg.dim
                for t, k in enumerate(rep.cartan_indices):
                    coords[k] = lam[t]
                unit = [ONE if t == i else ZERO for t in range(alg.dim)]
                if alg.form(coords, unit) != m[a][a]:
                    raise InvariantError(f"weight {a} disagrees with Cartan element {i}", (i, a))


# -- Casimir tensor and generator matrix -------------------------------------------


def casimir_tensor(alg: LieAlgebraData, rep: Representation) -> TensorOperator:
    """Omega = sum_i rho(J_i) (x) rho(J^i) on two legs."""
    N = rep.N
    out: dict = {}
    for m, dm in zip(rep.matrices, rep.dual_matrices):
        for a in range(N):
            for b in range(N):
                x = m[a][b]
                if not x:
                    continue
                for c in range(N):
                    for e in range(N):
                        y = dm[c][e]
                        if y:
                            k = ((a, c), (b, e))
                            out[k] = out.get(k, ZERO) + x * y
    return TensorOperator(N, 2, out)


def generator_matrix(rep: Representation, env: EnvelopingAlgebra, degree: int = 0,
                     mode: int | None = None) -> TensorOperator:
    """F with entries placed at the given Takiff degree / loop mode of ``env``."""
    space = env.space
    out = {}
    for (a, b), coeffs in rep.F_coefficients.items():
        out[((a,), (b,))] = env.linear({space.key(i, degree, mode): c for i, c in coeffs.items()})
    return TensorOperator(rep.N, 1, out)


def build_F(alg: LieAlgebraData, rep: Representation) -> TensorOperator:
    return generator_matrix(rep, alg.enveloping)


# -- presentation relations --------------------------------------------------------


@dataclass
class Residual:
    name: str
    zero: bool
    witness: tuple | None = None  # ((row, col), value)
    skipped: str | None = None

    def to_json(self) -> dict:
        out = {"name": self.name, "zero": self.zero}
        if self.skipped:
            out["skipped"] = self.skipped
        if self.witness is not None:
            (r, c), v = self.witness
            out["witness"] = {"row": list(r), "col": list(c),
                              "value": v.to_json() if isinstance(v, NCPoly) else qstr(v)}
        return out


@dataclass
class PresentationReport:
    label: str
    residuals: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.zero for r in self.residuals)


def _residual(name: str, t: TensorOperator) -> Residual:
    return Residual(name, t.is_zero(), t.first_nonzero())


def verify_presentation(alg: LieAlgebraData, rep: Representation, F: TensorOperator | None = None) -> PresentationReport:
    """Exact residuals of the commutator relation, the quadratic symmetry
    relation and its linear (partial-trace) form."""
    F = build_F(alg, rep) if F is None else F
    omega = casimir_tensor(alg, rep)
    F1, F2 = F.embed(2, [1]), F.embed(2, [2])
    report = PresentationReport(alg.label)
    comm = F1 @ F2 - F2 @ F1 - (omega @ F2 - F2 @ omega)
    report.residuals.append(_residual("commutator", comm))
    if alg.is_reductive:
        note = "reductive algebra: no dual Coxeter number"
        report.residuals.append(Residual("quadratic", True, skipped=note))
        report.residuals.append(Residual("linear", True, skipped=note))
        return report
    h = alg.dual_coxeter
    Ft = F.transpose()
    quad = F @ F - (Ft @ Ft).transpose() - F.scale(h)
    report.residuals.append(_residual("quadratic", quad))
    P = TensorOperator.permutation(rep.N)
    lin = ((omega @ F2 - F2 @ omega) @ P).partial_trace(2) - F.scale(h)
    report.residuals.append(_residual("linear", lin))
    return report


# -- Chevalley restriction ---------------------------------------------------------


@dataclass
class ChevalleyReport:
    m: int
    equal: bool
    restricted_symbol: CommPoly
    power_sum: CommPoly


def trace_power(alg: LieAlgebraData, rep: Representation, m: int) -> NCPoly:
    """tr F^m in U(g); tr F^0 = N."""
    env = alg.enveloping
    if m == 0:
        return env.scalar(rep.N)
    t = trace_of_power(build_F(alg, rep), m)
    return t if isinstance(t, NCPoly) else env.scalar(t)


def power_sum(alg: LieAlgebraData, rep: Representation, m: int) -> CommPoly:
    """(-1)^m sum_a Lambda_a^m in the Cartan variables."""
    if rep.weights is None:
        raise MissingWeightsError(f"{alg.label}: representation carries no weight data")
    space = alg.enveloping.space
    total = CommPoly(space, {})
    for lam in rep.weights:
        lin = CommPoly(space, {(k,): c for k, c in zip(rep.cartan_indices, lam) if c})
        total = total + lin ** m
    return total * (-1) ** m


def chevalley_check(alg: LieAlgebraData, rep: Representation, m: int) -> ChevalleyReport:
    """Compare the Cartan restriction of symbol(tr F^m) with (-1)^m P_m."""
    rhs = power_sum(alg, rep, m)
    cartan = set(rep.cartan_indices)
    lhs = symbol(trace_power(alg, rep, m), degree=m).restrict(lambda k: k in cartan)
    return ChevalleyReport(m, lhs == rhs, lhs, rhs)


# -- JSON --------------------------------------------------------------------------


def to_json(alg: LieAlgebraData, rep: Representation) -> dict:
    sc = [[i, j, k, qstr(c)] for (i, j), terms in sorted(alg.structure_constants.items()) for k, c in terms]
    mats = [[i, a, b, qstr(v)] for i, m in enumerate(rep.matrices)
            for a, row in enumerate(m) for b, v in enumerate(row) if v]
    doc = {
        "label": alg.label,
        "dim": alg.dim,
        "basis_names": list(alg.basis_names),
        "structure_constants": sc,
        "gram": [[qstr(x) for x in row] for row in alg.gram],
        "dual_coxeter": None if alg.dual_coxeter is None else qstr(alg.dual_coxeter),
        "is_reductive": alg.is_reductive,
        "rep": {"N": rep.N, "matrices": mats},
    }
    if rep.cartan_indices is not None:
        doc["rep"]["cartan_indices"] = list(rep.cartan_indices)
        doc["rep"]["weights"] = [[qstr(x) for x in w] for w in rep.weights]
    return doc


def dumps(alg: LieAlgebraData, rep: Representation) -> str:
    return json.dumps(to_json(alg, rep), indent=1, sort_keys=True)


class SchemaError(ValueError):
    pass


def from_json(doc: dict, validate: bool = True) -> tuple[LieAlgebraData, Representation]:
    """Rebuild an algebra and representation; with ``validate`` every invariant
    is checked and the first failure raised as :class:`InvariantError`."""
    try:
        d = int(doc["dim"])
        names = tuple(doc["basis_names"])
        if len(names) != d:
            raise SchemaError("basis_names length differs from dim")
        sc: dict = {}
        for i, j, k, c in doc["structure_constants"]:
            i, j, k, c = int(i), int(j), int(k), q(c)
            if not (0 <= i < d and 0 <= j < d and 0 <= k < d):
                raise SchemaError(f"structure constant index out of range: {(i, j, k)}")
            if c:
                sc.setdefault((i, j), {})[k] = sc.get((i, j), {}).get(k, ZERO) + c
        sc = {key: tuple(sorted((k, c) for k, c in v.items() if c)) for key, v in sc.items()}
        sc = {key: v for key, v in sc.items() if v}
        gram = rq.matrix(doc["gram"])
        if len(gram) != d or any(len(r) != d for r in gram):
            raise SchemaError("gram must be dim x dim")
        h = doc.get("dual_coxeter")
        h = None if h is None else q(h)
        reductive = bool(doc.get("is_reductive", h is None))
        rep_doc = doc["rep"]
        N = int(rep_doc["N"])
        mats = [[[ZERO] * N for _ in range(N)] for _ in range(d)]
        for i, a, b, v in rep_doc["matrices"]:
            mats[int(i)][int(a)][int(b)] = q(v)
        mats = tuple(tuple(tuple(r) for r in m) for m in mats)
        label = str(doc["label"])
    except SchemaError:
        raise
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise SchemaError(f"algebra document does not match the schema: {exc}") from exc
    try:
        series, rank = parse_label(label)
    except UnsupportedAlgebraError:
        series, rank = None, None
    alg = LieAlgebraData(label, names, sc, gram, h, reductive, series, rank)
    cartan = rep_doc.get("cartan_indices")
    weights = rep_doc.get("weights")
    rep = Representation(
        alg, mats,
        tuple(cartan) if cartan is not None else None,
        tuple(tuple(q(x) for x in w) for w in weights) if weights is not None else None,
    )
    if validate:
        check_algebra(alg)
        check_representation(rep)
    return alg, rep


def loads(text: str, validate: bool = True) -> tuple[LieAlgebraData, Representation]:
    return from_json(json.loads(text), validate)
