"""Affine Takiff algebras, the vacuum module and Segal-Sugawara vectors.

The vacuum module V_k(g_ell) is identified with U(t^{-1} g_ell[t^{-1}]): a
vacuum element is an NCPoly in the affine enveloping algebra whose generators
all have negative loop mode.  The level k is fixed per :class:`AffineTakiff`
and enters only through central terms of brackets ``[X[r], Y[-r]]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from gmpy2 import mpq

from .liealg import NotSimpleError, Representation
from .pbw import CommPoly, EnvelopingAlgebra, GenSpace, NCPoly, _acc, act_derivation, symbol
from .rational import ONE, ZERO, q, qstr
from .takiff import (
    INVARIANT_DEGREES,
    RankReport,
    TakiffAlgebra,
    UCoefficients,
    jacobian_rank,
    matrix_polynomial,
    pfaffian_matrix_polynomial,
    trace_power_coefficients,
    _require_d,
)


def critical_level(tak: TakiffAlgebra) -> mpq:
    """-(ell + 1) h for simple base algebras."""
    if tak.base.is_reductive or tak.base.dual_coxeter is None:
        raise NotSimpleError(f"{tak.base.label}: critical level needs a dual Coxeter number")
    return -(tak.ell + 1) * tak.base.dual_coxeter


class AffineTakiff:
    """The central extension of g_ell[t, t^-1] with K specialized to ``level``."""

    def __init__(self, tak: TakiffAlgebra, level):
        self.tak = tak
        self.base = tak.base
        self.ell = tak.ell
        self.level = q(level)
        self.space = GenSpace(self.base.dim, self.ell, affine=True)
        self.enveloping = EnvelopingAlgebra(self.space, self._bracket, names=self._name)
        self.enveloping.owner = self
        self._act_cache: dict = {}

    @classmethod
    def critical(cls, tak: TakiffAlgebra) -> "AffineTakiff":
        return cls(tak, critical_level(tak))

    def with_level(self, level) -> "AffineTakiff":
        return AffineTakiff(self.tak, level)

    def _name(self, key: int) -> str:
        g = self.space.gen(key)
        return f"{self.base.basis_names[g.index]}^({g.degree})[{g.mode}]"

    def key(self, index: int, degree: int, mode: int) -> int:
        return self.space.key(index, degree, mode)

    def kernel_form(self, x: int, y: int) -> mpq:
        """The base form on degree-0 elements; higher Takiff degrees are in the kernel."""
        sp = self.space
        if sp.degree(x) or sp.degree(y):
            return ZERO
        return self.base.gram[sp.index(x)][sp.index(y)]

    def _bracket(self, x: int, y: int):
        sp = self.space
        r, s = sp.degree(x), sp.degree(y)
        p, pp = sp.mode(x), sp.mode(y)
        terms = ()
        if r + s <= self.ell:
            terms = tuple((sp.key(k, r + s, p + pp), c) for k, c in self.base.bracket(sp.index(x), sp.index(y)))
        const = ZERO
        if p + pp == 0 and p:
            const = p * self.kernel_form(x, y) * self.level
        return terms, const

    def vacuum(self) -> "VacuumElement":
        return VacuumElement(self.enveloping.one())

    def element(self, value: NCPoly) -> "VacuumElement":
        return VacuumElement(value)

    def adopt(self, v: "VacuumElement | NCPoly") -> "VacuumElement":
        """Re-home a vacuum element (built at any level) into this algebra."""
        value = v.value if isinstance(v, VacuumElement) else v
        return VacuumElement(NCPoly(self.enveloping, value.terms))

    # -- action of non-negative modes ---------------------------------------------

    def _act(self, g: int, mono: tuple) -> dict:
        """g . mono|0> for g of mode >= 0 and a normal negative-mode monomial."""
        hit = self._act_cache.get((g, mono))
        if hit is not None:
            return hit
        env, sp = self.enveloping, self.space
        out: dict = {}
        # g x1..xn|0> = sum_i x1..x_{i-1} [g, x_i] x_{i+1}..xn |0>
        for i, x in enumerate(mono):
            prefix, suffix = mono[:i], mono[i + 1:]
            lin, const = env.bracket(g, x)
            for y, cy in lin:
                if sp.mode(y) < 0:
                    for m1, c1 in env.lmul_gen(y, suffix).items():
                        for m2, c2 in env.mono_mul(prefix, m1).items():
                            _acc(out, m2, cy * c1 * c2)
                else:
                    for m1, c1 in self._act(y, suffix).items():
                        for m2, c2 in env.mono_mul(prefix, m1).items():
                            _acc(out, m2, cy * c1 * c2)
            if const:
                _acc(out, prefix + suffix, const)
        self._act_cache[(g, mono)] = out
        return out

    def apply_key(self, g: int, v: NCPoly) -> NCPoly:
        if self.space.mode(g) < 0:
            raise ValueError("apply_mode needs a generator of mode >= 0")
        out: dict = {}
        for mono, c in v.terms.items():
            for m, c2 in self._act(g, mono).items():
                _acc(out, m, c * c2)
        return NCPoly(self.enveloping, out)

    def apply_by_straightening(self, g: int, v: NCPoly) -> NCPoly:
        """Same as :meth:`apply_key`, via full PBW straightening then dropping every
        monomial that ends in a non-negative mode."""
        prod = self.enveloping.from_key(g) * v
        sp = self.space
        return NCPoly(self.enveloping, {m: c for m, c in prod.terms.items() if not m or sp.mode(m[-1]) < 0})


@dataclass(frozen=True, eq=False)
class VacuumElement:
    value: NCPoly

    def __post_init__(self):
        owner = getattr(self.value.algebra, "owner", None)
        if not isinstance(owner, AffineTakiff):
            raise TypeError("vacuum elements live in an affine Takiff enveloping algebra")
        sp = owner.space
        for mono in self.value.terms:
            if mono and sp.mode(mono[-1]) >= 0:
                raise ValueError("vacuum elements may only contain negative-mode generators")

    @property
    def affine(self) -> AffineTakiff:
        return self.value.algebra.owner

    @property
    def level(self) -> mpq:
        return self.affine.level

    def __bool__(self) -> bool:
        return bool(self.value)

    def __eq__(self, other) -> bool:
        if isinstance(other, VacuumElement):
            return self.value == other.value
        return self.value == other

    __hash__ = None

    def __add__(self, other: "VacuumElement") -> "VacuumElement":
        return VacuumElement(self.value + _value(other))

    def __sub__(self, other: "VacuumElement") -> "VacuumElement":
        return VacuumElement(self.value - _value(other))

    def __mul__(self, c) -> "VacuumElement":
        """Scalar multiple, or the product in U(t^-1 g_ell[t^-1])."""
        return VacuumElement(self.value * _value(c) if isinstance(c, (NCPoly, VacuumElement)) else self.value * c)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"({self.value!r})|0>"


def _value(x) -> NCPoly:
    return x.value if isinstance(x, VacuumElement) else x


def _affine(x) -> AffineTakiff:
    return _value(x).algebra.owner


def apply_mode(g: int, v: VacuumElement) -> VacuumElement:
    """X[s] . v for a generator key of mode s >= 0 (in v's algebra)."""
    return VacuumElement(_affine(v).apply_key(g, _value(v)))


# -- Segal-Sugawara vectors ---------------------------------------------------------


def _wrap(coeffs: UCoefficients) -> UCoefficients:
    return UCoefficients({r: VacuumElement(c) for r, c in coeffs.coeffs.items()}, coeffs.band)


def script_F(aff: AffineTakiff, rep: Representation):
    """sum_r F^(r)[-1] u^r."""
    return matrix_polynomial(rep, aff.enveloping, aff.ell, mode=-1)


def Theta(aff: AffineTakiff, rep: Representation, m: int) -> UCoefficients:
    return _wrap(trace_power_coefficients(script_F(aff, rep), aff.enveloping, aff.ell, m))


def Pi(aff: AffineTakiff, rep: Representation) -> UCoefficients:
    n = _require_d(aff.base)
    return _wrap(pfaffian_matrix_polynomial(script_F(aff, rep), aff.enveloping, n, aff.ell))


def annihilator_families(aff: AffineTakiff) -> dict[str, list[int]]:
    """Generators of g_ell[t] that suffice to test annihilation."""
    d = aff.base.dim
    fam = {"F0[0]": [aff.key(i, 0, 0) for i in range(d)]}
    if aff.base.is_reductive:
        for r in range(1, aff.ell + 1):
            fam[f"F{r}[0]"] = [aff.key(i, r, 0) for i in range(d)]
    elif aff.ell >= 1:
        fam["F1[0]"] = [aff.key(i, 1, 0) for i in range(d)]
    fam["F0[1]"] = [aff.key(i, 0, 1) for i in range(d)]
    return fam


@dataclass
class SugawaraVerdict:
    ok: bool
    level: mpq
    residuals: dict = field(default_factory=dict)  # family -> [(key, NCPoly)] nonzero only
    checked: int = 0

    @property
    def witness(self):
        for fam, items in self.residuals.items():
            if items:
                return fam, items[0]
        return None

    def residual_counts(self) -> dict:
        return {fam: sum(len(r) for _, r in items) for fam, items in self.residuals.items()}


def verify_sugawara(x: VacuumElement, aff: AffineTakiff | None = None) -> SugawaraVerdict:
    """Apply every annihilator generator; the verdict holds iff all images vanish."""
    aff = _affine(x) if aff is None else aff
    value = aff.adopt(x).value
    residuals, checked = {}, 0
    for fam, keys in annihilator_families(aff).items():
        items = []
        for k in keys:
            checked += 1
            res = aff.apply_key(k, value)
            if res:
                items.append((k, res))
        residuals[fam] = items
    ok = not any(residuals.values())
    return SugawaraVerdict(ok, aff.level, residuals, checked)


def level_residuals(x: VacuumElement, levels: Sequence, family: str = "F0[1]") -> list[dict]:
    """The images of ``x`` under one annihilator family at each level, as
    key -> NCPoly maps (zero images omitted)."""
    aff0 = _affine(x)
    out = []
    for k in levels:
        aff = aff0.with_level(k)
        v = aff.adopt(x).value
        imgs = {}
        for g in annihilator_families(aff)[family]:
            res = aff.apply_key(g, v)
            if res:
                imgs[g] = res.terms
        out.append(imgs)
    return out


@dataclass
class LevelFit:
    """Residual R(k) = R0 + k R1 of one annihilator family, fitted through three levels."""

    levels: tuple
    affine: bool  # the third sample lies on the line through the first two
    slope_zero: bool  # R1 = 0: the residual does not depend on k
    intercept_zero: bool
    root: mpq | None  # the unique level with R(k) = 0, when R1 != 0 and one exists

    @property
    def vanishes_only_at(self):
        return self.root if self.affine and not self.slope_zero else None

    def to_json(self) -> dict:
        return {
            "levels": [str(q(k)) for k in self.levels],
            "affine": self.affine,
            "level_independent": self.slope_zero,
            "identically_zero": self.slope_zero and self.intercept_zero,
            "root": None if self.root is None else qstr(self.root),
        }


def _combine(a: dict, b: dict, ca, cb) -> dict:
    out: dict = {}
    for g in set(a) | set(b):
        terms: dict = {}
        for m, c in a.get(g, {}).items():
            _acc(terms, m, ca * c)
        for m, c in b.get(g, {}).items():
            _acc(terms, m, cb * c)
        if terms:
            out[g] = terms
    return out


def fit_level(x: VacuumElement, levels: Sequence = (0, 1, 2), family: str = "F0[1]") -> LevelFit:
    k0, k1, k2 = (q(k) for k in levels)
    r0, r1, r2 = level_residuals(x, (k0, k1, k2), family)
    slope = _combine(r1, r0, 1 / (k1 - k0), -1 / (k1 - k0))
    intercept = _combine(r0, slope, ONE, -k0)
    affine = _combine(_combine(intercept, slope, ONE, k2), r2, ONE, -ONE) == {}
    root = None
    if slope:
        # R0 + k R1 = 0 must hold coefficientwise with one common k
        roots = set()
        for g in set(slope) | set(intercept):
            s, b = slope.get(g, {}), intercept.get(g, {})
            for m in set(s) | set(b):
                roots.add(-b[m] / s[m] if m in s else None)
        if len(roots) == 1:
            root = roots.pop()
    return LevelFit((k0, k1, k2), affine, not slope, not intercept, root)


# -- translation and symbols --------------------------------------------------------


def translation_rule(space: GenSpace):
    def rule(key: int):
        g = space.gen(key)
        if g.mode >= 0:
            raise ValueError("translation acts on negative modes only")
        return {space.key(g.index, g.degree, g.mode - 1): -g.mode}
    return rule


def translate(x: VacuumElement, s: int = 1) -> VacuumElement:
    """T^s x, where T: X[r] -> -r X[r-1] extended as a derivation."""
    value = _value(x)
    rule = translation_rule(value.algebra.space)
    for _ in range(s):
        value = act_derivation(rule, value)
    return VacuumElement(value)


def erase_modes(x: VacuumElement, tak: TakiffAlgebra) -> NCPoly:
    """Image under the evaluation t -> 1, X[p] -> X, re-normal-ordered in U(g_ell)."""
    value = _value(x)
    sp = value.algebra.space
    terms = {}
    for mono, c in value.terms.items():
        word = tuple(tak.space.key(sp.index(k), sp.degree(k)) for k in mono)
        terms[word] = terms.get(word, ZERO) + c
    return tak.enveloping.from_terms(terms)


def graded_action_rule(aff: AffineTakiff, y: int):
    """Action of Y[s] on S(t^-1 g_ell[t^-1]): X[-p-1] -> [Y, X][s-p-1] when s-p-1 < 0."""
    sp = aff.space
    j, a, s = sp.index(y), sp.degree(y), sp.mode(y)

    def rule(key: int):
        i, b, p = sp.index(key), sp.degree(key), sp.mode(key)
        if a + b > aff.ell or s + p >= 0:
            return {}
        return {sp.key(k, a + b, s + p): c for k, c in aff.base.bracket(j, i)}

    return rule


def invariance_defects(poly: CommPoly, aff: AffineTakiff) -> list[int]:
    """Generators Y[s] of g_ell[t] (s below the deepest mode present) whose
    action on ``poly`` is nonzero."""
    sp = aff.space
    depth = max((-sp.mode(k) for k in poly.variables()), default=0)
    bad = []
    for s in range(depth):
        for a in range(aff.ell + 1):
            for j in range(aff.base.dim):
                y = sp.key(j, a, s)
                if act_derivation(graded_action_rule(aff, y), poly):
                    bad.append(y)
    return bad


@dataclass
class CompletenessReport:
    labels: list
    invariant: list  # bool per vector
    rank: RankReport
    defects: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.invariant) and self.rank.full


def certify_vectors(labels: Sequence[str], vectors: Sequence[VacuumElement], aff: AffineTakiff,
                    seed: int = 0) -> CompletenessReport:
    symbols = [symbol(_value(v)) for v in vectors]
    invariant, defects = [], {}
    for lab, sym in zip(labels, symbols):
        bad = invariance_defects(sym, aff)
        invariant.append(not bad)
        if bad:
            defects[lab] = bad
    return CompletenessReport(list(labels), invariant, jacobian_rank(symbols, seed), defects)


def sugawara_family(aff: AffineTakiff, rep: Representation) -> list[tuple[str, VacuumElement]]:
    """Theta_m^(r) over invariant degrees and bands (Pi band for D_n)."""
    base = aff.base
    if base.series not in INVARIANT_DEGREES:
        raise ValueError(f"no generating family for {base.label}")
    degrees = INVARIANT_DEGREES[base.series](base.rank)
    if base.series == "D":
        degrees = degrees[:-1]
    out = []
    for m in degrees:
        th = Theta(aff, rep, m)
        out.extend((f"Theta_{m}^({r})", th[r]) for r in th.band)
    if base.series == "D":
        pf = Pi(aff, rep)
        out.extend((f"Pi^({r})", pf[r]) for r in pf.band)
    return out


def completeness_certificate(aff: AffineTakiff, rep: Representation, max_s: int = 1,
                             seed: int = 0) -> CompletenessReport:
    """Symbol invariance and Jacobian rank for T^s of the generating family, s <= max_s."""
    labels, vectors = [], []
    for lab, v in sugawara_family(aff, rep):
        cur = v
        for s in range(max_s + 1):
            labels.append(lab if s == 0 else f"T^{s} {lab}")
            vectors.append(cur)
            if s < max_s:
                cur = translate(cur)
    return certify_vectors(labels, vectors, aff, seed)
