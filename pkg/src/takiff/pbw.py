"""Sparse noncommutative polynomials in enveloping algebras, kept in PBW normal
order.

An enveloping algebra is described by a :class:`GenSpace` (how generators are
encoded) and a bracket oracle.  Generators are stored as integers whose natural
order is the PBW order::

    key = mode * d * (ell + 1) + takiff_degree * d + basis_index

so monomials sort by loop mode first, then Takiff degree, then basis index.
Finite (non-loop) algebras use mode 0 throughout.  With modes ascending, the
annihilation operators (modes >= 0) of an affine algebra sit at the right end
of every normal monomial.

A monomial is a non-decreasing tuple of keys; an :class:`NCPoly` is a dict from
monomials to nonzero ``mpq`` coefficients.  Products are straightened by
swapping adjacent out-of-order generators, ``x y = y x + [x, y]``, with both
left and right insertion memoized per algebra.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping

from gmpy2 import mpq

from .rational import ONE, ZERO, q, qstr

Monomial = tuple  # tuple[int, ...], non-decreasing
Terms = dict  # dict[Monomial, mpq]

DEFAULT_MEMO_LIMIT = 4_000_000
MEMO_ENV = "TAKIFF_MEMO_LIMIT"


class MalformedOracleError(ValueError):
    """A bracket oracle returned something that is not linear in the generators."""


class AlgebraMismatchError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Gen:
    """A generator ``J_index v^degree t^mode``; ``mode`` is None for finite algebras."""

    index: int
    degree: int = 0
    mode: int | None = None


@dataclass(frozen=True)
class GenSpace:
    dim: int
    ell: int = 0
    affine: bool = False

    @property
    def block(self) -> int:
        return self.dim * (self.ell + 1)

    def key(self, index: int, degree: int = 0, mode: int | None = None) -> int:
        if not 0 <= index < self.dim:
            raise ValueError(f"basis index {index} out of range [0, {self.dim})")
        if not 0 <= degree <= self.ell:
            raise ValueError(f"Takiff degree {degree} out of range [0, {self.ell}]")
        if mode is None:
            mode = 0
        elif not self.affine and mode != 0:
            raise ValueError("loop modes are only available in affine algebras")
        return mode * self.block + degree * self.dim + index

    def gen(self, key: int) -> Gen:
        mode, rest = divmod(key, self.block)
        degree, index = divmod(rest, self.dim)
        return Gen(index, degree, mode if self.affine else None)

    def mode(self, key: int) -> int:
        return key // self.block

    def degree(self, key: int) -> int:
        return (key % self.block) // self.dim

    def index(self, key: int) -> int:
        return key % self.dim

    def keys(self, degrees: Iterable[int] | None = None, modes: Iterable[int | None] = (None,)):
        degrees = range(self.ell + 1) if degrees is None else degrees
        return [self.key(i, r, p) for p in modes for r in degrees for i in range(self.dim)]


def _memo_limit() -> int:
    try:
        return int(os.environ.get(MEMO_ENV, DEFAULT_MEMO_LIMIT))
    except ValueError:
        return DEFAULT_MEMO_LIMIT


def _acc(out: dict, mono, c) -> None:
    v = out.get(mono)
    if v is None:
        out[mono] = c
    else:
        v = v + c
        if v:
            out[mono] = v
        else:
            del out[mono]


def _clean(out: dict) -> dict:
    return {m: c for m, c in out.items() if c}


class EnvelopingAlgebra:
    """U(g) for a Lie algebra given by a bracket oracle on generator keys.

    ``bracket(x, y)`` must return ``(terms, const)`` where ``terms`` is an
    iterable of ``(key, coeff)`` pairs giving the linear part of ``[x, y]`` and
    ``const`` is the rational value of any central contribution.  It may also
    return an :class:`NCPoly` of filtration degree <= 1.
    """

    def __init__(self, space: GenSpace, bracket: Callable, names: Callable[[int], str] | None = None):
        self.space = space
        self._oracle = bracket
        self._names = names
        self._brackets: dict = {}
        self._lcache: dict = {}
        self._rcache: dict = {}
        self.memo_limit = _memo_limit()

    # -- oracle -----------------------------------------------------------------

    def bracket(self, x: int, y: int) -> tuple[tuple, mpq]:
        key = (x, y)
        hit = self._brackets.get(key)
        if hit is not None:
            return hit
        raw = self._oracle(x, y)
        if isinstance(raw, NCPoly):
            lin, const = [], ZERO
            for mono, c in raw.terms.items():
                if len(mono) == 0:
                    const = c
                elif len(mono) == 1:
                    lin.append((mono[0], c))
                else:
                    raise MalformedOracleError(f"bracket of {x}, {y} has a term of degree {len(mono)}")
        else:
            try:
                terms, const = raw
                lin = [(int(k), q(c)) for k, c in terms]
                const = q(const)
            except (TypeError, ValueError) as exc:
                raise MalformedOracleError(f"bracket of {x}, {y} returned {raw!r}") from exc
        hit = (tuple((k, c) for k, c in lin if c), const)
        self._brackets[key] = hit
        return hit

    def name(self, key: int) -> str:
        if self._names is not None:
            return self._names(key)
        g = self.space.gen(key)
        s = f"J{g.index}"
        if self.space.ell:
            s += f"^({g.degree})"
        if g.mode is not None:
            s += f"[{g.mode}]"
        return s

    # -- straightening ----------------------------------------------------------

    def _store(self, cache: dict, key, value) -> None:
        if len(cache) >= self.memo_limit:
            cache.clear()
        cache[key] = value

    def lmul_gen(self, g: int, mono: Monomial) -> Terms:
        """Normal form of ``g * mono`` for a normal monomial ``mono`` (read only)."""
        if not mono or g <= mono[0]:
            return {(g,) + mono: ONE}
        hit = self._lcache.get((g, mono))
        if hit is not None:
            return hit
        h, rest = mono[0], mono[1:]
        out: dict = {}
        # g h rest = h (g rest) + [g, h] rest
        for m, c in self.lmul_gen(g, rest).items():
            for m2, c2 in self.lmul_gen(h, m).items():
                _acc(out, m2, c * c2)
        lin, const = self.bracket(g, h)
        for k, ck in lin:
            for m2, c2 in self.lmul_gen(k, rest).items():
                _acc(out, m2, ck * c2)
        if const:
            _acc(out, rest, const)
        self._store(self._lcache, (g, mono), out)
        return out

    def rmul_gen(self, mono: Monomial, g: int) -> Terms:
        """Normal form of ``mono * g`` for a normal monomial ``mono`` (read only)."""
        if not mono or mono[-1] <= g:
            return {mono + (g,): ONE}
        hit = self._rcache.get((mono, g))
        if hit is not None:
            return hit
        rest, h = mono[:-1], mono[-1]
        out: dict = {}
        # rest h g = (rest g) h + rest [h, g]
        for m, c in self.rmul_gen(rest, g).items():
            for m2, c2 in self.rmul_gen(m, h).items():
                _acc(out, m2, c * c2)
        lin, const = self.bracket(h, g)
        for k, ck in lin:
            for m2, c2 in self.rmul_gen(rest, k).items():
                _acc(out, m2, ck * c2)
        if const:
            _acc(out, rest, const)
        self._store(self._rcache, (mono, g), out)
        return out

    def mono_mul(self, a: Monomial, b: Monomial) -> Terms:
        """Normal form of the product of two normal monomials."""
        if not a or not b or a[-1] <= b[0]:
            return {a + b: ONE}
        if len(a) <= len(b):
            cur = {b: ONE}
            for g in reversed(a):
                nxt: dict = {}
                for m, c in cur.items():
                    for m2, c2 in self.lmul_gen(g, m).items():
                        _acc(nxt, m2, c * c2)
                cur = nxt
        else:
            cur = {a: ONE}
            for g in b:
                nxt = {}
                for m, c in cur.items():
                    for m2, c2 in self.rmul_gen(m, g).items():
                        _acc(nxt, m2, c * c2)
                cur = nxt
        return cur

    def normal_order(self, word: Iterable[int]) -> "NCPoly":
        """Normal form of an arbitrary (unsorted) word of generators."""
        cur = {(): ONE}
        for g in reversed(tuple(word)):
            nxt: dict = {}
            for m, c in cur.items():
                for m2, c2 in self.lmul_gen(g, m).items():
                    _acc(nxt, m2, c * c2)
            cur = nxt
        return NCPoly(self, cur)

    def clear_cache(self) -> None:
        self._lcache.clear()
        self._rcache.clear()

    def cache_size(self) -> int:
        return len(self._lcache) + len(self._rcache)

    # -- constructors -----------------------------------------------------------

    def zero(self) -> "NCPoly":
        return NCPoly(self, {})

    def one(self) -> "NCPoly":
        return NCPoly(self, {(): ONE})

    def scalar(self, c) -> "NCPoly":
        c = q(c)
        return NCPoly(self, {(): c} if c else {})

    def gen(self, index: int, degree: int = 0, mode: int | None = None) -> "NCPoly":
        return NCPoly(self, {(self.space.key(index, degree, mode),): ONE})

    def from_key(self, key: int) -> "NCPoly":
        return NCPoly(self, {(key,): ONE})

    def linear(self, coeffs: Mapping[int, object]) -> "NCPoly":
        return NCPoly(self, _clean({(k,): q(c) for k, c in coeffs.items()}))

    def from_terms(self, terms: Mapping) -> "NCPoly":
        """Build from possibly unsorted words; each word is normal ordered."""
        out: dict = {}
        for word, c in terms.items():
            c = q(c)
            if not c:
                continue
            for m, c2 in self.normal_order(word).terms.items():
                _acc(out, m, c * c2)
        return NCPoly(self, out)


class NCPoly:
    """A normal-ordered element of an enveloping algebra.

    Treat instances as immutable: ``terms`` may be shared with caches.
    """

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: EnvelopingAlgebra, terms: Terms):
        self.algebra = algebra
        self.terms = terms

    def _check(self, other: "NCPoly") -> None:
        if other.algebra is not self.algebra:
            raise AlgebraMismatchError("operands belong to different enveloping algebras")

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def __eq__(self, other) -> bool:
        if isinstance(other, NCPoly):
            return self.algebra is other.algebra and self.terms == other.terms
        try:
            c = q(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.terms == ({(): c} if c else {})

    __hash__ = None

    def __neg__(self) -> "NCPoly":
        return NCPoly(self.algebra, {m: -c for m, c in self.terms.items()})

    def __add__(self, other) -> "NCPoly":
        if not isinstance(other, NCPoly):
            other = self.algebra.scalar(other)
        self._check(other)
        if len(other.terms) > len(self.terms):
            self, other = other, self
        out = dict(self.terms)
        for m, c in other.terms.items():
            _acc(out, m, c)
        return NCPoly(self.algebra, out)

    __radd__ = __add__

    def __sub__(self, other) -> "NCPoly":
        if not isinstance(other, NCPoly):
            other = self.algebra.scalar(other)
        return self + (-other)

    def __rsub__(self, other) -> "NCPoly":
        return (-self) + other

    def __mul__(self, other) -> "NCPoly":
        if isinstance(other, NCPoly):
            return multiply(self, other)
        c = q(other)
        if not c:
            return self.algebra.zero()
        return NCPoly(self.algebra, {m: c * v for m, v in self.terms.items()})

    def __rmul__(self, other) -> "NCPoly":
        # only scalars reach here
        return self.__mul__(other)

    def degree(self) -> int:
        """Canonical-filtration degree; -1 for zero."""
        return max((len(m) for m in self.terms), default=-1)

    def keys(self) -> set[int]:
        return {g for m in self.terms for g in m}

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]))

    def constant(self) -> mpq:
        return self.terms.get((), ZERO)

    def to_json(self) -> list:
        space = self.algebra.space
        out = []
        for mono, c in self.sorted_terms():
            gens = [space.gen(k) for k in mono]
            out.append({"monomial": [[g.index, g.degree, g.mode] for g in gens], "coeff": qstr(c)})
        return out

    @classmethod
    def from_json(cls, algebra: EnvelopingAlgebra, data: list) -> "NCPoly":
        space = algebra.space
        terms = {}
        for item in data:
            word = tuple(space.key(i, r, p) for i, r, p in item["monomial"])
            terms[word] = item["coeff"]
        return algebra.from_terms(terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, c in self.sorted_terms():
            word = "*".join(self.algebra.name(g) for g in mono)
            if not word:
                parts.append(str(c))
            elif c == 1:
                parts.append(word)
            elif c == -1:
                parts.append("-" + word)
            else:
                parts.append(f"{c}*{word}")
        return " + ".join(parts).replace("+ -", "- ")


def multiply(a: NCPoly, b: NCPoly) -> NCPoly:
    """Normal-ordered product in the common enveloping algebra."""
    a._check(b)
    alg = a.algebra
    out: dict = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            c = ca * cb
            for m, c2 in alg.mono_mul(ma, mb).items():
                _acc(out, m, c * c2)
    return NCPoly(alg, out)


def commutator(a: NCPoly, b: NCPoly) -> NCPoly:
    return multiply(a, b) - multiply(b, a)


class CommPoly:
    """A commutative polynomial in generator keys (sorted tuples as monomials)."""

    __slots__ = ("space", "terms")

    def __init__(self, space: GenSpace, terms: Terms):
        self.space = space
        self.terms = terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, CommPoly):
            return self.terms == other.terms
        try:
            c = q(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.terms == ({(): c} if c else {})

    __hash__ = None

    def __neg__(self) -> "CommPoly":
        return CommPoly(self.space, {m: -c for m, c in self.terms.items()})

    def __add__(self, other) -> "CommPoly":
        if not isinstance(other, CommPoly):
            c = q(other)
            other = CommPoly(self.space, {(): c} if c else {})
        out = dict(self.terms)
        for m, c in other.terms.items():
            _acc(out, m, c)
        return CommPoly(self.space, out)

    __radd__ = __add__

    def __sub__(self, other) -> "CommPoly":
        return self + (-other)

    def __mul__(self, other) -> "CommPoly":
        if not isinstance(other, CommPoly):
            c = q(other)
            return CommPoly(self.space, {m: c * v for m, v in self.terms.items()} if c else {})
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                _acc(out, tuple(sorted(m1 + m2)), c1 * c2)
        return CommPoly(self.space, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "CommPoly":
        out = CommPoly(self.space, {(): ONE})
        for _ in range(n):
            out = out * self
        return out

    @classmethod
    def variable(cls, space: GenSpace, key: int) -> "CommPoly":
        return cls(space, {(key,): ONE})

    def degree(self) -> int:
        return max((len(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({len(m) for m in self.terms}) <= 1

    def variables(self) -> set[int]:
        return {g for m in self.terms for g in m}

    def restrict(self, keep: Callable[[int], bool]) -> "CommPoly":
        """Set every variable failing ``keep`` to zero."""
        return CommPoly(self.space, {m: c for m, c in self.terms.items() if all(keep(g) for g in m)})

    def evaluate(self, point: Mapping[int, mpq]) -> mpq:
        total = ZERO
        for m, c in self.terms.items():
            v = c
            for g in m:
                v *= point[g]
            total += v
        return total

    def gradient(self, point: Mapping[int, mpq]) -> dict[int, mpq]:
        """All first partial derivatives, evaluated at ``point``."""
        grad: dict = {}
        for m, c in self.terms.items():
            for pos, g in enumerate(m):
                if pos and m[pos - 1] == g:
                    continue
                mult = m.count(g)
                v = c * mult
                skipped = False
                for h in m:
                    if h == g and not skipped:
                        skipped = True
                        continue
                    v *= point[h]
                grad[g] = grad.get(g, ZERO) + v
        return grad

    def to_json(self) -> list:
        out = []
        for mono, c in sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0])):
            gens = [self.space.gen(k) for k in mono]
            out.append({"monomial": [[g.index, g.degree, g.mode] for g in gens], "coeff": qstr(c)})
        return out

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{'*'.join(map(str, m)) or '1'}" for m, c in sorted(self.terms.items()))


def symbol(a: NCPoly, degree: int | None = None) -> CommPoly:
    """Top canonical-filtration component of ``a`` as a commutative polynomial.

    With ``degree`` given, the image of ``a`` in the degree-``degree`` graded
    piece instead (zero if ``a`` has lower filtration degree).
    """
    top = a.degree() if degree is None else degree
    return CommPoly(a.algebra.space, {m: c for m, c in a.terms.items() if len(m) == top})


def _rule_terms(rule: Callable, g: int) -> tuple:
    out = rule(g)
    if out is None:
        return ()
    if isinstance(out, NCPoly):
        if any(len(m) != 1 for m in out.terms):
            raise MalformedOracleError(f"derivation rule is not linear on generator {g}")
        return tuple((m[0], c) for m, c in out.terms.items())
    if isinstance(out, Mapping):
        return tuple((k, q(c)) for k, c in out.items() if c)
    return tuple((k, q(c)) for k, c in out if c)


def act_derivation(rule: Callable, a):
    """Extend a linear map on generators to a derivation and apply it.

    ``rule(key)`` returns the image of one generator as a mapping or iterable
    of ``(key, coeff)`` pairs (or a degree-1 NCPoly).  Works on both
    :class:`NCPoly` (re-normal-ordered) and :class:`CommPoly`.
    """
    images: dict = {}

    def image(g):
        hit = images.get(g)
        if hit is None:
            hit = images[g] = _rule_terms(rule, g)
        return hit

    out: dict = {}
    if isinstance(a, CommPoly):
        for mono, c in a.terms.items():
            for pos, g in enumerate(mono):
                rest = mono[:pos] + mono[pos + 1:]
                for k, ck in image(g):
                    _acc(out, tuple(sorted(rest + (k,))), c * ck)
        return CommPoly(a.space, out)
    alg = a.algebra
    for mono, c in a.terms.items():
        for pos, g in enumerate(mono):
            left, right = mono[:pos], mono[pos + 1:]
            for k, ck in image(g):
                for m1, c1 in alg.lmul_gen(k, right).items():
                    for m2, c2 in alg.mono_mul(left, m1).items():
                        _acc(out, m2, c * ck * c1 * c2)
    return NCPoly(alg, out)
