"""Independent reference implementations used by the tests.

Nothing here imports the engine's arithmetic: coefficients are
``fractions.Fraction`` and straightening is plain adjacent-swap rewriting.
"""

from fractions import Fraction


def frac(x) -> Fraction:
    return Fraction(str(x))


def takiff_bracket_table(alg, ell):
    """(r, i), (s, j) -> {(r + s, k): c} from the base structure constants.

    Generators are (degree, index) pairs so that tuple order is the PBW order.
    """
    table = {}
    for i in range(alg.dim):
        for j in range(alg.dim):
            terms = alg.bracket(i, j)
            for r in range(ell + 1):
                for s in range(ell + 1):
                    if r + s <= ell:
                        table[(r, i), (s, j)] = {(r + s, k): frac(c) for k, c in terms}
                    else:
                        table[(r, i), (s, j)] = {}
    return table


def naive_normal_order(word, table) -> dict:
    """Rewrite x y -> y x + [x, y] at the leftmost descent until every word is sorted."""
    todo = {tuple(word): Fraction(1)}
    done: dict = {}
    while todo:
        w, c = todo.popitem()
        if not c:
            continue
        for pos in range(len(w) - 1):
            if w[pos] > w[pos + 1]:
                x, y = w[pos], w[pos + 1]
                swapped = w[:pos] + (y, x) + w[pos + 2:]
                todo[swapped] = todo.get(swapped, 0) + c
                for z, cz in table[x, y].items():
                    shorter = w[:pos] + (z,) + w[pos + 2:]
                    todo[shorter] = todo.get(shorter, 0) + c * cz
                break
        else:
            done[w] = done.get(w, 0) + c
    return {w: c for w, c in done.items() if c}


# -- matrices over Fraction -----------------------------------------------------------


def mat_mul(a, b):
    n, m, p = len(a), len(b), len(b[0])
    return [[sum((a[i][k] * b[k][j] for k in range(m)), Fraction(0)) for j in range(p)] for i in range(n)]


def mat_add(a, b, cb=1):
    return [[x + cb * y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def kron(a, b):
    return [[x * y for x in ra for y in rb] for ra in a for rb in b]


def shift_power(ell, r):
    """N^r for the nilpotent shift N e_i = e_{i+1} on C^(ell+1)."""
    n = ell + 1
    return [[Fraction(int(i == j + r)) for j in range(n)] for i in range(n)]


def takiff_rep(rep, ell):
    """X v^r -> rho(X) (x) N^r, a faithful representation of the Takiff algebra."""
    mats = [[[frac(x) for x in row] for row in m] for m in rep.matrices]
    return {(r, i): kron(mats[i], shift_power(ell, r)) for i in range(len(mats)) for r in range(ell + 1)}


def evaluate_word_dict(terms, images, size):
    """Image of sum c * (x1 x2 ...) with x = (degree, index) under a representation."""
    total = [[Fraction(0)] * size for _ in range(size)]
    for word, c in terms.items():
        m = mat_identity(size)
        for x in word:
            m = mat_mul(m, images[x])
        total = mat_add(total, m, Fraction(c))
    return total
