import itertools
import random

import pytest

from takiff.liealg import build_algebra
from takiff.rational import q
from takiff.tensor import TensorOperator, partial_trace, partial_transpose, trace_of_power


def random_operator(N, legs, rng, density=0.7):
    labels = list(itertools.product(range(N), repeat=legs))
    return TensorOperator(N, legs, {
        (r, c): q(rng.randint(-9, 9)) / rng.randint(1, 5)
        for r in labels for c in labels if rng.random() < density
    })


def test_permutation_squares_to_identity():
    P = TensorOperator.permutation(3)
    assert P @ P == TensorOperator.identity(3, 2)


def test_kron_and_embed_agree():
    rng = random.Random(0)
    a, b = random_operator(2, 1, rng), random_operator(2, 1, rng)
    assert TensorOperator.kron(a, b) == a.embed(2, [1]) @ b.embed(2, [2])


def test_embed_swaps_legs_via_permutation():
    rng = random.Random(1)
    x = random_operator(3, 2, rng)
    P = TensorOperator.permutation(3)
    assert x.embed(2, [2, 1]) == P @ x @ P


def test_embed_rejects_bad_positions():
    x = TensorOperator.identity(2)
    with pytest.raises(ValueError):
        x.embed(2, [3])
    with pytest.raises(ValueError):
        TensorOperator.identity(2, 2).embed(3, [1, 1])


def test_partial_trace_of_permutation_is_identity():
    P = TensorOperator.permutation(4)
    assert partial_trace(P, 1) == TensorOperator.identity(4)
    assert partial_trace(P, 2) == TensorOperator.identity(4)


def test_partial_transposes_compose_to_transpose():
    rng = random.Random(2)
    x = random_operator(2, 2, rng)
    assert partial_transpose(partial_transpose(x, 1), 2) == x.transpose()
    assert partial_transpose(partial_transpose(x, 1), 1) == x


@pytest.mark.parametrize("seed", range(20))
def test_partial_trace_transpose_identity(seed):
    rng = random.Random(seed)
    x, y = random_operator(3, 2, rng), random_operator(3, 2, rng)
    lhs = (x @ y).partial_trace(1)
    rhs = (x.partial_transpose(1) @ y.partial_transpose(1)).partial_trace(1)
    assert lhs == rhs


def test_partial_trace_transpose_identity_noncommutative_entries():
    alg, rep = build_algebra("A1")
    env = alg.enveloping
    rng = random.Random(4)
    labels = list(itertools.product(range(2), repeat=2))

    def op():
        return TensorOperator(2, 2, {(r, c): env.gen(rng.randrange(3)) * rng.randint(-2, 2)
                                     for r in labels for c in labels})

    for _ in range(5):
        x, y = op(), op()
        assert (x @ y).partial_trace(1) == (x.partial_transpose(1) @ y.partial_transpose(1)).partial_trace(1)


def test_trace_of_power_matches_naive():
    rng = random.Random(9)
    x = random_operator(3, 1, rng)
    for m in range(1, 5):
        p = x
        for _ in range(m - 1):
            p = p @ x
        assert trace_of_power(x, m) == p.trace()
    with pytest.raises(ValueError):
        trace_of_power(x, 0)


def test_product_keeps_factor_order():
    alg, _ = build_algebra("A1")
    env = alg.enveloping
    e, f = env.gen(1), env.gen(2)
    X = TensorOperator(1, 1, {((0,), (0,)): e})
    Y = TensorOperator(1, 1, {((0,), (0,)): f})
    assert (X @ Y)[0, 0] == e * f
    assert (Y @ X)[0, 0] == f * e
    assert (X @ Y - Y @ X)[0, 0] == env.gen(0)


def test_to_dense_row_order():
    x = TensorOperator(2, 2, {((0, 1), (1, 0)): q(5)})
    dense = x.to_dense()
    assert dense[1][2] == 5 and sum(v for row in dense for v in row) == 5
