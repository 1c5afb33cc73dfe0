import random
from itertools import combinations

import pytest

from satake.errors import DimensionMismatch, OutOfRange
from satake.exterior import WedgeVector, derivation_action, wedge_normalize
from satake.pfaffian import RingMatrix


def xi(n):
    """Principal nilpotent: 1 on the subdiagonal."""
    m = RingMatrix.zeros(n, n)
    for i in range(n - 1):
        m.rows[i + 1][i] = 1
    return m


def rand_matrix(n, rng):
    return RingMatrix([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])


def rand_vector(k, n, rng):
    return WedgeVector(k, n, {I: rng.randint(-4, 4) for I in combinations(range(1, n + 1), k)})


def test_wedge_normalize_examples():
    assert wedge_normalize((3, 1), 1, 4) == WedgeVector(2, 4, {(1, 3): -1})
    assert wedge_normalize((2, 2), 1, 4).is_zero()
    assert wedge_normalize((1, 2), 5, 4) == WedgeVector(2, 4, {(1, 2): 5})
    assert wedge_normalize((3, 1, 2), 1, 4) == WedgeVector(3, 4, {(1, 2, 3): 1})
    with pytest.raises(OutOfRange):
        wedge_normalize((0, 1), 1, 4)
    with pytest.raises(OutOfRange):
        wedge_normalize((5,), 1, 4)


def test_antisymmetry_cancellation():
    # e2^e2 + e1^e3 = e1^e3
    v = wedge_normalize((2, 2), 1, 4) + wedge_normalize((1, 3), 1, 4)
    assert v == WedgeVector(2, 4, {(1, 3): 1})


def test_xi_on_lowest_class():
    assert derivation_action(xi(4), WedgeVector(2, 4, {(1, 2): 1})) == WedgeVector(2, 4, {(1, 3): 1})


def test_xi_squared_is_power_sum():
    M = xi(5)
    v = derivation_action(M @ M, WedgeVector(2, 5, {(2, 3): 1}))
    assert v == WedgeVector(2, 5, {(2, 5): 1, (3, 4): -1})


def test_zero_matrix():
    rng = random.Random(0)
    v = rand_vector(2, 4, rng)
    assert derivation_action(RingMatrix.zeros(4, 4), v).is_zero()


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        derivation_action(xi(3), WedgeVector(1, 4, {(1,): 1}))


def test_linear_and_lie_homomorphism():
    rng = random.Random(7)
    for n in range(1, 6):
        for k in range(1, min(n, 3) + 1):
            for _ in range(3):
                M, N = rand_matrix(n, rng), rand_matrix(n, rng)
                v, w = rand_vector(k, n, rng), rand_vector(k, n, rng)
                c = rng.randint(-3, 3)
                assert derivation_action(M, v + w.scale(c)) == \
                    derivation_action(M, v) + derivation_action(M, w).scale(c)
                lhs = derivation_action(M @ N - N @ M, v)
                rhs = derivation_action(M, derivation_action(N, v)) - \
                    derivation_action(N, derivation_action(M, v))
                assert lhs == rhs


def test_top_degree_is_trace():
    rng = random.Random(3)
    for n in range(1, 6):
        M = rand_matrix(n, rng)
        top = WedgeVector(n, n, {tuple(range(1, n + 1)): 1})
        tr = sum(M.rows[i][i] for i in range(n))
        assert derivation_action(M, top) == top.scale(tr)


def test_iterated_action_is_not_matrix_power():
    M = xi(4)
    v = WedgeVector(2, 4, {(1, 2): 1})
    iterated = derivation_action(M, derivation_action(M, v))
    squared = derivation_action(M @ M, v)
    assert iterated == WedgeVector(2, 4, {(1, 4): 1, (2, 3): 1})
    assert squared == WedgeVector(2, 4, {(1, 4): 1, (2, 3): -1})
    assert iterated != squared
