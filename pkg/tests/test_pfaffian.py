import random
from itertools import combinations

import pytest

from satake.errors import NotSkew, NotSquare
from satake.pfaffian import RingMatrix, bordered_pfaffian, determinant, pfaffian, pfaffian_sub
from satake.poly import Poly, RatLin

P = Poly.parse


def skew_from(entries, n):
    rows = [[0] * n for _ in range(n)]
    for (i, j), v in entries.items():
        rows[i][j] = v
        rows[j][i] = -v
    return RingMatrix(rows)


def generic_skew(n, letter="a"):
    return skew_from({(i, j): Poly.var(f"{letter}{i}{j}") for i, j in combinations(range(n), 2)}, n)


def random_poly(rng):
    names = ["t1", "t2", "x0"]
    terms = {tuple(rng.randint(0, 1) for _ in names): rng.randint(-3, 3) for _ in range(3)}
    return Poly.from_dict(terms, names)


def schur_matrix(n):
    xs = [Poly.var(f"x{i}") for i in range(n)]
    return RingMatrix([[RatLin(xs[i] - xs[j], [xs[i] + xs[j]]) if i != j else RatLin(0)
                        for j in range(n)] for i in range(n)])


def schur_product(xs_idx):
    out = RatLin(1)
    for i, j in combinations(xs_idx, 2):
        xi, xj = Poly.var(f"x{i}"), Poly.var(f"x{j}")
        out = out * RatLin(xi - xj, [xi + xj])
    return out


def test_determinant_examples():
    assert determinant(RingMatrix.identity(3)) == 1
    p = P("t1*x0 - 2")
    assert determinant(RingMatrix([[p]])) == p
    with pytest.raises(NotSquare):
        determinant(RingMatrix([[1, 2]]))


def test_vandermonde():
    for k in range(1, 6):
        xs = [Poly.var(f"x{j}") for j in range(1, k + 1)]
        V = RingMatrix([[xs[j] ** i for j in range(k)] for i in range(k)])
        expected = Poly.const(1)
        for a, b in combinations(range(k), 2):
            expected = expected * (xs[b] - xs[a])
        assert determinant(V) == expected
        # the product written the other way round differs by a sign
        sign = (-1) ** (k * (k - 1) // 2)
        flipped = Poly.const(1)
        for a, b in combinations(range(k), 2):
            flipped = flipped * (xs[a] - xs[b])
        assert expected == flipped * sign


def test_pfaffian_examples():
    a = P("a")
    assert pfaffian(RingMatrix([[0, a], [-a, 0]])) == a
    A = generic_skew(4)
    v = lambda i, j: Poly.var(f"a{i}{j}")
    assert pfaffian(A) == v(0, 1) * v(2, 3) - v(0, 2) * v(1, 3) + v(0, 3) * v(1, 2)
    assert pfaffian(RingMatrix([])) == 1
    assert pfaffian(generic_skew(3)) == 0
    with pytest.raises(NotSkew):
        pfaffian(RingMatrix([[0, 1], [1, 0]]))
    with pytest.raises(NotSkew):
        pfaffian(RingMatrix([[1, 1], [-1, 0]]))


def test_pfaffian_sub_examples():
    A = generic_skew(6)
    assert pfaffian_sub(A, []) == 1
    assert pfaffian_sub(A, range(6)) == pfaffian(A)
    assert pfaffian_sub(A, [1, 4]) == Poly.var("a14")
    labelled = RingMatrix(A.rows, row_labels=list("uvwxyz"), col_labels=list("uvwxyz"))
    assert pfaffian_sub(labelled, ["v", "y"]) == Poly.var("a14")


def test_pf_squared_is_det_generic():
    for n in (2, 4, 6):
        A = generic_skew(n)
        assert pfaffian(A) ** 2 == determinant(A)


def test_pf_squared_is_det_random():
    rng = random.Random(11)
    for n in (2, 4, 6, 8):
        for _ in range(3 if n < 8 else 1):
            A = skew_from({(i, j): random_poly(rng) for i, j in combinations(range(n), 2)}, n)
            assert pfaffian(A) ** 2 == determinant(A)


def test_schur_identity():
    for n in range(0, 7):
        A = schur_matrix(n)
        assert pfaffian(A) == (schur_product(range(n)) if n % 2 == 0 else 0)


def test_schur_identity_submatrices():
    A = schur_matrix(6)
    for r in (0, 2, 4, 6):
        for K in combinations(range(6), r):
            assert pfaffian_sub(A, K) == schur_product(K)


def test_scaling_law():
    rng = random.Random(5)
    for n in (2, 4, 6):
        A = skew_from({(i, j): random_poly(rng) for i, j in combinations(range(n), 2)}, n)
        d = [random_poly(rng) for _ in range(n)]
        DAD = RingMatrix([[d[i] * A.rows[i][j] * d[j] for j in range(n)] for i in range(n)])
        detD = Poly.const(1)
        for x in d:
            detD = detD * x
        assert pfaffian(DAD) == detD * pfaffian(A)


def test_bordered_pfaffian_matches_assembled_matrix():
    rng = random.Random(2)
    for m, r in [(3, 1), (4, 2), (5, 1), (5, 3), (6, 2)]:
        A = skew_from({(i, j): rng.randint(-4, 4) for i, j in combinations(range(m), 2)}, m)
        B = RingMatrix([[rng.randint(-3, 3) for _ in range(r)] for _ in range(m)])
        for size in range(r, m + 1):
            for K in combinations(range(m), size):
                Kl = list(K)
                full = [[A.rows[i][j] for j in Kl] + B.rows[i] for i in Kl]
                for c in range(r):
                    full.append([-B.rows[i][c] for i in Kl] + [0] * r)
                assert bordered_pfaffian(A, B, K) == pfaffian(RingMatrix(full))
