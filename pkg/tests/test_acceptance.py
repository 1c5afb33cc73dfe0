"""Acceptance criteria 1-10.

Each check prints one line: criterion number, PASS or FAIL, elapsed time and
the time budget. Run directly (python3 tests/test_acceptance.py) for just the
summary lines, or through pytest.
"""
import io
import os
import random
import sys
import time
import traceback
from itertools import combinations

import pytest

from satake import cli
from satake.clifford import (random_isotropic_data, spinor_expand_bruteforce,
                             spinor_expand_pfaffian, transition_from_blocks)
from satake.combinatorics import Partition, even_subsets, partitions_in_rectangle
from satake.exterior import WedgeVector
from satake.pfaffian import RingMatrix, determinant, pfaffian, pfaffian_sub
from satake.poly import Poly, RatLin, poly_exact_div
from satake import quantum as qm
from satake import typea, typed
from satake.clifford import bar

HERE = os.path.dirname(os.path.abspath(__file__))
A_RANKS = [(k, n) for n in range(1, 7) for k in range(1, min(n, 3) + 1)]


def t(i):
    return Poly.var(f"t{i}")


# criterion bodies: each raises AssertionError on the first failure

def crit1():
    for k, n in A_RANKS:
        ctx = typea.GrContext(k, n)
        xi = typea.build_xi_t(ctx)
        for I in ctx.subsets():
            got = typea.chevalley_action(ctx, WedgeVector(k, n, {I: 1}), xi)
            assert got == typea.chevalley_formula(ctx, I), (k, n, I)


def crit2():
    for n in range(1, 9):
        ctx = typea.GrContext(1, n)
        xi = typea.build_xi_t(ctx)
        acc = xi
        for j in range(1, n):
            assert typea.xi_power_entries(ctx, j) == acc, (n, j)
            acc = acc @ xi
    # the worked example: xi_t^2 on e2^e3 in n = 5 (diagonal as in the ledger)
    ctx = typea.GrContext(2, 5)
    got = typea.power_action(ctx, 2, WedgeVector(2, 5, {(2, 3): 1}))
    want = WedgeVector(2, 5, {(2, 5): 1, (3, 4): -1, (2, 4): -(t(3) + t(4)),
                              (2, 3): t(3) ** 2 - t(1) ** 2})
    assert got == want
    sq = typea.xi_power_entries(ctx, 2)
    assert [sq.rows[r][1] for r in range(5)] == [0, t(2) ** 2, -(t(2) + t(3)), 1, 0]


def crit3():
    for k, n in A_RANKS:
        ctx = typea.GrContext(k, n)
        table = typea.restriction_table(ctx)
        for lam in ctx.partitions():
            s = typea.factorial_schur(lam, ctx)
            for J in ctx.subsets():
                assert typea.giambelli_check(ctx, lam, J, table=table, schur=s), (k, n, lam, J)
    # matrix M for P^3, entered by hand, and the golden file
    P = Poly.parse
    M = [["1", "0", "0", "0"],
         ["1", "t1-t2", "0", "0"],
         ["1", "t1-t3", "(t1-t3)*(t2-t3)", "0"],
         ["1", "t1-t4", "(t1-t4)*(t2-t4)", "(t1-t4)*(t2-t4)*(t3-t4)"]]
    table = typea.restriction_table(typea.GrContext(1, 4))
    for j in range(4):
        for i in range(4):
            assert table[Partition((i,) if i else ()), (j + 1,)] == P(M[j][i])
    _golden_case("a_matrix_M_P3")


def crit4():
    for k, n in A_RANKS:
        ctx = typea.GrContext(k, n)
        T = typea.restriction_table(ctx)
        for J in ctx.subsets():
            for a in J:
                for b in range(a + 1, n + 1):
                    if b in J:
                        continue
                    J2 = tuple(sorted(set(J) - {a} | {b}))
                    for lam in ctx.partitions():
                        poly_exact_div(T[lam, J] - T[lam, J2], t(a) - t(b))
    for n in range(3, 7):
        ctx = typed.QuadricContext(n)
        T = typed.quadric_restrictions(ctx)
        for p, p2, w in typed.quadric_gkm_edges(ctx):
            for a in ctx.labels:
                poly_exact_div(T[a, p] - T[a, p2], w)
    for n in range(3, 6):
        ctx = typed.QuadricContext(n)
        T = typed.og_restriction_table(ctx)
        for K, K2, w in typed.og_gkm_edges(ctx):
            for I in T.subsets():
                poly_exact_div(T[I, K] - T[I, K2], w)


def crit5():
    for n in range(3, 7):
        ctx = typed.QuadricContext(n)
        top = t(n - 1)
        nz = lambda d: {c: v for c, v in d.items() if not v == 0}
        for i in range(n):
            got = typed.quadric_chevalley(ctx, bar(i))
            if i > 1:
                assert got == nz({bar(i - 1): 1, bar(i): t(i) - top})
            elif i == 1:
                assert got == {bar(0): 1, 0: 1, bar(1): t(1) - top}
            else:
                assert got == {1: 1, bar(0): t(0) - top}
            want = {i: -t(i) - top}
            if i + 1 < n:
                want[i + 1] = Poly.const(1)
            assert typed.quadric_chevalley(ctx, i) == nz(want)
            for code in (bar(i), i):
                assert typed.quadric_chevalley_via_xi(ctx, code) == typed.quadric_chevalley(ctx, code)
    for n in range(3, 6):
        ctx = typed.QuadricContext(n)
        xi = typed.build_xi_t_D(ctx)
        sq = xi @ xi
        acc = xi
        for j in range(1, n):
            assert typed.odd_power_closed_form(ctx, j) == acc, (n, j)
            acc = acc @ sq
        eta = typed.build_eta_t(ctx)
        zero = RingMatrix.zeros(2 * n, 2 * n, ctx.labels, ctx.labels)
        assert typed.commutator(xi, eta) == zero
        assert typed.form_compatible(ctx, eta)
    P = Poly.parse
    display = [
        ["-t0*t1*t2", 0, 0, 0, 0, 0, 0, 0],
        ["-t0*t1", "-t0*t1*t3", 0, 0, 0, 0, 0, 0],
        ["-t0", "-t0*t3", "-t0*t2*t3", 0, 0, 0, 0, 0],
        [-1, "-t3", "-t2*t3", "-t1*t2*t3", 0, 0, 0, 0],
        [1, "t3", "t2*t3", 0, "t1*t2*t3", 0, 0, 0],
        [0, 0, 0, "-t2*t3", "t2*t3", "t0*t2*t3", 0, 0],
        [0, 0, 0, "-t3", "t3", "t0*t3", "t0*t1*t3", 0],
        [0, 0, 0, -1, 1, "t0", "t0*t1", "t0*t1*t2"],
    ]
    want = [[P(x) if isinstance(x, str) else Poly.const(x) for x in r] for r in display]
    assert typed.build_eta_t(typed.QuadricContext(4)).rows == want


def crit6():
    for n in range(1, 6):
        rng = random.Random(600 + n)
        for _ in range(20):
            _, B, C, cbar = random_isotropic_data(n, rng)
            X = transition_from_blocks(C, B, n, cbar)
            for I in even_subsets(n):
                assert spinor_expand_pfaffian(C, B, I, cbar=cbar) == \
                    spinor_expand_bruteforce(X, I), (n, I)


def _schur_matrix(n):
    xs = [Poly.var(f"x{i}") for i in range(n)]
    return RingMatrix([[RatLin(xs[i] - xs[j], [xs[i] + xs[j]]) if i != j else RatLin(0)
                        for j in range(n)] for i in range(n)])


def _schur_product(idx):
    out = RatLin(1)
    for i, j in combinations(idx, 2):
        xi, xj = Poly.var(f"x{i}"), Poly.var(f"x{j}")
        out = out * RatLin(xi - xj, [xi + xj])
    return out


def crit7():
    for n in range(0, 7):
        A = _schur_matrix(n)
        assert pfaffian(A) == (_schur_product(range(n)) if n % 2 == 0 else 0)
        for r in range(0, n + 1, 2):
            for K in combinations(range(n), r):
                assert pfaffian_sub(A, K) == _schur_product(K)
    rng = random.Random(7)
    for n in range(1, 7):
        a = {(i, j): Poly.var(f"a{i}{j}") for i, j in combinations(range(n), 2)}
        G = RingMatrix([[a[i, j] if i < j else (-a[j, i] if i > j else Poly.const(0))
                         for j in range(n)] for i in range(n)])
        assert pfaffian(G) ** 2 == determinant(G)
        for _ in range(3):
            v = {(i, j): Poly.const(rng.randint(-9, 9)) + rng.randint(-3, 3) * t(1)
                 for i, j in combinations(range(n), 2)}
            R = RingMatrix([[v[i, j] if i < j else (-v[j, i] if i > j else Poly.const(0))
                             for j in range(n)] for i in range(n)])
            assert pfaffian(R) ** 2 == determinant(R)


def crit8():
    for n in (4, 5):
        ctx = typed.QuadricContext(n)
        table = typed.og_restriction_table(ctx)
        for I in even_subsets(n):
            Pf = typed.factorial_schur_P(I, n)
            for K in even_subsets(n):
                assert typed.giambelli_check_D(n, I, K, ctx=ctx, P=Pf, table=table), (n, I, K)


def crit9():
    for n in range(2, 7):
        for k in range(1, min(n - 1, 3) + 1):
            for mu in partitions_in_rectangle(k, n - k):
                assert qm.quantum_product(k, n, (1,), mu) == \
                    qm.quantum_chevalley(k, n, qm.QClass.basis(k, n, mu)), (k, n, mu)
    for k, n in [(2, 4), (2, 5), (3, 6)]:
        rng = random.Random(900 + n)
        parts = partitions_in_rectangle(k, n - k)
        for _ in range(50):
            a, b, c = (qm.QClass.basis(k, n, rng.choice(parts)) for _ in range(3))
            assert qm.multiply(a, b) == qm.multiply(b, a)
            assert qm.multiply(qm.multiply(a, b), c) == qm.multiply(a, qm.multiply(b, c))
    for n in range(2, 6):
        for k in range(1, min(n - 1, 3) + 1):
            zero = qm.QClass(k, n)
            for g in qm.kernel_generators(k, n, 2 * n):
                assert qm.psi_map(g, n) == zero
                for j in range(1, k + 1):
                    assert qm.psi_map(qm.power_action_infinite(g, j, n), n) == zero, (k, n, j)
    assert qm.rimhook_data((7, 6, 3), 3, 7) == (Partition((1, 1)), 2, 4, 0)
    assert qm.psi_map(qm.InfiniteClass(3, 7, {(7, 6, 3): 1}), 7) == \
        qm.QClass(3, 7, {(1, 1): qm.Q ** 2})
    _golden_case("rimhook_763")


def _golden_case(name):
    sys.path.insert(0, os.path.join(HERE, "golden"))
    import regen
    case = next(c for c in regen.load_manifest() if c["name"] == name)
    code, out, err = regen.run_case(case["argv"])
    assert code == case.get("exit", 0), err
    with open(regen.expected_path(name)) as fh:
        assert out == fh.read(), f"golden mismatch: {name}"


def crit10():
    sys.path.insert(0, os.path.join(HERE, "golden"))
    import regen
    for case in regen.load_manifest():
        _golden_case(case["name"])


CRITERIA = [
    (1, "type A Chevalley/Satake consistency, k<=3, n<=6", crit1, 5),
    (2, "matrix-power formula, n<=8", crit2, 5),
    (3, "type A Giambelli, k<=3, n<=6, matrix M", crit3, 60),
    (4, "GKM divisibility, types A and D", crit4, 60),
    (5, "quadric Chevalley, odd powers, eta_t", crit5, 10),
    (6, "Pfaffian spinor expansion vs Clifford oracle, 20 trials per n<=5", crit6, 120),
    (7, "Schur Pfaffian identity and Pf^2 = det, n<=6", crit7, 10),
    (8, "type D Giambelli, n = 4, 5", crit8, 300),
    (9, "rim-hook rule: divisor, associativity, kernel, (7,6,3)", crit9, 300),
    (10, "golden CLI suite", crit10, 60),
]


def run_criterion(num, title, fn, budget, write=print):
    start = time.perf_counter()
    err = None
    try:
        fn()
    except Exception:
        err = traceback.format_exc(limit=3)
    elapsed = time.perf_counter() - start
    if err is None and elapsed > budget:
        err = f"over the {budget} s budget"
    status = "PASS" if err is None else "FAIL"
    write(f"criterion {num:2d} {status}  {elapsed:7.2f}s / {budget}s  {title}")
    return err


@pytest.mark.parametrize("num,title,fn,budget", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(num, title, fn, budget, capsys):
    with capsys.disabled():
        err = run_criterion(num, title, fn, budget, write=lambda s: print("\n" + s))
    assert err is None, err


if __name__ == "__main__":
    failures = [run_criterion(*c) for c in CRITERIA]
    sys.exit(1 if any(failures) else 0)
