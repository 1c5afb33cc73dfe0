"""Equivariant Schubert calculus of the Grassmannian Gr(k, n) in the
exterior-power model.

Schubert classes sigma_lambda are identified with the wedge basis vectors
e_I, I being the k-subset of lambda.  These are the *opposite* Schubert
classes: sigma_lambda restricted to the fixed point p_J is nonzero exactly
when J >= I(lambda).  The equivariant parameters are t_1..t_n and the
divisor class acts through the twisted derivation action of xi_t.
"""
from __future__ import annotations

from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .combinatorics import (Partition, partition_to_subset, partitions_in_rectangle,
                            subset_to_partition)
from .errors import CardinalityMismatch, RepeatedTValues
from .exterior import WedgeVector, derivation_action
from .pfaffian import RingMatrix, determinant
from .poly import Poly, RatLin, complete_homogeneous, factorial_power, poly_exact_div


class GrContext:
    """Gr(k, n) with an alphabet t_1..t_n (Poly values, default variables)."""

    def __init__(self, k: int, n: int, t: Optional[Sequence[Poly]] = None):
        if not 1 <= k <= n:
            raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
        self.k = k
        self.n = n
        if t is None:
            t = [Poly.var(f"t{i}") for i in range(1, n + 1)]
        t = [Poly.coerce(x) for x in t]
        if len(t) < n:
            raise ValueError("alphabet shorter than n")
        self.t = list(t)

    def tv(self, i: int) -> Poly:
        """t_i, 1-based."""
        return self.t[i - 1]

    def partitions(self) -> List[Partition]:
        return partitions_in_rectangle(self.k, self.n - self.k)

    def subsets(self) -> List[Tuple[int, ...]]:
        return list(combinations(range(1, self.n + 1), self.k))

    def subset(self, lam) -> Tuple[int, ...]:
        return partition_to_subset(lam, self.k)

    def partition(self, I) -> Partition:
        return subset_to_partition(I, self.k)

    def basis_vector(self, lam, coeff=1) -> WedgeVector:
        return WedgeVector(self.k, self.n, {self.subset(lam): coeff})

    def twist(self) -> Poly:
        return sum(self.t[:self.k], Poly.const(0))

    def __repr__(self):
        return f"GrContext(k={self.k}, n={self.n})"


def build_xi_t(ctx: GrContext, q=None) -> RingMatrix:
    """-t_i on the diagonal and 1 on the subdiagonal; q (if given) sits in
    the top-right corner."""
    n = ctx.n
    labels = list(range(1, n + 1))
    m = RingMatrix.zeros(n, n, labels, labels)
    for i in range(n):
        m.rows[i][i] = -ctx.t[i]
        if i + 1 < n:
            m.rows[i + 1][i] = 1
    if q is not None and n > 1:
        m.rows[0][n - 1] = q
    elif q is not None:
        m.rows[0][0] = m.rows[0][0] + q
    return m


def xi_power_entries(ctx: GrContext, j: int) -> RingMatrix:
    """Closed form for xi_t^j: entry (i+j-a, i) is (-1)^a h_a(t_i..t_{i+j-a})."""
    if j < 0:
        raise ValueError("negative power")
    n = ctx.n
    labels = list(range(1, n + 1))
    m = RingMatrix.zeros(n, n, labels, labels)
    for i in range(1, n + 1):
        for a in range(j + 1):
            row = i + j - a
            if row > n:
                continue
            h = complete_homogeneous(a, ctx.t[i - 1:row])
            m.rows[row - 1][i - 1] = h if a % 2 == 0 else -h
    return m


def chevalley_action(ctx: GrContext, v: WedgeVector, xi: Optional[RingMatrix] = None) -> WedgeVector:
    """Twisted action of xi_t: derivation action plus (t_1 + ... + t_k) v."""
    xi = build_xi_t(ctx) if xi is None else xi
    return derivation_action(xi, v) + v.scale(ctx.twist())


def power_action(ctx: GrContext, j: int, v: WedgeVector) -> WedgeVector:
    """Derivation action of xi_t^j minus sum_{a<=k} (-t_a)^j v."""
    if j < 1:
        raise ValueError("power must be at least 1")
    shift = sum(((-x) ** j for x in ctx.t[:ctx.k]), Poly.const(0))
    return derivation_action(xi_power_entries(ctx, j), v) - v.scale(shift)


def chevalley_formula(ctx: GrContext, I: Sequence[int]) -> WedgeVector:
    """sum over I+ of e_{I+} plus (t_1+..+t_k - t_{i_1} - .. - t_{i_k}) e_I."""
    I = tuple(I)
    out = WedgeVector(ctx.k, ctx.n)
    for a, i in enumerate(I):
        if i < ctx.n and i + 1 not in I:
            out._add_term(I[:a] + (i + 1,) + I[a + 1:], Poly.const(1))
    weight = ctx.twist() - sum((ctx.tv(i) for i in I), Poly.const(0))
    out._add_term(I, weight)
    return out


def _check_distinct(ctx: GrContext):
    for a in range(ctx.n):
        for b in range(a + 1, ctx.n):
            if ctx.t[a] == ctx.t[b]:
                raise RepeatedTValues(f"t_{a + 1} = t_{b + 1}")


def fixed_point_vectors(ctx: GrContext):
    """Eigenvectors f_i of xi_t on the standard representation (k = 1) and
    their rescalings fbar_i, which sum to e_1."""
    if ctx.k != 1:
        raise CardinalityMismatch("fixed-point vectors are defined for k = 1")
    _check_distinct(ctx)
    n = ctx.n
    f, fbar = [], []
    for i in range(1, n + 1):
        coeffs = {(i,): RatLin(1)}
        c = RatLin(1)
        for m in range(i + 1, n + 1):
            c = c / (ctx.tv(m) - ctx.tv(i))
            coeffs[(m,)] = c
        fi = WedgeVector(1, n, coeffs)
        scale = RatLin(1)
        for l in range(1, i):
            scale = scale / (ctx.tv(l) - ctx.tv(i))
        f.append(fi)
        fbar.append(fi.scale(scale))
    return f, fbar


def fixed_point_matrix(ctx: GrContext) -> RingMatrix:
    """Matrix M with e_i = sum_j M[j][i] fbar_j (rows: fixed points j,
    columns: basis vectors i), obtained by inverting the fbar expansion."""
    _, fbar = fixed_point_vectors(ctx)
    n = ctx.n
    # F[m][j] = coefficient of e_m in fbar_j; lower triangular
    F = [[fbar[j].coeff((m + 1,)) for j in range(n)] for m in range(n)]
    M = [[RatLin(0)] * n for _ in range(n)]
    for i in range(n):
        # solve F x = e_i by forward substitution
        x = [RatLin(0)] * n
        for m in range(n):
            rhs = RatLin(1 if m == i else 0)
            for j in range(m):
                if not F[m][j] == 0 and not x[j] == 0:
                    rhs = rhs - F[m][j] * x[j]
            x[m] = rhs / F[m][m] if not rhs == 0 else RatLin(0)
        for j in range(n):
            M[j][i] = x[j]
    labels = list(range(1, n + 1))
    return RingMatrix([[c.to_poly() for c in row] for row in M], labels, labels)


def _vandermonde_div(num: Poly, values: Sequence[Poly]) -> Poly:
    for a in range(len(values)):
        for b in range(a + 1, len(values)):
            num = poly_exact_div(num, values[a] - values[b])
    return num


def restriction_value(ctx: GrContext, lam, J: Sequence[int]) -> Poly:
    """sigma_lambda restricted to p_J: det((x_j|t)^{i-1} at x_j = -t_j) / Delta_J."""
    I = ctx.subset(lam)
    J = tuple(J)
    if len(J) != ctx.k:
        raise CardinalityMismatch("J has the wrong size")
    xs = [-ctx.tv(j) for j in J]
    rows = [[factorial_power(x, i - 1, ctx.t) for x in xs] for i in I]
    return _vandermonde_div(determinant(RingMatrix(rows)), [ctx.tv(j) for j in J])


class RestrictionTable:
    """Values sigma_lambda|p_J for all lambda in the rectangle and all J."""

    def __init__(self, ctx: GrContext, values: Dict[Tuple[Partition, Tuple[int, ...]], Poly]):
        self.ctx = ctx
        self.values = values

    def __getitem__(self, key) -> Poly:
        lam, J = key
        return self.values[(Partition(lam), tuple(J))]

    def __setitem__(self, key, value):
        lam, J = key
        self.values[(Partition(lam), tuple(J))] = value

    def copy(self) -> "RestrictionTable":
        return RestrictionTable(self.ctx, dict(self.values))

    def partitions(self) -> List[Partition]:
        return self.ctx.partitions()

    def subsets(self) -> List[Tuple[int, ...]]:
        return sorted(self.ctx.subsets(), key=lambda J: (self.ctx.partition(J).size, J))

    def to_tsv(self, rows: str = "classes") -> str:
        """TSV with canonical polynomial strings.  rows="classes" puts the
        partitions down the side; rows="points" puts fixed points there."""
        parts = self.partitions()
        pts = self.subsets()
        fmt_p = lambda lam: str(lam)
        fmt_J = lambda J: "{" + ",".join(map(str, J)) + "}"
        lines = []
        if rows == "classes":
            lines.append("\t".join(["class"] + [fmt_J(J) for J in pts]))
            for lam in parts:
                lines.append("\t".join([fmt_p(lam)] + [self[lam, J].to_string() for J in pts]))
        elif rows == "points":
            lines.append("\t".join(["point"] + [fmt_p(lam) for lam in parts]))
            for J in pts:
                lines.append("\t".join([fmt_J(J)] + [self[lam, J].to_string() for lam in parts]))
        else:
            raise ValueError(f"unknown orientation {rows!r}")
        return "\n".join(lines) + "\n"


def restriction_table(ctx: GrContext) -> RestrictionTable:
    vals = {}
    for lam in ctx.partitions():
        I = ctx.subset(lam)
        for J in ctx.subsets():
            if contains(J, I):
                vals[(lam, J)] = restriction_value(ctx, lam, J)
            else:
                vals[(lam, J)] = Poly.const(0)
    return RestrictionTable(ctx, vals)


def contains(J: Sequence[int], I: Sequence[int]) -> bool:
    """J >= I elementwise, i.e. the partition of J contains that of I."""
    return all(j >= i for j, i in zip(sorted(J), sorted(I)))


def diagonal_restriction(ctx: GrContext, lam) -> Poly:
    """Product of the weights t_j - t_i over j in I, i < j, i not in I."""
    I = ctx.subset(lam)
    out = Poly.const(1)
    for i in I:
        for a in range(1, i):
            if a not in I:
                out = out * (ctx.tv(a) - ctx.tv(i))
    return out


def factorial_schur(lam, ctx: GrContext, xs: Optional[Sequence[Poly]] = None) -> Poly:
    """s_lambda(x|t) = det((x_j|t)^{i-1})_{i in I, j <= k} / det(x_j^{i-1}).

    The Vandermonde det(x_j^{i-1}) is prod_{a<b} (x_b - x_a); at x = -t_J it
    becomes Delta_J = prod_{a<b} (t_{j_a} - t_{j_b}).
    """
    lam = Partition(lam)
    k = ctx.k
    if xs is None:
        xs = [Poly.var(f"x{j}") for j in range(1, k + 1)]
    I = partition_to_subset(lam, k)
    rows = [[factorial_power(x, i - 1, ctx.t) for x in xs] for i in I]
    return _vandermonde_div(determinant(RingMatrix(rows)), [-x for x in xs])


def evaluate_at_point(ctx: GrContext, p: Poly, J: Sequence[int]) -> Poly:
    """Substitute x_a = -t_{j_a}."""
    return p.substitute({f"x{a}": -ctx.tv(j) for a, j in enumerate(J, start=1)})


def giambelli_check(ctx: GrContext, lam, J, table: Optional[RestrictionTable] = None,
                    schur: Optional[Poly] = None) -> bool:
    value = table[lam, J] if table is not None else restriction_value(ctx, lam, J)
    s = factorial_schur(lam, ctx) if schur is None else schur
    return evaluate_at_point(ctx, s, J) == value


def classical_product(ctx: GrContext, lam, mu, verify: bool = False,
                      method: str = "localization") -> Dict[Partition, Poly]:
    """Structure constants of sigma_lambda * sigma_mu.

    method="localization" (default) solves the triangular system of fixed
    point values; method="recursion" runs the divisor recursion instead
    (see ChevalleyRecursion), which is much cheaper for large n.

    Pointwise products of restriction vectors are expanded in the Schubert
    basis by back-substitution, processing partitions by increasing size.
    Only partitions containing lambda and mu with |nu| <= |lambda|+|mu| can
    occur, so only those fixed points are visited.  With verify=True every
    fixed point of Gr(k, n) is checked against the expansion.
    """
    lam, mu = Partition(lam), Partition(mu)
    if method == "recursion":
        coeffs = ChevalleyRecursion.get(ctx, mu).product(lam)
        if verify:
            loc = classical_product(ctx, lam, mu)
            if loc != coeffs:
                raise AssertionError("recursion disagrees with localization")
        return coeffs
    if method != "localization":
        raise ValueError(f"unknown method {method!r}")
    cache: Dict[Tuple[Partition, Tuple[int, ...]], Poly] = {}

    def res(a: Partition, J) -> Poly:
        key = (a, J)
        if key not in cache:
            cache[key] = restriction_value(ctx, a, J) if contains(J, ctx.subset(a)) else Poly.const(0)
        return cache[key]

    top = lam.size + mu.size
    cands = [nu for nu in ctx.partitions()
             if nu.contains(lam) and nu.contains(mu) and nu.size <= top]
    cands.sort(key=lambda p: (p.size, p))
    coeffs: Dict[Partition, Poly] = {}
    for nu in cands:
        J = ctx.subset(nu)
        val = res(lam, J) * res(mu, J)
        for other, c in coeffs.items():
            if nu.contains(other):
                val = val - c * res(other, J)
        if val == 0:
            continue
        coeffs[nu] = poly_exact_div(val, res(nu, J))
    if verify:
        for J in ctx.subsets():
            val = res(lam, J) * res(mu, J)
            for other, c in coeffs.items():
                val = val - c * res(other, J)
            if not val == 0:
                raise AssertionError(f"localization expansion fails at {J}")
    return coeffs


def divisor_weight(ctx: GrContext, lam) -> Poly:
    """sigma_box restricted to p_lambda: t_1+..+t_k minus the t_i, i in I(lambda)."""
    return ctx.twist() - sum((ctx.tv(i) for i in ctx.subset(lam)), Poly.const(0))


class ChevalleyRecursion:
    """Equivariant Littlewood-Richardson coefficients c^nu_{lambda,mu} for a
    fixed mu, from the divisor class.

    Expanding (sigma_box sigma_lambda) sigma_mu in two ways gives

        (w(lambda) - w(nu)) c^nu_{lambda mu}
            = sum_{nu^-} c^{nu^-}_{lambda mu} - sum_{lambda^+} c^nu_{lambda^+ mu}

    with w the divisor weight.  For lambda strictly inside nu the left factor
    is a nonzero linear form, so every step is one exact division.  The base
    case is c^nu_{nu mu} = sigma_mu|p_nu.  Results are memoized per (lambda, nu).
    """

    _instances: Dict[tuple, "ChevalleyRecursion"] = {}

    def __init__(self, ctx: GrContext, mu):
        self.ctx = ctx
        self.mu = Partition(mu)
        self.memo: Dict[Tuple[Partition, Partition], Poly] = {}
        self.width = ctx.n - ctx.k

    @classmethod
    def get(cls, ctx: GrContext, mu) -> "ChevalleyRecursion":
        key = (ctx.k, ctx.n, tuple(str(x) for x in ctx.t[:ctx.n]), Partition(mu))
        inst = cls._instances.get(key)
        if inst is None:
            inst = cls._instances[key] = cls(ctx, mu)
        return inst

    def coeff(self, lam: Partition, nu: Partition) -> Poly:
        mu = self.mu
        if not (nu.contains(lam) and nu.contains(mu)) or nu.size > lam.size + mu.size:
            return Poly.const(0)
        key = (lam, nu)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        ctx = self.ctx
        if lam == nu:
            val = restriction_value(ctx, mu, ctx.subset(nu))
        else:
            rhs = Poly.const(0)
            for lo in nu.remove_box_options():
                rhs = rhs + self.coeff(lam, lo)
            for up in lam.add_box_options(max_rows=ctx.k):
                if up[0] <= self.width:
                    rhs = rhs - self.coeff(up, nu)
            val = Poly.const(0) if rhs == 0 else poly_exact_div(
                rhs, divisor_weight(ctx, lam) - divisor_weight(ctx, nu))
        self.memo[key] = val
        return val

    def product(self, lam) -> Dict[Partition, Poly]:
        lam = Partition(lam)
        top = lam.size + self.mu.size
        out = {}
        for nu in self.ctx.partitions():
            if nu.size <= top and nu.contains(lam) and nu.contains(self.mu):
                c = self.coeff(lam, nu)
                if not c == 0:
                    out[nu] = c
        return out


def wedge_to_classes(ctx: GrContext, v: WedgeVector) -> Dict[Partition, object]:
    return {ctx.partition(I): c for I, c in v.terms.items()}


def classes_to_wedge(ctx: GrContext, d: Dict) -> WedgeVector:
    return WedgeVector(ctx.k, ctx.n, {ctx.subset(lam): c for lam, c in d.items()})
