"""Type D: the quadric Q^{2n-2} on the standard representation and the
maximal orthogonal Grassmannian OG(n) = OG+(n, 2n) on the half-spin
representation.

Basis labels are the Clifford generator codes: barred i is -(i+1) and
unbarred i is i, so the basis order eb_{n-1}, ..., eb_0, e_0, ..., e_{n-1} is
integer order.  The alphabet is zero-based, t_0..t_{n-1}, and t of a barred
label is -t_i.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from .clifford import (CliffordElt, Spinor, bar, clifford_act, generator_codes, shift_count,
                       spinor_expand_bruteforce, spinor_expand_pfaffian, unitriangular_inverse)
from .combinatorics import even_subsets, strict_partition, strict_subset_order
from .errors import BadLabel, InexactDivision, ParityViolation, RankTooSmall
from .pfaffian import RingMatrix, bordered_pfaffian, determinant
from .poly import Poly, RatLin, complete_homogeneous, factorial_power, poly_exact_div


def label_str(code: int) -> str:
    return f"b{-code - 1}" if code < 0 else str(code)


def parse_label(text: str) -> int:
    text = text.strip()
    try:
        if text[:1] in ("b", "B"):
            i = int(text[1:])
            if i < 0:
                raise ValueError
            return bar(i)
        i = int(text)
        if i < 0:
            raise ValueError
        return i
    except ValueError:
        raise BadLabel(f"bad type-D label {text!r}") from None


def partner(code: int) -> int:
    """The label paired with code by the form."""
    return -code - 1


class QuadricContext:
    """Rank-n type-D data with the alphabet t_0..t_{n-1}."""

    def __init__(self, n: int, t: Optional[Sequence[Poly]] = None, allow_small: bool = False):
        if n < 3 and not allow_small:
            raise RankTooSmall(f"type D needs n >= 3, got {n}")
        if n < 1:
            raise RankTooSmall("n must be positive")
        self.n = n
        if t is None:
            t = [Poly.var(f"t{i}") for i in range(n)]
        self.t = [Poly.coerce(x) for x in t]
        if len(self.t) < n:
            raise ValueError("alphabet shorter than n")
        self.labels = generator_codes(n)

    def tv(self, i: int) -> Poly:
        return self.t[i]

    def tw(self, code: int) -> Poly:
        """t_j for unbarred j and -t_j for barred j."""
        return -self.t[-code - 1] if code < 0 else self.t[code]

    def check_label(self, code: int):
        if not -self.n <= code < self.n:
            raise BadLabel(f"label {label_str(code)} outside rank {self.n}")

    def __repr__(self):
        return f"QuadricContext(n={self.n})"


# Lie algebra side

def wedge_to_matrix(ctx: QuadricContext, terms) -> RingMatrix:
    """Matrix of sum c * (v ^ w) acting by (v ^ w)(u) = <v,u> w - <w,u> v.

    terms is a list of (v, w, c) with v, w basis labels."""
    labels = ctx.labels
    M = RingMatrix.zeros(2 * ctx.n, 2 * ctx.n, labels, labels)
    for v, w, c in terms:
        if c == 0:
            continue
        # <v, u> = 1 exactly for u = partner(v)
        u = partner(v)
        M.set(w, u, M.at(w, u) + c)
        u = partner(w)
        M.set(v, u, M.at(v, u) - c)
    return M


def xi_t_wedge_terms(ctx: QuadricContext):
    n = ctx.n
    terms = [(0, 1, 1)]
    terms += [(bar(i - 1), i, 1) for i in range(1, n)]
    terms += [(bar(i), i, -ctx.tv(i)) for i in range(n)]
    return terms


def build_xi_t_D(ctx: QuadricContext) -> RingMatrix:
    """The principal nilpotent minus the Cartan element, entry by entry."""
    n = ctx.n
    if n < 3:
        raise RankTooSmall("xi_t is defined for n >= 3")
    labels = ctx.labels
    M = RingMatrix.zeros(2 * n, 2 * n, labels, labels)
    for i in range(n):
        M.set(bar(i), bar(i), ctx.tv(i))
        M.set(i, i, -ctx.tv(i))
    for i in range(2, n):
        M.set(bar(i - 1), bar(i), -1)
    M.set(bar(0), bar(1), -1)
    M.set(0, bar(1), -1)
    M.set(1, bar(0), 1)
    for i in range(n - 1):
        M.set(i + 1, i, 1)
    return M


def _prod(xs) -> Poly:
    out = Poly.const(1)
    for x in xs:
        out = out * x
    return out


def eta_t_wedge_terms(ctx: QuadricContext):
    n = ctx.n
    t = ctx.t
    terms = []
    for j in range(1, n):
        terms.append((0, j, -_prod(t[j + 1:n])))
    for i in range(n):
        for j in range(i, n):
            terms.append((bar(i), j, _prod(t[:i]) * _prod(t[j + 1:n])))
    return terms


def build_eta_t(ctx: QuadricContext) -> RingMatrix:
    if ctx.n < 3:
        raise RankTooSmall("eta_t is defined for n >= 3")
    return wedge_to_matrix(ctx, eta_t_wedge_terms(ctx))


def form_compatible(ctx: QuadricContext, M: RingMatrix) -> bool:
    """<M e_a, e_b> + <e_a, M e_b> = 0 for all basis labels."""
    for a in ctx.labels:
        for b in ctx.labels:
            if not M.at(partner(b), a) + M.at(partner(a), b) == 0:
                return False
    return True


def commutator(X: RingMatrix, Y: RingMatrix) -> RingMatrix:
    return X @ Y - Y @ X


def odd_power_closed_form(ctx: QuadricContext, j: int) -> RingMatrix:
    """xi_t^(2j-1) from sums of complete homogeneous polynomials in
    consecutive t's."""
    n = ctx.n
    t = ctx.t
    d = 2 * j - 1
    terms = []
    for k in range(n):
        for i in range(n - k):
            c = complete_homogeneous(d - k, t[i:i + k + 1]) if d - k >= 0 else 0
            terms.append((bar(i), i + k, c if (d - k) % 2 == 0 else -c))
    for k in range(1, n):
        c = complete_homogeneous(d - k, [-t[0]] + t[1:k + 1]) if d - k >= 0 else 0
        terms.append((0, k, c if (d - k) % 2 == 0 else -c))
    for i in range(1, n - 1):
        for k in range(i + 1, n):
            e = d - i - k
            if e < 0:
                continue
            alph = [-t[a] for a in range(i, -1, -1)] + t[0:k + 1]
            c = 2 * complete_homogeneous(e, alph)
            terms.append((i, k, c if (d - k) % 2 == 0 else -c))
    return wedge_to_matrix(ctx, terms)


# quadric Schubert calculus

def quadric_sign(code: int) -> int:
    """sigma_ibar = (-1)^i eps_ibar and sigma_i = eps_i."""
    return -1 if code < 0 and (-code - 1) % 2 else 1


def quadric_chevalley(ctx: QuadricContext, code: int) -> Dict[int, Poly]:
    """Hyperplane class times sigma_code in the Schubert basis."""
    ctx.check_label(code)
    n = ctx.n
    t = ctx.t
    out: Dict[int, Poly] = {}
    if code < 0:
        i = -code - 1
        out[code] = t[i] - t[n - 1]
        if i > 1:
            out[bar(i - 1)] = Poly.const(1)
        elif i == 1:
            out[bar(0)] = Poly.const(1)
            out[0] = Poly.const(1)
        else:
            out[1] = Poly.const(1)
    else:
        i = code
        out[code] = -t[i] - t[n - 1]
        if i + 1 < n:
            out[i + 1] = Poly.const(1)
    return {k: v for k, v in out.items() if not v == 0}


def quadric_chevalley_via_xi(ctx: QuadricContext, code: int, xi: Optional[RingMatrix] = None):
    """The same product computed as the twisted xi_t action on V."""
    ctx.check_label(code)
    xi = build_xi_t_D(ctx) if xi is None else xi
    s = quadric_sign(code)
    out = {}
    for row in ctx.labels:
        c = xi.at(row, code)
        if row == code:
            c = c - ctx.tv(ctx.n - 1)
        c = c * s * quadric_sign(row)
        if not c == 0:
            out[row] = c
    return out


def quadric_restriction_factors(ctx: QuadricContext, code: int, point: int):
    """Linear factors of sigma_code|p_point, or None when it vanishes."""
    ctx.check_label(code)
    ctx.check_label(point)
    n = ctx.n
    t = ctx.t
    tj = ctx.tw(point)
    if code < 0:
        i = -code - 1
        if i > 0:
            return [-t[k] - tj for k in range(i + 1, n)]
        if point == bar(0):
            return [t[0] - t[k] for k in range(1, n)]
        if point > 0:
            return [t[0] - tj] + [-t[k] - tj for k in range(1, n) if k != point]
        return None
    if point < code:
        return None
    return [-t[k] - tj for k in range(n) if k != point] + [t[k] - tj for k in range(code)]


def quadric_restriction(ctx: QuadricContext, code: int, point: int) -> Poly:
    """sigma_code restricted to the coordinate point p_point."""
    f = quadric_restriction_factors(ctx, code, point)
    return Poly.const(0) if f is None else _prod(f)


class QuadricTable:
    """sigma_a|p_b for all labels a (classes) and b (points)."""

    def __init__(self, ctx: QuadricContext, values: Dict[Tuple[int, int], Poly]):
        self.ctx = ctx
        self.values = values

    def __getitem__(self, key) -> Poly:
        return self.values[key]

    def to_tsv(self) -> str:
        labels = self.ctx.labels
        lines = ["\t".join(["class"] + [label_str(b) for b in labels])]
        for a in labels:
            lines.append("\t".join([label_str(a)] + [self[a, b].to_string() for b in labels]))
        return "\n".join(lines) + "\n"


def quadric_restrictions(ctx: QuadricContext) -> QuadricTable:
    return QuadricTable(ctx, {(a, b): quadric_restriction(ctx, a, b)
                              for a in ctx.labels for b in ctx.labels})


def quadric_gkm_edges(ctx: QuadricContext):
    """Pairs of fixed points joined by a T-curve, with its weight."""
    out = []
    for a in ctx.labels:
        for b in ctx.labels:
            if a < b and b != partner(a):
                out.append((a, b, ctx.tw(b) - ctx.tw(a)))
    return out


# transition matrices between eps and the rescaled fixed-point basis f

class TransitionData:
    """eps_ibar = sum_j Cbar[j][i] f_jbar + sum_j C[j][i] f_j and
    eps_i = sum_j Bbar[j][i] f_j; S is the diagonal of the S-scaling."""

    def __init__(self, Cbar: RingMatrix, C: RingMatrix, Bbar: RingMatrix, S: List[Poly]):
        self.Cbar = Cbar
        self.C = C
        self.Bbar = Bbar
        self.S = S

    def reduced(self) -> RingMatrix:
        """C * Cbar^{-1}, the skew block after normalising the barred part."""
        return self.C @ unitriangular_inverse(self.Cbar)

    def full_matrix(self, ctx: QuadricContext) -> RingMatrix:
        """2n x 2n matrix: column a holds eps_a in f coordinates."""
        n = ctx.n
        labels = ctx.labels
        X = RingMatrix.zeros(2 * n, 2 * n, labels, labels)
        for i in range(n):
            for j in range(n):
                X.set(bar(j), bar(i), self.Cbar[j, i])
                X.set(j, bar(i), self.C[j, i])
                X.set(j, i, self.Bbar[j, i])
        return X


def _ratlin(num, forms) -> RatLin:
    return RatLin(num, forms)


def transition_data(ctx: QuadricContext) -> TransitionData:
    """Closed forms for Cbar, C, Bbar and S."""
    n = ctx.n
    t = ctx.t
    zero = RatLin(0)
    Cbar = [[zero] * n for _ in range(n)]
    C = [[zero] * n for _ in range(n)]
    Bbar = [[zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1):
            Cbar[j][i] = _ratlin(1, [t[k] - t[j] for k in range(j + 1, i + 1)])
        if i == 0:
            for j in range(1, n):
                C[j][0] = _ratlin(1, [-t[0] - t[j]] + [t[k] - t[j] for k in range(1, j)])
        else:
            for j in range(n):
                if j <= i:
                    forms = [t[k] - t[j] for k in range(j)] + [t[k] + t[j] for k in range(j)]
                    forms += [t[k] + t[j] for k in range(j + 1, i + 1)]
                    C[j][i] = _ratlin(1, forms)
                else:
                    forms = [t[k] - t[j] for k in range(i + 1)] + [t[k] + t[j] for k in range(i + 1)]
                    forms += [t[k] - t[j] for k in range(i + 1, j)]
                    C[j][i] = _ratlin(2 * t[j], forms)
        for j in range(i, n):
            Bbar[j][i] = _ratlin(1, [t[k] - t[j] for k in range(i, j)])
    S = [_prod(t[i] - t[k] for i in range(k)) for k in range(n)]
    idx = list(range(n))
    return TransitionData(RingMatrix(Cbar, idx, idx), RingMatrix(C, idx, idx),
                          RingMatrix(Bbar, idx, idx), S)


def transition_from_restrictions(ctx: QuadricContext) -> TransitionData:
    """The same matrices read off the restriction formulas: the coefficient
    of f_j in eps_a is (-1)^(n-1) eps_a|p_j / alpha_j."""
    n = ctx.n
    sgn_n = -1 if (n - 1) % 2 else 1
    alpha = {}
    for i in range(n):
        s = -1 if (n - 1 - i) % 2 else 1
        alpha[bar(i)] = (s, quadric_restriction_factors(ctx, bar(i), bar(i)))
        alpha[i] = (sgn_n, quadric_restriction_factors(ctx, i, i))

    def coeff(a, j):
        f = quadric_restriction_factors(ctx, a, j)
        if f is None:
            return RatLin(0)
        s, den = alpha[j]
        return RatLin(quadric_sign(a) * sgn_n * s * _prod(f), den)

    idx = list(range(n))
    Cbar = RingMatrix([[coeff(bar(i), bar(j)) for i in idx] for j in idx], idx, idx)
    C = RingMatrix([[coeff(bar(i), j) for i in idx] for j in idx], idx, idx)
    Bbar = RingMatrix([[coeff(i, j) for i in idx] for j in idx], idx, idx)
    S = [_prod(ctx.t[i] - ctx.t[k] for i in range(k)) for k in range(n)]
    return TransitionData(Cbar, C, Bbar, S)


def schur_a(ctx: QuadricContext) -> RingMatrix:
    """a_{ji} = (t_j - t_i)/(t_j + t_i), zero on the diagonal."""
    n = ctx.n
    t = ctx.t
    idx = list(range(n))
    return RingMatrix([[RatLin(0) if i == j else RatLin(t[j] - t[i], [t[j] + t[i]])
                        for i in idx] for j in idx], idx, idx)


# OG(n): spinor model

def _check_even(I):
    if len(I) % 2:
        raise ParityViolation(f"subset {tuple(I)} has odd cardinality")


def _check_spinor(s: Spinor):
    for K in s.terms:
        _check_even(K)


def schubert_sign(I: Sequence[int]) -> int:
    """sigma_I = (-1)^g(I) y_I, y_I the Clifford standard spinor."""
    return -1 if shift_count(tuple(sorted(I))) % 2 else 1


def spinor_to_clifford_basis(s: Spinor) -> Spinor:
    """Schubert coordinates to standard-spinor coordinates (an involution)."""
    return Spinor(s.n, {K: (c if schubert_sign(K) > 0 else -c) for K, c in s.terms.items()})


def og_chevalley_element(ctx: QuadricContext) -> CliffordElt:
    """Image of xi_t under the spin representation, twisted so that the
    highest weight vector has eigenvalue zero.

    A wedge v ^ w acts on V by u -> <v,u> w - <w,u> v, which is the bracket
    with w*v - <v,w>/2 in the Clifford algebra.  So xi_t maps to
    -e0 e1 - sum eb_{i-1} e_i + sum t_i (eb_i e_i - 1/2), and the twist
    removes the constant."""
    n = ctx.n
    terms = {(0, 1): Poly.const(-1)}
    for i in range(1, n):
        terms[(bar(i - 1), i)] = Poly.const(-1)
    for i in range(n):
        terms[(bar(i), i)] = ctx.tv(i)
    terms[()] = -sum(ctx.t[:n], Poly.const(0))
    return CliffordElt(n, terms)


def og_chevalley(ctx: QuadricContext, s: Spinor, X: Optional[CliffordElt] = None) -> Spinor:
    """Divisor class times s, both in Schubert coordinates."""
    _check_spinor(s)
    X = og_chevalley_element(ctx) if X is None else X
    return spinor_to_clifford_basis(clifford_act(X, spinor_to_clifford_basis(s)))


def og_chevalley_formula(ctx: QuadricContext, I: Sequence[int]) -> Spinor:
    """Sum of sigma_{I+} over single steps minus (sum_{i in I} t_i) sigma_I."""
    I = tuple(sorted(I))
    _check_even(I)
    n = ctx.n
    out = {I: -sum((ctx.tv(i) for i in I), Poly.const(0))}
    Is = set(I)
    if 0 not in Is and 1 not in Is and n >= 2:
        out[tuple(sorted(Is | {0, 1}))] = Poly.const(1)
    for i in I:
        if i + 1 < n and i + 1 not in Is:
            out[tuple(sorted((Is - {i}) | {i + 1}))] = Poly.const(1)
    return Spinor(n, out)


def og_restriction_diagonal(I: Sequence[int], ctx: QuadricContext) -> Poly:
    I = tuple(sorted(I))
    _check_even(I)
    t = ctx.t
    out = Poly.const(1)
    for i in I:
        for j in range(i):
            out = out * ((t[j] - t[i]) if j not in I else (-t[i] - t[j]))
    return out


def _pf_schur_cache(ctx: QuadricContext, values: Sequence) -> Dict[tuple, RatLin]:
    """Pf_M of (v_j - v_i)/(v_j + v_i) on rows n-1..0, for every even M,
    keyed by the label tuple in that order (Schur's identity)."""
    n = ctx.n
    cache = {}
    for r in range(0, n + 1, 2):
        for M in combinations(range(n), r):
            key = tuple(sorted(M, reverse=True))
            num = _prod(values[j] - values[i] for i, j in combinations(M, 2))
            cache[key] = RatLin(num, [values[j] + values[i] for i, j in combinations(M, 2)])
    return cache


def og_restriction(ctx: QuadricContext, I: Sequence[int], K: Sequence[int],
                   _cache: Optional[dict] = None) -> Poly:
    """sigma_I|p_K as the ratio of the f_K-coefficients of eps_I and eps_empty.

    After S-scaling the barred block becomes a_{ji} = (t_j-t_i)/(t_j+t_i) and
    the border entries S_j bbar_{ji} become factorial powers (-t_j|t)^i, so
    sigma_I|p_K = (-1)^g(I) Pf_K(A(I)) / Pf_K(A) with those entries."""
    I = tuple(sorted(I))
    K = tuple(sorted(K))
    _check_even(I)
    _check_even(K)
    if not strict_subset_order(K, I):
        return Poly.const(0)
    n = ctx.n
    cache = _og_cache(ctx) if _cache is None else _cache
    order = cache["order"]
    B = RingMatrix([[cache["border"][j][i] for i in I] for j in order], order, list(I))
    det_cache = cache.setdefault(("det", I), {})
    num = bordered_pfaffian(cache["A"], B, K, cache["pf"], det_cache)
    val = RatLin.coerce(num) / cache["pf"][tuple(sorted(K, reverse=True))]
    if not val.is_poly():
        raise InexactDivision(f"restriction of {I} at {K} is not a polynomial")
    return val.to_poly()


def _og_cache(ctx: QuadricContext) -> dict:
    n = ctx.n
    order = list(range(n - 1, -1, -1))
    A = schur_a(ctx)
    Ao = RingMatrix([[A[j, i] for i in order] for j in order], order, order)
    neg_t = [-x for x in ctx.t[:n]]
    border = [[factorial_power(neg_t[j], i, ctx.t) for i in range(n)] for j in range(n)]
    return {"order": order, "A": Ao, "pf": _pf_schur_cache(ctx, ctx.t[:n]), "border": border}


class OGTable:
    """sigma_I|p_K for all even I (rows) and K (columns)."""

    def __init__(self, ctx: QuadricContext, values: Dict[Tuple[tuple, tuple], Poly]):
        self.ctx = ctx
        self.values = values

    def __getitem__(self, key) -> Poly:
        I, K = key
        return self.values[(tuple(sorted(I)), tuple(sorted(K)))]

    def subsets(self) -> List[tuple]:
        return even_subsets(self.ctx.n)

    def to_tsv(self) -> str:
        fmt = lambda S: "{" + ",".join(map(str, S)) + "}"
        subs = self.subsets()
        lines = ["\t".join(["class"] + [fmt(K) for K in subs])]
        for I in subs:
            lines.append("\t".join([fmt(I)] + [self[I, K].to_string() for K in subs]))
        return "\n".join(lines) + "\n"


def og_restriction_table(ctx: QuadricContext) -> OGTable:
    cache = _og_cache(ctx)
    subs = even_subsets(ctx.n)
    return OGTable(ctx, {(I, K): og_restriction(ctx, I, K, cache) for I in subs for K in subs})


def og_restriction_table_oracle(ctx: QuadricContext, method: str = "bruteforce") -> OGTable:
    """Second computation: expand every eps_I in the f basis through the
    transition matrices and divide by the expansion of eps_empty.  The
    result is in Schubert coordinates, so y_I carries schubert_sign(I)."""
    n = ctx.n
    td = transition_data(ctx)
    subs = even_subsets(n)
    if method == "bruteforce":
        X = td.full_matrix(ctx)
        exp = {I: spinor_expand_bruteforce(X, I) for I in subs}
    elif method == "pfaffian":
        exp = {I: spinor_expand_pfaffian(td.C, td.Bbar, I, cbar=td.Cbar) for I in subs}
    else:
        raise ValueError(f"unknown method {method!r}")
    base = exp[()]
    vals = {}
    for I in subs:
        for K in subs:
            c = exp[I].coeff(K)
            if c == 0:
                vals[(I, K)] = Poly.const(0)
                continue
            r = RatLin.coerce(c) / RatLin.coerce(base.coeff(K))
            if not r.is_poly():
                raise InexactDivision(f"oracle value at {I}, {K} is not a polynomial")
            v = r.to_poly()
            vals[(I, K)] = v if schubert_sign(I) > 0 else -v
    return OGTable(ctx, vals)


def og_gkm_edges(ctx: QuadricContext):
    """(K, K', weight) for fixed points joined by a T-curve: K' = K sym-diff {a, b}."""
    out = []
    for K in even_subsets(ctx.n):
        w = [(-ctx.tv(i) if i in K else ctx.tv(i)) for i in range(ctx.n)]
        for a, b in combinations(range(ctx.n), 2):
            K2 = tuple(sorted(set(K) ^ {a, b}))
            if K < K2:
                out.append((K, K2, w[a] + w[b]))
    return out


# factorial Schur P-functions

def _p_border(I: Sequence[int], n: int) -> Tuple[int, ...]:
    """Border columns: the nonzero parts, padded with a zero part when
    needed so that n plus the border size is even."""
    parts = sorted(i for i in set(I) if i > 0)
    if (n + len(parts)) % 2:
        parts = [0] + parts
    return tuple(parts)


def _ivanov_numerator(xs, ts, border, n) -> Poly:
    """Pf(A_border(x|t)) times prod_{i<j} (x_i + x_j), a polynomial.

    Expands along the border: each r-subset L of rows contributes
    det(B_L) Pf_{rest}(A(x)); Schur's identity gives the sub-Pfaffian and
    the extra factors clear its denominator."""
    r = len(border)
    order = list(range(n - 1, -1, -1))
    plus = {(i, j): xs[i] + xs[j] for i, j in combinations(range(n), 2)}
    minus = {(i, j): xs[j] - xs[i] for i, j in combinations(range(n), 2)}
    total = Poly.const(0)
    for pos in combinations(range(n), r):
        L = [order[p] for p in pos]
        Bl = RingMatrix([[factorial_power(xs[j], i, ts) for i in border] for j in L])
        d = determinant(Bl)
        if d == 0:
            continue
        Ls = set(L)
        term = d
        for (i, j) in plus:
            if i in Ls or j in Ls:
                term = term * plus[(i, j)]
            else:
                term = term * minus[(i, j)]
        e = sum(pos) + (n - r) * r
        total = total + term if e % 2 == 0 else total - term
    return total


def _divide_by_linear_product(num: Poly, forms) -> Poly:
    for f in forms:
        num = poly_exact_div(num, f)
    return num


@lru_cache(maxsize=None)
def _factorial_schur_P(I: Tuple[int, ...], n: int) -> Poly:
    """Ivanov's P-function for the strict partition of I, as a polynomial
    in x_0..x_{n-1} and t_0..t_{n-1}.

    The Pfaffian ratio is multiplied through by prod_{i<j}(x_i + x_j); the
    denominator then becomes +-prod_{i<j}(x_j - x_i) and the division is
    exact, one linear factor at a time.  For odd n the Pfaffian of A(x)
    vanishes, so we work with one more variable and set it to zero at the
    end."""
    I = tuple(sorted(I))
    if any(not 0 <= i < n for i in I) or len(set(I)) != len(I):
        raise ValueError(f"bad subset {I} for n={n}")
    m = n + (n % 2)
    xs = [Poly.var(f"x{i}") for i in range(m)]
    ts = [Poly.var(f"t{i}") for i in range(m)]
    num = _ivanov_numerator(xs, ts, _p_border(I, m), m)
    den = _ivanov_numerator(xs, ts, (), m)
    forms = [xs[j] - xs[i] for i, j in combinations(range(m), 2)]
    vand = _prod(forms)
    if den == vand:
        sign = 1
    elif den == -vand:
        sign = -1
    else:
        raise InexactDivision("unexpected Ivanov denominator")
    q = _divide_by_linear_product(num, forms)
    if m > n:
        q = q.substitute({f"x{n}": 0})
        if f"t{n}" in q.free_vars():
            raise InexactDivision("padding variable did not drop out")
    return (q if sign > 0 else -q).trim()


def factorial_schur_P(I: Sequence[int], n: int) -> Poly:
    return _factorial_schur_P(tuple(sorted(I)), n)


def evaluate_P(p: Poly, K: Sequence[int], ctx: QuadricContext) -> Poly:
    """x_i -> -t_i for i in K and x_i -> 0 otherwise."""
    Ks = set(K)
    return p.substitute({f"x{i}": (-ctx.tv(i) if i in Ks else Poly.const(0))
                         for i in range(ctx.n)})


def giambelli_check_D(n: int, I: Sequence[int], K: Sequence[int],
                      ctx: Optional[QuadricContext] = None, P: Optional[Poly] = None,
                      table: Optional[OGTable] = None) -> bool:
    ctx = QuadricContext(n) if ctx is None else ctx
    P = factorial_schur_P(I, n) if P is None else P
    value = table[I, K] if table is not None else og_restriction(ctx, I, K)
    return evaluate_P(P, K, ctx) == value


def strict_label(I: Sequence[int]) -> str:
    return str(strict_partition(I))
