"""Clifford algebra of the split form on a rank-2n space, and its spin module.

Generators are coded by integers: ybar_i is -(i+1) and y_i is i, so the
normal order ybar_{n-1} < ... < ybar_0 < y_0 < ... < y_{n-1} is integer
order.  The form pairs ybar_i with y_i (value 1) and the defining relation
is v*w + w*v = <v, w>, without the usual factor 2.

The spin module is the left ideal Cl * y with y = y_0 ... y_{n-1}.  Its
standard basis is y_K = ybar_{k'_1} ... ybar_{k'_s} * y, where
k'_1 < ... < k'_s is the complement of K.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

from .errors import NotIsotropicBasis, NotSkew, ParityViolation, RankMismatch
from .pfaffian import RingMatrix, bordered_pfaffian
from .poly import Poly, poly_exact_div

Mono = Tuple[int, ...]


def bar(i: int) -> int:
    """Code of the generator ybar_i."""
    return -(i + 1)


def unbar(g: int) -> int:
    return g if g >= 0 else -g - 1


def is_barred(g: int) -> bool:
    return g < 0


def pairing(g: int, h: int) -> int:
    """<g, h> on generator codes."""
    return 1 if g + h == -1 else 0


def generator_label(g: int) -> str:
    return f"b{-g - 1}" if g < 0 else str(g)


def _left_mul_gen(g: int, m: Mono, c, out: Dict[Mono, object]):
    """Add g * (c m) to out, m a normal-ordered monomial."""
    sign = 1
    for j, h in enumerate(m):
        if h >= g:
            if h != g:
                key = m[:j] + (g,) + m[j:]
                _acc(out, key, c if sign > 0 else -c)
            return
        if h + g == -1:
            key = m[:j] + m[j + 1:]
            _acc(out, key, c if sign > 0 else -c)
        sign = -sign
    _acc(out, m + (g,), c if sign > 0 else -c)


def _acc(d, key, c):
    v = d.get(key)
    v = c if v is None else v + c
    if v == 0:
        d.pop(key, None)
    else:
        d[key] = v


class CliffordElt:
    """Linear combination of normal-ordered monomials."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Optional[Mapping[Mono, object]] = None):
        self.n = n
        self.terms: Dict[Mono, object] = {}
        for m, c in (terms or {}).items():
            m = tuple(m)
            if list(m) != sorted(set(m)) or any(not -n <= g < n for g in m):
                raise ValueError(f"bad monomial {m}")
            if not c == 0:
                self.terms[m] = c

    @classmethod
    def scalar(cls, n: int, c=1) -> "CliffordElt":
        return cls(n, {(): c})

    @classmethod
    def vector(cls, n: int, coeffs: Mapping[int, object]) -> "CliffordElt":
        return cls(n, {(g,): c for g, c in coeffs.items()})

    @classmethod
    def monomial(cls, n: int, gens: Sequence[int], c=1) -> "CliffordElt":
        """Product of the generators in the given order."""
        out = cls.scalar(n, c)
        for g in reversed(list(gens)):
            out = left_mul_vector(out, {g: 1})
        return out

    def _check(self, other: "CliffordElt"):
        if self.n != other.n:
            raise RankMismatch(f"rank {self.n} vs {other.n}")

    def __add__(self, other: "CliffordElt") -> "CliffordElt":
        self._check(other)
        out = CliffordElt(self.n)
        out.terms = dict(self.terms)
        for m, c in other.terms.items():
            _acc(out.terms, m, c)
        return out

    def __neg__(self):
        out = CliffordElt(self.n)
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "CliffordElt":
        out = CliffordElt(self.n)
        if c == 0:
            return out
        for m, a in self.terms.items():
            v = c * a
            if not v == 0:
                out.terms[m] = v
        return out

    def __mul__(self, other):
        if isinstance(other, CliffordElt):
            return cl_mul(self, other)
        return self.scale(other)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if not isinstance(other, CliffordElt):
            return NotImplemented
        if self.n != other.n:
            return False
        keys = set(self.terms) | set(other.terms)
        return all(self.terms.get(k, 0) - other.terms.get(k, 0) == 0 for k in keys)

    __hash__ = None  # type: ignore[assignment]

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: (len(m), m)):
            name = "*".join(("yb" if g < 0 else "y") + str(unbar(g)) for g in m) or "1"
            parts.append(f"({self.terms[m]})*{name}")
        return " + ".join(parts)

    __repr__ = __str__


def left_mul_vector(a: CliffordElt, v: Mapping[int, object]) -> CliffordElt:
    """v * a for a vector v given as {generator code: coefficient}."""
    out: Dict[Mono, object] = {}
    for g, vc in v.items():
        if vc == 0:
            continue
        if not -a.n <= g < a.n:
            raise RankMismatch(f"generator {g} outside rank {a.n}")
        for m, c in a.terms.items():
            _left_mul_gen(g, m, vc * c, out)
    res = CliffordElt(a.n)
    res.terms = out
    return res


def cl_mul(a: CliffordElt, b: CliffordElt) -> CliffordElt:
    """Normal-ordered product a * b."""
    a._check(b)
    out = CliffordElt(a.n)
    for m, c in a.terms.items():
        part = b.scale(c)
        for g in reversed(m):
            part = left_mul_vector(part, {g: 1})
        out = out + part
    return out


def vector_pairing(v: Mapping[int, object], w: Mapping[int, object]):
    acc = 0
    for g, a in v.items():
        b = w.get(-g - 1)
        if b is not None and not a == 0 and not b == 0:
            acc = acc + a * b
    return acc


# spin module

def complement(K: Sequence[int], n: int) -> Tuple[int, ...]:
    ks = set(K)
    return tuple(i for i in range(n) if i not in ks)


def standard_spinor(I: Sequence[int], n: int) -> CliffordElt:
    """y_I = ybar_{i'_1} ... ybar_{i'_s} * y in normal-ordered form."""
    I = tuple(sorted(I))
    if any(not 0 <= i < n for i in I):
        raise ValueError(f"subset {I} not inside 0..{n - 1}")
    y = CliffordElt(n, {tuple(range(n)): 1})
    for i in reversed(complement(I, n)):
        y = left_mul_vector(y, {bar(i): 1})
    return y


def _spinor_monomial(K: Sequence[int], n: int) -> Tuple[Mono, int]:
    """The single normal-ordered monomial of y_K and its sign."""
    comp = complement(K, n)
    s = len(comp)
    mono = tuple(sorted(bar(i) for i in comp)) + tuple(range(n))
    return mono, -1 if (s * (s - 1) // 2) % 2 else 1


class Spinor:
    """Element of the spin module in the standard basis y_K."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Optional[Mapping[Sequence[int], object]] = None):
        self.n = n
        self.terms: Dict[Tuple[int, ...], object] = {}
        for K, c in (terms or {}).items():
            K = tuple(sorted(K))
            if any(not 0 <= i < n for i in K) or len(set(K)) != len(K):
                raise ValueError(f"bad subset {K}")
            if not c == 0:
                _acc(self.terms, K, c)

    def to_clifford(self) -> CliffordElt:
        out = CliffordElt(self.n)
        for K, c in self.terms.items():
            mono, sign = _spinor_monomial(K, self.n)
            _acc(out.terms, mono, c if sign > 0 else -c)
        return out

    @classmethod
    def from_clifford(cls, c: CliffordElt) -> "Spinor":
        n = c.n
        out = cls(n)
        tail = tuple(range(n))
        for m, a in c.terms.items():
            if m[len(m) - n:] != tail or any(g >= 0 for g in m[:len(m) - n]):
                raise ValueError("element does not lie in the spin module")
            comp = tuple(sorted(unbar(g) for g in m[:len(m) - n]))
            K = complement(comp, n)
            _, sign = _spinor_monomial(K, n)
            _acc(out.terms, K, a if sign > 0 else -a)
        return out

    def coeff(self, K: Sequence[int]):
        return self.terms.get(tuple(sorted(K)), 0)

    def parity(self) -> Optional[int]:
        ps = {len(K) % 2 for K in self.terms}
        return ps.pop() if len(ps) == 1 else (None if ps else 0)

    def __add__(self, other: "Spinor") -> "Spinor":
        if self.n != other.n:
            raise RankMismatch("spinors of different rank")
        out = Spinor(self.n)
        out.terms = dict(self.terms)
        for K, c in other.terms.items():
            _acc(out.terms, K, c)
        return out

    def __neg__(self):
        out = Spinor(self.n)
        out.terms = {K: -c for K, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "Spinor":
        out = Spinor(self.n)
        if c == 0:
            return out
        for K, a in self.terms.items():
            v = c * a
            if not v == 0:
                out.terms[K] = v
        return out

    def __rmul__(self, c):
        return self.scale(c)

    def map_coeffs(self, f) -> "Spinor":
        out = Spinor(self.n)
        for K, c in self.terms.items():
            _acc(out.terms, K, f(c))
        return out

    def __eq__(self, other):
        if not isinstance(other, Spinor):
            return NotImplemented
        if self.n != other.n:
            return False
        keys = set(self.terms) | set(other.terms)
        return all(self.terms.get(K, 0) - other.terms.get(K, 0) == 0 for K in keys)

    __hash__ = None  # type: ignore[assignment]

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({self.terms[K]})*y{{{','.join(map(str, K))}}}"
                          for K in sorted(self.terms, key=lambda K: (len(K), K)))

    __repr__ = __str__


def _half(x):
    if isinstance(x, int):
        return x // 2 if x % 2 == 0 else Fraction(x, 2)
    if isinstance(x, Poly):
        return poly_exact_div(x, 2)
    return x / 2


def so_action(v: Mapping[int, object], w: Mapping[int, object], s: Spinor) -> Spinor:
    """Action of v ^ w through v*w - <v,w>/2 on the spin module."""
    for g in list(v) + list(w):
        if not -s.n <= g < s.n:
            raise RankMismatch(f"generator {g} outside rank {s.n}")
    S = s.to_clifford()
    out = Spinor.from_clifford(left_mul_vector(left_mul_vector(S, w), v))
    pw = vector_pairing(v, w)
    if not pw == 0:
        out = out - s.scale(_half(pw))
    return out


def clifford_act(c: CliffordElt, s: Spinor) -> Spinor:
    """Left Clifford multiplication on the spin module."""
    if c.n != s.n:
        raise RankMismatch("rank mismatch")
    return Spinor.from_clifford(cl_mul(c, s.to_clifford()))


# expansions of pure spinors

def generator_codes(n: int) -> list:
    """Generator codes in normal order."""
    return [bar(i) for i in range(n - 1, -1, -1)] + list(range(n))


def check_orthogonal(X: RingMatrix, n: int):
    """The columns of X (x-basis in y coordinates) must pair like the y basis."""
    codes = generator_codes(n)
    cols = {}
    for g in codes:
        cols[g] = {r: X.at(r, g) for r in codes if not X.at(r, g) == 0}
    for a in codes:
        for b in codes:
            if not vector_pairing(cols[a], cols[b]) - pairing(a, b) == 0:
                raise NotIsotropicBasis(f"<x_{generator_label(a)}, x_{generator_label(b)}> is wrong")
    return cols


def spinor_expand_bruteforce(X: RingMatrix, I: Sequence[int], check: bool = True,
                             allow_odd: bool = False) -> Spinor:
    """x_I = xbar_{i'_1} ... xbar_{i'_s} * y expanded in the y_K basis by
    repeated Clifford multiplication.  X has rows and columns labelled by
    generator codes; column g holds x_g in y coordinates."""
    n = X.nrows // 2
    if X.shape != (2 * n, 2 * n):
        raise RankMismatch("transition matrix must be 2n x 2n")
    I = tuple(sorted(I))
    if len(I) % 2 and not allow_odd:
        raise ParityViolation(f"|I| = {len(I)} is odd")
    if check:
        cols = check_orthogonal(X, n)
    else:
        codes = generator_codes(n)
        cols = {g: {r: X.at(r, g) for r in codes if not X.at(r, g) == 0} for g in codes}
    S = CliffordElt(n, {tuple(range(n)): 1})
    for i in reversed(complement(I, n)):
        S = left_mul_vector(S, cols[bar(i)])
    return Spinor.from_clifford(S)


def transition_from_blocks(A: RingMatrix, B: RingMatrix, n: int,
                           cbar: Optional[RingMatrix] = None) -> RingMatrix:
    """2n x 2n matrix for xbar_i = sum_j cbar[j][i] ybar_j + sum_j A[j][i] y_j
    and x_i = sum_j B[j][i] y_j (cbar defaults to the identity)."""
    codes = generator_codes(n)
    X = RingMatrix.zeros(2 * n, 2 * n, codes, codes)
    for i in range(n):
        for j in range(n):
            if cbar is None:
                if i == j:
                    X.set(bar(j), bar(i), 1)
            else:
                X.set(bar(j), bar(i), cbar[j, i])
            X.set(j, bar(i), A[j, i])
            X.set(j, i, B[j, i])
    return X


def random_isotropic_data(n: int, rng, bound: int = 3, with_cbar: bool = True):
    """Random integer data (A, B, C, cbar) describing an x-basis that pairs
    like the y-basis: B lower unitriangular, A skew, cbar = (B^{-1})^T and
    C = A * cbar.  Without cbar, B is the identity and C = A."""
    B = [[0] * n for _ in range(n)]
    A = [[0] * n for _ in range(n)]
    for i in range(n):
        B[i][i] = 1
        for j in range(i + 1, n):
            if with_cbar:
                B[j][i] = rng.randint(-bound, bound)
            a = rng.randint(-bound, bound)
            A[i][j], A[j][i] = a, -a
    B = RingMatrix(B)
    A = RingMatrix(A)
    if not with_cbar:
        return A, B, A, None
    cbar = unitriangular_inverse(B.transpose())
    return A, B, A @ cbar, cbar


def _ordered_blocks(A: RingMatrix, B: RingMatrix, n: int):
    """A with rows/columns in the label order n-1, ..., 0 and B with the same
    row order; both labelled by the original indices."""
    order = list(range(n - 1, -1, -1))
    Ao = RingMatrix([[A[j, i] for i in order] for j in order], order, order)
    Bo = RingMatrix([[B[j, i] for i in range(n)] for j in order], order, list(range(n)))
    return Ao, Bo


def shift_count(K: Sequence[int]) -> int:
    """Number of pairs j < k with k in K and j not in K."""
    return sum(K) - len(K) * (len(K) - 1) // 2


def spinor_expand_pfaffian(A: RingMatrix, B: RingMatrix, I: Sequence[int],
                           cbar: Optional[RingMatrix] = None,
                           allow_odd: bool = False) -> Spinor:
    """Closed form for x_I as a sum of bordered Pfaffians.

    A(I) borders the skew matrix A (A[j][i] is the coefficient of y_j in
    xbar_i; rows and columns ordered n-1, ..., 0) by the columns of B indexed
    by I, in increasing order.  Pf_K takes the rows in K plus every border
    row, and the coefficient of y_K is (-1)^(g(K) + g(I)) Pf_K(A(I)) with g
    the shift count.  When cbar is given, A is read as the raw block C with
    xbar_i = sum_j cbar[j][i] ybar_j + sum_j C[j][i] y_j and is first reduced
    to C * cbar^{-1}.
    """
    n = A.nrows
    I = tuple(sorted(I))
    if len(I) % 2 and not allow_odd:
        raise ParityViolation(f"|I| = {len(I)} is odd")
    if cbar is not None:
        A = reduce_to_skew(cbar, A)
    if not A.is_skew():
        raise NotSkew("A must be skew-symmetric")
    Ao, Bo = _ordered_blocks(A, B, n)
    BI = Bo.submatrix(Bo.row_labels, list(I))
    pf_cache, det_cache = {}, {}
    gI = shift_count(I)
    out = Spinor(n)
    for r in range(len(I) % 2, n + 1, 2):
        for K in combinations(range(n), r):
            val = bordered_pfaffian(Ao, BI, K, pf_cache, det_cache)
            if not val == 0:
                out.terms[K] = val if (shift_count(K) + gI) % 2 == 0 else -val
    return out


def unitriangular_inverse(U: RingMatrix) -> RingMatrix:
    """Inverse of an upper unitriangular matrix (U[j][i] = 0 for j > i)."""
    n = U.nrows
    inv = [[0] * n for _ in range(n)]
    for i in range(n):
        inv[i][i] = 1
        for j in range(i - 1, -1, -1):
            acc = 0
            for m in range(j + 1, i + 1):
                if not U[j, m] == 0 and not inv[m][i] == 0:
                    acc = acc + U[j, m] * inv[m][i]
            inv[j][i] = -acc
    return RingMatrix(inv, U.row_labels, U.col_labels)


def reduce_to_skew(cbar: RingMatrix, C: RingMatrix) -> RingMatrix:
    """C * cbar^{-1}: re-choosing the x-basis so the barred block is the identity."""
    return C @ unitriangular_inverse(cbar)
