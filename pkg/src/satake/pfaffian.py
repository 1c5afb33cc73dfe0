"""Dense matrices over exact rings, determinants and Pfaffians.

Entries may be ints, Fractions, Poly or RatLin values; anything supporting
+, -, * and comparison with 0.  Rows and columns may carry labels, and the
sub-Pfaffian helpers select by label when labels are present.
"""
from __future__ import annotations

from itertools import combinations
from typing import Callable, Dict, Hashable, List, Optional, Sequence

from .errors import BadIndex, NotSkew, NotSquare
from .poly import Poly, poly_exact_div


def _is_zero(x) -> bool:
    return x == 0


class RingMatrix:
    """Rectangular grid of ring elements with optional row/column labels."""

    __slots__ = ("rows", "row_labels", "col_labels")

    def __init__(self, rows: Sequence[Sequence], row_labels: Optional[Sequence[Hashable]] = None,
                 col_labels: Optional[Sequence[Hashable]] = None):
        self.rows = [list(r) for r in rows]
        ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != ncols for r in self.rows):
            raise ValueError("ragged matrix")
        for labels, size in ((row_labels, len(self.rows)), (col_labels, ncols)):
            if labels is not None:
                if len(labels) != size:
                    raise ValueError("label count does not match dimension")
                if len(set(labels)) != len(labels):
                    raise ValueError("labels must be distinct")
        self.row_labels = list(row_labels) if row_labels is not None else None
        self.col_labels = list(col_labels) if col_labels is not None else None

    @classmethod
    def zeros(cls, nrows: int, ncols: int, row_labels=None, col_labels=None) -> "RingMatrix":
        return cls([[0] * ncols for _ in range(nrows)], row_labels, col_labels)

    @classmethod
    def identity(cls, n: int, labels=None) -> "RingMatrix":
        m = cls.zeros(n, n, labels, labels)
        for i in range(n):
            m.rows[i][i] = 1
        return m

    @classmethod
    def from_function(cls, row_labels: Sequence, col_labels: Sequence, f: Callable) -> "RingMatrix":
        return cls([[f(r, c) for c in col_labels] for r in row_labels], row_labels, col_labels)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self):
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __setitem__(self, ij, value):
        i, j = ij
        self.rows[i][j] = value

    def row_index(self, label) -> int:
        if self.row_labels is None:
            return label
        try:
            return self.row_labels.index(label)
        except ValueError:
            raise BadIndex(f"unknown row label {label!r}") from None

    def col_index(self, label) -> int:
        if self.col_labels is None:
            return label
        try:
            return self.col_labels.index(label)
        except ValueError:
            raise BadIndex(f"unknown column label {label!r}") from None

    def at(self, row_label, col_label):
        return self.rows[self.row_index(row_label)][self.col_index(col_label)]

    def set(self, row_label, col_label, value):
        self.rows[self.row_index(row_label)][self.col_index(col_label)] = value

    def transpose(self) -> "RingMatrix":
        return RingMatrix([list(c) for c in zip(*self.rows)] if self.rows else [],
                          self.col_labels, self.row_labels)

    def map(self, f: Callable) -> "RingMatrix":
        return RingMatrix([[f(x) for x in r] for r in self.rows], self.row_labels, self.col_labels)

    def __neg__(self):
        return self.map(lambda x: -x)

    def __add__(self, other: "RingMatrix") -> "RingMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return RingMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                          self.row_labels, self.col_labels)

    def __sub__(self, other: "RingMatrix") -> "RingMatrix":
        return self + (-other)

    def scale(self, c) -> "RingMatrix":
        return self.map(lambda x: c * x)

    def __matmul__(self, other: "RingMatrix") -> "RingMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            nz = [(k, a) for k, a in enumerate(r) if not _is_zero(a)]
            row = []
            for col in cols:
                acc = 0
                for k, a in nz:
                    b = col[k]
                    if not _is_zero(b):
                        acc = a * b + acc
                row.append(acc)
            out.append(row)
        return RingMatrix(out, self.row_labels, other.col_labels)

    def power(self, e: int) -> "RingMatrix":
        if e < 0:
            raise ValueError("negative power")
        out = RingMatrix.identity(self.nrows, self.row_labels)
        out.col_labels = self.col_labels
        for _ in range(e):
            out = out @ self
        return out

    def submatrix(self, rows: Sequence, cols: Sequence) -> "RingMatrix":
        """Select rows/columns by label (or by position when unlabelled)."""
        ri = [self.row_index(r) for r in rows]
        ci = [self.col_index(c) for c in cols]
        return RingMatrix([[self.rows[i][j] for j in ci] for i in ri],
                          list(rows) if self.row_labels is not None else None,
                          list(cols) if self.col_labels is not None else None)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_skew(self) -> bool:
        if not self.is_square():
            return False
        n = self.nrows
        for i in range(n):
            if not _is_zero(self.rows[i][i]):
                return False
            for j in range(i + 1, n):
                if not _is_zero(self.rows[i][j] + self.rows[j][i]):
                    return False
        return True

    def __eq__(self, other):
        if not isinstance(other, RingMatrix) or self.shape != other.shape:
            return NotImplemented if not isinstance(other, RingMatrix) else False
        return all(_is_zero(a - b) for r, s in zip(self.rows, other.rows) for a, b in zip(r, s))

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self):
        return f"RingMatrix({[[str(x) for x in r] for r in self.rows]})"


def block_matrix(blocks: Sequence[Sequence[RingMatrix]]) -> RingMatrix:
    rows = []
    for brow in blocks:
        for i in range(brow[0].nrows):
            rows.append([x for b in brow for x in b.rows[i]])
    return RingMatrix(rows)


def determinant(m: RingMatrix):
    if not m.is_square():
        raise NotSquare(f"matrix of shape {m.shape} is not square")
    n = m.nrows
    if n == 0:
        return 1
    if n > 10 and all(isinstance(x, (int, Poly)) for r in m.rows for x in r):
        return _bareiss(m)
    return _laplace_det(m.rows)


def _laplace_det(rows):
    n = len(rows)
    memo: Dict[int, object] = {}
    full = (1 << n) - 1

    def rec(r, mask):
        # determinant of rows r.. against the columns in mask
        if r == n:
            return 1
        if mask in memo:
            return memo[mask]
        acc = 0
        sign = 1
        row = rows[r]
        for c in range(n):
            if mask >> c & 1:
                a = row[c]
                if not _is_zero(a):
                    sub = rec(r + 1, mask & ~(1 << c))
                    if not _is_zero(sub):
                        term = a * sub
                        acc = acc + term if sign > 0 else acc - term
                sign = -sign
        memo[mask] = acc
        return acc

    return rec(0, full)


def _exact(a, b):
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        assert r == 0
        return q
    return poly_exact_div(a, b)


def _bareiss(m: RingMatrix):
    a = [list(r) for r in m.rows]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if _is_zero(a[k][k]):
            for i in range(k + 1, n):
                if not _is_zero(a[i][k]):
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = _exact(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev)
        prev = a[k][k]
    return a[n - 1][n - 1] * sign


def _check_skew(m: RingMatrix):
    if not m.is_skew():
        raise NotSkew("matrix is not skew-symmetric")


def _pf_rows(rows) -> object:
    n = len(rows)
    if n % 2:
        return 0
    memo: Dict[int, object] = {0: 1}

    def rec(mask):
        if mask in memo:
            return memo[mask]
        i = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << i)
        acc = 0
        sign = 1
        row = rows[i]
        j = i + 1
        r = rest >> j
        while r:
            if r & 1:
                a = row[j]
                if not _is_zero(a):
                    sub = rec(rest & ~(1 << j))
                    if not _is_zero(sub):
                        term = a * sub
                        acc = acc + term if sign > 0 else acc - term
                sign = -sign
            r >>= 1
            j += 1
        memo[mask] = acc
        return acc

    return rec((1 << n) - 1)


def pfaffian(m: RingMatrix, check: bool = True):
    """Pfaffian by expansion along the first row with memoisation over
    index subsets.  Odd dimension gives 0; the empty matrix gives 1."""
    if check:
        _check_skew(m)
    return _pf_rows(m.rows)


def pfaffian_sub(m: RingMatrix, K: Sequence, check: bool = True):
    """Pfaffian of the principal submatrix on K (labels if m is labelled).
    Rows are taken in the matrix's own order, not in the order of K."""
    if check:
        _check_skew(m)
    idx = sorted({m.row_index(k) for k in K})
    if len(idx) != len(list(K)):
        raise BadIndex("repeated index in K")
    for i in idx:
        if not 0 <= i < m.nrows:
            raise BadIndex(f"index {i} out of range")
    return _pf_rows([[m.rows[i][j] for j in idx] for i in idx])


def bordered_pfaffian(A: RingMatrix, B: RingMatrix, K: Sequence,
                      pf_cache: Optional[Dict] = None, det_cache: Optional[Dict] = None):
    """Pfaffian of [[A_K, B_K], [-B_K^T, 0]], where A_K and B_K keep the rows
    in K (in A's order) and all columns of B.

    Uses the expansion over r-subsets L of K (r = number of columns of B):
    sum of sign * det(B_L) * Pf(A_{K minus L}).  Caches keyed by label
    tuples may be shared across calls with the same A and B.
    """
    idx = sorted(A.row_index(k) for k in K)
    labels = [A.row_labels[i] if A.row_labels is not None else i for i in idx]
    m, r = len(labels), B.ncols
    if (m + r) % 2:
        return 0
    if r > m:
        return 0
    pf_cache = {} if pf_cache is None else pf_cache
    det_cache = {} if det_cache is None else det_cache
    total = 0
    for pos in combinations(range(m), r):
        L = tuple(labels[p] for p in pos)
        if L not in det_cache:
            det_cache[L] = determinant(B.submatrix(L, B.col_labels if B.col_labels is not None
                                                   else range(r)))
        d = det_cache[L]
        if _is_zero(d):
            continue
        rest = tuple(l for l in labels if l not in L)
        if rest not in pf_cache:
            pf_cache[rest] = pfaffian_sub(A, rest, check=False)
        p = pf_cache[rest]
        if _is_zero(p):
            continue
        # sign of the permutation bringing the rows of L next to the border
        e = sum(pos) + (m - r) * r
        term = d * p
        total = total + term if e % 2 == 0 else total - term
    return total
