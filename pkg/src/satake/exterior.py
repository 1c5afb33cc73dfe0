"""Exterior powers of a free module with basis e_1..e_n.

A WedgeVector stores sorted 1-based index tuples with ring coefficients.
Matrices act through the derivation (Lie algebra) action, slot by slot.
"""
from __future__ import annotations

from typing import Dict, Iterable, Mapping, Sequence, Tuple

from .errors import DimensionMismatch, OutOfRange
from .pfaffian import RingMatrix

Key = Tuple[int, ...]


def _sort_sign(indices: Sequence[int]):
    """(sorted tuple, sign), or (None, 0) on a repeat."""
    idx = list(indices)
    sign = 1
    # insertion sort counting transpositions; lists are short
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
        if j > 0 and idx[j - 1] == idx[j]:
            return None, 0
    return tuple(idx), sign


class WedgeVector:
    """Element of the k-th exterior power of a rank-n free module."""

    __slots__ = ("k", "n", "terms")

    def __init__(self, k: int, n: int, terms: Mapping[Key, object] | None = None):
        self.k = k
        self.n = n
        self.terms: Dict[Key, object] = {}
        for key, c in (terms or {}).items():
            key = tuple(key)
            if len(key) != k or any(not 1 <= i <= n for i in key) or list(key) != sorted(set(key)):
                raise OutOfRange(f"bad wedge key {key} for k={k}, n={n}")
            if not c == 0:
                self.terms[key] = c

    @classmethod
    def basis(cls, I: Sequence[int], n: int, coeff=1) -> "WedgeVector":
        return wedge_normalize(I, coeff, n)

    def copy(self) -> "WedgeVector":
        v = WedgeVector(self.k, self.n)
        v.terms = dict(self.terms)
        return v

    def _add_term(self, key: Key, c):
        old = self.terms.get(key)
        new = c if old is None else old + c
        if new == 0:
            self.terms.pop(key, None)
        else:
            self.terms[key] = new

    def _check(self, other: "WedgeVector"):
        if (self.k, self.n) != (other.k, other.n):
            raise DimensionMismatch("wedge vectors of different shapes")

    def __add__(self, other: "WedgeVector") -> "WedgeVector":
        self._check(other)
        out = self.copy()
        for key, c in other.terms.items():
            out._add_term(key, c)
        return out

    def __neg__(self):
        out = WedgeVector(self.k, self.n)
        out.terms = {key: -c for key, c in self.terms.items()}
        return out

    def __sub__(self, other: "WedgeVector") -> "WedgeVector":
        return self + (-other)

    def scale(self, c) -> "WedgeVector":
        out = WedgeVector(self.k, self.n)
        if c == 0:
            return out
        for key, a in self.terms.items():
            v = c * a
            if not v == 0:
                out.terms[key] = v
        return out

    def __rmul__(self, c):
        return self.scale(c)

    def map_coeffs(self, f) -> "WedgeVector":
        out = WedgeVector(self.k, self.n)
        for key, c in self.terms.items():
            out._add_term(key, f(c))
        return out

    def coeff(self, key: Iterable[int]):
        return self.terms.get(tuple(key), 0)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, WedgeVector):
            return NotImplemented
        if (self.k, self.n) != (other.k, other.n):
            return False
        keys = set(self.terms) | set(other.terms)
        return all(self.terms.get(key, 0) - other.terms.get(key, 0) == 0 for key in keys)

    __hash__ = None  # type: ignore[assignment]

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms):
            name = "^".join(f"e{i}" for i in key) if key else "1"
            parts.append(f"({self.terms[key]})*{name}")
        return " + ".join(parts)

    __repr__ = __str__


def wedge_normalize(indices: Sequence[int], coeff, n: int) -> WedgeVector:
    """e_{i1} ^ ... ^ e_{ik} rewritten in sorted form."""
    for i in indices:
        if not 1 <= i <= n:
            raise OutOfRange(f"index {i} outside 1..{n}")
    v = WedgeVector(len(indices), n)
    key, sign = _sort_sign(indices)
    if key is not None and not coeff == 0:
        v.terms[key] = coeff if sign > 0 else -coeff
    return v


def derivation_action(M: RingMatrix, v: WedgeVector) -> WedgeVector:
    """Sum over slots of M applied to that slot (Leibniz rule)."""
    if M.shape != (v.n, v.n):
        raise DimensionMismatch(f"matrix {M.shape} on rank {v.n}")
    n = v.n
    cols = []
    for i in range(n):
        cols.append([(j + 1, M.rows[j][i]) for j in range(n) if not M.rows[j][i] == 0])
    out = WedgeVector(v.k, n)
    for key, c in v.terms.items():
        for a, i in enumerate(key):
            for j, m in cols[i - 1]:
                if j == i:
                    out._add_term(key, m * c)
                    continue
                if j in key:
                    continue
                new = key[:a] + (j,) + key[a + 1:]
                nk, sign = _sort_sign(new)
                term = m * c
                out._add_term(nk, term if sign > 0 else -term)
    return out


def matrix_of_operator(op, k: int, n: int, basis: Sequence[Key] | None = None):
    """Matrix (as dict of dicts) of a linear operator on the k-th exterior power."""
    from itertools import combinations
    basis = list(basis) if basis is not None else list(combinations(range(1, n + 1), k))
    return {I: op(WedgeVector(k, n, {I: 1})).terms for I in basis}
