"""Partitions, index sets, rim hooks and n-cores.

Type-A subsets are 1-based k-subsets of {1..n}; type-D subsets are drawn
from {0..n-1}.  Rim hooks are removed on the subset side, where removing an
n-rim hook means replacing an element i by i - n.
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import CardinalityMismatch


class Partition(tuple):
    """Weakly decreasing tuple of positive parts (trailing zeros dropped)."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError("parts must be nonnegative")
        while parts and parts[-1] == 0:
            parts.pop()
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """i-th part, 1-based, zero past the end."""
        return self[i - 1] if i <= len(self) else 0

    def contains(self, other: "Partition") -> bool:
        if len(other) > len(self):
            return False
        return all(a >= b for a, b in zip(self, other))

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def add_box_options(self, max_rows: Optional[int] = None) -> List["Partition"]:
        """Partitions obtained by adding one box."""
        out = []
        rows = len(self) + 1 if max_rows is None else min(len(self) + 1, max_rows)
        for i in range(rows):
            cur = self.part(i + 1)
            if i == 0 or self.part(i) > cur:
                parts = list(self) + [0]
                parts[i] += 1
                out.append(Partition(parts))
        return out

    def remove_box_options(self) -> List["Partition"]:
        out = []
        for i in range(len(self)):
            if i == len(self) - 1 or self[i] > self[i + 1]:
                parts = list(self)
                parts[i] -= 1
                out.append(Partition(parts))
        return out

    def __repr__(self):
        return f"Partition({list(self)})"

    def __str__(self):
        return "(" + ",".join(map(str, self)) + ")" if self else "()"


def parse_partition(text: str) -> Partition:
    text = text.strip().strip("()[]")
    if not text:
        return Partition()
    return Partition(int(p) for p in text.split(","))


def partitions_in_rectangle(k: int, w: int) -> List[Partition]:
    """All partitions inside a k x w box, by size then reverse lex."""
    out = []

    def rec(prefix, rows_left, cap):
        out.append(Partition(prefix))
        if rows_left == 0:
            return
        for p in range(1, cap + 1):
            rec(prefix + [p], rows_left - 1, p)

    rec([], k, w)
    return sorted(out, key=lambda p: (p.size, tuple(-x for x in p)))


def partitions_with_rows(size: int, rows: int, max_part: Optional[int] = None) -> Iterator[Partition]:
    """Partitions of size with at most rows parts."""
    cap0 = size if max_part is None else min(size, max_part)

    def rec(rem, rows_left, cap, prefix):
        if rem == 0:
            yield Partition(prefix)
            return
        if rows_left == 0:
            return
        for p in range(min(rem, cap), 0, -1):
            yield from rec(rem - p, rows_left - 1, p, prefix + [p])

    yield from rec(size, rows, cap0, [])


def subset_to_partition(I: Sequence[int], k: int) -> Partition:
    """lambda_{k+1-j} = i_j - j for the increasing k-subset I."""
    I = sorted(I)
    if len(I) != k:
        raise CardinalityMismatch(f"subset {I} does not have {k} elements")
    if len(set(I)) != k or (I and I[0] < 1):
        raise ValueError(f"not a subset of positive integers: {I}")
    return Partition(I[j] - (j + 1) for j in reversed(range(k)))


def partition_to_subset(lam: Sequence[int], k: int) -> Tuple[int, ...]:
    lam = Partition(lam)
    if len(lam) > k:
        raise CardinalityMismatch(f"{lam} has more than {k} parts")
    return tuple(lam.part(k + 1 - j) + j for j in range(1, k + 1))


def k_subsets(n: int, k: int) -> List[Tuple[int, ...]]:
    return list(combinations(range(1, n + 1), k))


def inversions(seq: Sequence[int]) -> int:
    return sum(1 for a, b in combinations(seq, 2) if a > b)


def remove_rim_hook(lam: Sequence[int], n: int, row_choice: int):
    """Remove the n-rim hook whose top row is row_choice (1-based).

    In subset form this replaces the element for that row, i, by i - n.
    Returns (partition, height) or None when the move is illegal.
    """
    if n < 1:
        raise ValueError("n must be positive")
    lam = Partition(lam)
    k = len(lam)
    if not 1 <= row_choice <= k:
        return None
    I = partition_to_subset(lam, k)
    j = k - row_choice
    i = I[j]
    if i - n < 1 or i - n in I:
        return None
    new = list(I)
    new[j] = i - n
    height = inversions(new)
    return subset_to_partition(sorted(new), k), height


def n_core(lam: Sequence[int], k: int, n: int):
    """(core, s, eps) with s hooks removed and eps the parity of their total height.

    Residues are taken with representatives 1..n; the j-th smallest element
    with residue r becomes r + (j-1)n, and eps is the parity of the
    permutation sorting the reduced sequence.
    """
    lam = Partition(lam)
    if len(lam) > k:
        raise CardinalityMismatch(f"{lam} has more than {k} parts")
    I = partition_to_subset(lam, k)
    seen = {}
    reduced = []
    for i in I:
        r = (i - 1) % n + 1
        c = seen.get(r, 0)
        seen[r] = c + 1
        reduced.append(r + c * n)
    eps = inversions(reduced) % 2
    core = subset_to_partition(sorted(reduced), k)
    s, rem = divmod(lam.size - core.size, n)
    assert rem == 0
    return core, s, eps


def fits_rectangle(mu: Sequence[int], k: int, w: int) -> bool:
    mu = Partition(mu)
    return len(mu) <= k and (not mu or mu[0] <= w)


def strict_partition(I: Sequence[int]) -> Partition:
    """Decreasing rearrangement of a subset of {0..n-1} (zeros dropped)."""
    return Partition(sorted(I, reverse=True))


def strict_subset_order(I: Sequence[int], J: Sequence[int]) -> bool:
    """I >= J: the Young diagram of I contains that of J."""
    return strict_partition(I).contains(strict_partition(J))


def even_subsets(n: int) -> List[Tuple[int, ...]]:
    """Even-cardinality subsets of {0..n-1}, ordered by size of the strict partition."""
    out = []
    for r in range(0, n + 1, 2):
        out.extend(combinations(range(n), r))
    return sorted(out, key=lambda I: (sum(I), len(I), I))


def parse_subset(text: str) -> Tuple[int, ...]:
    text = text.strip().strip("{}()[]")
    if not text:
        return ()
    vals = [int(x) for x in text.split(",")]
    if len(set(vals)) != len(vals):
        raise ValueError(f"repeated element in {text!r}")
    return tuple(sorted(vals))
