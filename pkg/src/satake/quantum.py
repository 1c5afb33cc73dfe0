"""Equivariant quantum cohomology of Gr(k, n) through the rim-hook rule.

Classical products on Gr(k, N), N large, are cyclically specialized
(t_i -> t_{i mod n}, representatives 1..n) and pushed down by psi, which
replaces a partition by its n-core with a sign and a power of q.
"""
from __future__ import annotations

import re
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .combinatorics import Partition, fits_rectangle, n_core, partitions_in_rectangle
from .errors import OutOfRange
from .exterior import WedgeVector
from .pfaffian import RingMatrix
from .poly import Poly, poly_substitute
from .typea import (GrContext, build_xi_t, chevalley_action, classical_product,
                    classes_to_wedge, power_action, wedge_to_classes)

Q = Poly.var("q")
_TVAR = re.compile(r"^t(\d+)$")


def _clean(terms: Mapping) -> Dict[Partition, Poly]:
    out: Dict[Partition, Poly] = {}
    for lam, c in terms.items():
        c = Poly.coerce(c)
        if not c == 0:
            lam = Partition(lam)
            out[lam] = out[lam] + c if lam in out else c
            if out[lam] == 0:
                del out[lam]
    return out


class QClass:
    """Element of QH_T Gr(k, n): partitions in the k x (n-k) box with
    coefficients in Z[t_1..t_n, q]."""

    def __init__(self, k: int, n: int, terms: Optional[Mapping] = None):
        self.k = k
        self.n = n
        self.terms = _clean(terms or {})
        for lam in self.terms:
            if not fits_rectangle(lam, k, n - k):
                raise OutOfRange(f"{lam} does not fit in {k}x{n - k}")

    @classmethod
    def basis(cls, k: int, n: int, lam) -> "QClass":
        return cls(k, n, {Partition(lam): 1})

    def _check(self, other: "QClass"):
        if (self.k, self.n) != (other.k, other.n):
            raise ValueError("classes live on different Grassmannians")

    def __add__(self, other: "QClass") -> "QClass":
        self._check(other)
        terms = dict(self.terms)
        for lam, c in other.terms.items():
            terms[lam] = terms[lam] + c if lam in terms else c
        return QClass(self.k, self.n, terms)

    def __neg__(self):
        return QClass(self.k, self.n, {lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "QClass":
        return QClass(self.k, self.n, {lam: c * v for lam, v in self.terms.items()})

    def coeff(self, lam) -> Poly:
        return self.terms.get(Partition(lam), Poly.const(0))

    def substitute(self, mapping) -> "QClass":
        return QClass(self.k, self.n, {lam: poly_substitute(c, mapping)
                                       for lam, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, QClass):
            return NotImplemented
        return (self.k, self.n) == (other.k, other.n) and (self - other).terms == {}

    __hash__ = None  # type: ignore[assignment]

    def check_grading(self, degree: int):
        """Every coefficient of sigma_nu is homogeneous of degree
        degree - |nu|, counting deg t = 1 and deg q = n."""
        for lam, c in self.terms.items():
            want = degree - lam.size
            for exps, _ in c.items():
                got = sum(e * (self.n if v == "q" else 1) for v, e in zip(c.vars, exps))
                if got != want:
                    raise AssertionError(f"coefficient of {lam} has degree {got}, expected {want}")
        return True

    def to_json_obj(self) -> list:
        return [{"nu": list(lam), "coeff": self.terms[lam].to_json_obj()}
                for lam in sorted(self.terms, key=lambda p: (p.size, p))]

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({self.terms[lam]})*s{list(lam)}"
                          for lam in sorted(self.terms, key=lambda p: (p.size, p)))

    __repr__ = __str__


class InfiniteClass:
    """Finitely supported class on Gr(k, infinity), coefficients in t_1..t_N."""

    def __init__(self, k: int, N: int, terms: Optional[Mapping] = None):
        self.k = k
        self.N = N
        self.terms = _clean(terms or {})
        for lam in self.terms:
            if len(lam) > k:
                raise OutOfRange(f"{lam} has more than {k} parts")

    def __add__(self, other: "InfiniteClass") -> "InfiniteClass":
        terms = dict(self.terms)
        for lam, c in other.terms.items():
            terms[lam] = terms[lam] + c if lam in terms else c
        return InfiniteClass(self.k, max(self.N, other.N), terms)

    def __neg__(self):
        return InfiniteClass(self.k, self.N, {lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "InfiniteClass":
        return InfiniteClass(self.k, self.N, {lam: c * v for lam, v in self.terms.items()})

    def specialize(self, n: int) -> "InfiniteClass":
        return InfiniteClass(self.k, n, {lam: cyclic_specialize(c, n)
                                         for lam, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, InfiniteClass):
            return NotImplemented
        return self.k == other.k and (self - other).terms == {}

    __hash__ = None  # type: ignore[assignment]


def cyclic_specialize(p, n: int) -> Poly:
    """t_i -> t_{((i-1) mod n) + 1}."""
    p = Poly.coerce(p)
    mapping = {}
    for v in p.vars:
        m = _TVAR.match(v)
        if m and int(m.group(1)) > n:
            mapping[v] = Poly.var(f"t{(int(m.group(1)) - 1) % n + 1}")
    return poly_substitute(p, mapping) if mapping else p


def _specialized(p: Poly, n: int) -> bool:
    for v in p.free_vars():
        m = _TVAR.match(v)
        if m and int(m.group(1)) > n:
            return False
    return True


def rimhook_data(lam, k: int, n: int):
    """(core, s, wrap exponent (k-1)s, epsilon) for the n-core of lambda.
    The two sign sources are kept apart on purpose."""
    core, s, eps = n_core(lam, k, n)
    return core, s, (k - 1) * s, eps


def psi_map(c: InfiniteClass, n: int) -> QClass:
    """sigma_lambda -> (-1)^{(k-1)s + eps} q^s sigma_core, or 0 when the core
    does not fit in the k x (n-k) box."""
    k = c.k
    out: Dict[Partition, Poly] = {}
    for lam, coeff in c.terms.items():
        if not _specialized(coeff, n):
            raise ValueError(f"coefficient of {lam} is not cyclically specialized")
        core, s, wrap, eps = rimhook_data(lam, k, n)
        if not fits_rectangle(core, k, n - k):
            continue
        term = coeff * Q ** s
        if (wrap + eps) % 2:
            term = -term
        out[core] = out[core] + term if core in out else term
    return QClass(k, n, out)


def build_xi_qt(k: int, n: int, ctx: Optional[GrContext] = None) -> RingMatrix:
    """xi_t with (-1)^{k-1} q in the top-right corner."""
    ctx = GrContext(k, n) if ctx is None else ctx
    return build_xi_t(ctx, q=Q if k % 2 == 1 else -Q)


def quantum_chevalley(k: int, n: int, c: QClass) -> QClass:
    """sigma_1 * c via the twisted derivation action of xi_{q,t}."""
    ctx = GrContext(k, n)
    xi = build_xi_qt(k, n, ctx)
    v = classes_to_wedge(ctx, c.terms)
    return QClass(k, n, wedge_to_classes(ctx, chevalley_action(ctx, v, xi=xi)))


def quantum_chevalley_formula(k: int, n: int, lam) -> QClass:
    """The displayed rule on e_I: raise one index, add the weight term, and
    add q e_1 ^ e_{i_1} ^ .. ^ e_{i_{k-1}} when i_k = n and i_1 > 1."""
    ctx = GrContext(k, n)
    I = ctx.subset(lam)
    out: Dict[Partition, Poly] = {}
    for a, i in enumerate(I):
        if i < n and i + 1 not in I:
            out[ctx.partition(I[:a] + (i + 1,) + I[a + 1:])] = Poly.const(1)
    out[Partition(lam)] = ctx.twist() - sum((ctx.tv(i) for i in I), Poly.const(0))
    if I[-1] == n and I[0] > 1:
        out[ctx.partition((1,) + I[:-1])] = Q
    return QClass(k, n, out)


def stable_N(k: int, lam, mu) -> int:
    """Truncation rank large enough that no product term leaves Gr(k, N)."""
    return k + Partition(lam).size + Partition(mu).size


def lift_product(k: int, lam, mu, N: Optional[int] = None,
                 method: str = "recursion") -> InfiniteClass:
    """sigma_lambda * sigma_mu on Gr(k, N) with generic t_1..t_N."""
    N = stable_N(k, lam, mu) if N is None else N
    if N < stable_N(k, lam, mu):
        raise ValueError(f"N={N} is below the stable range {stable_N(k, lam, mu)}")
    ctx = GrContext(k, N)
    return InfiniteClass(k, N, classical_product(ctx, lam, mu, method=method))


_PRODUCTS: Dict[tuple, QClass] = {}


def quantum_product(k: int, n: int, lam, mu, N: Optional[int] = None,
                    method: str = "recursion") -> QClass:
    """sigma_lambda * sigma_mu in QH_T Gr(k, n) by the rim-hook rule."""
    lam, mu = Partition(lam), Partition(mu)
    for p in (lam, mu):
        if not fits_rectangle(p, k, n - k):
            raise OutOfRange(f"{p} does not fit in {k}x{n - k}")
    if lam.size < mu.size or (lam.size == mu.size and lam < mu):
        lam, mu = mu, lam
    key = (k, n, lam, mu, N, method)
    hit = _PRODUCTS.get(key)
    if hit is None:
        hit = psi_map(lift_product(k, lam, mu, N, method).specialize(n), n)
        hit.check_grading(lam.size + mu.size)
        _PRODUCTS[key] = hit
    return hit


def multiply(a: QClass, b: QClass) -> QClass:
    """Bilinear extension of quantum_product."""
    a._check(b)
    out = QClass(a.k, a.n)
    for la, ca in a.terms.items():
        for lb, cb in b.terms.items():
            out = out + quantum_product(a.k, a.n, la, lb).scale(ca * cb)
    return out


def specialize_t(c: QClass, values: Sequence[int]) -> QClass:
    """Substitute t_i = values[i-1]."""
    return c.substitute({f"t{i}": v for i, v in enumerate(values, start=1)})


# kernel of psi and surjectivity

def kernel_generators(k: int, n: int, max_size: int) -> List[InfiniteClass]:
    """Both kinds of kernel generators with |lambda| <= max_size: classes
    whose n-core does not fit, and signed differences of equal-size
    partitions sharing a fitting core."""
    from .combinatorics import partitions_with_rows
    gens: List[InfiniteClass] = []
    by_core: Dict[tuple, List[Tuple[Partition, int]]] = {}
    for size in range(max_size + 1):
        for lam in partitions_with_rows(size, k):
            core, s, eps = n_core(lam, k, n)
            if not fits_rectangle(core, k, n - k):
                gens.append(InfiniteClass(k, n, {lam: 1}))
            else:
                by_core.setdefault((core, size), []).append((lam, eps))
    for group in by_core.values():
        for (l1, e1), (l2, e2) in zip(group, group[1:]):
            gens.append(InfiniteClass(k, n, {l1: -1 if e1 else 1, l2: 1 if e2 else -1}))
    return gens


def power_action_infinite(c: InfiniteClass, j: int, n: int) -> InfiniteClass:
    """power_action of xi_t^j on Gr(k, infinity), truncated at a rank that
    contains every index reached, then cyclically specialized."""
    k = c.k
    width = max((lam[0] if lam else 0) for lam in c.terms) if c.terms else 0
    N = k + width + j
    ctx = GrContext(k, N)
    v = classes_to_wedge(ctx, c.terms)
    out = wedge_to_classes(ctx, power_action(ctx, j, v))
    return InfiniteClass(k, N, out).specialize(n)


def surjectivity_preimage(k: int, n: int, mu, s: int) -> InfiniteClass:
    """A class mapping to q^s sigma_mu: add s*n to the largest element of I(mu)."""
    from .combinatorics import partition_to_subset, subset_to_partition
    I = list(partition_to_subset(mu, k))
    I[-1] += s * n
    lam = subset_to_partition(I, k)
    core, s2, wrap, eps = rimhook_data(lam, k, n)
    assert core == Partition(mu) and s2 == s
    sign = -1 if (wrap + eps) % 2 else 1
    return InfiniteClass(k, n, {lam: sign})
