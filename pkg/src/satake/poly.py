"""Sparse multivariate polynomials with integer coefficients, and rational
functions whose denominators are products of linear forms.

Monomials are packed into a single Python int.  Each variable gets a
``_W``-bit field whose top bit is a guard, and the total degree sits in the
most significant field.  With that layout the integer order of packed
monomials is graded lexicographic order, multiplying monomials is integer
addition, and divisibility is one subtraction and a mask.
"""
from __future__ import annotations

import heapq
import json
import re
from functools import lru_cache
from math import gcd
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from .errors import AlphabetTooShort, InexactDivision, ZeroDenominatorForm

_W = 16
_MASK = (1 << _W) - 1
_KIND_RANK = {"t": 0, "x": 1, "q": 2}
_NAME_RE = re.compile(r"^([A-Za-z_]+)(\d*)$")


def var_key(name: str):
    """Sort key for variable names: t-alphabet, then x, then q, then others."""
    m = _NAME_RE.match(name)
    if not m:
        raise ValueError(f"bad variable name {name!r}")
    kind, idx = m.groups()
    return (_KIND_RANK.get(kind, 3), kind, int(idx) if idx else -1)


class _Layout:
    __slots__ = ("vars", "nv", "index", "shift", "unit", "guard", "dshift")

    def __init__(self, names: Tuple[str, ...]):
        self.vars = names
        self.nv = nv = len(names)
        self.index = {v: i for i, v in enumerate(names)}
        self.dshift = _W * nv
        self.shift = [_W * (nv - 1 - i) for i in range(nv)]
        self.unit = [(1 << s) | (1 << self.dshift) for s in self.shift]
        self.guard = sum(1 << (_W * j + _W - 1) for j in range(nv + 1))

    def pack(self, exps: Sequence[int]) -> int:
        m = 0
        for e, u in zip(exps, self.unit):
            if e:
                if e < 0 or e >= 1 << (_W - 1):
                    raise OverflowError("exponent out of range")
                m += e * u
        return m

    def unpack(self, m: int) -> Tuple[int, ...]:
        return tuple((m >> s) & _MASK for s in self.shift)

    def divides(self, a: int, b: int) -> bool:
        """True iff monomial a divides monomial b."""
        g = self.guard
        return ((b | g) - a) & g == g


@lru_cache(maxsize=None)
def _layout(names: Tuple[str, ...]) -> _Layout:
    return _Layout(names)


@lru_cache(maxsize=4096)
def _union(a: Tuple[str, ...], b: Tuple[str, ...]) -> Tuple[str, ...]:
    return tuple(sorted(set(a) | set(b), key=var_key))


def _canonical_vars(names: Iterable[str]) -> Tuple[str, ...]:
    return tuple(sorted(set(names), key=var_key))


def _convert(terms: Dict[int, int], src: _Layout, dst: _Layout) -> Dict[int, int]:
    if src is dst:
        return terms
    pos = [dst.unit[dst.index[v]] for v in src.vars]
    out = {}
    for m, c in terms.items():
        k = 0
        for s, u in zip(src.shift, pos):
            e = (m >> s) & _MASK
            if e:
                k += e * u
        out[k] = c
    return out


class Poly:
    """Immutable sparse polynomial over the integers."""

    __slots__ = ("_lay", "terms")

    def __init__(self, terms: Dict[int, int] | None = None, names: Tuple[str, ...] = ()):
        self._lay = _layout(tuple(names))
        self.terms = {m: c for m, c in terms.items() if c} if terms else {}

    @classmethod
    def _raw(cls, terms: Dict[int, int], lay: _Layout) -> "Poly":
        p = object.__new__(cls)
        p._lay = lay
        p.terms = terms
        return p

    # construction
    @classmethod
    def const(cls, c: int, names: Iterable[str] = ()) -> "Poly":
        return cls._raw({0: c} if c else {}, _layout(_canonical_vars(names)))

    @classmethod
    def var(cls, name: str, names: Iterable[str] = ()) -> "Poly":
        lay = _layout(_canonical_vars(list(names) + [name]))
        return cls._raw({lay.unit[lay.index[name]]: 1}, lay)

    @classmethod
    def from_dict(cls, d: Mapping[Tuple[int, ...], int], names: Sequence[str]) -> "Poly":
        names = tuple(names)
        canon = _canonical_vars(names)
        if len(canon) != len(names):
            raise ValueError("repeated variable names")
        lay = _layout(canon)
        perm = [lay.index[v] for v in names]
        terms: Dict[int, int] = {}
        for exps, c in d.items():
            if len(exps) != len(names):
                raise ValueError("exponent vector length mismatch")
            full = [0] * lay.nv
            for i, e in zip(perm, exps):
                full[i] = e
            m = lay.pack(full)
            terms[m] = terms.get(m, 0) + int(c)
        return cls._raw({m: c for m, c in terms.items() if c}, lay)

    @staticmethod
    def coerce(x) -> "Poly":
        if isinstance(x, Poly):
            return x
        if isinstance(x, int):
            return Poly.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to Poly")

    # introspection
    @property
    def vars(self) -> Tuple[str, ...]:
        return self._lay.vars

    def items(self):
        """(exponent tuple, coefficient) pairs in descending term order."""
        lay = self._lay
        for m in sorted(self.terms, reverse=True):
            yield lay.unpack(m), self.terms[m]

    def __len__(self):
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant_value(self) -> int:
        return self.terms.get(0, 0)

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(self.terms) >> self._lay.dshift

    def is_homogeneous(self) -> bool:
        ds = {m >> self._lay.dshift for m in self.terms}
        return len(ds) <= 1

    def free_vars(self) -> Tuple[str, ...]:
        lay = self._lay
        used = 0
        for m in self.terms:
            used |= m
        return tuple(v for v, s in zip(lay.vars, lay.shift) if (used >> s) & _MASK)

    def degree_in(self, name: str) -> int:
        lay = self._lay
        if name not in lay.index:
            return 0
        s = lay.shift[lay.index[name]]
        return max(((m >> s) & _MASK for m in self.terms), default=0)

    def leading(self) -> Tuple[Tuple[int, ...], int]:
        m = max(self.terms)
        return self._lay.unpack(m), self.terms[m]

    def content(self) -> int:
        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
        return g

    # varset handling
    def with_vars(self, names: Iterable[str]) -> "Poly":
        """Re-express over a varset containing the current one."""
        names = _canonical_vars(list(names) + list(self.vars))
        lay = _layout(names)
        return Poly._raw(_convert(self.terms, self._lay, lay), lay)

    def trim(self) -> "Poly":
        """Drop variables that do not occur."""
        lay = _layout(self.free_vars())
        return Poly._raw(_project(self.terms, self._lay, lay), lay)

    # arithmetic
    def _pair(self, other):
        if isinstance(other, Poly):
            if other._lay is self._lay:
                return self.terms, other.terms, self._lay
            lay = _layout(_union(self.vars, other.vars))
            return _convert(self.terms, self._lay, lay), _convert(other.terms, other._lay, lay), lay
        if isinstance(other, int):
            return self.terms, ({0: other} if other else {}), self._lay
        return None

    def __add__(self, other):
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        a, b, lay = pr
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for m, c in b.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                del out[m]
        return Poly._raw(out, lay)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({m: -c for m, c in self.terms.items()}, self._lay)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if isinstance(other, (Poly, int)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, int):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return Poly._raw({}, self._lay)
            return Poly._raw({m: c * other for m, c in self.terms.items()}, self._lay)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b, lay = self._pair(other)
        if len(a) < len(b):
            a, b = b, a
        out: Dict[int, int] = {}
        get = out.get
        bitems = list(b.items())
        for m1, c1 in a.items():
            for m2, c2 in bitems:
                m = m1 + m2
                out[m] = get(m, 0) + c1 * c2
        return Poly._raw({m: c for m, c in out.items() if c}, lay)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result = Poly._raw({0: 1}, self._lay)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        pr = self._pair(other) if isinstance(other, (Poly, int)) else None
        if pr is None:
            return NotImplemented
        a, b, _ = pr
        return a == b

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    __hash__ = None  # type: ignore[assignment]

    def __bool__(self):
        return bool(self.terms)

    def exact_div(self, den) -> "Poly":
        return poly_exact_div(self, den)

    def __floordiv__(self, den):
        return poly_exact_div(self, den)

    # substitution
    def substitute(self, mapping: Mapping[str, "Poly | int"]) -> "Poly":
        return poly_substitute(self, mapping)

    # formatting
    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"Poly({self.to_string()!r})"

    def to_string(self) -> str:
        if not self.terms:
            return "0"
        lay = self._lay
        parts = []
        for m in sorted(self.terms, reverse=True):
            c = self.terms[m]
            mono = []
            for v, s in zip(lay.vars, lay.shift):
                e = (m >> s) & _MASK
                if e == 1:
                    mono.append(v)
                elif e:
                    mono.append(f"{v}^{e}")
            body = "*".join(mono)
            a = abs(c)
            if not body:
                txt = str(a)
            elif a == 1:
                txt = body
            else:
                txt = f"{a}*{body}"
            if not parts:
                parts.append(("-" if c < 0 else "") + txt)
            else:
                parts.append((" - " if c < 0 else " + ") + txt)
        return "".join(parts)

    def to_json_obj(self) -> dict:
        lay = self._lay
        return {
            "vars": list(lay.vars),
            "terms": [{"exp": list(lay.unpack(m)), "coeff": str(self.terms[m])}
                      for m in sorted(self.terms, reverse=True)],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Poly":
        names = tuple(obj["vars"])
        return cls.from_dict({tuple(t["exp"]): int(t["coeff"]) for t in obj["terms"]}, names)

    @classmethod
    def from_json(cls, s: str) -> "Poly":
        return cls.from_json_obj(json.loads(s))

    @classmethod
    def parse(cls, s: str) -> "Poly":
        return _Parser(s).parse()


def _project(terms, src: _Layout, dst: _Layout):
    # only used when the dropped variables do not occur
    pairs = [(src.shift[src.index[v]], dst.unit[dst.index[v]]) for v in dst.vars]
    out = {}
    for m, c in terms.items():
        k = 0
        for s, u in pairs:
            e = (m >> s) & _MASK
            if e:
                k += e * u
        out[k] = c
    return out


class _Parser:
    """Tiny recursive-descent parser for polynomial strings such as
    ``"t1^2 - 2*t1*x0 + (t2 - t3)^2"``."""

    _tok = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(.))")

    def __init__(self, s: str):
        self.toks = []
        for num, name, op in self._tok.findall(s):
            if num:
                self.toks.append(("n", int(num)))
            elif name:
                self.toks.append(("v", name))
            elif op.strip():
                self.toks.append(("o", op))
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def parse(self) -> Poly:
        p = self.expr()
        if self.i != len(self.toks):
            raise ValueError("trailing input in polynomial")
        return p

    def expr(self) -> Poly:
        sign = 1
        if self.peek() == ("o", "-"):
            self.take()
            sign = -1
        p = self.term() * sign
        while self.peek() in (("o", "+"), ("o", "-")):
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Poly:
        p = self.power()
        while self.peek() == ("o", "*"):
            self.take()
            p = p * self.power()
        return p

    def power(self) -> Poly:
        b = self.atom()
        if self.peek() == ("o", "^"):
            self.take()
            kind, e = self.take()
            if kind != "n":
                raise ValueError("exponent must be an integer")
            b = b ** e
        return b

    def atom(self) -> Poly:
        kind, val = self.take()
        if kind == "n":
            return Poly.const(val)
        if kind == "v":
            return Poly.var(val)
        if (kind, val) == ("o", "("):
            p = self.expr()
            if self.take() != ("o", ")"):
                raise ValueError("unbalanced parentheses")
            return p
        if (kind, val) == ("o", "-"):
            return -self.atom()
        raise ValueError(f"unexpected token {val!r}")


def _as_poly(x) -> Poly:
    return Poly.coerce(x)


def poly_mul(a: Poly, b: Poly) -> Poly:
    return _as_poly(a) * _as_poly(b)


def poly_exact_div(num, den) -> Poly:
    """Exact quotient num/den; raises InexactDivision if den does not divide num."""
    num = _as_poly(num)
    if isinstance(den, int):
        if den == 0:
            raise ZeroDivisionError("division by zero polynomial")
        out = {}
        for m, c in num.terms.items():
            q, r = divmod(c, den)
            if r:
                raise InexactDivision("coefficient not divisible")
            out[m] = q
        return Poly._raw(out, num._lay)
    if not den.terms:
        raise ZeroDivisionError("division by zero polynomial")
    if den.is_constant():
        return poly_exact_div(num, den.terms[0]).with_vars(den.vars)
    a, b, lay = num._pair(den)
    if not a:
        return Poly._raw({}, lay)
    dl = max(b)
    dc = b[dl]
    rest = [(m, c) for m, c in b.items() if m != dl]
    rem = dict(a)
    heap = [-m for m in rem]
    heapq.heapify(heap)
    quo: Dict[int, int] = {}
    divides = lay.divides
    while heap:
        m = -heapq.heappop(heap)
        c = rem.pop(m, 0)
        if not c:
            continue
        if not divides(dl, m):
            raise InexactDivision("leading monomial not divisible")
        qc, r = divmod(c, dc)
        if r:
            raise InexactDivision("leading coefficient not divisible")
        qm = m - dl
        quo[qm] = qc
        for bm, bc in rest:
            k = qm + bm
            if k in rem:
                v = rem[k] - qc * bc
                if v:
                    rem[k] = v
                else:
                    del rem[k]
            else:
                rem[k] = -qc * bc
                heapq.heappush(heap, -k)
    return Poly._raw(quo, lay)


def poly_substitute(p: Poly, mapping: Mapping[str, "Poly | int"]) -> Poly:
    """Simultaneous substitution of variables; unmapped variables are fixed."""
    p = _as_poly(p)
    lay = p._lay
    images = {}
    for v, img in mapping.items():
        if v not in lay.index:
            continue
        img = _as_poly(img)
        if img == Poly.var(v):
            continue
        images[v] = img
    if not images:
        return p
    names = set(lay.vars)
    for img in images.values():
        names.update(img.vars)
    dst = _layout(_canonical_vars(names))
    if all(len(img.terms) <= 1 for img in images.values()):
        return _subst_monomial(p, images, dst)
    return _subst_general(p, images, dst)


def _subst_monomial(p: Poly, images, dst: _Layout) -> Poly:
    src = p._lay
    spec = []
    for v, img in images.items():
        s = src.shift[src.index[v]]
        u = dst.unit[dst.index[v]]
        if img.terms:
            (im, ic), = _convert(img.terms, img._lay, dst).items()
            spec.append((s, u, im, ic))
        else:
            spec.append((s, u, None, 0))
    terms = _convert(p.terms, src, dst)
    src_keys = list(p.terms) if src is not dst else None
    out: Dict[int, int] = {}
    if src_keys is None:
        pairs = ((m, m, c) for m, c in terms.items())
    else:
        pairs = ((m0, m1, terms[m1]) for m0, m1 in zip(src_keys, terms))
    for m0, m, c in pairs:
        for s, u, im, ic in spec:
            e = (m0 >> s) & _MASK
            if e:
                if im is None:
                    c = 0
                    break
                m += e * (im - u)
                if ic != 1:
                    c *= ic ** e
        if c:
            out[m] = out.get(m, 0) + c
    return Poly._raw({m: c for m, c in out.items() if c}, dst)


def _subst_general(p: Poly, images, dst: _Layout) -> Poly:
    src = p._lay
    mapped = [(src.shift[src.index[v]], dst.unit[dst.index[v]], v) for v in images]
    groups: Dict[Tuple[int, ...], Dict[int, int]] = {}
    keys = list(p.terms)
    conv = _convert(p.terms, src, dst)
    for m0, m in zip(keys, conv):
        c = conv[m]
        alpha = []
        for s, u, _ in mapped:
            e = (m0 >> s) & _MASK
            alpha.append(e)
            m -= e * u
        g = groups.setdefault(tuple(alpha), {})
        g[m] = g.get(m, 0) + c
    powers = {v: [Poly._raw({0: 1}, dst)] for v in images}
    imgs = {v: img.with_vars(dst.vars) for v, img in images.items()}

    def pw(v, e):
        lst = powers[v]
        while len(lst) <= e:
            lst.append(lst[-1] * imgs[v])
        return lst[e]

    total = Poly._raw({}, dst)
    for alpha, rest in groups.items():
        term = Poly._raw(rest, dst)
        for (s, u, v), e in zip(mapped, alpha):
            if e:
                term = term * pw(v, e)
        total = total + term
    return total


def complete_homogeneous(a: int, alphabet: Sequence) -> Poly:
    """h_a of the given alphabet; entries may be variable names or polynomials."""
    if a < 0:
        return Poly.const(0)
    ys = [Poly.var(y) if isinstance(y, str) else _as_poly(y) for y in alphabet]
    if not ys:
        raise ValueError("empty alphabet")
    memo = {}

    def h(d, start):
        if d == 0:
            return Poly.const(1)
        if start == len(ys) - 1:
            return ys[start] ** d
        key = (d, start)
        if key not in memo:
            acc = h(d, start + 1)
            pw = Poly.const(1)
            for e in range(1, d + 1):
                pw = pw * ys[start]
                acc = acc + pw * h(d - e, start + 1)
            memo[key] = acc
        return memo[key]

    return h(a, 0)


def factorial_power(x, a: int, alphabet: Sequence) -> Poly:
    """(x|t)^a = (x + t_1)...(x + t_a) for the alphabet t (first a entries)."""
    if a < 0:
        raise ValueError("negative degree")
    if len(alphabet) < a:
        raise AlphabetTooShort(f"need {a} alphabet entries, have {len(alphabet)}")
    x = Poly.var(x) if isinstance(x, str) else _as_poly(x)
    out = Poly.const(1)
    for y in alphabet[:a]:
        out = out * (x + (Poly.var(y) if isinstance(y, str) else y))
    return out


# rational functions with linear-form denominators

FormKey = Tuple[Tuple[str, int], ...]


def linear_form_key(p: Poly) -> Tuple[int, FormKey]:
    """Split a homogeneous linear polynomial as unit * primitive form."""
    p = _as_poly(p)
    if not p.terms:
        raise ZeroDenominatorForm("zero linear form")
    if p.degree() != 1 or not p.is_homogeneous():
        raise ValueError(f"not a homogeneous linear form: {p}")
    coeffs = []
    for exps, c in p.items():
        i = exps.index(1)
        coeffs.append((p.vars[i], c))
    coeffs.sort(key=lambda vc: var_key(vc[0]))
    g = 0
    for _, c in coeffs:
        g = gcd(g, c)
    sign = 1 if coeffs[0][1] > 0 else -1
    unit = sign * g
    return unit, tuple((v, c // unit) for v, c in coeffs)


@lru_cache(maxsize=None)
def form_poly(key: FormKey) -> Poly:
    names = [v for v, _ in key]
    lay = _layout(_canonical_vars(names))
    return Poly._raw({lay.unit[lay.index[v]]: c for v, c in key}, lay)


def form_str(key: FormKey) -> str:
    return form_poly(key).to_string()


def _form_divides(key: FormKey, num: Poly) -> bool:
    if not num.terms:
        return True
    (v0, c0) = key[0]
    if len(key) == 1:
        return poly_substitute(num, {v0: 0}).is_zero()
    if len(key) == 2:
        (v1, c1) = key[1]
        if abs(c0) == 1:
            # c0 v0 + c1 v1 = 0  =>  v0 = -c0*c1 v1
            return poly_substitute(num, {v0: Poly.var(v1) * (-c0 * c1)}).is_zero()
        if abs(c1) == 1:
            return poly_substitute(num, {v1: Poly.var(v0) * (-c0 * c1)}).is_zero()
    try:
        poly_exact_div(num, form_poly(key))
        return True
    except InexactDivision:
        return False


def _forms_product(den: Mapping[FormKey, int]) -> Poly:
    out = Poly.const(1)
    for key, e in sorted(den.items()):
        out = out * form_poly(key) ** e
    return out


class RatLin:
    """num / prod(forms), forms being primitive linear forms with positive
    leading coefficient.  Values are kept cancelled: no form divides num."""

    __slots__ = ("num", "den")

    def __init__(self, num=0, den: Iterable = ()):
        num = _as_poly(num)
        d: Dict[FormKey, int] = {}
        for f in den:
            if isinstance(f, tuple):
                key, unit = f, 1
            else:
                unit, key = linear_form_key(f)
            if unit not in (1, -1):
                raise ValueError("denominator forms must be primitive")
            if unit == -1:
                num = -num
            d[key] = d.get(key, 0) + 1
        self.num, self.den = _cancel(num, d)

    @classmethod
    def _raw(cls, num: Poly, den: Dict[FormKey, int]) -> "RatLin":
        r = object.__new__(cls)
        r.num = num
        r.den = den
        return r

    @staticmethod
    def coerce(x) -> "RatLin":
        if isinstance(x, RatLin):
            return x
        return RatLin._raw(_as_poly(x), {})

    def is_poly(self) -> bool:
        return not self.den

    def to_poly(self) -> Poly:
        if self.den:
            raise InexactDivision(f"not a polynomial: {self}")
        return self.num

    def is_zero(self) -> bool:
        return not self.num.terms

    def __bool__(self):
        return bool(self.num.terms)

    def denominator(self) -> Poly:
        return _forms_product(self.den)

    def __mul__(self, other):
        if isinstance(other, (int, Poly)):
            other = RatLin._raw(_as_poly(other), {})
        elif not isinstance(other, RatLin):
            return NotImplemented
        if not self.num.terms or not other.num.terms:
            return RatLin._raw(self.num * 0, {})
        d = dict(self.den)
        for k, e in other.den.items():
            d[k] = d.get(k, 0) + e
        num = self.num * other.num
        # only cross terms can cancel
        if self.den and other.num.degree() > 0 or other.den and self.num.degree() > 0:
            num, d = _cancel(num, d)
        return RatLin._raw(num, d)

    __rmul__ = __mul__

    def __add__(self, other):
        if isinstance(other, (int, Poly)):
            other = RatLin._raw(_as_poly(other), {})
        elif not isinstance(other, RatLin):
            return NotImplemented
        if not other.num.terms:
            return self
        if not self.num.terms:
            return other
        if self.den == other.den:
            return RatLin._raw(*_cancel(self.num + other.num, dict(self.den)))
        lcm = dict(self.den)
        for k, e in other.den.items():
            if e > lcm.get(k, 0):
                lcm[k] = e
        a = self.num * _forms_product({k: e - self.den.get(k, 0) for k, e in lcm.items()})
        b = other.num * _forms_product({k: e - other.den.get(k, 0) for k, e in lcm.items()})
        return RatLin._raw(*_cancel(a + b, lcm))

    __radd__ = __add__

    def __neg__(self):
        return RatLin._raw(-self.num, self.den)

    def __sub__(self, other):
        if isinstance(other, (int, Poly, RatLin)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Poly)):
            return (-self) + other
        return NotImplemented

    def reciprocal(self) -> "RatLin":
        """1/self; the numerator must be a unit or a linear form times a unit."""
        num = self.num
        if not num.terms:
            raise ZeroDivisionError("reciprocal of zero")
        top = _forms_product(self.den)
        if num.is_constant():
            c = num.constant_value()
            if c not in (1, -1):
                raise InexactDivision("reciprocal of a non-unit constant")
            return RatLin._raw(top * c, {})
        unit, key = linear_form_key(num)
        if unit not in (1, -1):
            raise InexactDivision("reciprocal of a non-primitive form")
        return RatLin(top * unit, [key])

    def __truediv__(self, other):
        if isinstance(other, int):
            if other in (1, -1):
                return self * other
            return RatLin._raw(poly_exact_div(self.num, other), self.den)
        if isinstance(other, Poly):
            other = RatLin._raw(other, {})
        if not isinstance(other, RatLin):
            return NotImplemented
        if other.num.is_constant() or other.num.degree() == 1:
            return self * other.reciprocal()
        # general numerator: it must divide exactly
        num = poly_exact_div(self.num * _forms_product(other.den), other.num)
        return RatLin._raw(*_cancel(num, dict(self.den)))

    def __rtruediv__(self, other):
        if isinstance(other, (int, Poly)):
            return RatLin._raw(_as_poly(other), {}) / self
        return NotImplemented

    def __pow__(self, e: int):
        out = RatLin._raw(Poly.const(1), {})
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Poly)):
            other = RatLin._raw(_as_poly(other), {})
        elif not isinstance(other, RatLin):
            return NotImplemented
        if self.den == other.den:
            return self.num == other.num
        lcm = dict(self.den)
        for k, e in other.den.items():
            if e > lcm.get(k, 0):
                lcm[k] = e
        a = self.num * _forms_product({k: e - self.den.get(k, 0) for k, e in lcm.items()})
        b = other.num * _forms_product({k: e - other.den.get(k, 0) for k, e in lcm.items()})
        return a == b

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    __hash__ = None  # type: ignore[assignment]

    def substitute(self, mapping) -> "RatLin":
        out = RatLin._raw(poly_substitute(self.num, mapping), {})
        for key, e in self.den.items():
            f = poly_substitute(form_poly(key), mapping)
            if f.is_zero():
                raise ZeroDenominatorForm("denominator vanishes under substitution")
            for _ in range(e):
                out = out / f
        return out

    def __str__(self):
        if not self.den:
            return self.num.to_string()
        fs = []
        for key in sorted(self.den, key=lambda k: [var_key(v) + (c,) for v, c in k]):
            e = self.den[key]
            s = f"({form_str(key)})"
            fs.append(s if e == 1 else f"{s}^{e}")
        return f"({self.num.to_string()})/({'*'.join(fs)})"

    __repr__ = __str__


def _cancel(num: Poly, den: Dict[FormKey, int]):
    if not den:
        return num, den
    if not num.terms:
        return num, {}
    out = {}
    for key, e in den.items():
        if e <= 0:
            if e < 0:
                raise ValueError("negative multiplicity")
            continue
        while e and num.degree() > 0 and _form_divides(key, num):
            num = poly_exact_div(num, form_poly(key))
            e -= 1
        if e:
            out[key] = e
    return num, out


def ratlin_cancel(r: RatLin) -> RatLin:
    for key in r.den:
        if any(c == 0 for _, c in key):
            raise ZeroDenominatorForm("zero form in denominator")
    return RatLin._raw(*_cancel(r.num, dict(r.den)))


def t_vars(indices: Iterable[int], letter: str = "t") -> list:
    """Variables letter+i as Poly objects."""
    return [Poly.var(f"{letter}{i}") for i in indices]
