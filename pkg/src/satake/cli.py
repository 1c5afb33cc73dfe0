"""Command-line front end.

Exit codes: 0 on success, 1 on a usage error, 2 when a verification fails.
Output is JSON by default (sorted keys, canonical polynomial strings);
table-like commands also accept --tsv.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
from itertools import combinations
from typing import Dict, List, Optional, Sequence

from . import clifford, quantum, typea, typed
from .combinatorics import (Partition, even_subsets, fits_rectangle, parse_partition,
                            parse_subset, partition_to_subset, strict_partition)
from .errors import SatakeError
from .exterior import WedgeVector
from .pfaffian import RingMatrix, pfaffian_sub
from .poly import Poly, poly_substitute

EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# formatting helpers

def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _pstr(p) -> str:
    return Poly.coerce(p).to_string() if not isinstance(p, str) else p


def _fmt_set(S) -> str:
    return "{" + ",".join(map(str, S)) + "}"


def _fmt_part(lam) -> str:
    return "(" + ",".join(map(str, lam)) + ")"


def _tsv(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    return "\n".join("\t".join(r) for r in [list(header)] + [list(r) for r in rows]) + "\n"


def _wedge_name(I) -> str:
    return "^".join(f"e{i}" for i in I)


class _TSubst:
    """--set-t handling: None, all zeros, or explicit integers."""

    def __init__(self, spec: Optional[str], names: List[str]):
        self.mapping = None
        if spec is None:
            return
        spec = spec.strip()
        if spec == "0":
            self.mapping = {v: 0 for v in names}
            return
        try:
            vals = [int(x) for x in spec.split(",")]
        except ValueError:
            raise UsageError(f"--set-t: expected 0 or comma-separated integers, got {spec!r}")
        if len(vals) != len(names):
            raise UsageError(f"--set-t: expected {len(names)} values, got {len(vals)}")
        self.mapping = dict(zip(names, vals))

    def __call__(self, p):
        p = Poly.coerce(p)
        return p if self.mapping is None else poly_substitute(p, self.mapping)


def _a_names(n):
    return [f"t{i}" for i in range(1, n + 1)]


def _d_names(n):
    return [f"t{i}" for i in range(n)]


def _max_rank() -> int:
    raw = os.environ.get("SATAKE_MAX_RANK", "8")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"SATAKE_MAX_RANK must be an integer, got {raw!r}")


def _need(args, *names):
    for name in names:
        if getattr(args, name, None) is None:
            flag = {"k": "-k", "n": "-n"}.get(name, "--" + name.replace("_", "-"))
            raise UsageError(f"missing required flag {flag}")


def _check_rank(args, typ: str):
    _need(args, "n")
    cap = _max_rank()
    if args.n > cap:
        raise UsageError(f"-n {args.n} exceeds SATAKE_MAX_RANK={cap}")
    if typ == "A":
        _need(args, "k")
        if not 1 <= args.k <= args.n:
            raise UsageError(f"-k must satisfy 1 <= k <= n, got k={args.k}")
    elif args.n < 3:
        raise UsageError(f"-n must be at least 3 for type {typ}")


def _partition_arg(text: str, flag: str) -> Partition:
    try:
        return parse_partition(text)
    except (ValueError, SatakeError):
        raise UsageError(f"{flag}: bad partition {text!r}")


def _subset_arg(text: str, flag: str):
    try:
        return parse_subset(text)
    except (ValueError, SatakeError):
        raise UsageError(f"{flag}: bad subset {text!r}")


def _a_class(args, ctx: typea.GrContext, which: str = "lambda") -> Partition:
    lam_text = getattr(args, which, None)
    sub_text = getattr(args, "subset", None) if which == "lambda" else None
    if lam_text is not None and sub_text is not None:
        raise UsageError("give only one of --lambda and --subset")
    if lam_text is None and sub_text is None:
        raise UsageError(f"missing required flag --{which}")
    if lam_text is not None:
        lam = _partition_arg(lam_text, "--" + which)
    else:
        I = _subset_arg(sub_text, "--subset")
        if len(I) != ctx.k or any(not 1 <= i <= ctx.n for i in I):
            raise UsageError(f"--subset: need {ctx.k} distinct elements of 1..{ctx.n}")
        lam = ctx.partition(I)
    if not fits_rectangle(lam, ctx.k, ctx.n - ctx.k):
        raise UsageError(f"--{which}: {lam} does not fit in {ctx.k}x{ctx.n - ctx.k}")
    return lam


def _even_subset_arg(args, n: int):
    _need(args, "subset")
    I = _subset_arg(args.subset, "--subset")
    if any(not 0 <= i < n for i in I):
        raise UsageError(f"--subset: elements must lie in 0..{n - 1}")
    if len(I) % 2:
        raise UsageError("--subset: type D subsets must have even size")
    return I


def _a_terms(ctx, v: WedgeVector, sub) -> list:
    out = []
    for I in sorted(v.terms, key=lambda J: (ctx.partition(J).size, J)):
        c = sub(v.terms[I])
        if c == 0:
            continue
        out.append({"class": _fmt_part(ctx.partition(I)), "wedge": _wedge_name(I),
                    "coeff": _pstr(c)})
    return out


def _matrix_obj(M: RingMatrix, fmt_label, sub) -> dict:
    return {"rows": [fmt_label(r) for r in M.row_labels],
            "columns": [fmt_label(c) for c in M.col_labels],
            "entries": [[_pstr(sub(x)) for x in row] for row in M.rows]}


def _matrix_tsv(M: RingMatrix, fmt_label, sub) -> str:
    return _tsv([""] + [fmt_label(c) for c in M.col_labels],
                [[fmt_label(r)] + [_pstr(sub(x)) for x in row]
                 for r, row in zip(M.row_labels, M.rows)])


# subcommands

def cmd_restrict(args, out):
    typ = args.type
    _check_rank(args, typ)
    n = args.n
    if typ == "A":
        ctx = typea.GrContext(args.k, n)
        sub = _TSubst(args.set_t, _a_names(n))
        table = typea.restriction_table(ctx)
        for key in table.values:
            table.values[key] = sub(table.values[key])
        if args.tsv:
            out.write(table.to_tsv(rows=args.rows))
            return EXIT_OK
        parts = table.partitions()
        pts = table.subsets()
        if args.rows == "points":
            rows, cols = [_fmt_set(J) for J in pts], [_fmt_part(l) for l in parts]
            entries = [[table[l, J].to_string() for l in parts] for J in pts]
        else:
            rows, cols = [_fmt_part(l) for l in parts], [_fmt_set(J) for J in pts]
            entries = [[table[l, J].to_string() for J in pts] for l in parts]
        out.write(_dump({"type": "A", "k": args.k, "n": n, "rows": rows, "columns": cols,
                         "entries": entries}))
        return EXIT_OK
    ctx = typed.QuadricContext(n)
    sub = _TSubst(args.set_t, _d_names(n))
    if typ == "Q":
        table = typed.quadric_restrictions(ctx)
        labels = ctx.labels
        entries = [[_pstr(sub(table[a, b])) for b in labels] for a in labels]
        names = [typed.label_str(c) for c in labels]
        if args.tsv:
            out.write(_tsv(["class"] + names, [[a] + row for a, row in zip(names, entries)]))
        else:
            out.write(_dump({"type": "Q", "n": n, "rows": names, "columns": names,
                             "entries": entries}))
        return EXIT_OK
    table = typed.og_restriction_table(ctx)
    subs = table.subsets()
    names = [_fmt_set(S) for S in subs]
    entries = [[_pstr(sub(table[I, K])) for K in subs] for I in subs]
    if args.tsv:
        out.write(_tsv(["class"] + names, [[a] + row for a, row in zip(names, entries)]))
    else:
        out.write(_dump({"type": "D", "n": n, "rows": names, "columns": names,
                         "entries": entries}))
    return EXIT_OK


def cmd_chevalley(args, out):
    typ = args.type
    _check_rank(args, typ)
    n = args.n
    if typ == "A":
        ctx = typea.GrContext(args.k, n)
        sub = _TSubst(args.set_t, _a_names(n))
        lam = _a_class(args, ctx)
        v = ctx.basis_vector(lam)
        if args.quantum:
            if args.power is not None:
                raise UsageError("--power cannot be combined with --quantum")
            res = quantum.quantum_chevalley(args.k, n, quantum.QClass.basis(args.k, n, lam))
            terms = [{"class": _fmt_part(nu), "coeff": _pstr(sub(c))}
                     for nu, c in sorted(res.terms.items(), key=lambda kv: (kv[0].size, kv[0]))
                     if not sub(c) == 0]
            out.write(_dump({"type": "A", "k": args.k, "n": n, "quantum": True,
                             "input": _fmt_part(lam), "terms": terms}))
            return EXIT_OK
        if args.power is not None:
            if args.power < 1:
                raise UsageError("--power must be at least 1")
            res = typea.power_action(ctx, args.power, v)
        else:
            res = typea.chevalley_action(ctx, v)
        out.write(_dump({"type": "A", "k": args.k, "n": n, "power": args.power or 1,
                         "input": _fmt_part(lam), "input_wedge": _wedge_name(ctx.subset(lam)),
                         "terms": _a_terms(ctx, res, sub)}))
        return EXIT_OK
    if args.quantum or args.power is not None:
        raise UsageError("--quantum and --power apply to type A only")
    ctx = typed.QuadricContext(n)
    sub = _TSubst(args.set_t, _d_names(n))
    if typ == "Q":
        _need(args, "label")
        try:
            code = typed.parse_label(args.label)
            ctx.check_label(code)
        except SatakeError as e:
            raise UsageError(f"--label: {e}")
        res = typed.quadric_chevalley(ctx, code)
        via = typed.quadric_chevalley_via_xi(ctx, code)
        if res != via:
            out.write(_dump({"error": "xi action disagrees with the Chevalley rule",
                             "label": args.label}))
            return EXIT_FAIL
        terms = [{"class": typed.label_str(c), "coeff": _pstr(sub(res[c]))}
                 for c in ctx.labels if c in res and not sub(res[c]) == 0]
        out.write(_dump({"type": "Q", "n": n, "input": typed.label_str(code), "terms": terms}))
        return EXIT_OK
    I = _even_subset_arg(args, n)
    res = typed.og_chevalley(ctx, clifford.Spinor(n, {I: 1}))
    if res != typed.og_chevalley_formula(ctx, I):
        out.write(_dump({"error": "spin action disagrees with the Chevalley rule",
                         "subset": _fmt_set(I)}))
        return EXIT_FAIL
    terms = [{"class": _fmt_set(K), "coeff": _pstr(sub(res.terms[K]))}
             for K in even_subsets(n) if K in res.terms and not sub(res.terms[K]) == 0]
    out.write(_dump({"type": "D", "n": n, "input": _fmt_set(I), "terms": terms}))
    return EXIT_OK


def cmd_product(args, out):
    _check_rank(args, "A")
    k, n = args.k, args.n
    ctx = typea.GrContext(k, n)
    sub = _TSubst(args.set_t, _a_names(n))
    _need(args, "lambda", "mu")
    lam = _a_class(args, ctx, "lambda")
    mu = _a_class(args, ctx, "mu")
    if args.quantum:
        if args.N is not None and args.N < quantum.stable_N(k, lam, mu):
            raise UsageError(f"--N must be at least {quantum.stable_N(k, lam, mu)}")
        res = quantum.quantum_product(k, n, lam, mu, N=args.N, method=args.method)
        items = res.terms.items()
    else:
        if args.N is not None:
            raise UsageError("--N applies to --quantum only")
        items = typea.classical_product(ctx, lam, mu, method=args.method).items()
    terms = []
    for nu, c in sorted(items, key=lambda kv: (kv[0].size, kv[0])):
        c = sub(c)
        if c == 0:
            continue
        terms.append({"nu": list(nu), "coeff": c.trim().to_json_obj(), "coeff_text": c.to_string()})
    out.write(_dump({"k": k, "n": n, "lambda": list(lam), "mu": list(mu),
                     "quantum": bool(args.quantum), "terms": terms}))
    return EXIT_OK


def cmd_schur(args, out):
    _check_rank(args, "A")
    ctx = typea.GrContext(args.k, args.n)
    sub = _TSubst(args.set_t, _a_names(args.n))
    lam = _a_class(args, ctx)
    p = sub(typea.factorial_schur(lam, ctx))
    out.write(_dump({"k": args.k, "n": args.n, "lambda": list(lam), "poly": p.to_string()}))
    return EXIT_OK


def cmd_schur_p(args, out):
    _check_rank(args, "D")
    I = _subset_arg(args.subset, "--subset") if args.subset is not None else None
    if I is None:
        raise UsageError("missing required flag --subset")
    if any(not 0 <= i < args.n for i in I):
        raise UsageError(f"--subset: elements must lie in 0..{args.n - 1}")
    sub = _TSubst(args.set_t, _d_names(args.n))
    p = sub(typed.factorial_schur_P(I, args.n))
    out.write(_dump({"n": args.n, "subset": _fmt_set(I), "lambda": list(strict_partition(I)),
                     "poly": p.to_string()}))
    return EXIT_OK


def cmd_giambelli(args, out):
    typ = args.type
    if typ == "Q":
        raise UsageError("--type must be A or D for giambelli-check")
    _check_rank(args, typ)
    n = args.n
    checked = 0
    if typ == "A":
        ctx = typea.GrContext(args.k, n)
        table = typea.restriction_table(ctx)
        if args.perturb:
            key = next(iter(sorted(table.values)))
            table.values[key] = table.values[key] + 1
        for lam in ctx.partitions():
            s = typea.factorial_schur(lam, ctx)
            for J in ctx.subsets():
                checked += 1
                if not typea.giambelli_check(ctx, lam, J, table=table, schur=s):
                    out.write(_dump({"result": "fail", "type": "A", "k": args.k, "n": n,
                                     "lambda": _fmt_part(lam), "point": _fmt_set(J),
                                     "table": table[lam, J].to_string(),
                                     "schur": typea.evaluate_at_point(ctx, s, J).to_string()}))
                    return EXIT_FAIL
        out.write(_dump({"result": "pass", "type": "A", "k": args.k, "n": n, "checked": checked}))
        return EXIT_OK
    ctx = typed.QuadricContext(n)
    table = typed.og_restriction_table(ctx)
    if args.perturb:
        key = next(iter(sorted(table.values)))
        table.values[key] = table.values[key] + 1
    for I in even_subsets(n):
        P = typed.factorial_schur_P(I, n)
        for K in even_subsets(n):
            checked += 1
            if not typed.giambelli_check_D(n, I, K, ctx=ctx, P=P, table=table):
                out.write(_dump({"result": "fail", "type": "D", "n": n, "subset": _fmt_set(I),
                                 "point": _fmt_set(K), "table": table[I, K].to_string(),
                                 "schur_p": typed.evaluate_P(P, K, ctx).to_string()}))
                return EXIT_FAIL
    out.write(_dump({"result": "pass", "type": "D", "n": n, "checked": checked}))
    return EXIT_OK


def _symbolic_blocks(n: int):
    """A skew with entries a<j><i> (j > i) and B = identity."""
    A = RingMatrix.zeros(n, n)
    for i in range(n):
        for j in range(i + 1, n):
            a = Poly.var(f"a{j}{i}")
            A.rows[j][i] = a
            A.rows[i][j] = -a
    return A, RingMatrix.identity(n), None


def cmd_spinor_expand(args, out):
    _need(args, "n")
    n = args.n
    cap = _max_rank()
    if not 1 <= n <= cap:
        raise UsageError(f"-n must lie in 1..{cap}")
    I = _subset_arg(args.subset, "--subset") if args.subset is not None else ()
    if any(not 0 <= i < n for i in I):
        raise UsageError(f"--subset: elements must lie in 0..{n - 1}")
    if len(I) % 2 and not args.allow_odd:
        raise UsageError("--subset has odd size; pass --allow-odd for the odd half")
    if args.symbolic:
        if args.seed is not None:
            raise UsageError("--symbolic and --seed are exclusive")
        C, B, cbar = _symbolic_blocks(n)
        data = {"data": "symbolic"}
    else:
        seed = 0 if args.seed is None else args.seed
        rng = random.Random(seed)
        _, B, C, cbar = clifford.random_isotropic_data(n, rng, with_cbar=not args.no_cbar)
        data = {"data": "random", "seed": seed, "cbar": not args.no_cbar}
    X = clifford.transition_from_blocks(C, B, n, cbar)
    brute = clifford.spinor_expand_bruteforce(X, I, allow_odd=args.allow_odd)
    pf = clifford.spinor_expand_pfaffian(C, B, I, cbar=cbar, allow_odd=args.allow_odd)
    keys = sorted(set(brute.terms) | set(pf.terms), key=lambda K: (len(K), K))
    diff = [{"K": _fmt_set(K), "bruteforce": _pstr(brute.coeff(K)), "pfaffian": _pstr(pf.coeff(K))}
            for K in keys if not brute.coeff(K) - pf.coeff(K) == 0]
    terms = [{"K": _fmt_set(K), "coeff": _pstr(pf.coeff(K))} for K in keys
             if not pf.coeff(K) == 0]
    data.update({"n": n, "subset": _fmt_set(I), "terms": terms, "diff": diff,
                 "result": "pass" if not diff else "fail"})
    out.write(_dump(data))
    return EXIT_OK if not diff else EXIT_FAIL


def cmd_rimhook(args, out):
    _need(args, "k", "n", "lambda")
    k, n = args.k, args.n
    if k < 1 or n < k:
        raise UsageError("need 1 <= k <= n")
    lam = _partition_arg(args.__dict__["lambda"], "--lambda")
    if len(lam) > k:
        raise UsageError(f"--lambda has more than {k} parts")
    core, s, wrap, eps = quantum.rimhook_data(lam, k, n)
    fits = fits_rectangle(core, k, n - k)
    sign = -1 if (wrap + eps) % 2 else 1
    image = None
    if fits:
        image = quantum.psi_map(quantum.InfiniteClass(k, n, {lam: 1}), n)
        image = [{"nu": list(nu), "coeff": c.to_string()} for nu, c in image.terms.items()]
    out.write(_dump({"k": k, "n": n, "lambda": list(lam),
                     "subset": list(partition_to_subset(lam, k)),
                     "core": list(core), "s": s, "wrap_exponent": wrap, "epsilon": eps,
                     "sign": sign, "fits": fits, "image": image}))
    return EXIT_OK


def cmd_matrix(args, out):
    typ = args.type
    if typ == "Q":
        raise UsageError("--type must be A or D for matrix")
    _check_rank(args, typ) if typ == "D" else _check_rank_a_matrix(args)
    n = args.n
    which = args.which
    if typ == "A":
        ctx = typea.GrContext(args.k or 1, n)
        sub = _TSubst(args.set_t, _a_names(n))
        if which == "xi":
            M = typea.build_xi_t(ctx)
        elif which == "xi-power":
            _need(args, "j")
            if args.j < 0:
                raise UsageError("--j must be non-negative")
            M = typea.xi_power_entries(ctx, args.j)
        elif which == "xi-qt":
            _need(args, "k")
            M = quantum.build_xi_qt(args.k, n, ctx)
        else:
            raise UsageError(f"--which {which} is not available for type A")
        fmt = str
    else:
        ctx = typed.QuadricContext(n)
        sub = _TSubst(args.set_t, _d_names(n))
        if which == "xi":
            M = typed.build_xi_t_D(ctx)
        elif which == "eta":
            M = typed.build_eta_t(ctx)
        elif which == "transition":
            return _transition_out(args, ctx, out)
        elif which == "xi-power":
            _need(args, "j")
            if args.j < 1 or args.j % 2 == 0:
                raise UsageError("--j must be odd and positive for type D")
            M = typed.odd_power_closed_form(ctx, (args.j + 1) // 2)
        else:
            raise UsageError(f"--which {which} is not available for type D")
        fmt = typed.label_str
    if args.tsv:
        out.write(_matrix_tsv(M, fmt, sub))
    else:
        obj = _matrix_obj(M, fmt, sub)
        obj.update({"type": typ, "n": n, "which": which})
        out.write(_dump(obj))
    return EXIT_OK


def _transition_out(args, ctx, out):
    """Cbar, C, Bbar, the reduced block and its sub-Pfaffians (type D)."""
    if args.set_t is not None or args.tsv:
        raise UsageError("--which transition prints JSON with generic t only")
    td = typed.transition_data(ctx)
    check = typed.transition_from_restrictions(ctx)
    if not (td.Cbar == check.Cbar and td.C == check.C and td.Bbar == check.Bbar):
        out.write(_dump({"error": "closed forms disagree with the restriction formulas"}))
        return EXIT_FAIL
    n = ctx.n
    R = td.reduced()
    order = list(range(n - 1, -1, -1))
    Ro = RingMatrix([[R[j, i] for i in order] for j in order], order, order)
    grid = lambda M: [[str(M[j, i]) for i in range(n)] for j in range(n)]
    pfs = {_fmt_set(K): str(pfaffian_sub(Ro, K)) for K in even_subsets(n)}
    out.write(_dump({"type": "D", "n": n, "which": "transition", "index": list(range(n)),
                     "Cbar": grid(td.Cbar), "C": grid(td.C), "Bbar": grid(td.Bbar),
                     "reduced": grid(R), "reduced_pfaffians": pfs,
                     "S": [_pstr(x) for x in td.S]}))
    return EXIT_OK


def _check_rank_a_matrix(args):
    _need(args, "n")
    cap = _max_rank()
    if not 1 <= args.n <= cap:
        raise UsageError(f"-n must lie in 1..{cap}")


# parser

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="satake", description="Equivariant Schubert calculus in exact arithmetic.")
    subs = p.add_subparsers(dest="command", parser_class=_Parser)

    def common(sp, typed_flag=True, tsv=True):
        if typed_flag:
            sp.add_argument("--type", choices=["A", "D", "Q"], default="A",
                            help="A: Grassmannian, D: orthogonal Grassmannian, Q: quadric")
        sp.add_argument("-k", "--k", type=int, dest="k")
        sp.add_argument("-n", "--n", type=int, dest="n")
        sp.add_argument("--set-t", dest="set_t", help="0 or comma-separated integers")
        if tsv:
            sp.add_argument("--tsv", action="store_true")

    sp = subs.add_parser("restrict", help="restriction tables")
    common(sp)
    sp.add_argument("--rows", choices=["points", "classes"], default="points")
    sp.set_defaults(func=cmd_restrict)

    sp = subs.add_parser("chevalley", help="one divisor multiplication")
    common(sp, tsv=False)
    sp.add_argument("--lambda", dest="lambda")
    sp.add_argument("--subset")
    sp.add_argument("--label")
    sp.add_argument("--power", type=int)
    sp.add_argument("--quantum", action="store_true")
    sp.set_defaults(func=cmd_chevalley)

    sp = subs.add_parser("product", help="classical or quantum products")
    common(sp, typed_flag=False, tsv=False)
    sp.add_argument("--lambda", dest="lambda")
    sp.add_argument("--mu")
    sp.add_argument("--quantum", action="store_true")
    sp.add_argument("--N", type=int, dest="N")
    sp.add_argument("--method", choices=["recursion", "localization"], default="recursion")
    sp.set_defaults(func=cmd_product, subset=None)

    sp = subs.add_parser("schur", help="factorial Schur polynomial")
    common(sp, typed_flag=False, tsv=False)
    sp.add_argument("--lambda", dest="lambda")
    sp.add_argument("--subset")
    sp.set_defaults(func=cmd_schur)

    sp = subs.add_parser("schur-p", help="factorial Schur P-function")
    common(sp, typed_flag=False, tsv=False)
    sp.add_argument("--subset")
    sp.set_defaults(func=cmd_schur_p)

    sp = subs.add_parser("giambelli-check", help="verify the Giambelli formula")
    common(sp, tsv=False)
    sp.add_argument("--perturb", action="store_true", help="corrupt one table entry first")
    sp.set_defaults(func=cmd_giambelli)

    sp = subs.add_parser("spinor-expand", help="pure spinor expansion, both routes")
    sp.add_argument("-n", "--n", type=int, dest="n")
    sp.add_argument("--subset")
    sp.add_argument("--seed", type=int)
    sp.add_argument("--symbolic", action="store_true")
    sp.add_argument("--no-cbar", action="store_true")
    sp.add_argument("--allow-odd", action="store_true")
    sp.set_defaults(func=cmd_spinor_expand)

    sp = subs.add_parser("rimhook", help="n-core, hook count and sign")
    sp.add_argument("-k", "--k", type=int, dest="k")
    sp.add_argument("-n", "--n", type=int, dest="n")
    sp.add_argument("--lambda", dest="lambda")
    sp.set_defaults(func=cmd_rimhook)

    sp = subs.add_parser("matrix", help="print xi_t, eta_t, matrix powers or transition data")
    common(sp)
    sp.add_argument("--which", choices=["xi", "eta", "xi-power", "xi-qt", "transition"], default="xi")
    sp.add_argument("--j", type=int)
    sp.set_defaults(func=cmd_matrix)
    return p


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(list(sys.argv[1:] if argv is None else argv))
        if not getattr(args, "command", None):
            raise UsageError("a subcommand is required")
        return args.func(args, out)
    except UsageError as e:
        err.write(f"satake: usage error: {e}\n")
        return EXIT_USAGE
    except SatakeError as e:
        err.write(f"satake: {type(e).__name__}: {e}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
