"""Command-line front end.

Exit codes: 0 success or verified, 1 negative or refuted, 2 parse or usage
error, 3 inconclusive.  With ``--json`` every command prints one object
with the keys ``command``, ``input``, ``result`` and, when present,
``witness`` and ``diagnostic``.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import admissible, bounded, frobfactor, hahn, hasse
from .fields import RationalFunctionField, kp_independent
from .frobfactor import INF, Obstruction
from .parsing import ParseError, max_var_index, parse_field_element, parse_xpoly
from .poly import XPoly
from .samplers import random_cusp_member

OK, NEGATIVE, USAGE, INCONCLUSIVE = 0, 1, 2, 3

MAX_TVARS = 16
MAX_XVARS = 16
MAX_HAHN_INDEX = 64


class UsageError(Exception):
    pass


class Report:
    """What a command found; rendered as text or JSON at the end."""

    def __init__(self, command, inputs):
        self.command = command
        self.input = inputs
        self.result = None
        self.witness = None
        self.diagnostic = None
        self.lines = []
        self.code = OK

    def say(self, line):
        self.lines.append(str(line))

    def as_json(self):
        out = {"command": self.command, "input": self.input, "result": self.result}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.diagnostic is not None:
            out["diagnostic"] = self.diagnostic
        return out


def _fmt_level(v):
    return "inf" if v == INF else str(v)


def _split_list(text):
    if text is None:
        return []
    text = text.strip()
    if not text:
        return []
    # commas inside parentheses belong to one element
    out, depth, cur = [], 0, ""
    for ch in text:
        if ch == "," and depth == 0:
            out.append(cur)
            cur = ""
            continue
        depth += ch == "("
        depth -= ch == ")"
        cur += ch
    out.append(cur)
    return [s.strip() for s in out if s.strip()]


class Context:
    """Field and ring sizes for one invocation, inferred from the inputs when not given."""

    def __init__(self, args, texts):
        if args.p < 2 or any(args.p % q == 0 for q in range(2, int(args.p ** 0.5) + 1)):
            raise UsageError(f"-p must be a prime, got {args.p}")
        self.p = args.p
        need_t = max([max_var_index(s, "t") for s in texts] + [1])
        need_x = max([max_var_index(s, "x") for s in texts] + [1])
        self.m = args.tvars if args.tvars is not None else need_t
        self.n = args.xvars if args.xvars is not None else need_x
        if not 1 <= self.m <= MAX_TVARS:
            raise UsageError(f"--tvars must be in 1..{MAX_TVARS}")
        if not 1 <= self.n <= MAX_XVARS:
            raise UsageError(f"--xvars must be in 1..{MAX_XVARS}")
        self.field = RationalFunctionField(self.p, self.m)

    def poly(self, text):
        return parse_xpoly(self.field, self.n, text)

    def scalar(self, text):
        return parse_field_element(self.field, text)


def _read_expr(args):
    if getattr(args, "file", None):
        with open(args.file, encoding="utf-8") as fh:
            return fh.read().strip()
    if getattr(args, "expr", None) is None:
        raise UsageError("an expression is required (positional or --file)")
    return args.expr


def _witness_lines(rep, names, values):
    rep.witness = {}
    for name, v in zip(names, values):
        rep.witness[name] = str(v)
        rep.say(f"{name} = {v}")


# --- polynomial commands ---------------------------------------------------

def cmd_map(args, rep):
    text = _read_expr(args)
    ctx = Context(args, [text])
    f = ctx.poly(text)
    fn = {"phi": frobfactor.phi, "sigma": frobfactor.sigma, "frobenius": frobfactor.frobenius}[args.command]
    rep.input = {"expr": text, "p": ctx.p}
    rep.result = str(fn(f))
    rep.say(rep.result)


def cmd_level(args, rep):
    text = _read_expr(args)
    ctx = Context(args, [text])
    f = ctx.poly(text)
    rep.input = {"expr": text, "p": ctx.p}
    rep.result = _fmt_level(frobfactor.level(f))
    rep.say(rep.result)


def cmd_hasse(args, rep):
    text = _read_expr(args)
    ctx = Context(args, [text])
    if args.var < 1 or args.order < 0:
        raise UsageError("--var must be >= 1 and --order >= 0")
    f = ctx.poly(text)
    rep.input = {"expr": text, "p": ctx.p, "var": args.var, "order": args.order}
    rep.result = str(hasse.hasse_derive(args.var, args.order, f))
    rep.say(rep.result)


def _eps(ctx, args):
    return [ctx.scalar(s) for s in _split_list(args.eps)]


def cmd_f4(args, rep):
    text = _read_expr(args)
    eps_text = _split_list(args.eps)
    ctx = Context(args, [text] + eps_text)
    f, eps = ctx.poly(text), _eps(ctx, args)
    rep.input = {"expr": text, "p": ctx.p, "eps": [str(e) for e in eps]}
    w = frobfactor.f4_decompose(f, eps)
    if isinstance(w, Obstruction):
        rep.result, rep.diagnostic, rep.code = False, str(w), NEGATIVE
        rep.say(f"none: {w}")
        return
    rep.result = True
    _witness_lines(rep, [f"h{j + 1}" for j in range(len(eps))], w.h)


def cmd_d3(args, rep):
    text = _read_expr(args)
    eps_text = _split_list(args.eps)
    ctx = Context(args, [text] + eps_text)
    f, eps = ctx.poly(text), _eps(ctx, args)
    rep.input = {"expr": text, "p": ctx.p, "eps": [str(e) for e in eps]}
    if f.is_homogeneous():
        w = admissible.d3_decompose(f, eps)
    else:
        rep.say("(split into homogeneous components)")
        w = admissible.d3_decompose_graded(f, eps)
    if isinstance(w, Obstruction):
        rep.result, rep.diagnostic, rep.code = False, str(w), NEGATIVE
        rep.say(f"none: {w}")
        return
    rep.result = True
    _witness_lines(rep, ["h"] + [f"g{j + 1}" for j in range(len(eps))], (w.h,) + w.g)


def cmd_kernel_check(args, rep):
    ctx = Context(args, [])
    if args.vars < 0 or args.deg < 0:
        raise UsageError("--vars and --deg must be nonnegative")
    coeffs = [ctx.scalar(c) for c in _split_list(args.coeffs)] if args.coeffs else None
    cap = args.cap if args.cap is not None else 100_000
    rep.input = {"p": ctx.p, "vars": args.vars, "deg": args.deg,
                 "coeffs": [str(c) for c in coeffs] if coeffs else None}
    try:
        ok = admissible.kernel_equals_sigma_check(ctx.field, args.vars, args.deg, coeffs, cap=cap)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    rep.result = ok
    rep.code = OK if ok else NEGATIVE
    rep.say("true" if ok else "false")


# --- bounded subrings ------------------------------------------------------

def cmd_check_c(args, rep):
    samples_text = [args.expr] if args.expr else []
    if args.sample:
        with open(args.sample, encoding="utf-8") as fh:
            samples_text += [ln.strip() for ln in fh if ln.strip() and not ln.startswith("#")]
    if not samples_text:
        raise UsageError("check-c needs a sample expression or --sample FILE")
    eps_text = _split_list(args.eps) or ["1"]
    ctx = Context(args, samples_text + eps_text + [args.b])
    A = bounded.BoundedSubring(args.ring, args.n)
    b = ctx.scalar(args.b)
    eps = [ctx.scalar(s) for s in eps_text]
    rep.input = {"ring": args.ring, "n": args.n, "b": str(b), "eps": [str(e) for e in eps],
                 "samples": samples_text, "p": ctx.p}
    cap = args.cap if args.cap is not None else 4096
    witness, codes = {}, []
    for s_text in samples_text:
        a = ctx.scalar(s_text)
        res = bounded.c_membership(A, eps, a, b, cap=cap)
        if isinstance(res, Obstruction):
            codes.append(INCONCLUSIVE if res.inconclusive else NEGATIVE)
            rep.say(f"{s_text}: {'inconclusive' if res.inconclusive else 'refuted'} ({res})")
            rep.diagnostic = f"{s_text}: {res}"
        else:
            witness[s_text] = [str(x) for x in res]
            codes.append(OK)
            rep.say(f"{s_text}: lambda = [{', '.join(str(x) for x in res)}]")
    rep.code = NEGATIVE if NEGATIVE in codes else (INCONCLUSIVE if INCONCLUSIVE in codes else OK)
    rep.result = {OK: "verified", NEGATIVE: "refuted", INCONCLUSIVE: "inconclusive"}[rep.code]
    rep.witness = witness or None
    rep.say(rep.result)


def cmd_cusp_witness(args, rep):
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    texts = [args.b] if args.b else []
    args.tvars = max(args.tvars or 0, args.n + 1)
    ctx = Context(args, texts)
    if args.b:
        bs = [ctx.scalar(args.b)]
    else:
        rng = random.Random(args.seed)
        bs = [random_cusp_member(rng, ctx.field, args.n) for _ in range(args.count)]
    rep.input = {"n": args.n, "p": ctx.p, "b": [str(b) for b in bs]}
    try:
        results = [bounded.cusp_counterexample_check(args.n, b) for b in bs]
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    ok = all(results)
    rep.result = ok
    rep.code = OK if ok else NEGATIVE
    for b, r in zip(bs, results):
        if len(bs) == 1 or not r:
            rep.say(f"b = {b}: t{args.n + 1}^{ctx.p} {'not in' if r else 'in'} b^-{ctx.p} A^{ctx.p}")
    if len(bs) > 1:
        rep.say(f"{sum(results)}/{len(bs)} sampled b confirmed")
    rep.say("true" if ok else "false")


# --- Hahn series -----------------------------------------------------------

def _hahn_ctx(args):
    if not 1 <= args.hahn_index <= MAX_HAHN_INDEX:
        raise UsageError(f"--hahn-index must be in 1..{MAX_HAHN_INDEX}")
    Context(args, [])  # validates p
    return args.p, args.hahn_index


def cmd_hahn(args, rep):
    p, N = _hahn_ctx(args)
    text = _read_expr(args)
    g = hahn.parse_hahn(p, text, max_index=N)
    rep.input = {"expr": text, "p": p, "hahn_index": N}
    try:
        if args.hahn_command == "invert":
            inv = hahn.hahn_invert_truncated(g, args.terms)
            rep.input["terms"] = args.terms
            rep.result = str(inv.series)
            rep.witness = {"residual": str(inv.residual),
                           "error_valuation": str(inv.error_valuation) if inv.error_valuation is not None else None,
                           "term_valuations": [str(v) for v in inv.term_valuations]}
            rep.say(rep.result)
            rep.say(f"residual = {inv.residual}")
            if inv.error_valuation is not None:
                rep.say(f"error valuation = {inv.error_valuation}")
        elif args.hahn_command == "shift-check":
            delta = hahn.parse_gamma(args.delta)
            rep.input.update(delta=str(delta), terms=args.terms)
            ok = hahn.shift_into_a_check(g, delta, args.terms)
            rep.result, rep.code = ok, OK if ok else NEGATIVE
            rep.say("true" if ok else "false")
        else:
            rep.input["j"] = args.j
            if args.j > N:
                raise UsageError(f"j exceeds the index set size {N}")
            ok = hahn.aleph1_failure_check(g, args.j)
            rep.result, rep.code = ok, OK if ok else NEGATIVE
            rep.say("true" if ok else "false")
    except (ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise UsageError(str(exc)) from exc


# --- demos -----------------------------------------------------------------

def intro_example(p, n):
    """Checks for f = sum_i t_i x_i^p; returns (ok, lines, data)."""
    K = RationalFunctionField(p, n)
    ts = K.gens()
    xs = [XPoly.var(K, i) for i in range(1, n + 1)]
    f = XPoly.zero(K)
    root = XPoly.zero(K)
    for t, x in zip(ts, xs):
        f = f + (x ** p).scalar_mul(t)
        root = root + x.scalar_mul(t)
    lines, checks = [f"f = {f}"], []
    pre = frobfactor.sigma_preimage(f)
    checks.append(pre == root)
    lines.append(f"sigma preimage = {pre}")
    killed = all(not hasse.hasse_bracket(i, 0, f) for i in range(1, n + 1))
    checks.append(killed)
    lines.append(f"every d_i^[0](f) vanishes: {killed}")
    lv, lvd = frobfactor.level(f), admissible.level_via_derivations(f)
    checks.append(lv == lvd == 1)
    lines.append(f"level = {_fmt_level(lv)} (via derivatives: {_fmt_level(lvd)})")
    indep, _ = kp_independent(ts)
    checks.append(indep)
    lines.append(f"t1..t{n} independent over k^p: {indep}")
    w = frobfactor.f4_decompose(f, ts)
    ok_full = not isinstance(w, Obstruction) and w.recompose(ts, K) == f
    checks.append(ok_full)
    if ok_full:
        lines.append("f = " + " + ".join(f"t{j + 1}*({h})^{p}" for j, h in enumerate(w.h)))
    short = frobfactor.f4_decompose(f, ts[:-1])
    checks.append(isinstance(short, Obstruction))
    lines.append(f"without t{n}: {short if isinstance(short, Obstruction) else 'decomposed'}")
    return all(checks), lines, {"f": str(f), "preimage": str(pre)}


def flat_gap(p, n):
    """Checks for g = sum_i t_i^p x_i^p over the cusp ring; returns (ok, lines, data)."""
    K = RationalFunctionField(p, n + 1)
    A = bounded.BoundedSubring(bounded.CUSP_RING, n + 1)
    ts = K.gens()[:n]
    g = XPoly.zero(K)
    for i, t in enumerate(ts, start=1):
        g = g + (XPoly.var(K, i) ** p).scalar_mul(t ** p)
    lines, checks = [f"g = {g}"], []
    flat_g = bounded.FlatElement(g, K.one, A)
    checks.append(flat_g.is_certified())
    lines.append("coefficients of g lie in A")
    found = bounded.root_has_non_a_coefficients(A, g)
    checks.append(found is not None)
    if found is None:
        return False, lines + ["g is not a p-th power in R"], {"g": str(g)}
    root, bad = found
    checks.append(root ** p == g and len(bad) == n)
    lines.append(f"g = ({root})^{p} in R")
    lines.append(f"root coefficients outside A: {', '.join(str(c) for c in bad)}")
    b = K.one
    for t in ts:
        b = b * t ** 2
    lines.append(f"at this truncation b = {b} bounds the root")
    escapes = bounded.cusp_counterexample_check(n, b)
    checks.append(escapes)
    lines.append(f"adding t{n + 1}^{p}*x{n + 1}^{p}: t{n + 1}^{p} not in b^-{p} A^{p}: {escapes}")
    return all(checks), lines, {"g": str(g), "root": str(root), "non_a": [str(c) for c in bad], "b": str(b)}


def cmd_demo(args, rep):
    Context(args, [])
    n = args.n
    if args.demo == "intro-example":
        if not 1 <= n <= 6:
            raise UsageError("intro-example supports 1 <= n <= 6")
        ok, lines, data = intro_example(args.p, n)
    else:
        if not 1 <= n <= 6:
            raise UsageError("flat-gap supports 1 <= n <= 6")
        ok, lines, data = flat_gap(args.p, n)
    rep.input = {"demo": args.demo, "p": args.p, "n": n}
    rep.result = ok
    rep.witness = data
    rep.code = OK if ok else NEGATIVE
    for ln in lines:
        rep.say(ln)
    rep.say("verified" if ok else "FAILED")


# --- parser ----------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-p", type=int, default=2, help="characteristic (prime, default 2)")
    common.add_argument("--tvars", type=int, help="number of t-variables (default: inferred)")
    common.add_argument("--xvars", type=int, help="number of x-variables (default: inferred)")
    common.add_argument("--hahn-index", type=int, default=8, help="size N of the index set {1..N}")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--json", action="store_true", help="print one JSON object")
    common.add_argument("--cap", type=int, help="enumeration or search cap")

    parser = argparse.ArgumentParser(prog="frobpoly", description="Frobenius factorizations and Hasse derivatives in characteristic p.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_expr(name, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.add_argument("expr", nargs="?")
        sp.add_argument("--file", help="read the expression from a UTF-8 file")
        return sp

    for name, h in (("phi", "raise coefficients to the p-th power"),
                    ("sigma", "raise x-variables to the p-th power"),
                    ("frobenius", "f^p")):
        with_expr(name, h).set_defaults(func=cmd_map)
    with_expr("level", "level of f").set_defaults(func=cmd_level)
    sp = with_expr("hasse", "Hasse derivative")
    sp.add_argument("--var", type=int, required=True)
    sp.add_argument("--order", type=int, required=True)
    sp.set_defaults(func=cmd_hasse)
    for name, func in (("f4", cmd_f4), ("d3", cmd_d3)):
        sp = with_expr(name, f"{name} decomposition against eps")
        sp.add_argument("--eps", default="", help="comma-separated field elements")
        sp.set_defaults(func=func)

    sp = sub.add_parser("kernel-check", parents=[common], help="exhaustive kernel/image comparison")
    sp.add_argument("--vars", type=int, required=True)
    sp.add_argument("--deg", type=int, required=True)
    sp.add_argument("--coeffs", help="coefficient pool (default: all of F_p)")
    sp.set_defaults(func=cmd_kernel_check)

    sp = sub.add_parser("check-c", parents=[common], help="uniform-denominator membership")
    sp.add_argument("expr", nargs="?", help="sample element a")
    sp.add_argument("--ring", choices=[bounded.CUSP_RING, bounded.POLY_RING], required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--b", required=True)
    sp.add_argument("--eps", default="1")
    sp.add_argument("--sample", help="file with one sample element per line")
    sp.set_defaults(func=cmd_check_c)

    sp = sub.add_parser("cusp-witness", parents=[common], help="cusp ring counterexample")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--b", help="cusp ring element in t1..tn (default: random samples)")
    sp.add_argument("--count", type=int, default=100)
    sp.set_defaults(func=cmd_cusp_witness)

    sp = sub.add_parser("hahn", help="finite Hahn series checks")
    hsub = sp.add_subparsers(dest="hahn_command", required=True)
    for name in ("invert", "shift-check", "aleph1-check"):
        hp = hsub.add_parser(name, parents=[common])
        hp.add_argument("expr", nargs="?")
        hp.add_argument("--file")
        if name != "aleph1-check":
            hp.add_argument("--terms", type=int, default=4)
        if name == "shift-check":
            hp.add_argument("--delta", required=True, help='exponent such as "2g2"')
        if name == "aleph1-check":
            hp.add_argument("--j", type=int, required=True)
        hp.set_defaults(func=cmd_hahn)

    sp = sub.add_parser("demo", help="worked examples")
    dsub = sp.add_subparsers(dest="demo", required=True)
    for name in ("intro-example", "flat-gap"):
        dp = dsub.add_parser(name, parents=[common])
        dp.add_argument("--n", type=int, default=3)
        dp.set_defaults(func=cmd_demo)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    command = args.command
    if command == "hahn":
        command = f"hahn {args.hahn_command}"
    elif command == "demo":
        command = f"demo {args.demo}"
    rep = Report(command, None)
    try:
        args.func(args, rep)
    except (ParseError, UsageError, OSError) as exc:
        rep.code, rep.diagnostic = USAGE, str(exc)
        if args.json:
            print(json.dumps(rep.as_json()))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return USAGE
    if args.json:
        print(json.dumps(rep.as_json()))
    else:
        for ln in rep.lines:
            print(ln)
    return rep.code


if __name__ == "__main__":
    sys.exit(main())
