"""Command-line front end.

Every command prints either a table or JSON Lines (one record per item).
Exit status: 0 when every check passes, 1 on a failed check, 2 on usage,
parse or cutoff errors.
"""
import argparse
import json
import sys

from . import suites
from .casimir import theta_build, theta_module_check
from .expr import ParseError
from .freealg import degrees_up_to, parse_free, render as render_free, render_word
from .pairing import HeightCutoffError
from .quiver import (PRESETS, QuiverError, load_quiver, preset, random_nu)
from .scalars import parse_scalar, render
from .session import Session
from .uplus import DegenerateFormError


class UsageError(Exception):
    pass


# -- parsing helpers --------------------------------------------------------------

def _vector(q, text):
    """``1,0`` or ``i:2,j:1`` or a vertex name."""
    text = text.strip()
    if ":" in text:
        d = {}
        for part in text.split(","):
            k, _, v = part.partition(":")
            d[k.strip()] = int(v)
        return q.dimvec(d)
    if text in q.vertices:
        return q.unit(text)
    try:
        return q.dimvec([int(x) for x in text.split(",")])
    except ValueError:
        raise UsageError(f"bad dimension vector {text!r}") from None


def _composition(text):
    try:
        c = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"bad composition {text!r}") from None
    if not c or min(c) < 1:
        raise UsageError(f"bad composition {text!r}")
    return c


def build_session(args):
    if args.quiver and args.preset:
        raise UsageError("give either --quiver or --preset, not both")
    if args.quiver:
        q = load_quiver(args.quiver)
    elif args.preset:
        q = preset(args.preset, args.nu_preset)
    else:
        raise UsageError("a quiver is required (--quiver FILE or --preset NAME)")
    if args.nu_default is not None:
        q = q.with_nu({(q.vertices[i], l): c for (i, l), c in q.nu_values.items()},
                      parse_scalar(args.nu_default))
    if args.random_nu:
        q = random_nu(q, args.seed, args.max_height)
    return Session(q, args.max_height, args.series_order, args.seed, args.margin)


# -- commands --------------------------------------------------------------------------
# each returns a list of records

def info(check, inp, result):
    return {"check": check, "input": inp, "result": result}


def cmd_dims(s, args):
    P = s.pairing
    degs = [_vector(s.q, args.degree)] if args.degree else degrees_up_to(s.q, s.max_height)
    return [info("dims", {"degree": list(d)}, P.graded_dim(d)) for d in degs]


def cmd_gram(s, args):
    q, P = s.q, s.pairing
    degs = [_vector(q, args.degree)] if args.degree else degrees_up_to(q, s.max_height)
    out = []
    for d in degs:
        g = P.gram(d)
        out.append(info("gram", {"degree": list(d)}, {
            "words": [render_word(q, w) for w in g.words],
            "matrix": [[render(x) for x in row] for row in g.matrix],
            "rank": g.rank,
            "kernel_dim": g.kernel_dim,
            "symmetric": g.is_symmetric(),
        }))
    return out


def cmd_radical(s, args):
    q, P = s.q, s.pairing
    if args.expr:
        x = parse_free(q, args.expr)
        return [suites.record("in-radical", {"expr": render_free(q, x)}, P.in_radical(x))]
    if not args.degree:
        raise UsageError("radical needs --expr or --degree")
    d = _vector(q, args.degree)
    g = P.gram(d)
    return [info("radical-basis", {"degree": list(d), "index": n}, render_free(q, x))
            for n, x in enumerate(g.kernel_basis)]


def cmd_serre(s, args):
    return suites.suite_serre(s, draws=args.draws)


def cmd_iso(s, args):
    return suites.suite_iso_commutators(s, draws=args.draws)


def cmd_primitive(s, args):
    q, U = s.q, s.uplus
    p = U.primitive(args.vertex, args.level)
    inp = {"vertex": args.vertex, "level": args.level}
    return [
        info("primitive", inp, {"representative": render_free(q, p.representative),
                                "tau": render(p.tau)}),
        suites.record("primitive-coproduct", inp, U.check_primitivity(p)),
        suites.record("primitive-bar-invariant", inp, U.bar_invariance_check(p)),
        suites.record("primitive-orthogonal", inp, U.lower_orthogonality_check(p)),
        suites.record("primitive-lower-span", inp, U.lower_span_check(p)),
    ]


def cmd_delta(s, args):
    q = s.q
    x = parse_free(q, args.expr)
    c = _composition(args.c)
    y = s.uplus.delta_component(args.vertex, c, x, side=args.side)
    return [info("delta-comp", {"vertex": args.vertex, "c": list(c), "side": args.side,
                                "expr": render_free(q, x)}, render_free(q, y))]


def cmd_straighten(s, args):
    D = s.double
    x = D.parse(args.expr)
    return [info("straighten", {"expr": args.expr}, D.render(x))]


def cmd_hopf(s, args):
    return suites.suite_hopf(s) + suites.suite_double(s)


def cmd_theta(s, args):
    D = s.double
    p = args.cutoff or suites.default_theta_cutoff(s)
    th = theta_build(s.uplus, D, p)
    out = []
    for alpha in sorted(th.components, key=lambda a: (sum(a), tuple(-x for x in a))):
        for n, (bm, bs) in enumerate(th.components[alpha]):
            out.append(info("theta", {"alpha": list(alpha), "index": n},
                            {"b_minus": D.render(bm), "b_star": D.render(bs)}))
    return out


def cmd_theta_check(s, args):
    return suites.suite_theta(s, args.cutoff)


def cmd_theta_module(s, args):
    q, D = s.q, s.double
    V = s.casimir.verma
    alpha, beta = _vector(q, args.alpha), _vector(q, args.beta)
    gh = args.gen_height
    need = 2 * (args.depth + gh)
    if need > s.max_height:
        raise HeightCutoffError(
            f"height cutoff exceeded: depth {args.depth} and generator height {gh} need {need}")
    th = theta_build(s.uplus, D, args.depth + gh)
    us = []
    for g in q.gen_indices(gh):
        us += [(q.gen_name(g), D.E(g)), (q.gen_name(g).replace("E", "F", 1), D.F(g))]
    us += [(f"K[{v}]", D.K(v)) for v in q.vertices]
    b1 = V.basis(alpha, args.depth, s.uplus)
    b2 = V.basis(beta, args.depth, s.uplus)
    out = []
    for name, u in us:
        for n1, m1 in enumerate(b1):
            for n2, m2 in enumerate(b2):
                out.append(suites.record(
                    "theta-module-intertwine",
                    {"u": name, "alpha": list(alpha), "beta": list(beta), "m1": n1, "m2": n2},
                    theta_module_check(th, V, u, m1, m2)))
    return out


def cmd_casimir(s, args):
    q, C = s.q, s.casimir
    alpha = _vector(q, args.alpha)
    out = []
    for i in range(q.n):
        for l in range(1, (args.max_level if q.is_imaginary(i) else 1) + 1):
            if args.depth + l > s.max_height:
                raise HeightCutoffError(
                    f"height cutoff exceeded: depth {args.depth} + level {l} > {s.max_height}")
            for name, n, ok in C.identity_checks(alpha, i, l, args.depth):
                out.append(suites.record(f"casimir-{name}-identity",
                                         {"alpha": list(alpha), "vertex": q.vertices[i],
                                          "level": l, "depth": args.depth, "vector": n}, ok))
    return out


def cmd_f(s, args):
    return suites.suite_f(s, max_level=s.max_height, bound=args.bound)


def cmd_verify_all(s, args):
    return suites.verify_all(s)


COMMANDS = {
    "dims": (cmd_dims, "graded dimensions of U+"),
    "gram": (cmd_gram, "Gram matrices, ranks and kernels"),
    "radical": (cmd_radical, "radical membership or radical basis"),
    "serre-check": (cmd_serre, "Serre elements lie in the radical"),
    "iso-comm-check": (cmd_iso, "isotropic commutators lie in the radical"),
    "primitive": (cmd_primitive, "the primitive element a_(i,l) and its checks"),
    "delta-comp": (cmd_delta, "coproduct components along a_(i,c)"),
    "straighten": (cmd_straighten, "normal form F*K*E of an expression in the double"),
    "hopf-check": (cmd_hopf, "Hopf axioms and the double relation"),
    "theta": (cmd_theta, "components of the truncated quasi-R-matrix"),
    "theta-check": (cmd_theta_check, "intertwining property of the quasi-R-matrix"),
    "theta-module-check": (cmd_theta_module, "quasi-R-matrix intertwining on M(alpha)⊗M(beta)"),
    "casimir-check": (cmd_casimir, "Casimir commutation identities on a Verma module"),
    "f-check": (cmd_f, "the quadratic identity for f"),
    "verify-all": (cmd_verify_all, "every verification suite"),
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("session")
    g.add_argument("--quiver", metavar="FILE", help="quiver description file")
    g.add_argument("--preset", choices=sorted(PRESETS), help="built-in test quiver")
    g.add_argument("--nu-preset", choices=["one", "lusztig"], default="one")
    g.add_argument("--max-height", type=int, default=4, metavar="N")
    g.add_argument("--series-order", type=int, default=20, metavar="N")
    g.add_argument("--nu-default", metavar="EXPR")
    g.add_argument("--seed", type=int, default=0, metavar="N")
    g.add_argument("--random-nu", action="store_true", help="draw nu from --seed")
    g.add_argument("--margin", type=int, default=0, help="extra Casimir truncation height")
    g.add_argument("--format", choices=["table", "json"], default="table")
    g.add_argument("--out", metavar="FILE")

    parser = argparse.ArgumentParser(prog="quiverqg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    subs = {}
    for name, (_, help_) in COMMANDS.items():
        subs[name] = sub.add_parser(name, parents=[common], help=help_)
    subs["dims"].add_argument("--degree")
    subs["gram"].add_argument("--degree")
    subs["radical"].add_argument("--expr")
    subs["radical"].add_argument("--degree")
    for name in ("serre-check", "iso-comm-check"):
        subs[name].add_argument("--draws", type=int, default=0,
                                help="additional random nu draws")
    subs["primitive"].add_argument("--vertex", required=True)
    subs["primitive"].add_argument("--level", type=int, required=True)
    subs["delta-comp"].add_argument("--vertex", required=True)
    subs["delta-comp"].add_argument("--c", required=True, help="composition, e.g. 1,2")
    subs["delta-comp"].add_argument("--expr", required=True)
    subs["delta-comp"].add_argument("--side", choices=["lower", "upper"], default="lower")
    subs["straighten"].add_argument("--expr", required=True)
    subs["theta"].add_argument("--cutoff", type=int)
    subs["theta-check"].add_argument("--cutoff", type=int)
    subs["theta-module-check"].add_argument("--alpha", required=True)
    subs["theta-module-check"].add_argument("--beta", required=True)
    subs["theta-module-check"].add_argument("--depth", type=int, default=1)
    subs["theta-module-check"].add_argument("--gen-height", type=int, default=1)
    subs["casimir-check"].add_argument("--alpha", required=True)
    subs["casimir-check"].add_argument("--depth", type=int, default=2)
    subs["casimir-check"].add_argument("--max-level", type=int, default=2)
    subs["f-check"].add_argument("--bound", type=int, default=3)
    return parser


# -- output --------------------------------------------------------------------------------

def _fmt_input(inp):
    return " ".join(f"{k}={json.dumps(v, ensure_ascii=False) if not isinstance(v, str) else v}"
                    for k, v in inp.items())


def format_records(records, mode):
    if mode == "json":
        return "".join(json.dumps(r, ensure_ascii=False) + "\n" for r in records)
    lines = []
    checks = [r for r in records if r["result"] in ("pass", "fail")]
    for r in records:
        res = r["result"]
        if res in ("pass", "fail"):
            lines.append(f"{res.upper():4s}  {r['check']:28s} {_fmt_input(r['input'])}")
            if "witness" in r:
                lines.append(f"      witness: {json.dumps(r['witness'], ensure_ascii=False)}")
        elif isinstance(res, dict):
            lines.append(f"{r['check']}  {_fmt_input(r['input'])}")
            for k, v in res.items():
                if k == "matrix":
                    lines.append("  matrix:")
                    lines += ["    [" + ", ".join(row) + "]" for row in v]
                else:
                    lines.append(f"  {k}: {v}")
        else:
            lines.append(f"{r['check']:12s} {_fmt_input(r['input'])}  ->  {res}")
    if checks:
        nfail = sum(r["result"] == "fail" for r in checks)
        lines.append(f"{len(checks)} checks, {nfail} failed")
    return "\n".join(lines) + "\n"


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    fn = COMMANDS[args.command][0]
    try:
        s = build_session(args)
        records = fn(s, args)
    except (UsageError, ParseError, QuiverError, HeightCutoffError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DegenerateFormError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    text = format_records(records, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 1 if any(r["result"] == "fail" for r in records) else 0


if __name__ == "__main__":
    sys.exit(main())
