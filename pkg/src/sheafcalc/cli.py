"""Command-line front end.

Subcommands operate on session files (see the session module for the format)
or on the shipped claim catalog:

    sheafcalc hilb FILE [NAME]          Hilbert polynomial
    sheafcalc gb FILE NAME              reduced Groebner basis
    sheafcalc res FILE NAME             minimal free resolution (Betti table)
    sheafcalc cohom FILE NAME           sheaf cohomology table over a window
    sheafcalc ext FILE M N              graded module Ext dimensions
    sheafcalc tor FILE M N              graded Tor dimensions
    sheafcalc sheafext FILE M N         stabilized sheaf Ext dimension
    sheafcalc dual FILE NAME            dual sheaf presentation
    sheafcalc beilinson FILE NAME       cohomology signature classification
    sheafcalc walls D CHI               pair-stability walls
    sheafcalc verify --paper            run the shipped claim catalog

Exit codes: 0 success / all claims passed, 1 at least one claim failed,
2 input error (bad file, bad arguments, undefined names).
"""

import argparse
import json
import sys

from ._version import __version__
from .fields import QQ, PrimeField
from .poly import GREVLEX, LEX
from .session import SessionError, parse_session
from .groebner import ModuleOrder, buchberger
from .homology import (
    QuotientBasis,
    ext_dims,
    hilbert_polynomial,
    resolve,
    tor_dims,
)
from .cohomology import (
    NonStabilizationError,
    beilinson_table,
    cohomology_table,
    dual_sheaf,
    sheaf_ext,
)
from .scenarios import Claim, load_claims, run_scenario
from .walls import walls


class InputError(Exception):
    """Anything that should terminate with exit code 2."""


def _parse_field(token):
    if token == "QQ":
        return QQ
    if token.startswith("Fp:"):
        try:
            return PrimeField(int(token[3:]))
        except ValueError as exc:
            raise InputError(str(exc))
    raise InputError("unknown field %r (QQ or Fp:<p>)" % token)


def _parse_window(token):
    parts = token.split("..")
    if len(parts) != 2:
        raise InputError("window must look like a..b, got %r" % token)
    try:
        lo, hi = int(parts[0]), int(parts[1])
    except ValueError:
        raise InputError("window bounds must be integers, got %r" % token)
    if lo > hi:
        raise InputError("window %d..%d is empty" % (lo, hi))
    return lo, hi


def _load(args):
    try:
        with open(args.file) as handle:
            text = handle.read()
    except OSError as exc:
        raise InputError(str(exc))
    field = _parse_field(args.field) if args.field else None
    order = {"grevlex": GREVLEX, "lex": LEX}.get(args.order) if args.order else None
    try:
        return parse_session(text, field=field, order=order)
    except SessionError as exc:
        raise InputError("%s: %s" % (args.file, exc))


def _named_module(sess, name):
    if name not in sess.objects:
        raise InputError("no object named %r in the session file" % name)
    return sess.module(name)


def _pick_name(sess, args, verb):
    if args.name:
        return args.name
    for cverb, cargs, _line in sess.commands:
        if cverb == verb and cargs:
            return cargs[0]
    names = sess.names()
    if not names:
        raise InputError("session file defines no objects")
    return names[-1]


def _emit(args, payload, text):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _vector_text(ring, vec, rank):
    per_component = [dict() for _ in range(rank)]
    for (comp, mono), coeff in vec.items():
        per_component[comp][mono] = coeff
    from .poly import Polynomial

    texts = [Polynomial(ring, t).text() if t else "0" for t in per_component]
    return "[" + ", ".join(texts) + "]" if rank > 1 else texts[0]


# ---------------------------------------------------------------------------
# subcommand bodies


def _cmd_hilb(args):
    sess = _load(args)
    name = _pick_name(sess, args, "hilb")
    hp = hilbert_polynomial(_named_module(sess, name))
    _emit(args, {"object": name, "hilbert_polynomial": hp.text()}, hp.text())
    return 0


def _cmd_gb(args):
    sess = _load(args)
    name = _pick_name(sess, args, "gb")
    kind, obj = sess.objects[name]
    ring = sess.ring
    if kind == "ideal":
        vectors = [{(0, m): c for m, c in g.terms.items()} for g in obj]
        free = sess.module(name).free_cover()
    else:
        pres = sess.module(name)
        vectors = pres.matrix.columns()
        free = pres.free_cover()
    gb = buchberger(vectors, free, ModuleOrder(ring.order, "POT"))
    texts = [_vector_text(ring, v, free.rank) for v in gb.elements]
    _emit(args, {"object": name, "basis": texts}, "\n".join(texts) or "0")
    return 0


def _cmd_res(args):
    sess = _load(args)
    name = _pick_name(sess, args, "res")
    res = resolve(_named_module(sess, name))
    betti = res.betti()
    lines = ["betti:"]
    for i in sorted(betti):
        row = "  %d:" % i
        for j, n in sorted(betti[i].items()):
            row += " %d:%d" % (j, n)
        lines.append(row)
    lines.append("length: %d" % res.length)
    lines.append("regularity: %d" % res.regularity())
    payload = {
        "object": name,
        "betti": {str(i): {str(j): n for j, n in r.items()} for i, r in betti.items()},
        "length": res.length,
        "regularity": res.regularity(),
    }
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_cohom(args):
    sess = _load(args)
    name = _pick_name(sess, args, "cohom")
    lo, hi = _parse_window(args.window) if args.window else (-3, 3)
    table = cohomology_table(_named_module(sess, name), lo, hi)
    payload = {
        "object": name,
        "window": [lo, hi],
        "h": [list(row) for row in table.rows],
        "euler_consistent": table.euler_consistent(),
    }
    _emit(args, payload, table.text())
    return 0


def _cmd_ext(args):
    return _graded_pairing(args, ext_dims, "ext")


def _cmd_tor(args):
    return _graded_pairing(args, tor_dims, "tor")


def _graded_pairing(args, dims, verb):
    sess = _load(args)
    M = _named_module(sess, args.m)
    N = _named_module(sess, args.n)
    lo, hi = _parse_window(args.window) if args.window else (0, 4)
    table = dims(M, N, args.i, range(lo, hi + 1))
    text = "  ".join("%d:%d" % (d, table[d]) for d in sorted(table))
    payload = {verb: args.i, "M": args.m, "N": args.n,
               "dims": {str(d): v for d, v in sorted(table.items())}}
    _emit(args, payload, text)
    return 0


def _cmd_sheafext(args):
    sess = _load(args)
    M = _named_module(sess, args.m)
    N = _named_module(sess, args.n)
    try:
        result = sheaf_ext(M, N, args.i)
    except NonStabilizationError as exc:
        raise InputError(str(exc))
    payload = {
        "M": args.m,
        "N": args.n,
        "i": args.i,
        "dim": result.dim,
        "stable_from": result.e,
        "history": [list(h) for h in result.history],
    }
    _emit(args, payload, "dim Ext^%d = %d" % (args.i, result.dim))
    return 0


def _cmd_dual(args):
    sess = _load(args)
    name = _pick_name(sess, args, "dual")
    dual = dual_sheaf(_named_module(sess, name))
    hp = hilbert_polynomial(dual)
    text = "dual generators in degrees %s, Hilbert polynomial %s" % (
        list(dual.gen_degs), hp.text())
    payload = {
        "object": name,
        "generator_degrees": list(dual.gen_degs),
        "hilbert_polynomial": hp.text(),
    }
    _emit(args, payload, text)
    return 0


def _cmd_beilinson(args):
    sess = _load(args)
    name = _pick_name(sess, args, "beilinson")
    table = beilinson_table(_named_module(sess, name))
    payload = {
        "object": name,
        "signature": list(table.signature),
        "type": table.type,
    }
    _emit(args, payload, table.text())
    return 0


def _cmd_walls(args):
    found = walls(args.d, args.chi)
    texts = [w.text() for w in found]
    payload = {"d": args.d, "chi": args.chi, "walls": texts}
    _emit(args, payload, "\n".join(texts) if texts else "no walls")
    return 0


def _cmd_verify(args):
    if args.paper:
        claims = load_claims()
    elif args.claims:
        try:
            claims = load_claims(args.claims)
        except (OSError, ValueError, KeyError) as exc:
            raise InputError("bad claim file %s: %s" % (args.claims, exc))
    else:
        raise InputError("verify needs --paper or --claims FILE")
    if args.skip_slow:
        claims = [c for c in claims if not c.slow]
    if args.only:
        claims = [c for c in claims if args.only in c.id]
        if not claims:
            raise InputError("no claim id contains %r" % args.only)
    field = _parse_field(args.field) if args.field else QQ
    try:
        report = run_scenario(claims, field=field, widen=args.widen)
    except ValueError as exc:
        raise InputError(str(exc))
    _emit(args, report.to_dict(), report.text())
    return 0 if report.ok else 1


# ---------------------------------------------------------------------------
# argument wiring


def _build_parser():
    top = argparse.ArgumentParser(
        prog="sheafcalc",
        description="Groebner bases, resolutions, and sheaf cohomology on "
                    "projective space, with a verified claim catalog.",
    )
    top.add_argument("--version", action="version", version="sheafcalc " + __version__)
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, window=False):
        p.add_argument("--json", action="store_true", help="structured output")
        p.add_argument("--field", help="QQ (default) or Fp:<p>; overrides the file")
        p.add_argument("--order", choices=("grevlex", "lex"),
                       help="monomial order; overrides the file")
        if window:
            p.add_argument("--window", help="degree window a..b")

    def with_file(name, fn, window=False, named=True):
        p = sub.add_parser(name)
        p.add_argument("file", help="session file")
        if named:
            p.add_argument("name", nargs="?", help="object name (default: from file)")
        common(p, window)
        p.set_defaults(fn=fn)
        return p

    with_file("hilb", _cmd_hilb)
    with_file("gb", _cmd_gb)
    with_file("res", _cmd_res)
    with_file("cohom", _cmd_cohom, window=True)
    with_file("dual", _cmd_dual)
    with_file("beilinson", _cmd_beilinson)

    for name, fn in (("ext", _cmd_ext), ("tor", _cmd_tor), ("sheafext", _cmd_sheafext)):
        p = sub.add_parser(name)
        p.add_argument("file")
        p.add_argument("m", help="module name")
        p.add_argument("n", help="module name")
        p.add_argument("-i", type=int, default=1, help="homological index (default 1)")
        common(p, window=(name != "sheafext"))
        p.set_defaults(fn=fn)

    p = sub.add_parser("walls")
    p.add_argument("d", type=int)
    p.add_argument("chi", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_walls)

    p = sub.add_parser("verify")
    p.add_argument("--paper", action="store_true", help="run the shipped catalog")
    p.add_argument("--claims", help="run claims from a JSON file")
    p.add_argument("--only", help="restrict to claim ids containing a substring")
    p.add_argument("--skip-slow", action="store_true")
    p.add_argument("--widen", type=int, default=0,
                   help="widen every verification window; results must not change")
    p.add_argument("--json", action="store_true")
    p.add_argument("--field", help="QQ (default) or Fp:<p>")
    p.set_defaults(fn=_cmd_verify)

    return top


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except InputError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
