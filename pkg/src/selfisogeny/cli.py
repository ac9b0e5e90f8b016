"""Command-line front end.

Exit status: 0 on success, 1 when a check-style command answers no, 2 on bad
input.  ``--json`` prints one JSON value with a fixed key order.
"""

from __future__ import annotations

import argparse
import json
import sys

from .arith import InvalidInput
from .curves import curves_with_self_isogeny, prime_count_check
from .fricke import classify_fricke_n, enumerate_fixed_points, fricke_test, nu
from .isogeny import SubgroupGen, build_matrix, find_pairs, subgroup_generator
from .lattice import verify_self_isogeny_oracle
from .qforms import class_number
from .tau import TauPoly, parse_tau

OK, NO, BAD_INPUT = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InvalidInput(message)


def tau_obj(tau: TauPoly) -> dict:
    return {
        "u1": tau.u1, "u2": tau.u2, "v1": tau.v1, "v2": tau.v2,
        "spec": tau.spec(),
        "equation": tau.equation(),
    }


def gen_obj(gen: SubgroupGen) -> dict:
    return {"u11": gen.u11, "u21": gen.u21, "n": gen.n, "text": str(gen)}


def _pairs_text(pairs) -> str:
    return ", ".join(f"({a}, {b})" for a, b in pairs) or "-"


def _gen_arg(text: str) -> SubgroupGen:
    try:
        u11, u21, n = (int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"malformed generator {text!r}; expected 'u11,u21,n'") from None
    try:
        return SubgroupGen(u11, u21, n)
    except InvalidInput as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def cmd_check(args):
    pairs = find_pairs(args.tau, args.n)
    ok = bool(pairs)
    obj = {"tau": tau_obj(args.tau), "n": args.n, "verdict": ok,
           "pairs": [list(p) for p in pairs]}
    text = f"{'yes' if ok else 'no'}\nwitness pairs (a, b'): {_pairs_text(pairs)}"
    return obj, text, OK if ok else NO


def cmd_generator(args):
    gen = subgroup_generator(args.tau, args.a, args.bprime)
    obj = {"tau": tau_obj(args.tau), "a": args.a, "bprime": args.bprime,
           "n": gen.n, "generator": gen_obj(gen)}
    return obj, f"C = <{gen}>", OK


def cmd_fricke(args):
    iso = build_matrix(args.tau, args.a, args.bprime)
    fixed = fricke_test(args.tau, args.a, args.bprime)
    obj = {"tau": tau_obj(args.tau), "a": args.a, "bprime": args.bprime,
           "matrix": [list(r) for r in iso.M.rows()], "n": iso.n,
           "trace": iso.M.trace(), "fixed": fixed}
    text = (f"M = {iso.M}  det = {iso.n}  trace = {iso.M.trace()}\n"
            f"{'fixed point' if fixed else 'not a fixed point'} of w_{iso.n}")
    return obj, text, OK if fixed else NO


def cmd_classify(args):
    cls = classify_fricke_n(args.tau)
    obj = {"tau": tau_obj(args.tau), "n": cls.n, "case": cls.case_tag,
           "witnesses": [list(p) for p in cls.witnesses]}
    text = (f"n = {cls.n}  case {cls.case_tag}\n"
            f"witness pairs (a, b'): {_pairs_text(cls.witnesses)}")
    return obj, text, OK


def cmd_fixed_points(args):
    points = enumerate_fixed_points(args.n)
    expected = nu(args.n)
    obj = {"n": args.n, "count": len(points), "nu": expected,
           "agree": len(points) == expected,
           "points": [{"tau": tau_obj(t), "generator": gen_obj(g)} for t, g in points]}
    lines = [f"{t.equation():<28} C = <{g}>" for t, g in points]
    lines.append(f"count = {len(points)}  nu({args.n}) = {expected}  "
                 f"{'agree' if obj['agree'] else 'DISAGREE'}")
    return obj, "\n".join(lines), OK if obj["agree"] else NO


def cmd_enumerate(args):
    if args.prime is not None:
        count, ok = prime_count_check(args.prime, jobs=args.jobs)
        curves = curves_with_self_isogeny(args.prime, jobs=args.jobs)
        obj = {"p": args.prime, "count": count, "expected": args.prime + 1, "ok": ok,
               "curves": [tau_obj(t) for t in curves]}
        text = f"p = {args.prime}  count = {count}  p+1 = {args.prime + 1}  " + (
            "ok" if ok else "MISMATCH")
        return obj, text, OK if ok else NO
    curves = curves_with_self_isogeny(args.n, jobs=args.jobs)
    lines = [f"{t.equation():<28} {t.spec()}" for t in curves]
    lines.append(f"{len(curves)} curves")
    return [tau_obj(t) for t in curves], "\n".join(lines), OK


def cmd_class_number(args):
    h = class_number(args.d)
    return {"d": args.d, "h": h}, str(h), OK


def cmd_nu(args):
    value = nu(args.n)
    return {"n": args.n, "nu": value}, str(value), OK


def cmd_verify(args):
    ok = verify_self_isogeny_oracle(args.tau, args.gen)
    obj = {"tau": tau_obj(args.tau), "generator": gen_obj(args.gen), "isomorphic": ok}
    return obj, "yes" if ok else "no", OK if ok else NO


def _tau_arg(text):
    try:
        return parse_tau(text)
    except InvalidInput as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")

    p = _Parser(prog="selfisogeny", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("check", parents=[common], help="cyclic degree-n self-isogeny?")
    s.add_argument("--tau", type=_tau_arg, required=True)
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_check)

    for name, func, hlp in (("generator", cmd_generator, "subgroup generator"),
                            ("fricke", cmd_fricke, "Fricke fixed-point test")):
        s = sub.add_parser(name, parents=[common], help=hlp)
        s.add_argument("--tau", type=_tau_arg, required=True)
        s.add_argument("--a", type=int, required=True)
        s.add_argument("--bprime", type=int, required=True)
        s.set_defaults(func=func)

    s = sub.add_parser("classify", parents=[common], help="unique Fricke level of tau")
    s.add_argument("--tau", type=_tau_arg, required=True)
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("fixed-points", parents=[common], help="fixed points of w_n")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_fixed_points)

    s = sub.add_parser("enumerate", parents=[common], help="curves with E/C ~ E")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--prime", type=int)
    s.add_argument("--jobs", type=int, default=1, help="worker processes")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("class-number", parents=[common], help="h(D)")
    s.add_argument("--d", type=int, required=True)
    s.set_defaults(func=cmd_class_number)

    s = sub.add_parser("nu", parents=[common], help="number of w_n fixed points")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_nu)

    s = sub.add_parser("verify", parents=[common], help="lattice oracle")
    s.add_argument("--tau", type=_tau_arg, required=True)
    s.add_argument("--gen", type=_gen_arg, required=True)
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        obj, text, code = args.func(args)
    except (InvalidInput, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=stderr)
        return BAD_INPUT
    print(json.dumps(obj) if args.json else text, file=stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
