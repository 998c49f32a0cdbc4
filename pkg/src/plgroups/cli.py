"""Command-line interface: ``plgroups <verb> [options]``.

Maps, pair diagrams and words are read from stdin (or a file argument) and
written to stdout in the text formats of :mod:`plgroups.plmap`,
:mod:`plgroups.thompson` and :mod:`plgroups.gammaq.words`.  Domain errors
exit with status 1 and print their token to stderr; usage errors exit 2.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .errors import ParseError, PLGroupError, UnknownSuite
from .exact import format_rational, parse_rational
from .gammaq import dumps_word, factor, loads_word, member_gamma, mush, xi_build
from .gammaq.belk import belk_transform
from .gammaq.dynamics import conj_in_Q, contract, simplicity_witness, special_in_Q
from .gammaq.membership import eta
from .gammaq.rotation import translation_number
from .gammaq.signature import tuple_signature
from .plmap import CompactPL, compose, dumps, invert, loads, loads_all
from .plot import emit_csv, emit_svg
from .suites import run_suite
from .thompson import (
    map_to_pair,
    member_Fn,
    orbit_class,
    orbit_map,
    pair_to_map,
    parse_pair,
    tuple_transport,
)


class UsageError(Exception):
    pass


def _read(path: str | None) -> str:
    if path and path != "-":
        with open(path) as fh:
            return fh.read()
    return sys.stdin.read()


def _one_map(args):
    f, n = loads(_read(getattr(args, "file", None)))
    return f, (args.n or n)


def _need_n(args, fallback: int | None = None) -> int:
    n = args.n or fallback
    if not n:
        raise UsageError("--n is required")
    return n


def _rationals(texts) -> list[Fraction]:
    return [parse_rational(t) for t in texts]


# ----------------------------------------------------------------------
# verbs


def cmd_eval(args) -> str:
    f, _ = _one_map(args)
    return "".join(format_rational(f.evaluate(x)) + "\n" for x in _rationals(args.x))


def cmd_compose(args) -> str:
    blocks = loads_all(_read(args.file))
    if not blocks:
        raise ParseError("no maps given")
    out, n = blocks[0]
    for f, _ in blocks[1:]:
        out = compose(out, f)
    return dumps(out, args.n or n)


def cmd_invert(args) -> str:
    f, n = _one_map(args)
    return dumps(invert(f), n)


def cmd_member_f(args) -> str:
    f, n = _one_map(args)
    return "true\n" if isinstance(f, CompactPL) and member_Fn(f, _need_n(args, n)) else "false\n"


def cmd_member_gamma(args) -> str:
    f, n = _one_map(args)
    member_gamma(f, _need_n(args, n))
    return "ok\n"


def cmd_pair(args) -> str:
    text = _read(args.file)
    if text.lstrip().startswith("subdiv"):
        P = parse_pair(text)
        return dumps(pair_to_map(P), P.base_n)
    f, n = loads(text)
    return str(map_to_pair(f, _need_n(args, n))) + "\n"


def cmd_factor(args) -> str:
    f, n = _one_map(args)
    return dumps_word(factor(f, _need_n(args, n)))


def cmd_mush(args) -> str:
    f, n = _one_map(args)
    n = _need_n(args, n)
    return dumps(mush(f, n), eta(n))


def cmd_xi(args) -> str:
    n = _need_n(args)
    return dumps(xi_build(n, args.depth).map, n)


def cmd_special_q(args) -> str:
    return dumps_word(special_in_Q(_need_n(args), parse_rational(args.eps)))


def cmd_rotnum(args) -> str:
    f, _ = _one_map(args)
    return str(translation_number(f, args.m or 64, args.p_max)) + "\n"


def cmd_orbit_class(args) -> str:
    return str(orbit_class(parse_rational(args.x), _need_n(args))) + "\n"


def cmd_orbit_map(args) -> str:
    n = _need_n(args)
    return dumps(orbit_map(parse_rational(args.x), n), n)


def cmd_transport(args) -> str:
    n = _need_n(args)
    tr = tuple_transport(_rationals(args.s.split(",")), _rationals(args.t.split(",")), n)
    return f"# certificate: {len(tr.certificate)} commutators\n" + dumps(tr.map, n)


def cmd_contract(args) -> str:
    u0, u1, v0, v1 = _rationals(args.ends)
    return dumps_word(contract((u0, u1), (v0, v1), _need_n(args)))


def cmd_conj_q(args) -> str:
    w = loads_word(_read(args.file))
    return dumps_word(conj_in_Q(w, tuple(_rationals(args.interval))))


def cmd_witness(args) -> str:
    w = loads_word(_read(args.file))
    wit = simplicity_witness(w, w.base_n)
    return dumps_word(wit.h1) + dumps_word(wit.h2)


def cmd_belk(args) -> str:
    f, n = _one_map(args)
    b = belk_transform(f, _need_n(args, n), args.depth or 3)
    head = f"# slopes_ok={b.slopes_ok} ring_ok={b.ring_ok} doubling_ok={b.doubling_ok}\n"
    return head + dumps(b.map, 6)


def cmd_signature(args) -> str:
    sig = tuple_signature(_rationals(args.points), eta(_need_n(args)))
    return "(" + ", ".join(str(c) for c in sig) + ")\n"


def cmd_plot(args) -> str:
    f, _ = _one_map(args)
    return emit_svg(f) if args.format == "svg" else emit_csv(f)


def cmd_verify(args) -> tuple[str, int]:
    rep = run_suite(args.suite, n=args.n, seed=args.seed, depth=args.depth, max_index=args.max_index)
    lines = [rep.summary(timing=False)] + [f"  failure: {note}" for note in rep.notes]
    # timing goes to stderr so that stdout is identical across reruns
    print(f"elapsed: {rep.elapsed:.2f}s", file=sys.stderr)
    return "\n".join(lines) + "\n", 0 if rep.passed else 1


# ----------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=None, help="base n (F_n, Gamma_n)")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    common.add_argument("--depth", type=int, default=None)
    common.add_argument("--m", type=int, default=None, help="iterations for rotnum")
    common.add_argument("--max-index", type=int, default=None)
    common.add_argument("--format", choices=("csv", "svg"), default="csv")

    p = argparse.ArgumentParser(prog="plgroups", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    def verb(name, func, help_, file_arg=True):
        sp = sub.add_parser(name, parents=[common], help=help_)
        if file_arg:
            sp.add_argument("--file", default=None, help="input file (default stdin)")
        sp.set_defaults(func=func)
        return sp

    verb("eval", cmd_eval, "evaluate a map at points").add_argument("x", nargs="+")
    verb("compose", cmd_compose, "compose all maps on stdin, left to right")
    verb("invert", cmd_invert, "invert a map")
    verb("member-f", cmd_member_f, "test membership in F_n")
    verb("member-gamma", cmd_member_gamma, "check membership in Gamma_n")
    verb("pair", cmd_pair, "map <-> reduced pair diagram")
    verb("factor", cmd_factor, "factor a Gamma_n element over xi and F_eta")
    verb("mush", cmd_mush, "F_eta element making the input special")
    verb("xi", cmd_xi, "the special element xi", file_arg=False)
    verb("special-q", cmd_special_q, "special element of Q_n", file_arg=False).add_argument(
        "--eps", default="1/5"
    )
    verb("rotnum", cmd_rotnum, "translation number").add_argument("--p-max", type=int, default=6)
    verb("orbit-class", cmd_orbit_class, "orbit class of a point", file_arg=False).add_argument("x")
    verb("orbit-map", cmd_orbit_map, "F_n element moving x to i/n", file_arg=False).add_argument("x")
    sp = verb("transport", cmd_transport, "F_n' element moving tuple s to t", file_arg=False)
    sp.add_argument("--s", required=True, help="comma separated points")
    sp.add_argument("--t", required=True, help="comma separated points")
    verb("contract", cmd_contract, "word taking U + Z into V + Z", file_arg=False).add_argument(
        "ends", nargs=4, metavar="U0 U1 V0 V1"
    )
    verb("conj-q", cmd_conj_q, "Q_n word agreeing with a word on I + Z").add_argument(
        "--interval", nargs=2, required=True, metavar=("A", "B")
    )
    verb("witness", cmd_witness, "simplicity witness for a Q_n word")
    verb("belk", cmd_belk, "conjugate a Gamma_2 element to the positive reals")
    verb("signature", cmd_signature, "orbit-class signature of a tuple", file_arg=False).add_argument(
        "points", nargs="*"
    )
    verb("plot", cmd_plot, "CSV or SVG graph of a map")
    verb("verify", cmd_verify, "run a named verification suite", file_arg=False).add_argument("suite")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except UnknownSuite as exc:
        print(exc.token, file=sys.stderr)
        return 2
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except PLGroupError as exc:
        print(exc.token, file=sys.stderr)
        print(str(exc), file=sys.stderr)
        return 1
    status = 0
    if isinstance(result, tuple):
        result, status = result
    sys.stdout.write(result)
    return status


if __name__ == "__main__":
    sys.exit(main())
