"""Command-line front end.

Exit status is 0 on success, 1 on a domain error (syntax, overflow, failed
precondition, failed selftest) and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import sys

from . import normalizer as N
from .arithmetic import add, add_zb, mul, neg
from .freegroup import f1_to_zw, reduce, zw_to_f1
from .loopspace import loop_of, winding
from .selftest import SUITES, run_suites
from .sigcheck import check_biinv_extension, check_unit_extension, parse_algebra
from .terms import (
    Alphabet,
    NatOverflowError,
    TermSyntaxError,
    ZqPair,
    canonicalize_zq,
    int_to_zw,
    parse_loop,
    parse_word,
    parse_zb,
    parse_zh,
    parse_zq,
    parse_zw,
    print_loop,
    print_term,
    print_word,
    print_zq,
    zw_to_int,
)

REPS = ("zb", "zh", "zw", "zq", "loop", "word")


class DomainError(Exception):
    pass


def _alphabet(args) -> Alphabet | None:
    return Alphabet.parse(args.alphabet) if args.alphabet is not None else None


def _check_depth(t, args):
    if args.depth is not None and t.depth > args.depth:
        raise DomainError(f"term depth {t.depth} exceeds --depth {args.depth}")
    return t


def to_zw(text: str, args):
    """Read ``text`` in representation ``args.rep`` and return its Z_w value."""
    match args.rep:
        case "zb":
            return N.nf(_check_depth(parse_zb(text), args))
        case "zh":
            return N.nf_zh(_check_depth(parse_zh(text), args))
        case "zw":
            return parse_zw(text)
        case "zq":
            p = canonicalize_zq(parse_zq(text))
            return int_to_zw(p.pos - p.neg)
        case "loop":
            return winding(parse_loop(text))
        case "word":
            w = reduce(parse_word(text, _alphabet(args)))
            alphabet = _alphabet(args)
            if alphabet is not None and len(alphabet) != 1:
                raise DomainError("--rep word denotes an integer only over a one-letter alphabet")
            return f1_to_zw(w)
    raise DomainError(f"unknown representation {args.rep!r}")


def from_zw(z, rep: str, args) -> str:
    match rep:
        case "zb":
            return print_term(N.embed(z))
        case "zh":
            return print_term(N.embed_zh(z))
        case "zw":
            return str(zw_to_int(z))
        case "zq":
            k = zw_to_int(z)
            return print_zq(ZqPair(max(k, 0), max(-k, 0)))
        case "loop":
            return print_loop(loop_of(z))
        case "word":
            alphabet = _alphabet(args)
            symbol = alphabet.symbols[0] if alphabet and len(alphabet) else "a"
            return print_word(zw_to_f1(z, symbol))
    raise DomainError(f"unknown representation {rep!r}")


def _inputs(args, arity: int):
    """Operand tuples from argv, or one per non-blank stdin line."""
    if args.terms:
        if len(args.terms) != arity:
            raise UsageError(f"{args.verb} takes {arity} operand(s), got {len(args.terms)}")
        yield tuple(args.terms)
        return
    for line in sys.stdin:
        line = line.strip()
        if not line:
            continue
        if arity == 1:
            yield (line,)
            continue
        parts = line.split(";") if ";" in line else line.split()
        if len(parts) != arity:
            raise DomainError(f"expected {arity} operands on line {line!r}")
        yield tuple(p.strip() for p in parts)


class UsageError(Exception):
    pass


def cmd_normalize(args, out):
    for (text,) in _inputs(args, 1):
        if args.trace and args.rep in ("zb", "zh"):
            t = _check_depth((parse_zb if args.rep == "zb" else parse_zh)(text), args)
            strategy = N.INNERMOST if args.seed is None else args.seed
            trace = N.normalize_trace(t, strategy)
            if args.trace_format == "json":
                print(trace.to_json(), file=out)
            else:
                print(trace.to_lines(), file=out)
        elif args.trace:
            raise DomainError("--trace applies to --rep zb or zh")
        else:
            print(zw_to_int(to_zw(text, args)), file=out)


def cmd_convert(args, out):
    for (text,) in _inputs(args, 1):
        print(from_zw(to_zw(text, args), args.to, args), file=out)


def cmd_add(args, out):
    for a, b in _inputs(args, 2):
        if args.rep == "zb":
            s = add_zb(_check_depth(parse_zb(a), args), _check_depth(parse_zb(b), args))
            print(print_term(s), file=out)
        else:
            print(zw_to_int(add(to_zw(a, args), to_zw(b, args))), file=out)


def cmd_neg(args, out):
    for (a,) in _inputs(args, 1):
        print(zw_to_int(neg(to_zw(a, args))), file=out)


def cmd_mul(args, out):
    for a, b in _inputs(args, 2):
        print(zw_to_int(mul(to_zw(a, args), to_zw(b, args))), file=out)


def cmd_reduce_word(args, out):
    for (text,) in _inputs(args, 1):
        print(print_word(reduce(parse_word(text, _alphabet(args)))), file=out)


def cmd_winding(args, out):
    for (text,) in _inputs(args, 1):
        print(zw_to_int(winding(parse_loop(text))), file=out)


def cmd_sigcheck(args, out):
    binary = args.extension == "unit"
    T = parse_algebra(args.source, binary)
    T2 = parse_algebra(args.target, binary)
    report = check_unit_extension(T, T2) if binary else check_biinv_extension(T, T2)
    print(report, file=out)


def cmd_selftest(args, out):
    results = run_suites(args.suite, seed=args.seed or 0)
    for r in results:
        print(r.line(), file=out)
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} suites passed", file=out)
    if failed:
        raise DomainError(f"{len(failed)} suite(s) failed")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--rep", choices=REPS, default="zw", help="input representation")
    common.add_argument("--alphabet", help="ordered symbols for words, e.g. 'a b c'")
    common.add_argument("--depth", type=int, help="reject constructor terms deeper than this")
    common.add_argument("--trace", action="store_true", help="emit the rewrite trace")
    common.add_argument("--trace-format", choices=("lines", "json"), default="lines")
    common.add_argument("--seed", type=int, help="random rewrite strategy / selftest seed")

    parser = argparse.ArgumentParser(prog="zterms", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name, fn, help, terms=True):
        p = sub.add_parser(name, parents=[common], help=help)
        if terms:
            p.add_argument("terms", nargs="*", help="operands; read from stdin when absent")
        p.set_defaults(fn=fn)
        return p

    verb("normalize", cmd_normalize, "print the integer a term denotes")
    verb("convert", cmd_convert, "convert between representations").add_argument(
        "--to", choices=REPS, required=True
    )
    verb("add", cmd_add, "add two integers (constructor output for --rep zb)")
    verb("neg", cmd_neg, "negate an integer")
    verb("mul", cmd_mul, "multiply two integers")
    verb("reduce-word", cmd_reduce_word, "reduce a free group word")
    verb("winding", cmd_winding, "winding number of a q/Q loop")
    p = verb("sigcheck", cmd_sigcheck, "check a forgetful map on finite algebras", terms=False)
    p.add_argument("extension", choices=("biinv", "unit"))
    p.add_argument("source", help="'<size>; <table>[; <unit>]'")
    p.add_argument("target")
    p = verb("selftest", cmd_selftest, "run the invariant suites", terms=False)
    p.add_argument("--suite", type=int, action="append", choices=[n for n, _, _ in SUITES])
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.fn(args, out)
    except UsageError as exc:
        print(f"zterms {args.verb}: {exc}", file=err)
        return 2
    except (DomainError, TermSyntaxError, NatOverflowError, ValueError) as exc:
        print(f"zterms {args.verb}: {exc}", file=err)
        return 1
    return 0


def main():
    sys.exit(run())
