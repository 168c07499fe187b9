"""Command-line interface.

Exit codes: 0 success, 1 a verification failed, 2 usage or parse error,
3 the requested operator is undefined on the input.
"""

import argparse
import json
import sys

from . import graph as graphmod
from .graph import lrs_coefficient
from .cactus import braid_order, eta_pq, sigma, sigma_word
from .involutions import complement_tableau, complement_word, eta, evacuate, reversal
from .jdt import rectify, rect_word
from .operators import WORD_OPS, apply_to_tableau
from .shapes import ShiftedShape, parse_partition
from .tableau import enumerate_tableaux, parse_tableau, tableau_from_json
from .verify import SUITES, run
from .words import canonicalize, format_word, max_value, parse_word

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_UNDEFINED = 3

TABLEAU_OPS = ("rect", "evac", "reversal", "eta", "complement", "E", "F", "Ep", "Fp", "sigma", "eta-pq")


class UsageError(Exception):
    pass


class Undefined(Exception):
    pass


def _read(path):
    if path in (None, "-"):
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _write(text, path):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _need(value, flag, op):
    if value is None:
        raise UsageError(f"{op} needs {flag}")
    return value


def _transform_tableau(t, args):
    op = args.op
    if op == "rect":
        out, record = rectify(t)
        return out, record
    if op == "evac":
        return evacuate(t), None
    if op in ("reversal",):
        return reversal(t), None
    if op == "eta":
        return eta(t), None
    if op == "complement":
        return complement_tableau(t), None
    if op in WORD_OPS:
        out = apply_to_tableau(t, op, _need(args.i, "-i", op))
        if out is None:
            raise Undefined(f"{op}_{args.i} is undefined on this tableau")
        return out, None
    if op == "sigma":
        return sigma(t, _need(args.i, "-i", op)), None
    if op == "eta-pq":
        return eta_pq(t, _need(args.p, "--p", op), _need(args.q, "--q", op)), None
    raise UsageError(f"unknown operation {op!r}")


def _transform_word(w, n, args):
    op = args.op
    if op == "rect":
        return rect_word(w, n)
    if op == "complement":
        return complement_word(w, n)
    if op in WORD_OPS:
        i = _need(args.i, "-i", op)
        if not 1 <= i < n:
            raise UsageError(f"-i must be in 1..{n - 1}")
        out = WORD_OPS[op](w, i)
        if out is None:
            raise Undefined(f"{op}_{i} is undefined on this word")
        return out
    if op == "sigma":
        return sigma_word(w, _need(args.i, "-i", op), n)
    raise UsageError(f"{op} is not available on words; pass a tableau")


def cmd_transform(args):
    if args.word is not None:
        w = canonicalize(parse_word(args.word))
        n = args.n or max(max_value(w), 2)
        out = _transform_word(w, n, args)
        if isinstance(out, tuple):
            if args.format == "json":
                _write(json.dumps({"word": format_word(out), "n": n}) + "\n", args.out)
            else:
                _write(format_word(out) + "\n", args.out)
            return EXIT_OK
        t = out
        record = None
    else:
        text = _read(args.input)
        is_json = text.lstrip().startswith("{")
        t = tableau_from_json(text) if is_json else parse_tableau(text)
        if args.n is not None:
            if args.n < max_value(t.word):
                raise UsageError(f"--n {args.n} is smaller than the largest entry")
            t = t.with_n(args.n)
        fmt = args.format or ("json" if is_json else "text")
        t, record = _transform_tableau(t, args)
        args.format = fmt
    if args.format == "json":
        doc = t.to_json()
        if record is not None:
            doc["slides"] = record.to_json()
        _write(json.dumps(doc) + "\n", args.out)
    else:
        _write(t.to_text() + "\n", args.out)
    return EXIT_OK


def _shape(args):
    return ShiftedShape(parse_partition(args.shape), parse_partition(args.mu or ""))


def cmd_graph(args):
    g = graphmod.build(_shape(args), args.n)
    summary = graphmod.summary(g)
    fmt = args.format or "text"
    if fmt == "text":
        _write(json.dumps(summary, indent=1) + "\n", args.out)
        return EXIT_OK
    doc = graphmod.export(g, fmt)
    if args.out:
        _write(doc, args.out)
        print(json.dumps(summary, indent=1))
    else:
        sys.stdout.write(doc)
        print(json.dumps(summary), file=sys.stderr)
    return EXIT_OK


DEFAULT_TARGETS = (
    ((3, 2, 1), (), 3),
    ((4, 2, 1), (), 3),
    ((2, 1), (), 4),
    ((3, 1), (1,), 4),
)


def cmd_verify(args):
    if args.shape is not None:
        targets = [(_shape(args), args.n)]
    else:
        targets = [(ShiftedShape(l, m), n) for l, m, n in DEFAULT_TARGETS]
    command = " ".join(["verify", args.suite] + ([f"--shape {args.shape}"] if args.shape else []))
    report = run(args.suite, targets, command)
    if args.out:
        report.artifacts.append(args.out)
        _write(json.dumps(report.to_json(), indent=1) + "\n", args.out)
    if args.format == "json":
        print(json.dumps(report.to_json(), indent=1))
    else:
        print(report.to_text())
    return EXIT_OK if report.ok else EXIT_FAILED


def cmd_count(args):
    shape = _shape(args)
    if args.nu is not None:
        nu = parse_partition(args.nu)
        n = args.n or max(len(nu), 1)
        doc = {
            "lambda": list(shape.outer),
            "mu": list(shape.inner),
            "nu": list(nu),
            "n": n,
            "lrs_coefficient": lrs_coefficient(shape.outer, shape.inner, nu, n),
        }
    else:
        doc = {
            "lambda": list(shape.outer),
            "mu": list(shape.inner),
            "n": args.n,
            "tableaux": len(enumerate_tableaux(shape, args.n)),
        }
    _write(json.dumps(doc) + "\n", args.out)
    return EXIT_OK


def cmd_braid_order(args):
    nu = parse_partition(args.shape)
    least, hist = braid_order(nu, args.n)
    doc = {"shape": list(nu), "n": args.n, "least_m": least, "histogram": {str(k): v for k, v in hist.items()}}
    _write(json.dumps(doc) + "\n", args.out)
    return EXIT_OK


def _add_shape(p, required=True, n_default=None):
    p.add_argument("--shape", required=required, help="outer strict partition, e.g. 5,3,1")
    p.add_argument("--mu", default="", help="inner strict partition, e.g. 2,1")
    p.add_argument("--n", type=int, required=n_default is None, default=n_default, help="alphabet bound")


def parser(prog="shifted-crystal"):
    ap = argparse.ArgumentParser(prog=prog, description="Shifted tableau crystals and the cactus group action.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", help="apply an operator to a tableau or word")
    p.add_argument("op", choices=TABLEAU_OPS)
    p.add_argument("input", nargs="?", help="tableau file (text or JSON); default stdin")
    p.add_argument("--word", help="operate on this word instead of a tableau")
    p.add_argument("--n", type=int, help="alphabet bound")
    p.add_argument("-i", type=int, help="operator index")
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--format", choices=("text", "json"))
    p.add_argument("--out")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("graph", help="build a crystal graph and export it")
    _add_shape(p)
    p.add_argument("--format", choices=("text", "dot", "json"))
    p.add_argument("--out")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("verify", help="run an invariant suite")
    p.add_argument("suite", nargs="?", default="all", choices=SUITES)
    _add_shape(p, required=False, n_default=3)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", help="also write the JSON report here")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("count", help="count tableaux, or an LRS coefficient with --nu")
    _add_shape(p, n_default=0)
    p.add_argument("--nu")
    p.add_argument("--out")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("braid-order", help="orbit orders of sigma_1 sigma_2")
    p.add_argument("--shape", required=True)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--out")
    p.set_defaults(func=cmd_braid_order)
    return ap


def main(argv=None, prog="shifted-crystal"):
    args = parser(prog).parse_args(argv)
    if args.command == "count" and args.nu is None and not args.n:
        print(f"{prog}: count needs --n (or --nu for an LRS coefficient)", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except Undefined as exc:
        print(f"{prog}: undefined: {exc}", file=sys.stderr)
        return EXIT_UNDEFINED
    except (UsageError, ValueError) as exc:
        print(f"{prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def cactus_main(argv=None):
    """``cactus verify ...`` runs the cactus suite; other subcommands pass through."""
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0] == "verify" and (len(argv) == 1 or argv[1] not in SUITES):
        argv.insert(1, "cactus")
    return main(argv, prog="cactus")


if __name__ == "__main__":
    sys.exit(main())
