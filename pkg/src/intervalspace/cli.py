"""Command line front end.  Elements are given as arguments in the canonical
text format, or one per line on stdin when no argument is given."""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .config import PointConfig, config_sum
from .errors import IntervalSpaceError
from .generators import KINDS, GenSpec, gen_random
from .homotopy import (SAMPLE_TIMES, audit, bigH, contract_H, deform_base, deform_total,
                       k_homotopy)
from .intervals import (IntervalClass, IntervalSeq, MirrorClass, class_sum, eps_separated,
                        mirror_expand, mirror_sum, reduce)
from .oracle import oracle_reduce_bfs
from .render import render
from .scanning import alpha1, alpha_n, scan_p
from .suites import SUITES, run_property_suite
from .textio import format_element, parse
from .tilde import TildeElem, tilde_sum


def _frac(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _inputs(args) -> list:
    texts = args.elements or [line for line in sys.stdin.read().splitlines() if line.strip()]
    return [parse(t) for t in texts]


def _one(args):
    xs = _inputs(args)
    if len(xs) != 1:
        raise IntervalSpaceError(f"expected one element, got {len(xs)}")
    return xs[0]


def _out(x):
    print(format_element(x))


def _need_eps(args, x):
    if isinstance(x, TildeElem):
        return x.eps
    if args.eps is None:
        raise IntervalSpaceError("--eps is required for a bare interval class")
    return args.eps


def _loop(args, x):
    if isinstance(x, TildeElem):
        if x.kind != "I":
            raise IntervalSpaceError("scan a ~E element with `project`")
        return alpha_n(x)
    eps = _need_eps(args, x)
    if isinstance(x, MirrorClass):
        x = mirror_expand(x)
    if not isinstance(x, IntervalClass):
        raise IntervalSpaceError(f"cannot scan {type(x).__name__}")
    return alpha1(x, eps)


# -- subcommands -------------------------------------------------------------------

def cmd_normalize(args):
    for x in _inputs(args):
        _out(reduce(x) if isinstance(x, IntervalSeq) else x)


def cmd_sum(args):
    xs = _inputs(args)
    if not xs:
        raise IntervalSpaceError("nothing to sum")
    acc = xs[0]
    for y in xs[1:]:
        if isinstance(acc, TildeElem):
            acc = tilde_sum(acc, y)
        elif isinstance(acc, MirrorClass):
            acc = mirror_sum(acc, y)
        elif isinstance(acc, PointConfig):
            acc = config_sum(acc, y)
        else:
            acc = class_sum(reduce(acc) if isinstance(acc, IntervalSeq) else acc, y)
    _out(acc)


def cmd_separated(args):
    for x in _inputs(args):
        if isinstance(x, TildeElem):
            print("true" if x.is_valid() else "false")
        else:
            print("true" if eps_separated(x, _need_eps(args, x)) else "false")


def cmd_scan(args):
    sys.stdout.write(render(_loop(args, _one(args)), "csv", args.grid).decode())


def cmd_eval(args):
    _out(_loop(args, _one(args))(args.t))


def cmd_project(args):
    x = _one(args)
    if not isinstance(x, TildeElem) or x.kind != "E":
        raise IntervalSpaceError("project expects a ~E element")
    _out(scan_p(x))


def _path(args, x):
    name = args.name
    if name == "contract":
        if not isinstance(x, MirrorClass):
            raise IntervalSpaceError("contract expects a mirror class E(1){...}")
        return lambda t: contract_H(x, t)
    if name == "bigH":
        return lambda t: bigH(x, t, validate=not args.audit)
    if name == "k":
        if args.z is None:
            raise IntervalSpaceError("k needs --z, a configuration in the suspension")
        z = parse(args.z)
        return lambda t: k_homotopy(z, x, t, validate=not args.audit)
    if name == "deform":
        if isinstance(x, PointConfig):
            return lambda t: deform_base(x, t)
        return lambda t: deform_total(x, t)
    raise IntervalSpaceError(f"unknown homotopy {name!r}")


def cmd_homotopy(args):
    x = _one(args)
    path = _path(args, x)
    if not args.audit:
        if args.t is None:
            raise IntervalSpaceError("--t is required unless --audit is given")
        _out(path(args.t))
        return 0
    if args.name in ("contract",) or not isinstance(path(0), TildeElem):
        bad = []
        for t in SAMPLE_TIMES:
            try:
                path(t)
            except (IntervalSpaceError, ValueError) as exc:
                bad.append((t, [str(exc)]))
    else:
        bad = audit(path)
    bad = dict(bad)
    for t in SAMPLE_TIMES:
        if t in bad:
            print(f"t={t} INVALID {'; '.join(bad[t])}")
        else:
            print(f"t={t} ok")
    return 1 if bad else 0


def _spec(args) -> GenSpec:
    return GenSpec(seed=args.seed, max_intervals=args.max_intervals,
                   alphabet_size=args.alphabet, dim=args.dim, denominator=args.denominator)


def cmd_gen(args):
    spec = _spec(args)
    for i in range(args.count):
        _out(gen_random(spec, args.kind, i))


def cmd_oracle(args):
    x = _one(args)
    if isinstance(x, IntervalClass):
        x = IntervalSeq(x.window, x.items)
    for s in sorted(oracle_reduce_bfs(x), key=format_element):
        _out(s)


def cmd_check(args):
    names = list(SUITES) if args.all else (args.suite or [])
    report = run_property_suite(names, _spec(args), args.trials)
    if report.results:
        print(report.text())
    return 0 if report.passed else 1


def cmd_render(args):
    x = _one(args)
    if args.format == "csv":
        data = render(_loop(args, x), "csv", args.grid)
    else:
        data = render(x, "svg", args.grid)
    if args.output:
        with open(args.output, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.write(data.decode())


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="intervalspace", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    def cmd(name, fn, help_, elements=True):
        p = sub.add_parser(name, help=help_)
        if elements:
            p.add_argument("elements", nargs="*", help="elements in canonical text (default: stdin)")
        p.set_defaults(fn=fn)
        return p

    def eps(p):
        p.add_argument("--eps", type=_frac, help="thickness for bare interval classes")

    cmd("normalize", cmd_normalize, "parse and print in canonical form")
    cmd("sum", cmd_sum, "PAM sum of the given elements")
    eps(cmd("separated", cmd_separated, "test eps-separation"))
    p = cmd("scan", cmd_scan, "scanned loop as CSV")
    eps(p)
    p.add_argument("--grid", type=int, default=16)
    p = cmd("eval", cmd_eval, "evaluate the scanned loop at --t")
    eps(p)
    p.add_argument("--t", type=_frac, required=True)
    cmd("project", cmd_project, "scan_p of a ~E element")
    p = cmd("homotopy", cmd_homotopy, "evaluate a homotopy")
    p.add_argument("--name", choices=("contract", "bigH", "k", "deform"), required=True)
    p.add_argument("--t", type=_frac)
    p.add_argument("--z", help="suspension configuration for the k homotopy")
    p.add_argument("--audit", action="store_true", help="validity report at the sampled times")

    def gen_opts(p):
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--max-intervals", type=int, default=3)
        p.add_argument("--alphabet", type=int, default=2)
        p.add_argument("--dim", type=int, default=1)
        p.add_argument("--denominator", type=int, default=8)

    p = cmd("gen", cmd_gen, "deterministic random elements", elements=False)
    gen_opts(p)
    p.add_argument("--kind", choices=KINDS, default="iclass")
    p.add_argument("--count", type=int, default=1)
    cmd("oracle", cmd_oracle, "all irreducibles reachable by single rewrites")
    p = cmd("check", cmd_check, "run property suites", elements=False)
    gen_opts(p)
    p.add_argument("--suite", action="append", choices=list(SUITES))
    p.add_argument("--all", action="store_true")
    p.add_argument("--trials", type=int, help="override every suite's trial count")
    p = cmd("render", cmd_render, "CSV of a scanned loop or SVG of an element")
    eps(p)
    p.add_argument("--format", choices=("csv", "svg"), required=True)
    p.add_argument("--grid", type=int, default=16)
    p.add_argument("-o", "--output")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        rc = args.fn(args)
    except (IntervalSpaceError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return rc or 0


if __name__ == "__main__":
    sys.exit(main())
