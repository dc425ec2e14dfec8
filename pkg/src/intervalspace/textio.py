"""Canonical text forms and their parser.

    C{ [1/2,0] : a ; [1,1] : b }            configuration (empty: C<d>{ })
    I(0,3){ [1 2 + -] a ; [5/2 11/4 - +] b } interval class on a window
    S(0,3){ ... }                           raw, possibly unreduced sequence
    E(3){ [0 1 + +] a }                     mirror class, right half only
    ~I[eps=1/2 s=3 d=1] C{ ... }            thickened element (also ~E)
    [1/2]^a   *   +1   (a,-1)               suspension, base, sign, smash labels

``format_element(parse(text))`` reproduces ``text`` exactly whenever ``text``
was itself produced by :func:`format_element`.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .config import PointConfig, normalize_config
from .errors import IntervalSpaceError, ParseError
from .intervals import (Interval, IntervalClass, IntervalPam, IntervalSeq, MirrorClass,
                        MirrorPam, Window, _reduce_items, is_valid_items)
from .pam import BASE, PointedSetPam, SignPam, SmashPam
from .scanning import SIGMA, SuspensionPoint
from .tilde import TildeElem, label_pam

_TOKEN = re.compile(r"""\s*(?:
    (?P<num>[+-]?\d+(?:/\d+)?)
  | (?P<inf>[+-]?inf\b)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<punct>[~{}\[\]();:,^=<>*+-])
)""", re.VERBOSE)


def _tokenize(text: str) -> list:
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        kind = m.lastgroup
        out.append((kind, m.group(kind)))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self, k: int = 0):
        j = self.i + k
        return self.toks[j] if j < len(self.toks) else (None, None)

    def take(self, value=None, kind=None) -> str:
        tk, tv = self.peek()
        if tk is None or (value is not None and tv != value) or (kind is not None and tk != kind):
            want = value or kind
            raise ParseError(f"expected {want!r}, found {tv!r} at token {self.i}")
        self.i += 1
        return tv

    def at(self, value) -> bool:
        return self.peek()[1] == value

    def done(self) -> bool:
        return self.i >= len(self.toks)

    # numbers -------------------------------------------------------------
    def rational(self) -> Fraction:
        return Fraction(self.take(kind="num"))

    def bound(self):
        if self.peek()[0] == "inf":
            self.take()
            return None
        return self.rational()

    def parity(self) -> int:
        v = self.take()
        if v not in "+-":
            raise ParseError(f"parity must be + or -, found {v!r}")
        return 1 if v == "+" else -1

    def symbol(self) -> str:
        if self.at("*"):
            self.take()
            return BASE
        return self.take(kind="name")

    # elements ----------------------------------------------------------
    def element(self):
        tk, tv = self.peek()
        if tv == "~":
            return self.tilde()
        if tv == "C" and self.peek(1)[1] in ("{", "<"):
            return self.config()
        return self.label()

    def label(self):
        tk, tv = self.peek()
        nxt = self.peek(1)[1]
        if tv in ("I", "S") and nxt == "(":
            return self.interval_block()
        if tv == "E" and nxt == "(":
            return self.mirror()
        if tv == "[":
            self.take("[")
            c = self.rational()
            self.take("]")
            self.take("^")
            return SuspensionPoint(c, self.symbol())
        if tv == "(":
            self.take("(")
            x = self.symbol()
            self.take(",")
            c = self.sign()
            self.take(")")
            return BASE if c == 0 or x == BASE else (x, c)
        if tk == "num":
            return self.sign()
        return self.symbol()

    def sign(self) -> int:
        v = Fraction(self.take(kind="num"))
        if v not in (-1, 0, 1):
            raise ParseError(f"sign label must be -1, 0 or +1, found {v}")
        return int(v)

    def items(self) -> tuple:
        self.take("{")
        out = []
        while not self.at("}"):
            self.take("[")
            u, v = self.rational(), self.rational()
            p, q = self.parity(), self.parity()
            self.take("]")
            try:
                J = Interval(u, v, p, q)
            except ValueError as exc:
                raise ParseError(str(exc)) from exc
            out.append((J, self.symbol()))
            if not self.at("}"):
                self.take(";")
        self.take("}")
        return tuple(out)

    def interval_block(self):
        head = self.take()
        self.take("(")
        lo = self.bound()
        self.take(",")
        hi = self.bound()
        self.take(")")
        window = Window(lo, hi)
        seq = IntervalSeq(window, self.items())
        if head == "S":
            return seq
        if not is_valid_items(window, seq.items):
            raise ParseError(f"not a valid interval sequence in {window}")
        return IntervalClass(window, _reduce_items(seq.items))

    def mirror(self) -> MirrorClass:
        self.take("E")
        self.take("(")
        s = self.rational()
        self.take(")")
        items = self.items()
        if not is_valid_items(Window(None, s), items):
            raise ParseError("not a valid right half")
        return MirrorClass(s, _reduce_items(items))

    def point(self) -> tuple:
        self.take("[")
        coords = []
        while not self.at("]"):
            coords.append(self.rational())
            if not self.at("]"):
                self.take(",")
        self.take("]")
        return tuple(coords)

    def config(self, pam=None, dim=None) -> PointConfig:
        self.take("C")
        if self.at("<"):
            self.take("<")
            dim = int(self.take(kind="num"))
            self.take(">")
        self.take("{")
        raw = []
        while not self.at("}"):
            v = self.point()
            self.take(":")
            raw.append((v, self.label()))
            if not self.at("}"):
                self.take(";")
        self.take("}")
        if raw:
            dims = {len(v) for v, _ in raw}
            if len(dims) != 1 or (dim is not None and dims != {dim}):
                raise ParseError("points of different dimensions")
            dim = dims.pop()
        dim = 1 if dim is None else dim
        if pam is None:
            pam = pam_for_labels([a for _, a in raw])
        raw = [(v, pam.zero if a == BASE else a) for v, a in raw]
        try:
            return normalize_config(raw, pam, dim)
        except IntervalSpaceError as exc:
            raise ParseError(f"configuration does not normalize: {exc}") from exc

    def tilde(self) -> TildeElem:
        self.take("~")
        kind = self.take()
        if kind not in ("I", "E"):
            raise ParseError(f"thickened kind must be I or E, found {kind!r}")
        self.take("[")
        params = {}
        while not self.at("]"):
            key = self.take(kind="name")
            self.take("=")
            params[key] = self.rational()
        self.take("]")
        try:
            eps, span, dim = params["eps"], params["s"], int(params.get("d", 1))
        except KeyError as exc:
            raise ParseError(f"missing parameter {exc}") from exc
        cfg = self.config(label_pam(kind, eps, span), dim)
        e = TildeElem(kind, cfg, eps, span)
        bad = e.problems()
        if bad:
            raise ParseError("; ".join(bad))
        return e


def pam_for_labels(labels: list):
    """Guess the label PAM of a configuration from its (non-basepoint) labels."""
    labels = [a for a in labels if a != BASE]
    if not labels:
        return PointedSetPam()
    kinds = {type(a) for a in labels}
    if len(kinds) > 1:
        raise ParseError(f"mixed label types {sorted(k.__name__ for k in kinds)}")
    a = labels[0]
    if isinstance(a, IntervalClass):
        windows = {b.window for b in labels}
        if len(windows) > 1:
            raise ParseError("interval labels on different windows")
        return IntervalPam(a.window)
    if isinstance(a, MirrorClass):
        widths = {b.half_width for b in labels}
        if len(widths) > 1:
            raise ParseError("mirror labels of different half widths")
        return MirrorPam(a.half_width)
    if isinstance(a, SuspensionPoint):
        return SIGMA
    if isinstance(a, int):
        return SignPam()
    if isinstance(a, tuple):
        return SmashPam(sorted({x for x, _ in labels}))
    return PointedSetPam(sorted(set(labels)))


def parse(text: str):
    p = _Parser(text)
    out = p.element()
    if not p.done():
        raise ParseError(f"trailing input at token {p.i}: {p.peek()[1]!r}")
    return out


# -- printing ----------------------------------------------------------------------

def _q(x) -> str:
    return str(Fraction(x))


def _par(p: int) -> str:
    return "+" if p > 0 else "-"


def _items(items) -> str:
    body = " ; ".join(f"[{_q(J.left)} {_q(J.right)} {_par(J.p_left)} {_par(J.p_right)}] {x}"
                      for J, x in items)
    return "{ " + body + " }" if body else "{ }"


def _bound(b, sign: str) -> str:
    return f"{sign}inf" if b is None else _q(b)


def format_label(a) -> str:
    if isinstance(a, (IntervalClass, IntervalSeq)):
        head = "I" if isinstance(a, IntervalClass) else "S"
        w = a.window
        return f"{head}({_bound(w.lo, '-')},{_bound(w.hi, '')}){_items(a.items)}"
    if isinstance(a, MirrorClass):
        return f"E({_q(a.half_width)}){_items(a.items)}"
    if isinstance(a, SuspensionPoint):
        return BASE if a.is_base else f"[{_q(a.coord)}]^{a.label}"
    if isinstance(a, bool):
        raise ParseError("booleans are not labels")
    if isinstance(a, int):
        return f"{a:+d}" if a else "0"
    if isinstance(a, tuple):
        return f"({a[0]},{a[1]:+d})"
    if isinstance(a, str):
        return a
    raise ParseError(f"no text form for {type(a).__name__}")


def format_config(xi: PointConfig, with_dim: bool = True) -> str:
    if not xi.items:
        return f"C<{xi.dim}>{{ }}" if with_dim else "C{ }"
    body = " ; ".join("[" + ",".join(_q(c) for c in v) + "] : " + format_label(a)
                      for v, a in xi.items)
    return "C{ " + body + " }"


def format_element(x) -> str:
    if isinstance(x, TildeElem):
        return (f"~{x.kind}[eps={_q(x.eps)} s={_q(x.span)} d={x.dim}] "
                + format_config(x.config, with_dim=False))
    if isinstance(x, PointConfig):
        return format_config(x)
    return format_label(x)
