"""CSV tables of loops and small SVG pictures of elements.

Output is deterministic: rationals are written exactly in CSV and rounded to
three decimals in SVG coordinates.
"""
from __future__ import annotations

import csv
import io
from fractions import Fraction
from xml.sax.saxutils import escape

from .config import PointConfig
from .errors import UnsupportedKind
from .intervals import IntervalClass, IntervalSeq, MirrorClass, m_items
from .scanning import Base, ConfigLoop, PiecewiseLoop, Ramp
from .textio import format_label
from .tilde import TildeElem

WIDTH, HEIGHT, PAD = 640, 200, 30


def sample_times(start, end, breakpoints, grid: int = 16) -> list:
    start, end = Fraction(start), Fraction(end)
    ts = set(breakpoints) | {start, end}
    if end > start and grid > 0:
        ts |= {start + (end - start) * i / grid for i in range(grid + 1)}
    return sorted(ts)


def loop_csv(f, grid: int = 16) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if isinstance(f, ConfigLoop):
        w.writerow(["t", "point", "coord", "label"])
        for t in sample_times(f.start, f.end, f.breakpoints, grid):
            cfg = f(t)
            if not cfg.items:
                w.writerow([t, "", "*", "*"])
            for v, y in cfg.items:
                w.writerow([t, " ".join(str(c) for c in v), y.coord, y.label])
    else:
        w.writerow(["t", "coord", "label"])
        for t in sample_times(f.start, f.end, f.breakpoints, grid):
            y = f(t)
            w.writerow([t, "*" if y.is_base else y.coord, y.label])
    return buf.getvalue()


def _fmt(x) -> str:
    return f"{float(x):.3f}"


class _Svg:
    def __init__(self, title: str):
        self.parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" '
                      f'height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
                      f"<title>{escape(title)}</title>"]

    def add(self, s: str):
        self.parts.append(s)

    def line(self, x1, y1, x2, y2, stroke="black", width=1):
        self.add(f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
                 f'stroke="{stroke}" stroke-width="{width}"/>')

    def dot(self, x, y, filled: bool):
        fill = "black" if filled else "white"
        self.add(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="4" fill="{fill}" stroke="black"/>')

    def text(self, x, y, s: str, size=11):
        self.add(f'<text x="{_fmt(x)}" y="{_fmt(y)}" font-size="{size}" '
                 f'font-family="monospace">{escape(s)}</text>')

    def done(self) -> str:
        return "\n".join(self.parts + ["</svg>"]) + "\n"


def _scale(lo, hi):
    lo, hi = Fraction(lo), Fraction(hi)
    if hi == lo:
        hi = lo + 1
    return lambda u: PAD + (Fraction(u) - lo) * (WIDTH - 2 * PAD) / (hi - lo)


def _interval_svg(items, lo, hi, title: str) -> str:
    svg = _Svg(title)
    x = _scale(lo, hi)
    y = HEIGHT / 2
    svg.line(x(lo), y, x(hi), y, stroke="gray")
    svg.text(x(lo) - 4, y + 20, str(lo))
    svg.text(x(hi) - 4, y + 20, str(hi))
    for J, lab in items:
        svg.line(x(J.left), y, x(J.right), y, width=4)
        svg.dot(x(J.left), y, J.p_left > 0)
        svg.dot(x(J.right), y, J.p_right > 0)
        svg.text((x(J.left) + x(J.right)) / 2, y - 12, lab)
    return svg.done()


def _config_svg(cfg: PointConfig, title: str) -> str:
    svg = _Svg(title)
    pts = cfg.points
    if cfg.dim > 2:
        raise UnsupportedKind("only configurations in dimension <= 2 are drawn")
    xs = [v[0] for v in pts if v] or [0]
    ys = [v[1] for v in pts if len(v) > 1] or [0]
    sx = _scale(min(xs) - 1, max(xs) + 1)
    sy = _scale(min(ys) - 1, max(ys) + 1)
    if cfg.dim < 2:
        svg.line(PAD, HEIGHT / 2, WIDTH - PAD, HEIGHT / 2, stroke="gray")
    for v, a in cfg.items:
        px = sx(v[0]) if v else WIDTH / 2
        py = HEIGHT / 2 if len(v) < 2 else HEIGHT - sy(v[1]) * (HEIGHT - 2 * PAD) / (WIDTH - 2 * PAD)
        svg.dot(px, py, True)
        svg.text(px + 6, py - 6, format_label(a), size=9)
    return svg.done()


def _loop_svg(f: PiecewiseLoop, title: str) -> str:
    svg = _Svg(title)
    x = _scale(f.start, f.end)
    y = lambda c: HEIGHT / 2 - float(c) * (HEIGHT / 2 - PAD)
    svg.line(x(f.start), y(0), x(f.end), y(0), stroke="gray")
    for a, b, seg in f.pieces():
        if isinstance(seg, Base):
            svg.line(x(a), y(1), x(b), y(1), stroke="lightgray", width=2)
            continue
        if isinstance(seg, Ramp):
            ca, cb = seg.slope * a + seg.intercept, seg.slope * b + seg.intercept
        else:
            ca = cb = seg.value.coord
        svg.line(x(a), y(ca), x(b), y(cb), width=2)
        svg.text((x(a) + x(b)) / 2, y(max(ca, cb)) - 6, seg.at((a + b) / 2).label, size=9)
    return svg.done()


def render(obj, fmt: str, grid: int = 16) -> bytes:
    if fmt == "csv":
        if isinstance(obj, (PiecewiseLoop, ConfigLoop)):
            return loop_csv(obj, grid).encode()
        raise UnsupportedKind(f"CSV output is only defined for loops, not {type(obj).__name__}")
    if fmt != "svg":
        raise UnsupportedKind(f"unknown format {fmt!r}")
    if isinstance(obj, (IntervalClass, IntervalSeq)):
        w = obj.window
        ends = [e for J, _ in obj.items for e in (J.left, J.right)] or [0, 1]
        lo = w.lo if w.lo is not None else min(ends) - 1
        hi = w.hi if w.hi is not None else max(ends) + 1
        return _interval_svg(obj.items, lo, hi, format_label(obj)).encode()
    if isinstance(obj, MirrorClass):
        s = obj.half_width
        return _interval_svg(m_items(obj), -s, s, format_label(obj)).encode()
    if isinstance(obj, TildeElem):
        return _config_svg(obj.config, f"~{obj.kind} eps={obj.eps} s={obj.span}").encode()
    if isinstance(obj, PointConfig):
        return _config_svg(obj, "configuration").encode()
    if isinstance(obj, PiecewiseLoop):
        return _loop_svg(obj, "loop").encode()
    raise UnsupportedKind(f"no picture for {type(obj).__name__}")
