"""Deterministic random elements for the property suites.

Endpoints live on the grid ``Z / denominator``.  Intervals are laid out left
to right and every endpoint is pushed just far enough to respect the
separation constraints already in force (same parity, distinct labels and, for
mirror classes, the reflected copies), so nothing is rejection-sampled.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import floor

from .config import normalize_config
from .errors import InfeasibleSpec
from .intervals import (MINUS, PLUS, Interval, IntervalClass, IntervalSeq, MirrorClass,
                        Window, eps_separated, validate_sequence)
from .pam import BASE
from .scanning import SIGMA, SuspensionPoint
from .tilde import TildeElem, label_pam

KINDS = ("iclass", "mirror", "tildeI", "tildeE", "suspension-config", "sequence")
MIRROR_MODES = ("central", "short", "middle", "far")


@dataclass(frozen=True)
class GenSpec:
    seed: int = 0
    max_intervals: int = 3
    alphabet_size: int = 2
    dim: int = 1
    denominator: int = 8
    eps_range: tuple = (Fraction(1, 4), Fraction(1))
    span_range: tuple = (Fraction(2), Fraction(6))
    max_points: int = 3
    min_intervals: int = 0

    def __post_init__(self):
        if self.denominator < 1 or self.max_intervals < 0 or self.alphabet_size < 1:
            raise InfeasibleSpec("denominator, alphabet size must be positive")
        if self.min_intervals > self.max_intervals:
            raise InfeasibleSpec("min_intervals exceeds max_intervals")
        lo, hi = (Fraction(x) for x in self.eps_range)
        if not 0 < lo <= hi <= 1:
            raise InfeasibleSpec(f"eps range {self.eps_range} not inside (0, 1]")
        if not self._grid(lo, hi):
            raise InfeasibleSpec(f"no multiple of 1/{self.denominator} in the eps range")
        if not 0 < Fraction(self.span_range[0]) <= Fraction(self.span_range[1]):
            raise InfeasibleSpec(f"bad span range {self.span_range}")

    @property
    def step(self) -> Fraction:
        return Fraction(1, self.denominator)

    @property
    def alphabet(self) -> tuple:
        return tuple(chr(ord("a") + i) for i in range(self.alphabet_size))

    def _grid(self, lo, hi) -> list:
        d = self.denominator
        return [Fraction(n, d) for n in range(-floor(-lo * d), floor(hi * d) + 1)]

    def rng(self, salt: str = "") -> random.Random:
        return random.Random(f"{self.seed}:{salt}")


def _pick(rng: random.Random, values):
    return values[rng.randrange(len(values))]


def _next_grid(x: Fraction, step: Fraction) -> Fraction:
    """Least grid point strictly above ``x``."""
    return (floor(x / step) + 1) * step


def _ceil_grid(x: Fraction, step: Fraction) -> Fraction:
    return -floor(-x / step) * step


class _Layout:
    """Incremental placement of separated endpoints."""

    def __init__(self, eps, step, mirror: bool):
        self.eps, self.step, self.mirror = eps, step, mirror
        self.ends: list = []      # (position, parity)
        self.spans: list = []     # (left, right, label)

    def lower_bound(self, q: int, label: str, opening: bool) -> Fraction:
        eps = self.eps
        lo = Fraction(-10 ** 9)
        for w, p in self.ends:
            if p == q:
                lo = max(lo, w + eps)
            if self.mirror and p == -q:
                lo = max(lo, eps - w)
        if opening:
            for l, r, x in self.spans:
                if x != label:
                    lo = max(lo, r + eps)
                    if self.mirror:
                        lo = max(lo, eps - l)
        return lo

    def add_end(self, u, q):
        self.ends.append((u, q))


def _layout_items(rng, spec: GenSpec, eps, limit, k, mirror: bool, mode=None) -> list | None:
    """``k`` reduced, eps-separated items whose endpoints all lie below ``limit``;
    ``None`` when they do not fit."""
    step = spec.step
    lay = _Layout(eps, step, mirror)
    items = []
    prev_right = None
    for i in range(k):
        x = _pick(rng, spec.alphabet)
        pl, pr = _pick(rng, (PLUS, MINUS)), _pick(rng, (PLUS, MINUS))
        if i == 0 and mirror:
            left = _first_left(rng, eps, step, mode)
            if left is None:
                return None
            if left == 0:
                pl = PLUS
        else:
            base = _next_grid(eps / 2, step) if prev_right is None else prev_right + step
            base = max(base, _ceil_grid(lay.lower_bound(pl, x, True), step))
            left = base + step * rng.randrange(3)
        lay.add_end(left, pl)
        lay.spans.append((left, left, x))
        right = max(left + step, _ceil_grid(lay.lower_bound(pr, x, False), step))
        right += step * rng.randrange(3)
        lay.add_end(right, pr)
        lay.spans[-1] = (left, right, x)
        if not right < limit:
            return None
        items.append((Interval(left, right, pl, pr), x))
        prev_right = right
    return items


def _first_left(rng, eps, step, mode):
    if mode == "central":
        return Fraction(0)
    if mode == "short":
        choices = [n * step for n in range(1, floor(eps / 2 / step) + 1) if n * step < eps / 2]
    elif mode == "middle":
        choices = [n * step for n in range(floor(eps / 2 / step), floor(eps / step) + 1)
                   if eps / 2 <= n * step < eps]
    else:
        choices = [eps + n * step for n in range(0, floor(eps / step) + 1)]
    return _pick(rng, choices) if choices else None


def _draw_eps_span(rng, spec: GenSpec):
    eps = _pick(rng, spec._grid(*spec.eps_range))
    spans = spec._grid(*spec.span_range) or [Fraction(spec.span_range[1])]
    return eps, _pick(rng, spans)


def _fit(rng, spec: GenSpec, eps, limit, mirror: bool, mode=None) -> list:
    k = rng.randint(spec.min_intervals, spec.max_intervals)
    state = rng.getstate()
    for kk in range(k, spec.min_intervals - 1, -1):
        rng.setstate(state)
        items = _layout_items(rng, spec, eps, limit, kk, mirror, mode)
        if items is not None:
            return items
    raise InfeasibleSpec(f"{spec.min_intervals} intervals do not fit below {limit} at eps={eps}")


def gen_iclass(rng, spec: GenSpec, eps=None, span=None) -> IntervalClass:
    if eps is None or span is None:
        eps, span = _draw_eps_span(rng, spec)
    items = _fit(rng, spec, eps, span - eps / 2, False)
    xi = IntervalClass(Window.half(span), tuple(items))
    assert eps_separated(xi, eps)
    return xi


def gen_mirror(rng, spec: GenSpec, eps=None, span=None, mode=None) -> MirrorClass:
    if eps is None or span is None:
        eps, span = _draw_eps_span(rng, spec)
    mode = _pick(rng, MIRROR_MODES) if mode is None else mode
    items = _fit(rng, spec, eps, span - eps / 2, True, mode)
    mu = MirrorClass(span, tuple(items))
    assert eps_separated(mu, eps)
    return mu


def _points(rng, spec: GenSpec) -> list:
    if spec.dim == 0:
        n = min(1, rng.randint(0, spec.max_points))
        return [()] * n
    n = rng.randint(0, spec.max_points)
    coords = [Fraction(i, 2) for i in range(-4, 5)]
    pts = set()
    while len(pts) < n:
        pts.add(tuple(_pick(rng, coords) for _ in range(spec.dim)))
    return sorted(pts)


def gen_tilde(rng, spec: GenSpec, kind: str) -> TildeElem:
    eps, span = _draw_eps_span(rng, spec)
    make = gen_iclass if kind == "I" else gen_mirror
    items = [(v, make(rng, spec, eps, span)) for v in _points(rng, spec)]
    e = TildeElem(kind, normalize_config(items, label_pam(kind, eps, span), spec.dim), eps, span)
    return e.validated()


def gen_suspension_config(rng, spec: GenSpec):
    d = spec.denominator
    coords = [Fraction(n, d) for n in range(-d + 1, d)]
    items = [(v, SuspensionPoint(_pick(rng, coords), _pick(rng, spec.alphabet)))
             for v in _points(rng, spec)]
    return normalize_config(items, SIGMA, spec.dim)


def gen_sequence(rng, spec: GenSpec, span=Fraction(4)) -> IntervalSeq:
    """A valid, usually unreduced, sequence: touching pairs, degenerate and
    basepoint-labelled items all occur."""
    step = spec.step
    window = Window.half(span)
    labels = spec.alphabet + (BASE,)
    for _ in range(1000):
        k = rng.randint(0, spec.max_intervals)
        items, pos = [], step * (1 + rng.randrange(3))
        for i in range(k):
            touch = bool(items) and rng.random() < 0.5
            if touch:
                J0, x = items[-1]
                left, pl = J0.right, -J0.p_right
            else:
                if items:
                    pos = items[-1][0].right + step * (1 + rng.randrange(3))
                left, pl, x = pos, _pick(rng, (PLUS, MINUS)), _pick(rng, labels)
            if rng.random() < 0.25:
                right, pr = left, -pl
            else:
                pr = _pick(rng, (PLUS, MINUS))
                right = left + step * (1 + rng.randrange(4))
            items.append((Interval(left, right, pl, pr), x))
        seq = IntervalSeq(window, tuple(items))
        if validate_sequence(seq):
            return seq
    raise InfeasibleSpec("could not place a valid sequence in the window")


def gen_random(spec: GenSpec, kind: str, index: int = 0):
    """Element number ``index`` of the stream for ``(spec.seed, kind)``."""
    rng = spec.rng(f"{kind}:{index}")
    if kind == "iclass":
        return gen_iclass(rng, spec)
    if kind == "mirror":
        return gen_mirror(rng, spec)
    if kind == "tildeI":
        return gen_tilde(rng, spec, "I")
    if kind == "tildeE":
        return gen_tilde(rng, spec, "E")
    if kind == "suspension-config":
        return gen_suspension_config(rng, spec)
    if kind == "sequence":
        return gen_sequence(rng, spec)
    raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")
