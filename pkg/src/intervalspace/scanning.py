"""Scanning interval classes into piecewise-linear loops in the suspension.

Each endpoint ``u_i`` of an eps-separated class gets a closed window ``N_i``
around it; on ``N_i`` the loop ramps linearly through the circle coordinate,
between windows it is constant.  Everything is exact: loops store rational
slopes and intercepts, so welding identities are checked with ``==``.
"""
from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .config import PointConfig, interchange_eval, normalize_config
from .errors import LengthMismatch, NotSeparated, NotSummable, OutOfDomain
from .intervals import (IntervalClass, MirrorClass, eps_separated, in_a,
                        mirror_expand)
from .pam import BASE, Pam
from .tilde import TildeElem

ONE = Fraction(1)


@dataclass(frozen=True, order=True)
class SuspensionPoint:
    """``[coord] ^ label`` in ``S^1 ^ X`` with ``S^1 = [-1, 1] / {-1 ~ 1}``.

    Points with ``|coord| = 1`` or label ``*`` all collapse to the basepoint,
    stored canonically as ``(1, "*")``.
    """

    coord: Fraction
    label: str

    def __post_init__(self):
        c = Fraction(self.coord)
        if not -1 <= c <= 1:
            raise ValueError(f"suspension coordinate {c} outside [-1, 1]")
        if abs(c) == 1 or self.label == BASE:
            c, lab = ONE, BASE
        else:
            lab = self.label
        object.__setattr__(self, "coord", c)
        object.__setattr__(self, "label", lab)

    @property
    def is_base(self) -> bool:
        return self.label == BASE


SIGMA_BASE = SuspensionPoint(ONE, BASE)


class SuspensionPam(Pam):
    """``Sigma X`` as a pointed space: a sum exists only with the basepoint."""

    zero = SIGMA_BASE

    def _summable(self, a, b):
        return False

    def __repr__(self):
        return "SuspensionPam()"


SIGMA = SuspensionPam()


# -- loop segments -----------------------------------------------------------

@dataclass(frozen=True)
class Base:
    def at(self, t) -> SuspensionPoint:
        return SIGMA_BASE


@dataclass(frozen=True)
class Const:
    value: SuspensionPoint

    def at(self, t) -> SuspensionPoint:
        return self.value


@dataclass(frozen=True)
class Ramp:
    """``t -> [slope * t + intercept] ^ label``."""

    slope: Fraction
    intercept: Fraction
    label: str

    def at(self, t) -> SuspensionPoint:
        return SuspensionPoint(self.slope * t + self.intercept, self.label)


def _segment_for(value: SuspensionPoint):
    return Base() if value.is_base else Const(value)


@dataclass(frozen=True)
class PiecewiseLoop:
    """A path ``[t_0, t_m] -> Sigma X``, affine in the circle coordinate on each
    piece ``[t_{j-1}, t_j]``."""

    breakpoints: tuple
    segments: tuple

    def __post_init__(self):
        bps = tuple(Fraction(t) for t in self.breakpoints)
        object.__setattr__(self, "breakpoints", bps)
        object.__setattr__(self, "segments", tuple(self.segments))
        if len(self.segments) != len(bps) - 1:
            raise ValueError("need exactly one segment per piece")
        if any(a >= b for a, b in zip(bps, bps[1:])):
            raise ValueError("breakpoints must increase strictly")

    @classmethod
    def constant(cls, start, end, value: SuspensionPoint = SIGMA_BASE) -> "PiecewiseLoop":
        start, end = Fraction(start), Fraction(end)
        if start == end:
            return cls((start,), ())
        return cls((start, end), (_segment_for(value),))

    @property
    def start(self) -> Fraction:
        return self.breakpoints[0]

    @property
    def end(self) -> Fraction:
        return self.breakpoints[-1]

    @property
    def length(self) -> Fraction:
        return self.end - self.start

    def piece_index(self, t) -> int:
        if not self.start <= t <= self.end:
            raise OutOfDomain(f"t={t} outside [{self.start}, {self.end}]")
        if not self.segments:
            return -1
        return max(0, min(bisect_left(self.breakpoints, t) - 1, len(self.segments) - 1))

    def __call__(self, t) -> SuspensionPoint:
        t = Fraction(t)
        j = self.piece_index(t)
        return SIGMA_BASE if j < 0 else self.segments[j].at(t)

    def pieces(self):
        """``(a, b, segment)`` triples."""
        return zip(self.breakpoints, self.breakpoints[1:], self.segments)

    def continuity_defects(self) -> list:
        """Breakpoints where neighbouring segments disagree, and ramps leaving [-1, 1]."""
        bad = []
        segs = self.segments
        for j in range(1, len(segs)):
            t = self.breakpoints[j]
            if segs[j - 1].at(t) != segs[j].at(t):
                bad.append(t)
        for a, b, seg in self.pieces():
            if isinstance(seg, Ramp):
                for t in (a, b):
                    c = seg.slope * t + seg.intercept
                    if not -1 <= c <= 1:
                        bad.append(t)
        return bad

    def simplified(self) -> "PiecewiseLoop":
        """Merge neighbouring pieces carrying the same segment; equal functions
        then have equal representations."""
        if not self.segments:
            return self
        bps, segs = [self.breakpoints[0]], []
        for _, b, seg in self.pieces():
            if segs and segs[-1] == seg:
                bps[-1] = b
            else:
                segs.append(seg)
                bps.append(b)
        return PiecewiseLoop(tuple(bps), tuple(segs))

    def restrict(self, a, b) -> "PiecewiseLoop":
        a, b = Fraction(a), Fraction(b)
        if not self.start <= a <= b <= self.end:
            raise OutOfDomain(f"[{a}, {b}] not inside [{self.start}, {self.end}]")
        if a == b:
            return PiecewiseLoop((a,), ())
        bps, segs = [a], []
        for lo, hi, seg in self.pieces():
            lo2, hi2 = max(lo, a), min(hi, b)
            if lo2 < hi2:
                if bps[-1] != lo2:
                    raise AssertionError("gap while restricting")
                bps.append(hi2)
                segs.append(seg)
        return PiecewiseLoop(tuple(bps), tuple(segs))


def eval_loop(f: PiecewiseLoop, t) -> SuspensionPoint:
    return f(t)


def loop_sum(f: PiecewiseLoop, g: PiecewiseLoop) -> PiecewiseLoop:
    """Pointwise sum in ``Omega Sigma X``: at each time at most one summand may
    be away from the basepoint."""
    if (f.start, f.end) != (g.start, g.end):
        raise LengthMismatch(f"[{f.start}, {f.end}] vs [{g.start}, {g.end}]")
    bps = sorted(set(f.breakpoints) | set(g.breakpoints))
    for t in bps:
        if not (f(t).is_base or g(t).is_base):
            raise NotSummable(f"both loops leave the basepoint at t={t}")
    segs = []
    for a, b in zip(bps, bps[1:]):
        mid = (a + b) / 2
        fv, gv = f(mid), g(mid)
        if not (fv.is_base or gv.is_base):
            raise NotSummable(f"both loops leave the basepoint at t={mid}")
        src = g if fv.is_base else f
        segs.append(src.segments[src.piece_index(mid)])
    return PiecewiseLoop(tuple(bps), tuple(segs)).simplified()


class LoopPam(Pam):
    """``Omega_s(Sigma X)`` on a fixed parameter domain."""

    def __init__(self, start, end):
        self.start, self.end = Fraction(start), Fraction(end)
        self.zero = PiecewiseLoop.constant(self.start, self.end)

    def is_zero(self, a) -> bool:
        return all(isinstance(s, Base) for s in a.segments)

    def _summable(self, a, b):
        try:
            loop_sum(a, b)
        except NotSummable:
            return False
        return True

    def _combine(self, a, b):
        return loop_sum(a, b)


# -- windows and the scanning map ---------------------------------------------

class WindowSystem(NamedTuple):
    windows: tuple     # (lo, hi) pairs, one per endpoint
    endpoints: tuple   # u_1 .. u_2k
    parities: tuple    # p_1 .. p_2k
    labels: tuple      # label of the interval each endpoint belongs to
    eps: Fraction

    def value(self, i: int, t) -> SuspensionPoint:
        """The ramp formula attached to window ``i`` (0-based) evaluated at ``t``."""
        sign = -1 if i % 2 == 0 else 1  # (-1)^(i+1) for the 1-based index i+1
        c = self.parities[i] * ((t - self.endpoints[i]) / self.eps + Fraction(sign, 2))
        return SuspensionPoint(c, self.labels[i])


def windows(xi: IntervalClass, eps) -> WindowSystem:
    eps = Fraction(eps)
    if not eps_separated(xi, eps):
        raise NotSeparated(f"class is not {eps}-separated")
    half = eps / 2
    ends = xi.endpoints
    u = tuple(e for e, _ in ends)
    p = tuple(q for _, q in ends)
    labels = tuple(x for _, x in xi.items for _ in (0, 1))
    n = len(u)
    ws = []
    for i in range(n):
        lo = u[i] - half if i == 0 else max(u[i] - half, u[i - 1] + half)
        hi = u[i] + half if i == n - 1 else min(u[i] + half, u[i + 1] - half)
        ws.append((lo, hi))
    return WindowSystem(tuple(ws), u, p, labels, eps)


def alpha1(xi: IntervalClass, eps) -> PiecewiseLoop:
    """The scanning map on one eps-separated class; the loop lives on the
    closure of the class's (finite) window."""
    w = xi.window
    if not w.finite:
        raise OutOfDomain("scanning needs a finite window")
    ws = windows(xi, eps)
    bps = [w.lo]
    segs: list = []

    def push(b, seg):
        if b > bps[-1]:
            bps.append(b)
            segs.append(seg)

    gap_value = SIGMA_BASE
    for i, (lo, hi) in enumerate(ws.windows):
        push(lo, _segment_for(gap_value))
        p_i = ws.parities[i]
        sign = -1 if i % 2 == 0 else 1
        slope = p_i / eps
        intercept = p_i * (-ws.endpoints[i] / eps + Fraction(sign, 2))
        push(hi, Ramp(slope, intercept, ws.labels[i]))
        gap_value = ws.value(i, hi)
    push(w.hi, _segment_for(gap_value))
    return PiecewiseLoop(tuple(bps), tuple(segs)).simplified()


class ConfigLoop:
    """A loop (or path) in ``C(R^d, Sigma X)`` given by a configuration whose
    labels are loops on a common domain."""

    def __init__(self, config: PointConfig, start, end):
        self.config = config
        self.start, self.end = Fraction(start), Fraction(end)

    def __call__(self, t) -> PointConfig:
        t = Fraction(t)
        if not self.start <= t <= self.end:
            raise OutOfDomain(f"t={t} outside [{self.start}, {self.end}]")
        return interchange_eval(self.config, t, SIGMA)

    @property
    def breakpoints(self) -> tuple:
        pts = {self.start, self.end}
        for l in self.config.labels:
            pts.update(l.breakpoints)
        return tuple(sorted(pts))


def alpha_n(e: TildeElem) -> ConfigLoop:
    if e.kind != "I":
        raise ValueError("alpha_n expects an I-kind element")
    pam = LoopPam(0, e.span)
    cfg = normalize_config(((v, alpha1(xi, e.eps)) for v, xi in e.config.items), pam, e.dim)
    return ConfigLoop(cfg, 0, e.span)


def scan_label(mu: MirrorClass, eps) -> SuspensionPoint:
    """``p^eps_s``: the symmetric scan of a mirror class evaluated at 0."""
    if not mu.items:
        return SIGMA_BASE
    return alpha1(mirror_expand(mu), eps)(0)


def scan_label_closed_form(mu: MirrorClass, eps) -> SuspensionPoint:
    """``[-2 p_L(J_1) l(J_1) / eps] ^ x_1`` below the ``eps/2`` threshold, else ``*``."""
    eps = Fraction(eps)
    if not mu.items:
        return SIGMA_BASE
    J, x = mu.items[0]
    if J.left >= eps / 2:
        return SIGMA_BASE
    return SuspensionPoint(-2 * J.p_left * J.left / eps, x)


def scan_p(e: TildeElem) -> PointConfig:
    if e.kind != "E":
        raise ValueError("scan_p expects an E-kind element")
    return normalize_config(((v, scan_label(mu, e.eps)) for v, mu in e.config.items),
                            SIGMA, e.dim)


def beta(e: TildeElem) -> ConfigLoop:
    """The symmetric scan restricted to ``[0, s]``: a path ending at the empty
    configuration and starting at :func:`scan_p`."""
    if e.kind != "E":
        raise ValueError("beta expects an E-kind element")
    pam = LoopPam(0, e.span)
    cfg = normalize_config(
        ((v, alpha1(mirror_expand(mu), e.eps).restrict(0, e.span)) for v, mu in e.config.items),
        pam, e.dim)
    return ConfigLoop(cfg, 0, e.span)


__all__ = [
    "SuspensionPoint", "SIGMA_BASE", "SuspensionPam", "SIGMA", "Base", "Const", "Ramp",
    "PiecewiseLoop", "eval_loop", "loop_sum", "LoopPam", "WindowSystem", "windows",
    "alpha1", "ConfigLoop", "alpha_n", "scan_label", "scan_label_closed_form", "scan_p", "beta",
    "in_a",
]
