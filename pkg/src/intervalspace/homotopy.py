"""Explicit homotopies and sections on the thickened interval spaces.

All of them move interval endpoints by monotone piecewise-affine maps
(:class:`MonotoneCollapse`) and re-reduce; collapsed touching intervals paste,
collapsed half-open ones vanish.  Right halves of mirror classes are pushed
forward by ``h`` and left halves by ``u -> -h(-u)``.
"""
from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .config import PointConfig, normalize_config
from .errors import CollapseConflict, InvalidRaw, NotSummable, ValidationFailed
from .intervals import (Interval, IntervalClass, IntervalPam, MirrorClass, MirrorPam,
                        PLUS, MINUS, Window, _reduce_items, is_valid_items, m_items,
                        mirror_embed, mirror_translate, translate)
from .pam import BASE
from .scanning import SIGMA, SuspensionPoint, scan_p
from .tilde import TildeElem, label_pam

SAMPLE_TIMES = tuple(Fraction(i, 10) for i in range(11))

ZERO = Fraction(0)


def _sign(c) -> int:
    return (c > 0) - (c < 0)


@dataclass(frozen=True)
class MonotoneCollapse:
    """A nondecreasing piecewise-affine map of the line.

    ``knots`` are ``t_1 < ... < t_m``; ``pieces`` holds ``m + 1`` pairs
    ``(slope, intercept)`` with slope 0 or 1, piece ``j`` acting on
    ``(t_j, t_{j+1}]`` (unbounded at both ends).
    """

    knots: tuple
    pieces: tuple

    def __post_init__(self):
        knots = tuple(Fraction(t) for t in self.knots)
        pieces = tuple((Fraction(a), Fraction(b)) for a, b in self.pieces)
        object.__setattr__(self, "knots", knots)
        object.__setattr__(self, "pieces", pieces)
        if len(pieces) != len(knots) + 1:
            raise ValueError("need one more piece than knots")
        if any(a >= b for a, b in zip(knots, knots[1:])):
            raise ValueError("knots must increase strictly")
        for a, _ in pieces:
            if a not in (0, 1):
                raise ValueError(f"slope {a} is neither 0 nor 1")
        for t, (a0, b0), (a1, b1) in zip(knots, pieces, pieces[1:]):
            if a0 * t + b0 != a1 * t + b1:
                raise ValueError(f"discontinuous at {t}")

    @classmethod
    def from_spec(cls, spec) -> "MonotoneCollapse":
        """Build from ``[(upper, slope, intercept), ...]`` with the last upper
        bound ``None``; empty pieces are skipped."""
        knots, pieces, lo = [], [], None
        for hi, a, b in spec:
            if hi is not None and lo is not None and hi <= lo:
                continue
            if hi is not None:
                knots.append(hi)
            pieces.append((a, b))
            lo = hi
        return cls(tuple(knots), tuple(pieces))

    @classmethod
    def identity(cls) -> "MonotoneCollapse":
        return cls((), ((1, 0),))

    def __call__(self, u) -> Fraction:
        a, b = self.pieces[bisect_left(self.knots, u)]
        return a * u + b

    def symmetric(self, u) -> Fraction:
        """The odd extension ``u -> -h(-u)`` for ``u < 0``."""
        return self(u) if u >= 0 else -self(-u)

    @property
    def top_shift(self) -> Fraction:
        """``u - h(u)`` for large ``u``."""
        return -self.pieces[-1][1]


# -- pushforward ---------------------------------------------------------------

def _paste_chain(chain: list):
    lo, hi, pl, pr, x = chain[0]
    for _, hi2, pl2, pr2, x2 in chain[1:]:
        if x2 != x or pl2 == pr:
            return None
        hi, pr = hi2, pr2
    return (lo, hi, pl, pr, x)


def _removable(q) -> bool:
    lo, hi, pl, pr, x = q
    return x == BASE or (lo == hi and pl != pr)


def _chains(raw: list) -> list:
    out: list = []
    for q in raw:
        if out and out[-1][-1][1] == q[0]:
            out[-1].append(q)
        else:
            out.append([q])
    return out


def cleanup(raw) -> tuple:
    """Reduce a sorted list of raw quintuples ``(lo, hi, p_left, p_right, label)``
    that may contain collapsed (zero-length, possibly equal-parity) items."""
    result = []
    for chain in _chains(list(raw)):
        merged = _paste_chain(chain)
        if merged is None:
            kept = [q for q in chain if not _removable(q)]
            merged_parts = [_paste_chain(c) for c in _chains(kept)]
            if any(m is None for m in merged_parts):
                raise CollapseConflict(f"cannot paste collapsed chain {chain}")
        else:
            merged_parts = [merged]
        for lo, hi, pl, pr, x in merged_parts:
            if lo == hi and pl == pr:
                raise CollapseConflict(f"collapsed to a point with equal parities at {lo}")
            if not _removable((lo, hi, pl, pr, x)):
                result.append((Interval(lo, hi, pl, pr), x))
    return tuple(result)


def pushforward(h: MonotoneCollapse, xi, window: Window | None = None,
                half_width=None):
    """Apply ``h`` to every endpoint of an interval or mirror class."""
    if isinstance(xi, MirrorClass):
        s = xi.half_width if half_width is None else Fraction(half_width)
        raw = [(h.symmetric(J.left), h.symmetric(J.right), J.p_left, J.p_right, x)
               for J, x in m_items(xi)]
        return MirrorClass.from_class(IntervalClass(Window.symmetric(s), cleanup(raw)))
    window = xi.window if window is None else window
    raw = [(h(J.left), h(J.right), J.p_left, J.p_right, x) for J, x in xi.items]
    return IntervalClass(window, cleanup(raw))


def contract_H(mu: MirrorClass, t) -> MirrorClass:
    """The contraction of the mirror space of half-width 1: items whose right
    end is at most ``t`` are dropped, the rest slide towards 0 by ``t``."""
    t = Fraction(t)
    if mu.half_width != 1:
        raise ValueError("the contraction is defined for half width 1")
    if not 0 <= t <= 1:
        raise ValueError(f"t={t} outside [0, 1]")
    kept = MirrorClass(mu.half_width, tuple((J, x) for J, x in mu.items if J.right > t))
    h = MonotoneCollapse.from_spec([(t, 0, 0), (None, 1, -t)])
    return pushforward(h, kept)


# -- the sections and the maps phi, psi, Phi ----------------------------------------

def _tilde(kind: str, items, eps, span, dim: int, validate: bool = True) -> TildeElem:
    # without validation the labels are merged in the unthickened PAM, so the
    # result may fall outside the eps-separated space; callers audit it
    eps, span = Fraction(eps), Fraction(span)
    pam = label_pam(kind, eps if validate else None, span)
    e = TildeElem(kind, normalize_config(items, pam, dim), eps, span)
    if validate:
        bad = e.problems()
        if bad:
            raise ValidationFailed("; ".join(bad))
    return e


def _summed_tilde(items, eps, span, dim: int) -> TildeElem:
    try:
        return _tilde("E", items, eps, span, dim)
    except InvalidRaw as exc:
        raise NotSummable(str(exc)) from exc


def _mirror_from_right(s, items) -> MirrorClass:
    items = tuple(items)
    if not is_valid_items(Window(None, None), items):
        raise ValidationFailed(f"invalid right half {items}")
    return MirrorClass(s, _reduce_items(items))


def _head(mu: MirrorClass):
    J, x = mu.items[0]
    return J.left, J.p_left, x


def phi_label(mu: MirrorClass, eps) -> IntervalClass:
    eps = Fraction(eps)
    window = Window.half(mu.half_width + 2 * eps)
    if not mu.items:
        return IntervalClass(window, ())
    shifted = tuple((J.shift(2 * eps), x) for J, x in mu.items)
    l, p, x = _head(mu)
    if l >= eps / 2:
        return IntervalClass(window, shifted)
    K = Interval(eps - l, 2 * eps - l, MINUS, -p)
    return IntervalClass.from_items(window, ((K, x),) + shifted)


def phi(e: TildeElem) -> TildeElem:
    if e.kind != "E":
        raise ValueError("phi expects an E-kind element")
    return _tilde("I", ((v, phi_label(mu, e.eps)) for v, mu in e.config.items),
                  e.eps, e.span + 2 * e.eps, e.dim)


def section_label(y: SuspensionPoint, eps, half_width=None) -> MirrorClass:
    """``s^eps(y)``; the empty class for the basepoint."""
    eps = Fraction(eps)
    s = 2 * eps if half_width is None else Fraction(half_width)
    if y.is_base:
        return MirrorClass(s, ())
    a = abs(y.coord)
    p = -_sign(y.coord) if y.coord else PLUS
    L = Interval(a * eps / 2, (a / 2 + 1) * eps, p, PLUS)
    return MirrorClass(s, ((L, y.label),))


def section_sigma(z: PointConfig, eps, half_width=None) -> PointConfig:
    eps = Fraction(eps)
    s = 2 * eps if half_width is None else Fraction(half_width)
    return normalize_config(((v, section_label(y, eps, s)) for v, y in z.items),
                            MirrorPam(s, eps), z.dim)


def psi(z: PointConfig, e: TildeElem) -> TildeElem:
    """``sigma^eps(z) + m(T_2eps(xi))`` at span ``s + 2 eps``."""
    if e.kind != "I":
        raise ValueError("psi expects an I-kind element")
    eps, s = e.eps, e.span + 2 * e.eps
    items = [(v, section_label(y, eps, s)) for v, y in z.items]
    items += [(v, mirror_translate(mirror_embed(xi), 2 * eps, s)) for v, xi in e.config.items]
    return _summed_tilde(items, eps, s, e.dim)


def Phi_label(mu: MirrorClass, eps) -> MirrorClass:
    eps = Fraction(eps)
    s = mu.half_width + 4 * eps
    if not mu.items:
        return MirrorClass(s, ())
    l, p, x = _head(mu)
    if l >= eps / 2:
        return mirror_translate(mu, 4 * eps)
    L = Interval(l, l + eps, p, PLUS)
    K = Interval(3 * eps - l, 4 * eps - l, MINUS, -p)
    return _mirror_from_right(s, ((L, x), (K, x))
                              + tuple((J.shift(4 * eps), y) for J, y in mu.items))


def Phi(e: TildeElem) -> TildeElem:
    if e.kind != "E":
        raise ValueError("Phi expects an E-kind element")
    return _tilde("E", ((v, Phi_label(mu, e.eps)) for v, mu in e.config.items),
                  e.eps, e.span + 4 * e.eps, e.dim)


# -- the four-phase homotopy ---------------------------------------------------------

def fourphase_collapse(eps, t) -> MonotoneCollapse:
    eps, t = Fraction(eps), Fraction(t)
    if not 0 <= t <= 1:
        raise ValueError(f"t={t} outside [0, 1]")
    if t <= Fraction(1, 4):
        a = (2 - 4 * t) * eps
        return MonotoneCollapse.from_spec([
            (a, 1, 0), ((2 + 4 * t) * eps, 0, a), (None, 1, -8 * t * eps)])
    if t <= Fraction(3, 4):
        upper = (Fraction(7, 2) + 2 * t) * eps if t <= Fraction(1, 2) else (Fraction(11, 2) - 2 * t) * eps
        top = (4 * t + 1) * eps if t <= Fraction(1, 2) else 3 * eps
        return MonotoneCollapse.from_spec([
            (eps, 1, 0), (3 * eps, 0, eps), ((Fraction(9, 2) - 2 * t) * eps, 1, -2 * eps),
            (upper, 0, (Fraction(5, 2) - 2 * t) * eps), (None, 1, -top)])
    a = (Fraction(5, 2) - 2 * t) * eps
    return MonotoneCollapse.from_spec([
        (a, 1, 0), ((Fraction(5, 2) + 2 * t) * eps, 0, a), (None, 1, -4 * t * eps)])


def bigH(e: TildeElem, t, validate: bool = True) -> TildeElem:
    """``h_t*`` applied to ``Phi(e)``; the span shrinks with the top shift of ``h_t``.

    With ``validate=False`` the pushed-forward element is returned even when it
    is not eps-separated (use :meth:`TildeElem.problems` to inspect it).
    """
    h = fourphase_collapse(e.eps, t)
    s = e.span + 4 * e.eps - h.top_shift
    big = Phi(e)
    return _tilde("E", ((v, pushforward(h, mu, half_width=s)) for v, mu in big.config.items),
                  e.eps, s, e.dim, validate)


# -- the k homotopy --------------------------------------------------------------------

def k_collapse(eps, t) -> MonotoneCollapse:
    eps, t = Fraction(eps), Fraction(t)
    if not 0 <= t <= 1:
        raise ValueError(f"t={t} outside [0, 1]")
    a = 2 * eps * (1 - t)
    return MonotoneCollapse.from_spec([
        (a, 1, 0), (2 * eps * (1 + t), 0, a), (None, 1, -4 * eps * t)])


def tau_label(y: SuspensionPoint, eps, span=None) -> IntervalClass:
    """``t^eps(y)``: the pair ``(K, x), (L, x)`` on ``(0, 4 eps)``."""
    eps = Fraction(eps)
    window = Window.half(4 * eps if span is None else span)
    if y.is_base:
        return IntervalClass(window, ())
    a = abs(y.coord)
    sg = _sign(y.coord) if y.coord else PLUS
    K = Interval((1 - a / 2) * eps, (2 - a / 2) * eps, MINUS, sg)
    L = Interval((2 + a / 2) * eps, (3 + a / 2) * eps, -sg, PLUS)
    return IntervalClass.from_items(window, ((K, y.label), (L, y.label)))


def tau(z: PointConfig, eps, span=None) -> PointConfig:
    eps = Fraction(eps)
    span = 4 * eps if span is None else Fraction(span)
    return normalize_config(((v, tau_label(y, eps, span)) for v, y in z.items),
                            IntervalPam(Window.half(span), eps), z.dim)


def k_start(z: PointConfig, e: TildeElem) -> TildeElem:
    """``tau^eps(z) + T_4eps(xi)`` at span ``s + 4 eps``."""
    eps, s = e.eps, e.span + 4 * e.eps
    w = Window.half(s)
    items = [(v, tau_label(y, eps, s)) for v, y in z.items]
    items += [(v, translate(xi, 4 * eps, w)) for v, xi in e.config.items]
    return _tilde("I", items, eps, s, e.dim)


def k_homotopy(z: PointConfig, e: TildeElem, t, validate: bool = True) -> TildeElem:
    if e.kind != "I":
        raise ValueError("k_homotopy expects an I-kind element")
    t = Fraction(t)
    start = k_start(z, e)
    h = k_collapse(e.eps, t)
    s = start.span - 4 * e.eps * t
    w = Window.half(s)
    return _tilde("I", ((v, pushforward(h, xi, w)) for v, xi in start.config.items),
                  e.eps, s, e.dim, validate)


# -- the deformation near lower filtration --------------------------------------------

@dataclass(frozen=True)
class NdrData:
    """``u: X -> [0, 1]`` with ``u^-1(0) = {*}`` and ``k(x, t)`` deforming
    ``W = u^-1[0, 1)`` to the basepoint."""

    u: Callable[[str], Fraction]
    k: Callable[[str, Fraction], str]

    @classmethod
    def canonical(cls) -> "NdrData":
        return cls(lambda x: Fraction(0) if x == BASE else Fraction(1), lambda x, t: x)

    def in_w(self, x: str) -> bool:
        return self.u(x) < 1


CANONICAL_NDR = NdrData.canonical()


def hprime(t, c) -> Fraction:
    t, c = Fraction(t), Fraction(c)
    edge = 1 - t / 2
    if c <= -edge:
        return Fraction(-1)
    if c >= edge:
        return Fraction(1)
    return 2 * c / (2 - t)


def in_U(z: PointConfig, ndr: NdrData = CANONICAL_NDR) -> bool:
    return any(abs(y.coord) > Fraction(1, 2) or ndr.in_w(y.label) for _, y in z.items)


def deform_base(z: PointConfig, t, ndr: NdrData = CANONICAL_NDR) -> PointConfig:
    t = Fraction(t)
    return normalize_config(
        ((v, SuspensionPoint(hprime(t, y.coord), ndr.k(y.label, t))) for v, y in z.items),
        SIGMA, z.dim)


def _relabel_mirror(mu: MirrorClass, f) -> MirrorClass:
    return MirrorClass(mu.half_width, _reduce_items(tuple((J, f(x)) for J, x in mu.items)))


def deform_total(e: TildeElem, t, ndr: NdrData = CANONICAL_NDR) -> TildeElem:
    """Labels through ``k_t``, thickness ``eps -> (1 - t/2) eps``, span unchanged."""
    if e.kind != "E":
        raise ValueError("deform_total expects an E-kind element")
    t = Fraction(t)
    eps = (1 - t / 2) * e.eps
    return _tilde("E", ((v, _relabel_mirror(mu, lambda x: ndr.k(x, t)).with_half_width(e.span))
                        for v, mu in e.config.items), eps, e.span, e.dim)


def g_label(y: SuspensionPoint, eps, half_width=None) -> MirrorClass:
    """``g^eps(y) = m(K, x)``.  At ``c = 0`` the parities are ``(+1, -1)`` so that
    ``K`` pastes with a translated central interval."""
    eps = Fraction(eps)
    s = 2 * eps if half_width is None else Fraction(half_width)
    if y.is_base:
        return MirrorClass(s, ())
    a = abs(y.coord)
    if y.coord:
        sg = _sign(y.coord)
        K = Interval(a * eps / 2, (2 - a) * eps, -sg, sg)
    else:
        K = Interval(ZERO, 2 * eps, PLUS, MINUS)
    return MirrorClass(s, ((K, y.label),))


def gamma(z: PointConfig, eps, half_width=None) -> PointConfig:
    eps = Fraction(eps)
    s = 2 * eps if half_width is None else Fraction(half_width)
    return normalize_config(((v, g_label(y, eps, s)) for v, y in z.items),
                            MirrorPam(s), z.dim)


def g_inverse(z: PointConfig, e: TildeElem, ndr: NdrData = CANONICAL_NDR) -> TildeElem:
    """``gamma^eps(z) + T_2eps(xi)`` at span ``s + 2 eps``, for ``e`` over ``h_1(z)``."""
    if e.kind != "E":
        raise ValueError("g_inverse expects an E-kind element")
    if scan_p(e) != deform_base(z, 1, ndr):
        raise ValueError("element does not lie over the deformed configuration")
    eps, s = e.eps, e.span + 2 * e.eps
    items = [(v, g_label(y, eps, s)) for v, y in z.items]
    items += [(v, mirror_translate(mu, 2 * eps, s)) for v, mu in e.config.items]
    return _summed_tilde(items, eps, s, e.dim)


def audit(path: Callable[[Fraction], TildeElem], times=SAMPLE_TIMES) -> list:
    """``(t, problems)`` for every sampled time at which ``path(t)`` leaves the
    thickened space or cannot be computed at all."""
    out = []
    for t in times:
        try:
            bad = path(t).problems()
        except (CollapseConflict, NotSummable, InvalidRaw, ValidationFailed) as exc:
            bad = [f"{type(exc).__name__}: {exc}"]
        if bad:
            out.append((t, bad))
    return out


__all__ = [
    "MonotoneCollapse", "cleanup", "pushforward", "contract_H", "phi", "phi_label",
    "section_label", "section_sigma", "psi", "Phi", "Phi_label", "fourphase_collapse",
    "bigH", "k_collapse", "tau_label", "tau", "k_start", "k_homotopy", "NdrData",
    "CANONICAL_NDR", "hprime", "in_U", "deform_base", "deform_total", "g_label", "gamma",
    "g_inverse", "audit", "SAMPLE_TIMES",
]
