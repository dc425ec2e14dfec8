"""Labelled intervals with charged ends on a line.

An :class:`Interval` is a quadruple ``(left, right, p_left, p_right)`` where a
parity of ``+1`` means the end is contained and ``-1`` that it is not.  A
finite ordered sequence of labelled intervals inside an open window ``U`` is an
:class:`IntervalSeq`; sequences are identified by cutting/pasting touching
intervals and by deleting basepoint-labelled or degenerate half-open ones.
Classes are stored as their reduced representative (:class:`IntervalClass`).

Mirror classes (:class:`MirrorClass`) are the involution-invariant classes on
a symmetric window ``(-s, s)``, stored by their right half.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (InvalidSequence, NotSummable, OutOfWindow,
                     WindowMismatch)
from .pam import BASE, Pam

PLUS = 1
MINUS = -1


def _q(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True, order=True)
class Interval:
    left: Fraction
    right: Fraction
    p_left: int
    p_right: int

    def __post_init__(self):
        object.__setattr__(self, "left", _q(self.left))
        object.__setattr__(self, "right", _q(self.right))
        if self.p_left not in (1, -1) or self.p_right not in (1, -1):
            raise ValueError(f"parities must be +1 or -1, got {self.p_left}, {self.p_right}")
        if self.p_left == self.p_right:
            ok = self.left < self.right
        else:
            ok = self.left <= self.right
        if not ok:
            raise ValueError(f"not an interval: {self}")

    @property
    def degenerate(self) -> bool:
        return self.left == self.right

    @property
    def length(self) -> Fraction:
        return self.right - self.left

    def __neg__(self) -> "Interval":
        return Interval(-self.right, -self.left, -self.p_right, -self.p_left)

    def shift(self, t) -> "Interval":
        return Interval(self.left + t, self.right + t, self.p_left, self.p_right)


@dataclass(frozen=True)
class Window:
    """An open interval ``(lo, hi)``; ``None`` stands for an infinite end."""

    lo: Fraction | None
    hi: Fraction | None

    def __post_init__(self):
        if self.lo is not None:
            object.__setattr__(self, "lo", _q(self.lo))
        if self.hi is not None:
            object.__setattr__(self, "hi", _q(self.hi))
        if self.lo is not None and self.hi is not None and not self.lo < self.hi:
            raise ValueError(f"empty window ({self.lo}, {self.hi})")

    @classmethod
    def half(cls, s) -> "Window":
        """The window ``(0, s)``."""
        return cls(Fraction(0), _q(s))

    @classmethod
    def symmetric(cls, s) -> "Window":
        """The window ``(-s, s)``."""
        return cls(-_q(s), _q(s))

    @property
    def is_symmetric(self) -> bool:
        if self.lo is None or self.hi is None:
            return self.lo is None and self.hi is None
        return self.lo == -self.hi

    @property
    def finite(self) -> bool:
        return self.lo is not None and self.hi is not None

    def contains(self, x, margin=0) -> bool:
        """``x`` lies strictly inside the window shrunk by ``margin`` on both sides."""
        if self.lo is not None and not x > self.lo + margin:
            return False
        if self.hi is not None and not x < self.hi - margin:
            return False
        return True


def _touching(a: Interval, b: Interval) -> bool:
    return a.right == b.left


def is_valid_items(window: Window, items: Sequence[tuple]) -> bool:
    """Conditions (1)-(3) for ordered labelled intervals plus window membership."""
    prev = None
    for J, x in items:
        if not (window.contains(J.left) and window.contains(J.right)):
            return False
        if prev is not None:
            K, y = prev
            if K.right > J.left:
                return False
            if K.right == J.left and (x != y or K.p_right == J.p_left):
                return False
        prev = (J, x)
    return True


@dataclass(frozen=True)
class IntervalSeq:
    """A (not necessarily reduced) representative: an element of ``I_(k)(X)_U``."""

    window: Window
    items: tuple

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))

    def __len__(self):
        return len(self.items)


def validate_sequence(seq: IntervalSeq) -> bool:
    return is_valid_items(seq.window, seq.items)


def paste(a: Interval, b: Interval) -> Interval:
    """Glue two touching intervals: outer ends survive."""
    return Interval(a.left, b.right, a.p_left, b.p_right)


def _reduce_items(items: Sequence[tuple], paste_rule=paste) -> tuple:
    # valid input: every touching pair shares its label and has opposite
    # junction parities, so maximal touching chains paste in any order
    chains: list = []
    for J, x in items:
        if chains and _touching(chains[-1][0], J):
            chains[-1] = (paste_rule(chains[-1][0], J), x)
        else:
            chains.append((J, x))
    return tuple((J, x) for J, x in chains if x != BASE and not J.degenerate)


def reduce(seq: IntervalSeq, paste_rule=paste) -> "IntervalClass":
    """Normal form of a valid sequence under cutting/pasting and birth/death."""
    if not validate_sequence(seq):
        raise InvalidSequence(f"not a valid interval sequence: {seq}")
    return IntervalClass(seq.window, _reduce_items(seq.items, paste_rule))


@dataclass(frozen=True)
class IntervalClass:
    """An element of ``I_1(X)_U`` stored as its reduced representative."""

    window: Window
    items: tuple = ()

    def __post_init__(self):
        items = tuple(self.items)
        object.__setattr__(self, "items", items)
        prev = None
        for J, x in items:
            if x == BASE or J.degenerate:
                raise ValueError(f"not reduced: {J} labelled {x!r}")
            if not (self.window.contains(J.left) and self.window.contains(J.right)):
                raise OutOfWindow(f"{J} not inside {self.window}")
            if prev is not None and not prev.right < J.left:
                raise ValueError(f"intervals not strictly ordered: {prev}, {J}")
            prev = J

    @classmethod
    def from_items(cls, window: Window, items: Iterable[tuple]) -> "IntervalClass":
        return reduce(IntervalSeq(window, tuple(items)))

    def __len__(self):
        return len(self.items)

    def __bool__(self):
        return bool(self.items)

    @property
    def endpoints(self) -> list:
        """``[(u_1, p_1), ..., (u_2k, p_2k)]`` in increasing order."""
        out = []
        for J, _ in self.items:
            out.append((J.left, J.p_left))
            out.append((J.right, J.p_right))
        return out

    def with_window(self, window: Window) -> "IntervalClass":
        return IntervalClass(window, self.items)


def class_equals(xi: IntervalClass, eta: IntervalClass) -> bool:
    if xi.window != eta.window:
        raise WindowMismatch(f"{xi.window} vs {eta.window}")
    return xi.items == eta.items


def _sort_key(item):
    J = item[0]
    return (J.left, J.right)


def class_sum(xi: IntervalClass, eta: IntervalClass) -> IntervalClass:
    if xi.window != eta.window:
        raise WindowMismatch(f"{xi.window} vs {eta.window}")
    if not eta.items:
        return xi
    if not xi.items:
        return eta
    merged = tuple(sorted(xi.items + eta.items, key=_sort_key))
    if not is_valid_items(xi.window, merged):
        raise NotSummable("union of the reduced representatives is not a valid sequence")
    return IntervalClass(xi.window, _reduce_items(merged))


def eps_separated_items(window: Window, items: Sequence[tuple], eps) -> bool:
    """Separation test on one representative (sorted, valid)."""
    eps = _q(eps)
    half = eps / 2
    by_parity: dict = {1: [], -1: []}
    for J, _ in items:
        if not (window.contains(J.left, half) and window.contains(J.right, half)):
            return False
        by_parity[J.p_left].append(J.left)
        by_parity[J.p_right].append(J.right)
    for ends in by_parity.values():
        ends.sort()
        for a, b in zip(ends, ends[1:]):
            if b - a < eps:
                return False
    n = len(items)
    for i in range(n):
        J, x = items[i]
        for j in range(i + 1, n):
            K, y = items[j]
            if x != y and K.left - J.right < eps:
                return False
    return True


def eps_separated(xi, eps) -> bool:
    """``xi`` (an :class:`IntervalClass` or :class:`MirrorClass`) is eps-separated.

    Interval classes are tested on their reduced representative; mirror classes
    on their symmetric ``m(...)`` representative.
    """
    if isinstance(xi, MirrorClass):
        return eps_separated_items(Window.symmetric(xi.half_width), m_items(xi), eps)
    return eps_separated_items(xi.window, xi.items, eps)


def translate(xi: IntervalClass, t, window: Window | None = None) -> IntervalClass:
    window = xi.window if window is None else window
    items = tuple((J.shift(t), x) for J, x in xi.items)
    for J, _ in items:
        if not (window.contains(J.left) and window.contains(J.right)):
            raise OutOfWindow(f"translated {J} leaves {window}")
    return IntervalClass(window, items)


def involute(xi: IntervalClass) -> IntervalClass:
    if not xi.window.is_symmetric:
        raise WindowMismatch(f"involution needs a symmetric window, got {xi.window}")
    return IntervalClass(xi.window, tuple((-J, x) for J, x in reversed(xi.items)))


def _canonical_right(items: tuple) -> tuple:
    # a right half starting at 0 pastes with its mirror image, so its left
    # parity is invisible; fix it to +1
    if items and items[0][0].left == 0 and items[0][0].p_left != PLUS:
        J, x = items[0]
        items = ((Interval(J.left, J.right, PLUS, J.p_right), x),) + items[1:]
    return items


@dataclass(frozen=True)
class MirrorClass:
    """An element of ``E_1(X)_s``: the right half ``(J_1, ..., J_k)`` of the
    symmetric representative ``m(J_1, ..., J_k)`` on ``(-s, s)``."""

    half_width: Fraction
    items: tuple = ()

    def __post_init__(self):
        s = _q(self.half_width)
        object.__setattr__(self, "half_width", s)
        items = _canonical_right(tuple(self.items))
        object.__setattr__(self, "items", items)
        prev = None
        for J, x in items:
            if x == BASE or J.degenerate:
                raise ValueError(f"not reduced: {J} labelled {x!r}")
            if J.left < 0 or not J.right < s:
                raise OutOfWindow(f"{J} is not a right-half interval of (-{s}, {s})")
            if prev is not None and not prev.right < J.left:
                raise ValueError(f"intervals not strictly ordered: {prev}, {J}")
            prev = J

    def __len__(self):
        return len(self.items)

    def __bool__(self):
        return bool(self.items)

    @property
    def first_left(self):
        """``l(J_1)``, or ``None`` for the empty class."""
        return self.items[0][0].left if self.items else None

    @property
    def window(self) -> Window:
        return Window.symmetric(self.half_width)

    def with_half_width(self, s) -> "MirrorClass":
        return MirrorClass(_q(s), self.items)

    @classmethod
    def from_class(cls, xi: IntervalClass) -> "MirrorClass":
        """Right half of an involution-invariant class on a symmetric window."""
        if not xi.window.is_symmetric or xi.window.hi is None:
            raise WindowMismatch(f"need a finite symmetric window, got {xi.window}")
        if involute(xi) != xi:
            raise ValueError("class is not invariant under the involution")
        right = []
        for J, x in xi.items:
            if J.left >= 0:
                right.append((J, x))
            elif J.right > 0:
                right.append((Interval(Fraction(0), J.right, PLUS, J.p_right), x))
        return cls(xi.window.hi, tuple(right))


def m_items(mu: MirrorClass) -> tuple:
    """The symmetric representative ``m(J_1, ..., J_k)`` (not reduced)."""
    return tuple((-J, x) for J, x in reversed(mu.items)) + mu.items


def mirror_expand(mu: MirrorClass) -> IntervalClass:
    return reduce(IntervalSeq(mu.window, m_items(mu)))


def mirror_embed(xi: IntervalClass) -> MirrorClass:
    w = xi.window
    if w.lo != 0 or w.hi is None:
        raise WindowMismatch(f"mirror embedding needs a window (0, s), got {w}")
    return MirrorClass(w.hi, xi.items)


def mirror_translate(mu: MirrorClass, t, half_width=None) -> MirrorClass:
    """Translate the right half by ``t`` (the left half by ``-t``)."""
    s = mu.half_width + t if half_width is None else half_width
    return MirrorClass(s, tuple((J.shift(t), x) for J, x in mu.items))


def mirror_sum(a: MirrorClass, b: MirrorClass) -> MirrorClass:
    if a.half_width != b.half_width:
        raise WindowMismatch(f"half widths {a.half_width} and {b.half_width}")
    if not b.items:
        return a
    if not a.items:
        return b
    return MirrorClass.from_class(class_sum(mirror_expand(a), mirror_expand(b)))


class IntervalPam(Pam):
    """``I_1(X)_U``, or ``I^eps_1(X)_U`` when ``eps`` is given."""

    def __init__(self, window: Window, eps=None):
        self.window = window
        self.eps = None if eps is None else _q(eps)
        self.zero = IntervalClass(window, ())

    def _sum_or_none(self, a, b):
        try:
            c = class_sum(a, b)
        except NotSummable:
            return None
        if self.eps is not None and not eps_separated(c, self.eps):
            return None
        return c

    def _summable(self, a, b):
        return self._sum_or_none(a, b) is not None

    def _combine(self, a, b):
        c = self._sum_or_none(a, b)
        if c is None:
            raise NotSummable("interval classes are not summable")
        return c

    def __repr__(self):
        return f"IntervalPam({self.window}, eps={self.eps})"


class MirrorPam(Pam):
    """``E_1(X)_s``, or ``E^eps_1(X)_s`` when ``eps`` is given."""

    def __init__(self, half_width, eps=None):
        self.half_width = _q(half_width)
        self.eps = None if eps is None else _q(eps)
        self.zero = MirrorClass(self.half_width, ())

    def _sum_or_none(self, a, b):
        try:
            c = mirror_sum(a, b)
        except NotSummable:
            return None
        if self.eps is not None and not eps_separated(c, self.eps):
            return None
        return c

    def _summable(self, a, b):
        return self._sum_or_none(a, b) is not None

    def _combine(self, a, b):
        c = self._sum_or_none(a, b)
        if c is None:
            raise NotSummable("mirror classes are not summable")
        return c

    def __repr__(self):
        return f"MirrorPam({self.half_width}, eps={self.eps})"


def in_a(mu: MirrorClass, eps) -> bool:
    """Membership in the sub-PAM ``A^eps_s``: empty, or ``l(J_1) >= eps/2``."""
    return not mu.items or mu.first_left >= _q(eps) / 2
