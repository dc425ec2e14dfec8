"""Partial abelian monoids (PAMs) and the finite label spaces built on them.

A PAM is a pointed set with a commutative, partially defined, associative sum
whose basepoint is a two-sided unit.  Instances here are plain objects exposing
``zero``, ``summable`` and ``add``; elements are ordinary hashable Python values.
"""
from __future__ import annotations

from itertools import permutations
from typing import Any, Hashable, Iterable, Iterator, Sequence

from .errors import AmbiguousSum, NotSummable

BASE = "*"

# Tuples at most this long are folded in every order and checked for agreement.
AUDIT_LIMIT = 6


class Pam:
    """Base class: subclasses define ``zero``, ``_summable`` and ``_combine``.

    ``_summable`` and ``_combine`` only ever see two non-basepoint elements;
    the unit law is handled here once.
    """

    zero: Any = BASE

    def is_zero(self, a) -> bool:
        return a == self.zero

    def summable(self, a, b) -> bool:
        if self.is_zero(a) or self.is_zero(b):
            return True
        return self._summable(a, b)

    def add(self, a, b):
        if self.is_zero(a):
            return b
        if self.is_zero(b):
            return a
        if not self._summable(a, b):
            raise NotSummable(f"{a!r} and {b!r} are not summable")
        return self._combine(a, b)

    def _summable(self, a, b) -> bool:
        raise NotImplementedError

    def _combine(self, a, b):
        raise NotImplementedError

    def elements(self) -> Iterator:
        """Enumerate all elements (finite instances only)."""
        raise NotImplementedError(f"{type(self).__name__} is not finite")


class PointedSetPam(Pam):
    """A pointed set ``X`` with ``X_2 = X v X``: only sums with ``*`` exist."""

    def __init__(self, alphabet: Iterable[str] = ()):
        self.alphabet = tuple(x for x in alphabet if x != BASE)

    def _summable(self, a, b):
        return False

    def elements(self):
        yield BASE
        yield from self.alphabet

    def __repr__(self):
        return f"PointedSetPam({list(self.alphabet)!r})"


class SignPam(Pam):
    """``{-1, 0, +1}`` with ``1 + (-1) = 0`` the only non-trivial sum."""

    zero = 0

    def _summable(self, a, b):
        return a + b == 0

    def _combine(self, a, b):
        return a + b

    def elements(self):
        yield from (-1, 0, 1)

    def __repr__(self):
        return "SignPam()"


def smash(x: str, c: int):
    """Canonical element ``(x, c)`` of ``X ^ M``; collapses to ``*`` when either
    factor is a basepoint."""
    if x == BASE or c == 0:
        return BASE
    return (x, c)


class SmashPam(Pam):
    """``X ^ M`` for ``M = {-1, 0, 1}``: charged labels, opposite charges of the
    same label annihilate."""

    def __init__(self, alphabet: Iterable[str] = ()):
        self.alphabet = tuple(x for x in alphabet if x != BASE)

    def _summable(self, a, b):
        return a[0] == b[0] and a[1] + b[1] == 0

    def _combine(self, a, b):
        return smash(a[0], a[1] + b[1])

    def elements(self):
        yield BASE
        for x in self.alphabet:
            yield (x, 1)
            yield (x, -1)

    def __repr__(self):
        return f"SmashPam({list(self.alphabet)!r})"


def is_summable_pair(inst: Pam, a, b) -> bool:
    return inst.summable(a, b)


def pam_sum(inst: Pam, a, b):
    return inst.add(a, b)


def _fold(inst: Pam, seq: Sequence):
    acc = inst.zero
    for x in seq:
        if not inst.summable(acc, x):
            return None, False
        acc = inst.add(acc, x)
    return acc, True


def _orderings(items: tuple) -> Iterable[tuple]:
    try:
        return set(permutations(items))
    except TypeError:  # unhashable labels
        return permutations(items)


def pam_sum_many(inst: Pam, items: Iterable):
    """Sum of a tuple: defined iff some ordering admits a fully defined left fold.

    Up to ``AUDIT_LIMIT`` elements every ordering is folded and the successful
    ones must agree (``AmbiguousSum`` otherwise).  Longer tuples are searched
    depth-first with memoisation on the set of consumed positions.
    """
    items = tuple(x for x in items if not inst.is_zero(x))
    if not items:
        return inst.zero
    if len(items) == 1:
        return items[0]
    if len(items) <= AUDIT_LIMIT:
        found = []
        for order in _orderings(items):
            value, ok = _fold(inst, order)
            if ok and all(value != v for v in found):
                found.append(value)
        if not found:
            raise NotSummable(f"no ordering of {items!r} can be summed")
        if len(found) > 1:
            raise AmbiguousSum(f"orderings of {items!r} disagree: {found!r}")
        return found[0]
    return _search_sum(inst, items)


def _search_sum(inst: Pam, items: tuple):
    n = len(items)
    full = (1 << n) - 1
    dead: set = set()

    def go(mask: int, acc):
        if mask == full:
            return acc, True
        key = (mask, acc) if isinstance(acc, Hashable) else None
        if key is not None and key in dead:
            return None, False
        for i in range(n):
            if not mask & (1 << i) and inst.summable(acc, items[i]):
                res, ok = go(mask | (1 << i), inst.add(acc, items[i]))
                if ok:
                    return res, True
        if key is not None:
            dead.add(key)
        return None, False

    value, ok = go(0, inst.zero)
    if not ok:
        raise NotSummable(f"no ordering of {items!r} can be summed")
    return value
