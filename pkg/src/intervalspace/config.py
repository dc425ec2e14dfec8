"""Finite labelled configurations ``C(R^d, M)`` with labels in a PAM.

Elements are kept in normal form: coincident points merged by the PAM sum,
basepoint labels deleted, items sorted lexicographically by coordinates.
Equality of normal forms is equality in the quotient.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterable

from .errors import InvalidRaw, LengthMismatch, NotSummable
from .pam import Pam, pam_sum_many

Point = tuple  # tuple of Fractions


def as_point(coords: Iterable, dim: int) -> Point:
    p = tuple(Fraction(c) for c in coords)
    if len(p) != dim:
        raise InvalidRaw(f"point {p!r} is not {dim}-dimensional")
    return p


@dataclass(frozen=True)
class PointConfig:
    """A normalized configuration.  Build with :func:`normalize_config`."""

    dim: int
    items: tuple
    pam: Pam = field(compare=False, hash=False, repr=False)

    def __len__(self):
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    @property
    def points(self) -> tuple:
        return tuple(v for v, _ in self.items)

    @property
    def labels(self) -> tuple:
        return tuple(a for _, a in self.items)

    def label_at(self, v: Point):
        for w, a in self.items:
            if w == v:
                return a
        return self.pam.zero


def empty_config(pam: Pam, dim: int = 1) -> PointConfig:
    return PointConfig(dim, (), pam)


def normalize_config(raw: Iterable[tuple], pam: Pam, dim: int = 1) -> PointConfig:
    """Quotient a raw configuration by deleting basepoints, permuting, and
    merging coincident points.

    Raises :class:`InvalidRaw` when some group of coincident labels is not
    summable.
    """
    groups: dict = {}
    for v, a in raw:
        groups.setdefault(as_point(v, dim), []).append(a)
    items = []
    for v in sorted(groups):
        try:
            a = pam_sum_many(pam, groups[v])
        except NotSummable as exc:
            raise InvalidRaw(f"labels at {v!r} are not summable") from exc
        if not pam.is_zero(a):
            items.append((v, a))
    return PointConfig(dim, tuple(items), pam)


def config_equals(xi: PointConfig, eta: PointConfig) -> bool:
    return xi.dim == eta.dim and xi.items == eta.items


def config_sum(xi: PointConfig, eta: PointConfig) -> PointConfig:
    if xi.dim != eta.dim:
        raise NotSummable("configurations of different dimension")
    pam = xi.pam
    merged = dict(xi.items)
    for v, b in eta.items:
        if v in merged:
            a = merged[v]
            if not pam.summable(a, b):
                raise NotSummable(f"labels at {v!r} are not summable")
            merged[v] = pam.add(a, b)
        else:
            merged[v] = b
    items = tuple((v, merged[v]) for v in sorted(merged) if not pam.is_zero(merged[v]))
    return PointConfig(xi.dim, items, pam)


def map_labels(f: Callable[[Any], Any], xi: PointConfig, target: Pam | None = None) -> PointConfig:
    """Apply a PAM homomorphism labelwise and renormalize in ``target``."""
    target = xi.pam if target is None else target
    return normalize_config(((v, f(a)) for v, a in xi.items), target, xi.dim)


def interchange_eval(xi: PointConfig, t, target: Pam) -> PointConfig:
    """Evaluate a configuration of loops of a common length at time ``t``."""
    domains = {(l.start, l.end) for l in xi.labels}
    if len(domains) > 1:
        raise LengthMismatch(f"loops have different domains: {sorted(domains)}")
    return normalize_config(((v, l(t)) for v, l in xi.items), target, xi.dim)


def filtration_index(xi: PointConfig, in_a: Callable[[Any], bool]) -> int:
    """Least ``j`` with ``xi`` in ``F_j^A``: the number of labels outside ``A``."""
    return sum(1 for _, a in xi.items if not in_a(a))
