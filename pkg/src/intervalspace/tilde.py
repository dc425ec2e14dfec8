"""Thickened spaces: triples ``(xi, eps, s)`` with ``xi`` a configuration of
eps-separated interval classes on ``(0, s)`` (kind ``"I"``) or mirror classes
of half-width ``s`` (kind ``"E"``)."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .config import PointConfig, config_sum, normalize_config
from .errors import NotSummable, ValidationFailed
from .intervals import (IntervalClass, IntervalPam, MirrorClass, MirrorPam, Window,
                        eps_separated, mirror_embed)


def label_pam(kind: str, eps, span):
    if kind == "I":
        return IntervalPam(Window.half(span), eps)
    if kind == "E":
        return MirrorPam(span, eps)
    raise ValueError(f"unknown kind {kind!r}")


@dataclass(frozen=True)
class TildeElem:
    kind: str
    config: PointConfig
    eps: Fraction
    span: Fraction

    @classmethod
    def build(cls, kind: str, items: Iterable[tuple], eps, span, dim: int = 1) -> "TildeElem":
        eps, span = Fraction(eps), Fraction(span)
        return cls(kind, normalize_config(items, label_pam(kind, eps, span), dim), eps, span)

    @property
    def dim(self) -> int:
        return self.config.dim

    def problems(self) -> list[str]:
        """Every violated membership condition, as readable strings."""
        out = []
        if not 0 < self.eps <= 1:
            out.append(f"eps={self.eps} outside (0, 1]")
        if self.span < 0:
            out.append(f"negative span {self.span}")
        for point, lab in self.config.items:
            v = "[" + ",".join(str(c) for c in point) + "]"
            if self.kind == "I":
                if not isinstance(lab, IntervalClass) or lab.window != Window.half(self.span):
                    out.append(f"label at {v} does not live on (0, {self.span})")
                    continue
            else:
                if not isinstance(lab, MirrorClass) or lab.half_width != self.span:
                    out.append(f"label at {v} does not have half width {self.span}")
                    continue
            if not eps_separated(lab, self.eps):
                out.append(f"label at {v} is not {self.eps}-separated")
        return out

    def is_valid(self) -> bool:
        return not self.problems()

    def validated(self) -> "TildeElem":
        bad = self.problems()
        if bad:
            raise ValidationFailed("; ".join(bad))
        return self


def tilde_sum(a: TildeElem, b: TildeElem) -> TildeElem:
    """Sum in the thickened PAM: only for equal kind, eps and span."""
    if (a.kind, a.eps, a.span) != (b.kind, b.eps, b.span):
        raise NotSummable("thickened elements with different (kind, eps, span)")
    return TildeElem(a.kind, config_sum(a.config, b.config), a.eps, a.span)


def embed(e: TildeElem) -> TildeElem:
    """The embedding ``i`` of the I-kind space into the E-kind space."""
    if e.kind != "I":
        raise ValueError("embed expects an I-kind element")
    cfg = normalize_config(((v, mirror_embed(xi)) for v, xi in e.config.items),
                           MirrorPam(e.span, e.eps), e.dim)
    return TildeElem("E", cfg, e.eps, e.span)
