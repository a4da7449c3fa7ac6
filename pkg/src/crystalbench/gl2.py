"""The explicit gl_2 crystal M_2(w, r), S_2 labels and the tau_2 labeling."""

from __future__ import annotations

from dataclasses import dataclass

from .crystal import Crystal
from .weights import orbit_dim


@dataclass(frozen=True, order=True)
class Gl2Elem:
    """Component M_2(v, w, r): flags of dimension v for a nilpotent of rank r on C^w."""

    v: int
    w: int
    r: int

    def __post_init__(self):
        if not 0 <= self.r <= self.v <= self.w - self.r:
            raise ValueError(f"empty component M_2({self.v},{self.w},{self.r})")

    def __str__(self) -> str:
        return f"M_2({self.v},{self.w},{self.r})"


@dataclass(frozen=True, order=True)
class S2Label:
    """Parameters of S_2(((w1,r1),(w2,r2)),(w1+w2,r))."""

    w1: int
    r1: int
    w2: int
    r2: int
    r: int

    def __str__(self) -> str:
        mu1 = (self.w1 - self.r1, self.r1)
        mu2 = (self.w2 - self.r2, self.r2)
        lam = (self.w1 + self.w2 - self.r, self.r)
        return f"S_2(({_pair(mu1)},{_pair(mu2)}),{_pair(lam)})"


def _pair(p) -> str:
    return f"({p[0]},{p[1]})"


def gl2_crystal(w: int, r: int) -> Crystal:
    """M_2(w, r) on the dimensions v with r <= v <= w - r; empty when 2r > w."""
    if w < 0 or r < 0:
        raise ValueError(f"negative parameters w={w}, r={r}")
    elements = [Gl2Elem(v, w, r) for v in range(r, w - r + 1)]

    def e(a, _k):
        return Gl2Elem(a.v + 1, w, r) if a.v < w - r else None

    def f(a, _k):
        return Gl2Elem(a.v - 1, w, r) if a.v > r else None

    return Crystal.from_rules(2, elements, lambda a: (a.v, w - a.v), e, f)


def s2_nonempty(lbl: S2Label) -> bool:
    lo = lbl.r1 + lbl.r2
    hi = min(lbl.w2 - lbl.r2 + lbl.r1, lbl.w1 - lbl.r1 + lbl.r2)
    return lo <= lbl.r <= hi


def s2_dim(lbl: S2Label) -> int:
    if not s2_nonempty(lbl):
        raise ValueError(f"{lbl} is empty")
    twice = (orbit_dim((lbl.w1 - lbl.r1, lbl.r1)) + orbit_dim((lbl.w2 - lbl.r2, lbl.r2))
             - orbit_dim((lbl.w1 + lbl.w2 - lbl.r, lbl.r)))
    if twice % 2:
        raise ArithmeticError(f"half-integer dimension for {lbl}")
    return lbl.w1 * lbl.w2 + twice // 2


def tau2(v1: int, w1: int, r1: int, v2: int, w2: int, r2: int) -> tuple[int, int]:
    """Image (r0, v) of M_2(v1,w1,r1) x M_2(v2,w2,r2).

    r0 is the S_2 label and the second factor is M_2(v, w1+w2, r0).
    """
    Gl2Elem(v1, w1, r1)
    Gl2Elem(v2, w2, r2)
    r0 = min(w2 - v2 + r1, v1 + r2)
    v = v1 + v2
    assert s2_nonempty(S2Label(w1, r1, w2, r2, r0)), "tau2 produced an empty S_2 label"
    assert r0 <= v <= w1 + w2 - r0, "tau2 produced an empty M_2 component"
    return r0, v


def tau2_element(x: tuple[Gl2Elem, Gl2Elem]) -> tuple[S2Label, Gl2Elem]:
    """tau2 on an element of gl2_crystal(w1,r1) (x) gl2_crystal(w2,r2)."""
    a, b = x
    r0, v = tau2(a.v, a.w, a.r, b.v, b.w, b.r)
    return S2Label(a.w, a.r, b.w, b.r, r0), Gl2Elem(v, a.w + b.w, r0)


def s2_labels(w1: int, r1: int, w2: int, r2: int) -> list[S2Label]:
    """All nonempty labels for fixed (w1,r1),(w2,r2), by increasing r."""
    labels = (S2Label(w1, r1, w2, r2, r) for r in range((w1 + w2) // 2 + 1))
    return [lbl for lbl in labels if s2_nonempty(lbl)]
