"""Exact Lagrange interpolation of point counts as polynomials in q."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable


@dataclass(frozen=True)
class RationalPoly:
    """Polynomial in q with Fraction coefficients, constant term first, no trailing zeros."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = [Fraction(c) for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @property
    def degree(self) -> int | None:
        """None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, q) -> Fraction:
        out = Fraction(0)
        for c in reversed(self.coeffs):
            out = out * q + c
        return out

    def has_integer_coefficients(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in reversed(range(len(self.coeffs))):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else "q" if k == 1 else f"q^{k}"
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")


def _poly_mul_linear(p: list[Fraction], root: int) -> list[Fraction]:
    """p(q) * (q - root)."""
    out = [Fraction(0)] * (len(p) + 1)
    for i, c in enumerate(p):
        out[i] -= c * root
        out[i + 1] += c
    return out


def interpolate(samples: Iterable[tuple[int, int]]) -> RationalPoly:
    """The unique polynomial of degree < len(samples) through the (q, count) points."""
    samples = [(int(x), Fraction(y)) for x, y in samples]
    if len(samples) < 2:
        raise ValueError("interpolation needs at least two samples")
    xs = [x for x, _ in samples]
    if len(set(xs)) != len(xs):
        raise ValueError(f"duplicate sample points in {xs}")
    total = [Fraction(0)] * len(samples)
    for i, (xi, yi) in enumerate(samples):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = _poly_mul_linear(basis, xj)
                denom *= xi - xj
        scale = yi / denom
        for k, c in enumerate(basis):
            total[k] += c * scale
    return RationalPoly(tuple(total))
