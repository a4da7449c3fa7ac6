"""Tensor product decompositions, LR multiplicities and the operational tau_N."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .crystal import (Crystal, canonical_signature, decompose, highest_indices,
                      lower_along, raise_index, tensor)
from .tableaux import Tableau, crystal_of, highest_tableau
from .weights import Partition, check_partition, format_weight, pad, parse_partition


def _shapes(factors: Sequence[Sequence[int]], n: int) -> tuple[Partition, ...]:
    return tuple(pad(check_partition(mu), n) for mu in factors)


@lru_cache(maxsize=256)
def _product(shapes: tuple[Partition, ...], n: int, assoc: str) -> Crystal:
    if not shapes:
        raise ValueError("need at least one factor")
    crystals = [crystal_of(mu, n) for mu in shapes]
    if assoc == "left":
        out = crystals[0]
        for c in crystals[1:]:
            out = tensor(out, c)
        return out
    if assoc == "right":
        out = crystals[-1]
        for c in reversed(crystals[:-1]):
            out = tensor(c, out)
        return out
    raise ValueError(f"unknown association {assoc!r}")


def product_crystal(factors: Sequence[Sequence[int]], n: int, assoc: str = "left") -> Crystal:
    """crystal_of(mu^1) (x) ... (x) crystal_of(mu^l), cached."""
    return _product(_shapes(factors, n), n, assoc)


@dataclass
class DecompositionReport:
    factors: tuple[Partition, ...]
    entries: dict[Partition, tuple[int, list]] = field(default_factory=dict)
    total: int = 0

    def multiplicities(self) -> dict[Partition, int]:
        return {lam: m for lam, (m, _) in self.entries.items()}

    def to_json(self) -> str:
        return json.dumps({
            "factors": [format_weight(mu) for mu in self.factors],
            "components": [{"lambda": format_weight(lam), "multiplicity": m}
                           for lam, (m, _) in self.entries.items()],
            "total": self.total,
        })

    @classmethod
    def from_json(cls, text: str) -> "DecompositionReport":
        data = json.loads(text)
        entries = {parse_partition(c["lambda"]): (int(c["multiplicity"]), [])
                   for c in data["components"]}
        return cls(tuple(parse_partition(f) for f in data["factors"]), entries, int(data["total"]))

    def to_text(self) -> str:
        lines = [" (x) ".join(f"L({format_weight(mu)})" for mu in self.factors)]
        for lam, (m, _) in self.entries.items():
            lines.append(f"  L({format_weight(lam)}) x {m}")
        lines.append(f"total {self.total}")
        return "\n".join(lines)


def decompose_product(factors: Sequence[Sequence[int]], n: int,
                      assoc: str = "left") -> DecompositionReport:
    shapes = _shapes(factors, n)
    c = product_crystal(shapes, n, assoc)
    report = DecompositionReport(shapes, total=len(c))
    for lam, _members, head in decompose(c):
        m, heads = report.entries.get(lam, (0, []))
        report.entries[lam] = (m + 1, heads + [head])
    return report


def lr_coefficient(mu1: Sequence[int], mu2: Sequence[int], lam: Sequence[int], n: int) -> int:
    """Number of highest elements of weight lam in crystal_of(mu1) (x) crystal_of(mu2)."""
    mu1, mu2, lam = (pad(check_partition(p), n) for p in (mu1, mu2, lam))
    if sum(lam) != sum(mu1) + sum(mu2):
        raise ValueError(f"|{lam}| != |{mu1}| + |{mu2}|")
    c = product_crystal((mu1, mu2), n)
    return sum(1 for i in highest_indices(c) if tuple(c.weights[i]) == lam)


def verify_component_isomorphism(report: DecompositionReport) -> bool:
    n = len(report.factors[0])
    c = product_crystal(report.factors, n)
    for lam, (_m, heads) in report.entries.items():
        model = crystal_of(lam, n)
        expected = canonical_signature(model, highest_tableau(lam, n))
        if any(canonical_signature(c, h) != expected for h in heads):
            return False
    return True


@lru_cache(maxsize=64)
def _tau_tables(mu1: Partition, mu2: Partition, n: int):
    """Per product index: (lam, slot, image tableau)."""
    c = product_crystal((mu1, mu2), n)
    slot_of = {}
    per_weight: dict[Partition, int] = {}
    for h in highest_indices(c):
        lam = tuple(int(x) for x in c.weights[h])
        slot_of[int(h)] = per_weight.get(lam, 0)
        per_weight[lam] = slot_of[int(h)] + 1
    out = []
    for i in range(len(c)):
        h, path = raise_index(c, i)
        lam = tuple(int(x) for x in c.weights[h])
        image = lower_along(crystal_of(lam, n), highest_tableau(lam, n), path)
        if image is None:
            raise AssertionError(f"path {path} leaves crystal_of({lam})")
        out.append((lam, slot_of[h], image))
    return out


def tau_n(mu1: Sequence[int], mu2: Sequence[int], n: int, x) -> tuple[Partition, int, Tableau]:
    """Image of x in the slot-indexed union of crystal_of(lam).

    The slot is the position of x's highest element among the highest
    elements of the same weight, in enumeration order.
    """
    mu1, mu2 = pad(check_partition(mu1), n), pad(check_partition(mu2), n)
    c = product_crystal((mu1, mu2), n)
    return _tau_tables(mu1, mu2, n)[c.index(x)]


def verify_tau_n(mu1: Sequence[int], mu2: Sequence[int], n: int) -> list[str]:
    """Check tau_n is a weight-preserving bijection commuting with all e_k, f_k.

    Returns a list of failures (empty on success).
    """
    mu1, mu2 = pad(check_partition(mu1), n), pad(check_partition(mu2), n)
    c = product_crystal((mu1, mu2), n)
    table = _tau_tables(mu1, mu2, n)
    problems = []
    if len(set(table)) != len(table):
        problems.append("tau_n is not injective")
    slots: dict[Partition, int] = {}
    for lam, s, _ in table:
        slots[lam] = max(slots.get(lam, 0), s + 1)
    if sum(m * len(crystal_of(lam, n)) for lam, m in slots.items()) != len(c):
        problems.append("tau_n is not surjective")
    for i, (lam, s, img) in enumerate(table):
        target = crystal_of(lam, n)
        if tuple(int(x) for x in c.weights[i]) != target.wt(img):
            problems.append(f"weight not preserved at {c.elements[i]}")
        for k in range(1, n):
            for tab, op in ((c.e_table, target.e), (c.f_table, target.f)):
                j = int(tab[k - 1, i])
                expected = op(img, k)
                got = None if j < 0 else table[j]
                if (got is None) != (expected is None):
                    problems.append(f"operator {k} disagrees at {c.elements[i]}")
                elif got is not None and got != (lam, s, expected):
                    problems.append(f"operator {k} disagrees at {c.elements[i]}")
    return problems
