"""Exact symmetric polynomials: Jacobi-Trudi Schur polynomials and Schur expansion.

Independent of the tableau model: Schur polynomials come from determinants of
complete homogeneous polynomials, never from tableau enumeration.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Mapping, Sequence

from .weights import Partition, Weight, check_partition, enumerate_weights, pad, strip


class ExactPolynomial:
    """Polynomial in n variables with integer coefficients, keyed by exponent vectors."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Weight, int] | None = None):
        self.n = n
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(x) for x in exp)
            if len(exp) != n:
                raise ValueError(f"exponent {exp} has wrong length for {n} variables")
            if c:
                clean[exp] = clean.get(exp, 0) + int(c)
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def one(cls, n: int) -> "ExactPolynomial":
        return cls(n, {(0,) * n: 1})

    def _same(self, other: "ExactPolynomial") -> None:
        if self.n != other.n:
            raise ValueError("polynomials in different numbers of variables")

    def __add__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        self._same(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return ExactPolynomial(self.n, out)

    def __neg__(self) -> "ExactPolynomial":
        return ExactPolynomial(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        return self + (-other)

    def scale(self, c: int) -> "ExactPolynomial":
        return ExactPolynomial(self.n, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        self._same(other)
        out: dict[Weight, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return ExactPolynomial(self.n, out)

    def __eq__(self, other) -> bool:
        return (isinstance(other, ExactPolynomial) and self.n == other.n
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def evaluate(self, point: Sequence[int]) -> int:
        total = 0
        for e, c in self.terms.items():
            term = c
            for x, k in zip(point, e):
                term *= x ** k
            total += term
        return total

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(f"x{i + 1}" + (f"^{k}" if k > 1 else "")
                            for i, k in enumerate(e) if k)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


@lru_cache(maxsize=None)
def complete_homogeneous(d: int, n: int) -> ExactPolynomial:
    """h_d in n variables: every monomial of degree d with coefficient 1 (0 for d < 0)."""
    if d < 0:
        return ExactPolynomial(n)
    if d == 0:
        return ExactPolynomial.one(n)
    return ExactPolynomial(n, {e: 1 for e in enumerate_weights(n, d)})


def _sign(perm: Sequence[int]) -> int:
    sign, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@lru_cache(maxsize=None)
def _schur(lam: Partition, n: int) -> ExactPolynomial:
    core = strip(lam)
    m = len(core)
    total = ExactPolynomial(n)
    for perm in permutations(range(m)):
        term = ExactPolynomial.one(n)
        for i in range(m):
            term = term * complete_homogeneous(core[i] - i + perm[i], n)
            if not term:
                break
        if term:
            total = total + term.scale(_sign(perm))
    return total


def schur(lam: Sequence[int], n: int) -> ExactPolynomial:
    """s_lam(x_1..x_n) as det(h_{lam_i - i + j}) over the non-zero rows of lam."""
    lam = check_partition(lam)
    if len(strip(lam)) > n:
        raise ValueError(f"{tuple(lam)} does not fit in {n} rows")
    return _schur(strip(lam), n)


def is_symmetric(p: ExactPolynomial) -> bool:
    for e, c in p.terms.items():
        for i in range(p.n - 1):
            swapped = e[:i] + (e[i + 1], e[i]) + e[i + 2:]
            if p.terms.get(swapped) != c:
                return False
    return True


def decompose_into_schur(p: ExactPolynomial, n: int | None = None) -> dict[Partition, int]:
    """Coefficients of p in the Schur basis, peeling off the lex-largest monomial."""
    n = p.n if n is None else n
    if n != p.n:
        raise ValueError(f"polynomial has {p.n} variables, not {n}")
    if not is_symmetric(p):
        raise ValueError("polynomial is not symmetric")
    out: dict[Partition, int] = {}
    rest = p
    while rest:
        lead = max(rest.terms)
        c = rest.terms[lead]
        if c < 0:
            raise ArithmeticError(f"negative Schur coefficient {c} at {lead}")
        out[lead] = c
        rest = rest - schur(lead, n).scale(c)
    return dict(sorted(out.items(), reverse=True))


def dim_of(lam: Sequence[int], n: int) -> int:
    return schur(lam, n).evaluate([1] * n)


def structure_constants(mu1: Sequence[int], mu2: Sequence[int], n: int) -> dict[Partition, int]:
    """c^lam_{mu1 mu2} for all lam with at most n rows."""
    return decompose_into_schur(schur(mu1, n) * schur(mu2, n), n)


def lr_oracle(mu1: Sequence[int], mu2: Sequence[int], lam: Sequence[int], n: int) -> int:
    return structure_constants(mu1, mu2, n).get(pad(lam, n), 0)
