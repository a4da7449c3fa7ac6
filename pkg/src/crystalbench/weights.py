"""Weights, partitions and the closed-form dimension formulas.

Weights and partitions are plain tuples of non-negative integers.  Trailing
zeros are meaningful padding (a gl_N weight always has length N) but never
change the value of any formula below.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator, Sequence

Weight = tuple[int, ...]
Partition = tuple[int, ...]


def size(w: Sequence[int]) -> int:
    return sum(w)


def is_partition(w: Sequence[int]) -> bool:
    """True iff the entries are weakly decreasing."""
    return all(a >= b for a, b in zip(w, w[1:]))


def check_weight(w: Sequence[int]) -> Weight:
    w = tuple(int(x) for x in w)
    if not w:
        raise ValueError("a weight needs at least one entry")
    if any(x < 0 for x in w):
        raise ValueError(f"weight entries must be non-negative: {w}")
    return w


def check_partition(p: Sequence[int]) -> Partition:
    p = check_weight(p)
    if not is_partition(p):
        raise ValueError(f"not a partition: {p}")
    return p


def strip(p: Sequence[int]) -> tuple[int, ...]:
    """Drop trailing zeros."""
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def pad(p: Sequence[int], length: int) -> tuple[int, ...]:
    """Pad with zeros (or drop trailing zeros) to exactly `length` entries."""
    core = strip(p)
    if len(core) > length:
        raise ValueError(f"{tuple(p)} has more than {length} non-zero parts")
    return core + (0,) * (length - len(core))


def conjugate(p: Sequence[int], length: int | None = None) -> Partition:
    """Conjugate partition, result_j = #{i : p_i >= j}.

    Without `length` the result has exactly p_1 entries.
    """
    p = strip(p)
    top = p[0] if p else 0
    conj = tuple(sum(1 for x in p if x >= j) for j in range(1, top + 1))
    if length is None:
        return conj
    return pad(conj, length)


def orbit_dim(lam: Sequence[int]) -> int:
    """Dimension of the nilpotent orbit with Jordan type `lam`.

    |lam|^2 minus the centralizer dimension sum(lam_i^2).
    """
    n = sum(lam)
    return n * n - sum(x * x for x in lam)


def rho(N: int, k: int, v: Sequence[int]) -> Weight:
    """Merge entries k and k+1 (1-based) of a length-N weight."""
    if len(v) != N:
        raise ValueError(f"expected a weight of length {N}, got {tuple(v)}")
    if not 1 <= k <= N - 1:
        raise ValueError(f"color k={k} out of range 1..{N - 1}")
    v = tuple(v)
    return v[: k - 1] + (v[k - 1] + v[k],) + v[k + 1:]


def _pair_sum(sizes: Sequence[int]) -> int:
    """sum over ordered pairs i != j of a_i a_j."""
    return 2 * sum(a * b for a, b in combinations(sizes, 2))


def _halve(twice: int, what: str) -> int:
    if twice % 2:
        raise ArithmeticError(f"{what}: half-integer dimension {twice}/2")
    return twice // 2


def spaltenstein_dim(parts: Sequence[Sequence[int]], mu: Sequence[int]) -> int:
    """Dimension of the l-step Spaltenstein variety S_l(parts, mu).

    The value is only meaningful when the variety is non-empty; emptiness is
    decided by point counting, not here.
    """
    sizes = [sum(lam) for lam in parts]
    if sum(sizes) != sum(mu):
        raise ValueError(f"sizes {sizes} do not add up to |mu| = {sum(mu)}")
    twice = _pair_sum(sizes) - orbit_dim(mu) + sum(orbit_dim(lam) for lam in parts)
    return _halve(twice, "spaltenstein_dim")


def spaltenstein_dim_alt(parts: Sequence[Sequence[int]], mu: Sequence[int]) -> int:
    """Same dimension via |mu|(|mu|-1) - sum |lam^i|(|lam^i|-1)."""
    n = sum(mu)
    sizes = [sum(lam) for lam in parts]
    if sum(sizes) != n:
        raise ValueError(f"sizes {sizes} do not add up to |mu| = {n}")
    twice = (n * (n - 1) - sum(a * (a - 1) for a in sizes)
             - orbit_dim(mu) + sum(orbit_dim(lam) for lam in parts))
    return _halve(twice, "spaltenstein_dim_alt")


def m_dim(v: Sequence[int], lam: Sequence[int]) -> int:
    """Dimension of the flag variety M_N(v, lam) (flags with t F_i in F_{i-1})."""
    if sum(v) != sum(lam):
        raise ValueError(f"|v| = {sum(v)} differs from |lam| = {sum(lam)}")
    return _halve(_pair_sum(v) - orbit_dim(lam), "m_dim")


def t_dim(v: Sequence[int], mu1: Sequence[int], mu2: Sequence[int]) -> int:
    """Dimension of the tensor product variety T_N(v, mu1, mu2)."""
    a, b = sum(mu1), sum(mu2)
    if sum(v) != a + b:
        raise ValueError(f"|v| = {sum(v)} differs from |mu1| + |mu2| = {a + b}")
    twice = _pair_sum(v) + orbit_dim(mu1) + orbit_dim(mu2)
    return a * b + _halve(twice, "t_dim")


def enumerate_weights(N: int, k: int) -> list[Weight]:
    """All of Q_N(k) in lexicographic order."""
    if N < 1:
        raise ValueError("N must be positive")

    def rec(slots: int, total: int) -> Iterator[Weight]:
        if slots == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in rec(slots - 1, total - first):
                yield (first,) + rest

    return list(rec(N, k))


def enumerate_partitions(N: int, k: int) -> list[Partition]:
    """All of Q_N^+(k) in lexicographic order."""
    if N < 1:
        raise ValueError("N must be positive")
    out: list[Partition] = []

    def rec(prefix: tuple[int, ...], remaining: int, cap: int) -> None:
        if len(prefix) == N:
            if remaining == 0:
                out.append(prefix)
            return
        slots = N - len(prefix)
        # every later part is <= this one, so this part must be >= ceil(remaining/slots)
        lo = -(-remaining // slots)
        for part in range(lo, min(cap, remaining) + 1):
            rec(prefix + (part,), remaining - part, part)

    rec((), k, k)
    return sorted(out)


def format_weight(w: Sequence[int]) -> str:
    return ",".join(str(x) for x in w)


def parse_weight(text: str) -> Weight:
    """Parse the comma-separated form, e.g. "2,1,0"."""
    text = text.strip()
    if not text:
        raise ValueError("empty weight")
    try:
        return check_weight(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad weight {text!r}: {exc}") from None


def parse_partition(text: str) -> Partition:
    w = parse_weight(text)
    if not is_partition(w):
        raise ValueError(f"{text!r} is not a partition")
    return w
