"""Subspaces of F_q^n, enumerated by echelon pattern."""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

from .linalg import MAX_SIZE, rref

DEFAULT_BUDGET = 10 ** 8
BUDGET_ENV = "CRYSTALBENCH_BUDGET"


class BudgetExceeded(RuntimeError):
    """An enumeration would visit more candidates than the configured budget."""


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(float(raw))
    except ValueError:
        raise ValueError(f"{BUDGET_ENV}={raw!r} is not a number") from None
    if value <= 0:
        raise ValueError(f"{BUDGET_ENV} must be positive")
    return value


def check_budget(count: int, budget: int | None, what: str) -> None:
    budget = default_budget() if budget is None else budget
    if count > budget:
        raise BudgetExceeded(f"{what}: {count} candidates exceed the budget {budget}")


def gaussian_binomial(n: int, m: int, q: int) -> int:
    if m < 0 or m > n:
        return 0
    num = den = 1
    for i in range(m):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


@dataclass(frozen=True)
class Subspace:
    """A subspace of F_q^n held by its reduced echelon basis (unique per subspace)."""

    n: int
    q: int
    basis: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows, n: int, q: int) -> "Subspace":
        rows = np.asarray(rows, dtype=np.int64).reshape(-1, n)
        r, _ = rref(rows, q) if len(rows) else (rows, [])
        return cls(n, q, tuple(tuple(int(x) for x in row) for row in r))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def array(self) -> np.ndarray:
        return np.array(self.basis, dtype=np.int64).reshape(self.dim, self.n)

    def __contains__(self, vec) -> bool:
        vec = np.asarray(vec, dtype=np.int64).reshape(1, self.n)
        return Subspace.from_rows(np.vstack([self.array(), vec]), self.n, self.q).dim == self.dim


def _fillings(q: int, k: int) -> np.ndarray:
    """All q^k vectors over 0..q-1, first coordinate varying fastest."""
    idx = np.arange(q ** k, dtype=np.int64)
    return (idx[:, None] // (q ** np.arange(k, dtype=np.int64))[None, :]) % q


@lru_cache(maxsize=128)
def _all_subspaces(n: int, m: int, q: int) -> np.ndarray:
    chunks = []
    for pivots in combinations(range(n), m):
        free = [(r, c) for r, pc in enumerate(pivots) for c in range(pc + 1, n) if c not in pivots]
        fill = _fillings(q, len(free))
        block = np.zeros((len(fill), m, n), dtype=np.int64)
        for r, pc in enumerate(pivots):
            block[:, r, pc] = 1
        for j, (r, c) in enumerate(free):
            block[:, r, c] = fill[:, j]
        chunks.append(block)
    out = np.concatenate(chunks) if chunks else np.zeros((1, 0, n), dtype=np.int64)
    out.flags.writeable = False
    return out


def subspace_batch(n: int, m: int, q: int, budget: int | None = None) -> np.ndarray:
    """Echelon bases of every m-dimensional subspace of F_q^n, shape (count, m, n); read-only."""
    if not 0 <= m <= n <= MAX_SIZE:
        raise ValueError(f"need 0 <= m <= n <= {MAX_SIZE}, got n={n}, m={m}")
    check_budget(gaussian_binomial(n, m, q), budget, f"subspaces Gr({m},{n}) over F_{q}")
    return _all_subspaces(n, m, q)


def enumerate_subspaces(n: int, m: int, q: int, budget: int | None = None) -> list[Subspace]:
    batch = subspace_batch(n, m, q, budget)
    return [Subspace(n, q, tuple(tuple(int(x) for x in row) for row in b)) for b in batch]


def subspaces_between(lower, upper, m: int, q: int, budget: int | None = None) -> np.ndarray:
    """Bases of all U with lower <= U <= upper and dim U = dim lower + m.

    `lower` must lie in `upper`.  Output shape (count, dim lower + m, n); the
    rows are a basis of U but not necessarily echelon.
    """
    upper = np.asarray(upper, dtype=np.int64)
    n = upper.shape[-1]
    up, up_piv = rref(upper.reshape(-1, n), q)
    lower = np.asarray(lower, dtype=np.int64).reshape(-1, n)
    # echelon rows have the identity at their pivots, so x[up_piv] are coordinates
    low_coords = lower[:, up_piv] % q
    low, low_piv = rref(low_coords, q) if len(lower) else (low_coords, [])
    p = len(up_piv)
    f = len(low_piv)
    if not 0 <= m <= p - f:
        return np.zeros((0, f + m, n), dtype=np.int64)
    free = [c for c in range(p) if c not in low_piv]
    w = subspace_batch(p - f, m, q, budget)
    emb = np.zeros((len(w), m, p), dtype=np.int64)
    emb[:, :, free] = w
    coords = np.concatenate([np.broadcast_to(low, (len(w), f, p)), emb], axis=1)
    return (coords @ up) % q
