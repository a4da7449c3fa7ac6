"""Linear algebra over the prime field F_p with numpy integer arrays.

Matrices act on column vectors; subspaces are stored as row bases, so the
image of a subspace with basis B under t has basis B @ t.T.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

import numpy as np

from ..weights import Partition, conjugate

MAX_SIZE = 6


class NotNilpotent(ValueError):
    pass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p ** 0.5) + 1))


def check_prime(p: int) -> int:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return p


def first_primes(count: int) -> list[int]:
    out, p = [], 2
    while len(out) < count:
        if is_prime(p):
            out.append(p)
        p += 1
    return out


@lru_cache(maxsize=None)
def inverse_table(p: int) -> np.ndarray:
    table = np.zeros(p, dtype=np.int64)
    for x in range(1, p):
        table[x] = pow(x, p - 2, p)
    table.flags.writeable = False
    return table


def as_matrix(m, p: int) -> np.ndarray:
    return np.asarray(m, dtype=np.int64) % p


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return (a @ b) % p


def matpow(t: np.ndarray, k: int, p: int) -> np.ndarray:
    out = np.eye(t.shape[-1], dtype=np.int64)
    if t.ndim == 3:
        out = np.broadcast_to(out, t.shape).copy()
    for _ in range(k):
        out = (out @ t) % p
    return out


def rref(m, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over F_p (zero rows dropped) and pivot columns."""
    a = as_matrix(m, p).copy()
    if a.ndim != 2:
        raise ValueError("rref needs a 2-d array")
    inv = inverse_table(p)
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if not len(nz):
            continue
        j = r + nz[0]
        a[[r, j]] = a[[j, r]]
        a[r] = (a[r] * inv[a[r, c]]) % p
        factors = a[:, c].copy()
        factors[r] = 0
        a = (a - factors[:, None] * a[r][None, :]) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(m, p: int) -> int:
    m = np.asarray(m)
    if m.size == 0:
        return 0
    return len(rref(m, p)[1])


def batched_rank(a: np.ndarray, p: int) -> np.ndarray:
    """Ranks of a stack of matrices, shape (S, r, c) -> (S,)."""
    a = np.asarray(a, dtype=np.int64) % p
    S, r, c = a.shape
    rk = np.zeros(S, dtype=np.int64)
    if S == 0 or r == 0 or c == 0:
        return rk
    a = a.copy()
    inv = inverse_table(p)
    rows = np.arange(r)
    for col in range(c):
        cand = (a[:, :, col] != 0) & (rows[None, :] >= rk[:, None])
        has = cand.any(axis=1)
        if not has.any():
            continue
        b = np.flatnonzero(has)
        piv = np.argmax(cand[b], axis=1)
        dst = rk[b]
        top = a[b, piv].copy()
        a[b, piv] = a[b, dst]
        top = (top * inv[top[:, col]][:, None]) % p
        a[b, dst] = top
        factors = a[b, :, col].copy()
        factors[np.arange(len(b)), dst] = 0
        a[b] = (a[b] - factors[:, :, None] * top[:, None, :]) % p
        rk[b] += 1
        if (rk >= r).all():
            break
    return rk


def nullspace(m, p: int, ncols: int | None = None) -> np.ndarray:
    """Row basis of {x : m x = 0}."""
    m = np.asarray(m, dtype=np.int64)
    cols = m.shape[1] if m.ndim == 2 and m.size else ncols
    if cols is None:
        raise ValueError("cannot infer the number of columns of an empty matrix")
    if m.size == 0:
        return np.eye(cols, dtype=np.int64)
    r, pivots = rref(m, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, fc in enumerate(free):
        basis[i, fc] = 1
        for row, pc in enumerate(pivots):
            basis[i, pc] = (-r[row, fc]) % p
    return basis


def annihilator(basis, n: int, p: int) -> np.ndarray:
    """Row basis of the vectors y with b . y = 0 for every row b.

    U lies in W iff U @ annihilator(W).T == 0.
    """
    return nullspace(np.asarray(basis, dtype=np.int64).reshape(-1, n), p, ncols=n)


def preimage(t: np.ndarray, basis, p: int) -> np.ndarray:
    """Row basis of t^{-1}(W) for W spanned by the rows of `basis`."""
    n = t.shape[0]
    ann = annihilator(basis, n, p)
    if not len(ann):
        return np.eye(n, dtype=np.int64)
    return nullspace((ann @ t) % p, p, ncols=n)


def inverse(m, p: int) -> np.ndarray:
    m = as_matrix(m, p)
    n = m.shape[0]
    r, pivots = rref(np.hstack([m, np.eye(n, dtype=np.int64)]), p)
    if pivots[:n] != list(range(n)) or len(r) < n:
        raise ZeroDivisionError("singular matrix")
    return r[:, n:]


def jordan_matrix(lam: Sequence[int], p: int) -> np.ndarray:
    """Nilpotent with Jordan type lam: blocks of sizes conjugate(lam), ones above the diagonal."""
    n = sum(lam)
    if n > MAX_SIZE:
        raise ValueError(f"size {n} exceeds the cap {MAX_SIZE}")
    t = np.zeros((n, n), dtype=np.int64)
    start = 0
    for b in conjugate(lam):
        for i in range(start + 1, start + b):
            t[i - 1, i] = 1
        start += b
    return t


def block_coordinates(lam: Sequence[int]) -> dict[tuple[int, int], int]:
    """Coordinate of e_i^j in jordan_matrix(lam).

    t e_i^j = e_{i-1}^j and block j has conj(lam)_j rows.
    """
    coords, start = {}, 0
    for j, b in enumerate(conjugate(lam), start=1):
        for i in range(1, b + 1):
            coords[(i, j)] = start + i - 1
        start += b
    return coords


def rank_profile(t: np.ndarray, p: int, upto: int | None = None) -> list[int]:
    """[rank t^0, rank t^1, ..., rank t^upto]."""
    n = t.shape[0]
    upto = n if upto is None else upto
    out, power = [], np.eye(n, dtype=np.int64)
    for _ in range(upto + 1):
        out.append(rank(power, p))
        power = (power @ t) % p
    return out


def type_from_ranks(ranks: Sequence[int]) -> Partition:
    return tuple(ranks[i - 1] - ranks[i] for i in range(1, len(ranks)))


def ranks_from_type(lam: Sequence[int], upto: int) -> list[int]:
    """rank t^k = sum_{i>k} lam_i for a nilpotent of type lam."""
    lam = tuple(lam)
    return [sum(lam[k:]) for k in range(upto + 1)]


def jordan_type(t, p: int) -> Partition:
    t = as_matrix(t, p)
    n = t.shape[0]
    if n and matpow(t, n, p).any():
        raise NotNilpotent("matrix is not nilpotent")
    return type_from_ranks(rank_profile(t, p, n))


def induced_operator(t: np.ndarray, basis, p: int) -> tuple[np.ndarray, np.ndarray]:
    """(t restricted to W, t on V/W) in a basis adapted to W.

    The echelon basis of W is extended by the unit vectors at its non-pivot
    columns; both blocks act on column vectors.
    """
    t = as_matrix(t, p)
    n = t.shape[0]
    r, pivots = rref(np.asarray(basis).reshape(-1, n), p)
    m = len(pivots)
    free = [c for c in range(n) if c not in pivots]
    ext = np.zeros((n - m, n), dtype=np.int64)
    ext[np.arange(n - m), free] = 1
    adapted = np.vstack([r, ext])
    coords = (adapted @ t.T @ inverse(adapted, p)) % p
    if coords[:m, m:].any():
        raise ValueError("subspace is not t-invariant")
    return coords[:m, :m].T.copy(), coords[m:, m:].T.copy()
