"""Point counts over F_q of nilpotent orbits, Spaltenstein varieties, flag varieties
of nilpotents and tensor product varieties.

Every count is an exact Python int.  Subfactor Jordan types are read off rank
sequences: for t-invariant W in U, rank of t^k on U/W is dim(t^k U + W) - dim W.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np

from ..weights import check_partition, check_weight, enumerate_partitions, pad
from .linalg import (MAX_SIZE, annihilator, batched_rank, block_coordinates, check_prime,
                     induced_operator, jordan_matrix, jordan_type, matpow, nullspace, preimage,
                     ranks_from_type, type_from_ranks)
from .subspaces import (Subspace, check_budget, gaussian_binomial, subspace_batch,
                        subspaces_between)

MATRIX_CHUNK = 1 << 18


def _parallel_sum(func: Callable[..., int], tasks: Sequence[tuple], jobs: int) -> int:
    """sum(func(*task)); with jobs > 1 the tasks run in worker processes."""
    if jobs <= 1 or len(tasks) <= 1:
        return sum(func(*task) for task in tasks)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return sum(pool.map(func, *zip(*tasks)))


def _chunks(arr: np.ndarray, parts: int) -> list[np.ndarray]:
    parts = max(1, min(parts, len(arr)))
    return [c for c in np.array_split(arr, parts) if len(c)]


def _stack(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Concatenate row blocks, broadcasting a single matrix against a batch."""
    if a.ndim == 2:
        a = np.broadcast_to(a, (len(b),) + a.shape)
    if b.ndim == 2:
        b = np.broadcast_to(b, (len(a),) + b.shape)
    return np.concatenate([a, b], axis=1)


def _target_ranks(lam: Sequence[int], size: int) -> list[int]:
    return ranks_from_type(pad(lam, size), size)


def _quotient_ranks_ok(upper: np.ndarray, lower: np.ndarray, powers_t: list[np.ndarray],
                       target: list[int], q: int) -> np.ndarray:
    """Mask of batch items whose t on upper/lower has the rank sequence `target`."""
    f = lower.shape[-2]
    ok = np.ones(len(upper), dtype=bool)
    for k in range(1, len(target)):
        img = (upper @ powers_t[k]) % q
        ok &= batched_rank(_stack(lower, img), q) - f == target[k]
    return ok


def _transposed_powers(t: np.ndarray, q: int) -> list[np.ndarray]:
    n = t.shape[0]
    return [matpow(t, k, q).T.copy() for k in range(n + 1)]


# ---------------------------------------------------------------- Spaltenstein


def _spaltenstein_tail(cands: np.ndarray, lower: np.ndarray, level: int, t: np.ndarray,
                       parts: tuple, q: int, budget: int | None) -> int:
    """Count flags whose level-th member runs over `cands` (all contain `lower`)."""
    n = t.shape[0]
    pt = _transposed_powers(t, q)
    dim = cands.shape[1]
    ok = batched_rank(_stack(cands, (cands @ pt[1]) % q), q) == dim
    step = dim - lower.shape[-2]
    ok &= _quotient_ranks_ok(cands, lower, pt, _target_ranks(parts[level], step), q)
    cands = cands[ok]
    if level + 1 == len(parts) - 1:
        full = np.eye(n, dtype=np.int64)
        ok = _quotient_ranks_ok(np.broadcast_to(full, (len(cands), n, n)), cands, pt,
                                _target_ranks(parts[-1], n - dim), q)
        return int(ok.sum())
    total = 0
    nxt = sum(parts[level + 1])
    for c in cands:
        deeper = subspaces_between(c, np.eye(n, dtype=np.int64), nxt, q, budget)
        total += _spaltenstein_tail(deeper, c, level + 1, t, parts, q, budget)
    return total


def count_spaltenstein(parts: Sequence[Sequence[int]], mu: Sequence[int], q: int,
                       budget: int | None = None, jobs: int = 1) -> int:
    """Number of t-invariant flags 0 = F_0 < ... < F_l = F_q^n with J(t on F_i/F_{i-1}) = parts[i].

    t = jordan_matrix(mu).  Sizes are capped at 5 for l = 2 and 4 for l >= 3.
    """
    mu = check_partition(mu)
    parts = [check_partition(p) for p in parts]
    n = sum(mu)
    sizes = [sum(p) for p in parts]
    if sum(sizes) != n:
        raise ValueError(f"sizes {sizes} do not add up to |mu| = {n}")
    cap = MAX_SIZE if len(parts) == 1 else 5 if len(parts) == 2 else 4
    if n > cap:
        raise ValueError(f"|mu| = {n} exceeds the cap {cap} for {len(parts)}-step flags")
    if n == 0:
        return 1
    t = jordan_matrix(mu, q)
    if len(parts) == 1:
        return int(pad(parts[0], n) == pad(mu, n))
    norm = tuple(pad(p, s) for p, s in zip(parts, sizes))
    zero = np.zeros((0, n), dtype=np.int64)
    cands = subspaces_between(zero, np.eye(n, dtype=np.int64), sizes[0], q, budget)
    tasks = [(chunk, zero, 0, t, norm, q, budget) for chunk in _chunks(cands, jobs)]
    return _parallel_sum(_spaltenstein_tail, tasks, jobs)


# ---------------------------------------------------------------- flag varieties


def _last_level_counts(t: np.ndarray, lowers: np.ndarray, d: int, q: int) -> np.ndarray:
    """Number of F with lower <= F <= t^{-1}(lower), tV <= F, dim F/lower = d, per lower."""
    n = t.shape[0]
    f = lowers.shape[1]
    image = t.T.copy()
    image2 = matpow(t, 2, q).T.copy()
    span = batched_rank(_stack(lowers, image), q)
    ok = batched_rank(_stack(lowers, image2), q) == f
    room = n - 2 * span + f
    forced = span - f
    return np.array([gaussian_binomial(int(a), d - int(b), q) if good else 0
                     for a, b, good in zip(room, forced, ok)], dtype=object)


def _mflag_rec(t: np.ndarray, v: tuple[int, ...], level: int, lower: np.ndarray, q: int,
               budget: int | None, closed_form: bool) -> int:
    """Flags from F_level on, given F_{level-1} = lower."""
    N = len(v)
    cands = subspaces_between(lower, preimage(t, lower, q), v[level - 1], q, budget)
    if level == N - 1:
        ok = batched_rank(_stack(cands, t.T.copy()), q) == cands.shape[1]
        return int(ok.sum())
    if closed_form and level == N - 2:
        return int(sum(_last_level_counts(t, cands, v[N - 2], q)))
    return sum(_mflag_rec(t, v, level + 1, c, q, budget, closed_form) for c in cands)


def count_mflags(v: Sequence[int], lam: Sequence[int], q: int, method: str = "closed",
                 budget: int | None = None) -> int:
    """Number of flags F_0 = 0 <= ... <= F_N = F_q^n of dimension vector v with t F_i <= F_{i-1}.

    t = jordan_matrix(lam).  method="closed" counts the last free member by a
    Gaussian binomial; method="enumerate" visits every flag.
    """
    v = check_weight(v)
    lam = check_partition(lam)
    n = sum(lam)
    if sum(v) != n:
        raise ValueError(f"|v| = {sum(v)} differs from |lam| = {n}")
    if n > 5 or len(v) > 4:
        raise ValueError("count_mflags is capped at |lam| <= 5 and N <= 4")
    if method not in ("closed", "enumerate"):
        raise ValueError(f"unknown method {method!r}")
    if n == 0:
        return 1
    t = jordan_matrix(lam, q)
    zero = np.zeros((0, n), dtype=np.int64)
    N = len(v)
    if N == 1:
        return int(not t.any())
    if method == "closed" and N == 2:
        return int(_last_level_counts(t, zero[None], v[0], q)[0])
    return _mflag_rec(t, v, 1, zero, q, budget, method == "closed")


# ---------------------------------------------------------------- nilpotent orbits


def _matrices(start: int, stop: int, n: int, q: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    digits = (idx[:, None] // (q ** np.arange(n * n, dtype=np.int64))[None, :]) % q
    return digits.reshape(-1, n, n)


def _nilpotent_chunk(start: int, stop: int, n: int, q: int, power: int) -> np.ndarray:
    m = _matrices(start, stop, n, q)
    # nilpotent matrices have zero trace; the cheap test prunes most candidates
    m = m[np.trace(m, axis1=1, axis2=2) % q == 0]
    return m[~matpow(m, power, q).reshape(len(m), -1).any(axis=1)]


def _type_histogram_chunk(start: int, stop: int, n: int, q: int) -> Counter:
    m = _nilpotent_chunk(start, stop, n, q, n)
    profile = np.zeros((len(m), n), dtype=np.int64)
    power = m
    for k in range(n):
        profile[:, k] = batched_rank(power, q)
        power = (power @ m) % q
    keys, counts = np.unique(profile, axis=0, return_counts=True)
    return Counter({tuple(int(x) for x in key): int(c) for key, c in zip(keys, counts)})


@lru_cache(maxsize=32)
def nilpotent_type_histogram(n: int, q: int, jobs: int = 1) -> dict[tuple[int, ...], int]:
    """Number of nilpotent n x n matrices over F_q of each Jordan type, by scanning all q^(n^2)."""
    tasks = [(s, e, n, q) for s, e in _ranges(q ** (n * n), MATRIX_CHUNK)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_type_histogram_chunk, *zip(*tasks)))
    else:
        parts = [_type_histogram_chunk(*task) for task in tasks]
    total: Counter = Counter()
    for part in parts:
        total.update(part)
    out = {}
    for ranks, c in total.items():
        lam = type_from_ranks((n,) + ranks)
        out[lam] = out.get(lam, 0) + c
    return dict(sorted(out.items(), reverse=True))


def _ranges(total: int, chunk: int) -> list[tuple[int, int]]:
    return [(s, min(s + chunk, total)) for s in range(0, total, chunk)]


_ORBITS: dict[tuple, int] = {}


def gl_order(n: int, q: int) -> int:
    out = 1
    for i in range(n):
        out *= q ** n - q ** i
    return out


def centralizer_units(t: np.ndarray, q: int, budget: int | None = None) -> int:
    """Number of invertible matrices commuting with t, by enumerating the centralizer algebra."""
    n = t.shape[0]
    columns = []
    for a in range(n):
        for b in range(n):
            e = np.zeros((n, n), dtype=np.int64)
            e[a, b] = 1
            columns.append(((e @ t - t @ e) % q).reshape(-1))
    basis = nullspace(np.array(columns).T % q, q, ncols=n * n)
    dim = len(basis)
    check_budget(q ** dim, budget, f"centralizer algebra of dimension {dim} over F_{q}")
    total = 0
    for start, stop in _ranges(q ** dim, MATRIX_CHUNK):
        idx = np.arange(start, stop, dtype=np.int64)
        coeffs = (idx[:, None] // (q ** np.arange(dim, dtype=np.int64))[None, :]) % q
        mats = ((coeffs @ basis) % q).reshape(-1, n, n)
        total += int((batched_rank(mats, q) == n).sum())
    return total


def count_nilpotent_orbit(lam: Sequence[int], q: int, method: str = "auto",
                          budget: int | None = None, jobs: int = 1) -> int:
    """#{t in gl_n(F_q) : J(t) = lam}.

    "exhaustive" scans all q^(n^2) matrices; "stabilizer" divides |GL_n(q)|
    by the number of units commuting with jordan_matrix(lam); "auto" picks
    the exhaustive scan whenever it fits the budget.
    """
    lam = check_partition(lam)
    n = sum(lam)
    if method not in ("auto", "exhaustive", "stabilizer"):
        raise ValueError(f"unknown method {method!r}")
    if n == 0:
        return 1
    if method == "auto":
        size = q ** (n * n)
        method = "exhaustive" if size <= min(budget or 10 ** 7, 10 ** 7) else "stabilizer"
    if method == "exhaustive":
        if n > 4:
            raise ValueError("exhaustive orbit counts are capped at n <= 4")
        total = q ** (n * n)
        check_budget(total, budget, f"all {n}x{n} matrices over F_{q}")
        return nilpotent_type_histogram(n, q, jobs).get(pad(lam, n), 0)
    t = jordan_matrix(lam, q)
    if not t.any():
        return 1
    key = ("orbit", pad(lam, n), q)
    if key not in _ORBITS:
        order = gl_order(n, q)
        units = centralizer_units(t, q, budget)
        if order % units:
            raise ArithmeticError("centralizer order does not divide |GL_n|")
        _ORBITS[key] = order // units
    return _ORBITS[key]


# ---------------------------------------------------------------- tensor product variety

# Per-(n, q) tables shared by every (v, mu1, mu2); results do not depend on jobs.
_TABLES: dict[tuple, np.ndarray] = {}


def _map_chunks(func: Callable[..., np.ndarray], ts: np.ndarray, args: tuple, jobs: int,
                chunk: int) -> np.ndarray:
    pieces = [ts[s:e] for s, e in _ranges(len(ts), chunk)] or [ts]
    if jobs > 1 and len(pieces) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            out = list(pool.map(func, pieces, *[[a] * len(pieces) for a in args]))
    else:
        out = [func(piece, *args) for piece in pieces]
    return np.concatenate(out)


def nilpotent_matrices(n: int, q: int, power: int, budget: int | None = None) -> np.ndarray:
    """All n x n matrices t over F_q with t^power = 0, found by scanning all q^(n^2); read-only."""
    total = q ** (n * n)
    check_budget(total, budget, f"all {n}x{n} matrices over F_{q}")
    key = ("nil", n, q, power)
    if key not in _TABLES:
        parts = [_nilpotent_chunk(s, e, n, q, power) for s, e in _ranges(total, MATRIX_CHUNK)]
        out = np.concatenate(parts) if parts else np.zeros((0, n, n), dtype=np.int64)
        out.flags.writeable = False
        _TABLES[key] = out
    return _TABLES[key]


def _profile_code(sub: Sequence[int], quo: Sequence[int], n: int) -> int:
    code = 0
    for r in list(sub) + list(quo):
        code = code * (n + 1) + int(r)
    return code


def _x_codes_chunk(ts: np.ndarray, a: int, q: int) -> np.ndarray:
    """Rank-profile code of (t|X, t on V/X) per t and a-dimensional X; -1 if X is not invariant."""
    T, n, _ = ts.shape
    xs = np.asarray(subspace_batch(n, a, q))
    S = len(xs)
    tt = np.transpose(ts, (0, 2, 1))
    pair_x = np.broadcast_to(xs, (T, S, a, n)).reshape(T * S, a, n)
    img = (pair_x @ np.repeat(tt, S, axis=0)) % q
    ok = batched_rank(np.concatenate([pair_x, img], axis=1), q) == a
    code = np.zeros(T * S, dtype=np.int64)
    power = np.broadcast_to(np.eye(n, dtype=np.int64), (T, n, n))
    for k in range(1, a + 1):
        power = (power @ tt) % q
        code = code * (n + 1) + batched_rank((pair_x @ np.repeat(power, S, axis=0)) % q, q)
    power = np.broadcast_to(np.eye(n, dtype=np.int64), (T, n, n))
    for k in range(1, n - a + 1):
        power = (power @ tt) % q
        pk = np.repeat(power, S, axis=0)
        code = code * (n + 1) + batched_rank(np.concatenate([pair_x, pk], axis=1), q) - a
    return np.where(ok, code, -1).reshape(T, S)


def _x_codes(n: int, a: int, q: int, power: int, budget, jobs: int) -> np.ndarray:
    key = ("x", n, a, q, power)
    if key not in _TABLES:
        ts = nilpotent_matrices(n, q, power, budget)
        check_budget(gaussian_binomial(n, a, q), budget, f"subspaces Gr({a},{n}) over F_{q}")
        chunk = max(1, 8192 // max(1, gaussian_binomial(n, a, q)))
        _TABLES[key] = _map_chunks(_x_codes_chunk, ts, (a, q), jobs, chunk)
    return _TABLES[key]


def _subspace_data(n: int, d: int, q: int):
    subs = np.asarray(subspace_batch(n, d, q))
    anns = np.array([annihilator(s, n, q) for s in subs]).reshape(len(subs), n - d, n)
    return subs, anns


def _flag_chunk(ts: np.ndarray, v: tuple[int, ...], q: int) -> np.ndarray:
    """Number of flags of dimension v with t F_i <= F_{i-1}, per t, by dynamic programming."""
    T, n, _ = ts.shape
    N = len(v)
    if N == 1:
        return (~ts.reshape(T, -1).any(axis=1)).astype(np.int64)
    dims = np.cumsum(v)[:-1]
    prev_subs, prev_anns = _subspace_data(n, int(dims[0]), q)
    # level 1: t F_1 = 0
    img = np.einsum("sij,tkj->tsik", prev_subs, ts) % q
    ways = (~img.reshape(T, len(prev_subs), -1).any(axis=2)).astype(np.int64)
    for i in range(1, N - 1):
        subs, anns = _subspace_data(n, int(dims[i]), q)
        # contains[u, w]: u lies in w
        contains = ~(np.einsum("uij,wkj->uwik", prev_subs, anns) % q).reshape(
            len(prev_subs), len(subs), -1).any(axis=2)
        img = np.einsum("wij,tkj->twik", subs, ts) % q
        # maps[t, w, u]: t w lies in u
        maps = ~(np.einsum("twij,ukj->twuik", img, prev_anns) % q).reshape(
            T, len(subs), len(prev_subs), -1).any(axis=3)
        ways = np.einsum("tu,uw,twu->tw", ways, contains.astype(np.int64), maps.astype(np.int64))
        prev_subs, prev_anns = subs, anns
    # last: t V <= F_{N-1}
    final = ~(np.einsum("uij,tjk->tuik", prev_anns, ts) % q).reshape(
        T, len(prev_subs), -1).any(axis=2)
    return (ways * final).sum(axis=1)


def _flag_counts(n: int, v: tuple[int, ...], q: int, budget, jobs: int) -> np.ndarray:
    key = ("flags", n, v, q)
    if key not in _TABLES:
        ts = nilpotent_matrices(n, q, len(v), budget)
        for d in np.cumsum(v)[:-1]:
            check_budget(gaussian_binomial(n, int(d), q), budget,
                         f"subspaces Gr({int(d)},{n}) over F_{q}")
        _TABLES[key] = _map_chunks(_flag_chunk, ts, (v, q), jobs, 2048)
    return _TABLES[key]


def count_tensor_variety(v: Sequence[int], mu1: Sequence[int], mu2: Sequence[int], q: int,
                         method: str = "auto", budget: int | None = None, jobs: int = 1) -> int:
    """Number of triples (t, X, F) over F_q.

    t nilpotent on F_q^n with n = |mu1| + |mu2|, X t-invariant with
    J(t|X) = mu1 and J(t on V/X) = mu2, F an N-step flag of dimension v with
    t F_i <= F_{i-1}.  "brute" runs over every t with t^N = 0; "stratified"
    sums orbit size x count_spaltenstein x count_mflags over Jordan types.
    """
    v = check_weight(v)
    mu1, mu2 = check_partition(mu1), check_partition(mu2)
    n = sum(mu1) + sum(mu2)
    if sum(v) != n:
        return 0
    if n > 4:
        raise ValueError("tensor product varieties are capped at |mu1| + |mu2| <= 4")
    if method not in ("auto", "brute", "stratified"):
        raise ValueError(f"unknown method {method!r}")
    if n == 0:
        return 1
    if method == "auto":
        method = "brute" if q ** (n * n) <= 2 * 10 ** 6 else "stratified"
    if method == "brute":
        if n == 4 and q != 2:
            raise ValueError("brute-force tensor counts with |mu1| + |mu2| = 4 need q = 2")
        a = sum(mu1)
        target = _profile_code(_target_ranks(mu1, a)[1:], _target_ranks(mu2, n - a)[1:], n)
        n_x = (_x_codes(n, a, q, len(v), budget, jobs) == target).sum(axis=1)
        n_f = _flag_counts(n, v, q, budget, jobs)
        return int((n_x.astype(object) * n_f.astype(object)).sum())
    if method == "stratified":
        total = 0
        for lam in enumerate_partitions(n, n):
            flags = count_mflags(v, lam, q, budget=budget)
            if not flags:
                continue
            xs = count_spaltenstein((mu1, mu2), lam, q, budget)
            if not xs:
                continue
            total += count_nilpotent_orbit(lam, q, budget=budget) * xs * flags
        return total
    raise ValueError(f"unknown method {method!r}")


# ---------------------------------------------------------------- explicit witness


def lemma_sum_witness(mu1: Sequence[int], mu2: Sequence[int], q: int) -> Subspace:
    """Explicit t-invariant X of type mu1 and quotient type mu2, t of type mu1 + mu2.

    In the basis e_i^j of jordan_matrix(lam) (t e_i^j = e_{i-1}^j, row i has
    lam_i vectors), X is spanned by the e_i^j with j in the union over
    i' >= i of the intervals (lam_{i'+1}, mu1_{i'} + mu2_{i'+1}].
    """
    length = max(len(mu1), len(mu2))
    mu1 = pad(check_partition(mu1), length)
    mu2 = pad(check_partition(mu2), length)
    lam = tuple(a + b for a, b in zip(mu1, mu2))
    n = sum(lam)
    if n > MAX_SIZE:
        raise ValueError(f"|mu1| + |mu2| = {n} exceeds the cap {MAX_SIZE}")
    if n == 0:
        return Subspace(0, check_prime(q), ())
    t = jordan_matrix(lam, q)
    coords = block_coordinates(lam)

    def part(p, i):
        return p[i - 1] if i <= length else 0

    rows = []
    for i in range(1, length + 1):
        cols = set()
        for ip in range(i, length + 1):
            cols.update(range(part(lam, ip + 1) + 1, part(mu1, ip) + part(mu2, ip + 1) + 1))
        for j in sorted(cols):
            vec = np.zeros(n, dtype=np.int64)
            vec[coords[(i, j)]] = 1
            rows.append(vec)
    x = Subspace.from_rows(np.array(rows).reshape(-1, n), n, q)
    sub, quo = induced_operator(t, x.array(), q)
    assert x.dim == sum(mu1), "witness has the wrong dimension"
    assert jordan_type(sub, q) == pad(mu1, sum(mu1)), "witness restriction has the wrong type"
    assert jordan_type(quo, q) == pad(mu2, sum(mu2)), "witness quotient has the wrong Jordan type"
    return x
