"""Semistandard tableaux as a model of the highest-weight gl_N crystals.

Operators use the signature rule on the arabic reading word (rows read
right to left, top row first).  Letter k counts as "+", letter k+1 as "-";
a "+" immediately left of a "-" cancels, repeatedly.  e_k turns the
rightmost surviving "-" into k, f_k turns the leftmost surviving "+" into k+1.
With this reading the leftmost letter is the first tensor factor.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from .crystal import Crystal, components
from .weights import Partition, Weight, check_partition, pad, strip


@dataclass(frozen=True, order=True)
class Tableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if any(not row for row in rows):
            raise ValueError("empty rows are not stored")
        shape = [len(row) for row in rows]
        if any(a < b for a, b in zip(shape, shape[1:])):
            raise ValueError(f"row lengths {shape} are not a partition")

    @property
    def shape(self) -> Partition:
        return tuple(len(row) for row in self.rows)

    def is_semistandard(self, n: int | None = None) -> bool:
        for row in self.rows:
            if any(x < 1 or (n is not None and x > n) for x in row):
                return False
            if any(a > b for a, b in zip(row, row[1:])):
                return False
        for upper, lower in zip(self.rows, self.rows[1:]):
            if any(lower[j] <= upper[j] for j in range(len(lower))):
                return False
        return True

    def content(self, n: int) -> Weight:
        counts = [0] * n
        for row in self.rows:
            for x in row:
                counts[x - 1] += 1
        return tuple(counts)

    def __str__(self) -> str:
        return to_text(self)


def to_text(t: Tableau) -> str:
    return json.dumps([list(row) for row in t.rows], separators=(",", ":"))


def from_text(text: str) -> Tableau:
    rows = json.loads(text)
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ValueError(f"expected a JSON array of rows, got {text!r}")
    return Tableau(tuple(tuple(r) for r in rows if r))


def _reading_cells(t: Tableau) -> list[tuple[int, int]]:
    return [(i, j) for i, row in enumerate(t.rows) for j in reversed(range(len(row)))]


def arabic_word(t: Tableau) -> tuple[int, ...]:
    return tuple(t.rows[i][j] for i, j in _reading_cells(t))


def _unmatched(word: Sequence[int], k: int) -> tuple[list[int], list[int]]:
    """Positions of the surviving "-" and "+" after bracket cancellation."""
    minus, plus = [], []
    for pos, letter in enumerate(word):
        if letter == k:
            plus.append(pos)
        elif letter == k + 1:
            if plus:
                plus.pop()
            else:
                minus.append(pos)
    return minus, plus


def _check_color(t: Tableau, k: int, n: int | None) -> None:
    if k < 1 or (n is not None and k > n - 1):
        raise ValueError(f"color {k} out of range")


def _rewrite(t: Tableau, cell: tuple[int, int], letter: int) -> Tableau:
    rows = [list(row) for row in t.rows]
    rows[cell[0]][cell[1]] = letter
    out = Tableau(tuple(tuple(row) for row in rows))
    if not out.is_semistandard():
        raise AssertionError(f"signature rule left semistandard tableaux: {out}")
    return out


def word_e(word: Sequence[int], k: int) -> tuple[int, ...] | None:
    minus, _ = _unmatched(word, k)
    if not minus:
        return None
    out = list(word)
    out[minus[-1]] = k
    return tuple(out)


def word_f(word: Sequence[int], k: int) -> tuple[int, ...] | None:
    _, plus = _unmatched(word, k)
    if not plus:
        return None
    out = list(word)
    out[plus[0]] = k + 1
    return tuple(out)


def apply_e(t: Tableau, k: int, n: int | None = None) -> Tableau | None:
    _check_color(t, k, n)
    cells = _reading_cells(t)
    minus, _ = _unmatched(arabic_word(t), k)
    return _rewrite(t, cells[minus[-1]], k) if minus else None


def apply_f(t: Tableau, k: int, n: int | None = None) -> Tableau | None:
    _check_color(t, k, n)
    cells = _reading_cells(t)
    _, plus = _unmatched(arabic_word(t), k)
    return _rewrite(t, cells[plus[0]], k + 1) if plus else None


def sig_eps(t: Tableau, k: int) -> int:
    return len(_unmatched(arabic_word(t), k)[0])


def sig_phi(t: Tableau, k: int) -> int:
    return len(_unmatched(arabic_word(t), k)[1])


def highest_tableau(lam: Sequence[int], n: int | None = None) -> Tableau:
    lam = check_partition(lam)
    core = strip(lam)
    if n is not None and len(core) > n:
        raise ValueError(f"{lam} has more than {n} non-zero parts")
    return Tableau(tuple((i + 1,) * part for i, part in enumerate(core)))


def enumerate_ssyt(lam: Sequence[int], n: int) -> list[Tableau]:
    """All semistandard tableaux of shape lam with entries in 1..n, sorted."""
    core = strip(check_partition(lam))
    if len(core) > n:
        raise ValueError(f"{tuple(lam)} has more than {n} non-zero parts")
    out: list[Tableau] = []

    def rec(prefix: list[tuple[int, ...]]) -> None:
        i = len(prefix)
        if i == len(core):
            out.append(Tableau(tuple(prefix)))
            return
        above = prefix[-1] if prefix else None
        # column strictness forces entries of row i to be >= i+1
        for row in combinations_with_replacement(range(i + 1, n + 1), core[i]):
            if above is None or all(row[j] > above[j] for j in range(len(row))):
                rec(prefix + [row])

    rec([])
    return sorted(out)


@lru_cache(maxsize=None)
def _crystal_of(lam: Partition, n: int) -> Crystal:
    elements = enumerate_ssyt(lam, n)
    return Crystal.from_rules(
        n, elements,
        lambda t: t.content(n),
        lambda t, k: apply_e(t, k),
        lambda t, k: apply_f(t, k),
    )


def crystal_of(lam: Sequence[int], n: int) -> Crystal:
    """The crystal of shape lam for gl_n (lam padded to length n); cached."""
    return _crystal_of(pad(check_partition(lam), n), n)


def letter_crystal(n: int) -> Crystal:
    return crystal_of((1,), n)


def gl2_string_data(c: Crystal, a, k: int) -> tuple[int, int, int]:
    """(w_k, r_k, v_k) such that the k-string through a is M_2(w_k, r_k) and a sits at v_k."""
    wt = c.wt(a)
    w_k = wt[k - 1] + wt[k]
    length = c.eps(a, k) + c.phi(a, k)
    if (w_k - length) % 2:
        raise AssertionError(f"odd string defect at {a!r}, color {k}")
    r_k = (w_k - length) // 2
    v_k = wt[k - 1]
    if not 0 <= r_k <= v_k <= w_k - r_k:
        raise AssertionError(f"string through {a!r} is not of the form M_2({w_k},{r_k})")
    return w_k, r_k, v_k


def levi_restrict(c: Crystal, keep: Iterable[int]) -> list[tuple[Weight, object, list]]:
    """Components under the colors in `keep`, as (head weight, head, members).

    Sorted like :func:`crystalbench.crystal.decompose`.
    """
    keep = sorted(set(keep))
    for k in keep:
        if not 1 <= k <= c.n - 1:
            raise ValueError(f"color {k} out of range 1..{c.n - 1}")
    rows = [k - 1 for k in keep]
    found = []
    for comp in components(c, keep):
        heads = [i for i in comp if all(c.e_table[row, i] < 0 for row in rows)]
        if len(heads) != 1:
            raise AssertionError(f"Levi component with {len(heads)} heads")
        h = heads[0]
        found.append((tuple(int(x) for x in c.weights[h]), c.elements[h],
                      [c.elements[i] for i in comp]))
    found.sort(key=lambda item: item[0], reverse=True)
    return found
