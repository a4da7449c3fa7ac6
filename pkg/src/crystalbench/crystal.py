"""Finite normal gl_N-crystals.

A :class:`Crystal` is materialized eagerly: an ordered list of hashable
elements, a weight table and, for every color k = 1..N-1, index tables for
the raising and lowering operators (-1 marks an absent result internally;
the public API returns ``None``).  epsilon/phi are always derived from the
operators by walking strings, i.e. every crystal built here is normal.
"""

from __future__ import annotations

import json
from collections import Counter, deque
from typing import Any, Callable, Hashable, Iterable, Sequence

import numpy as np

from .weights import Weight, format_weight

ABSENT = -1


class CrystalError(ValueError):
    """A table or input that violates the crystal axioms."""


def _string_data(e: np.ndarray, f: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """epsilon and phi for one color by walking every string from its top."""
    size = len(e)
    eps = np.full(size, -1, dtype=np.int64)
    phi = np.full(size, -1, dtype=np.int64)
    for top in np.flatnonzero(e == ABSENT):
        chain = [int(top)]
        while f[chain[-1]] != ABSENT:
            chain.append(int(f[chain[-1]]))
            if len(chain) > size:
                raise CrystalError("lowering operator cycles")
        length = len(chain) - 1
        for pos, idx in enumerate(chain):
            eps[idx] = pos
            phi[idx] = length - pos
    if (eps < 0).any():
        raise CrystalError("some element lies on a raising cycle")
    return eps, phi


class Crystal:
    """A finite normal gl_N-crystal with colors 1..N-1.

    ``e_table`` and ``f_table`` have shape (N-1, size); row k-1 holds color k.
    """

    def __init__(self, n: int, elements: Sequence[Hashable], weights,
                 e_table, f_table, render: Callable[[Any], str] = str):
        self.n = int(n)
        self.elements = list(elements)
        self._index = {a: i for i, a in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise CrystalError("duplicate elements")
        size = len(self.elements)
        self.weights = np.asarray(weights, dtype=np.int64).reshape(size, self.n)
        self.e_table = np.asarray(e_table, dtype=np.int64).reshape(self.n - 1, size)
        self.f_table = np.asarray(f_table, dtype=np.int64).reshape(self.n - 1, size)
        self.render = render
        eps = np.zeros((self.n - 1, size), dtype=np.int64)
        phi = np.zeros((self.n - 1, size), dtype=np.int64)
        for row in range(self.n - 1):
            eps[row], phi[row] = _string_data(self.e_table[row], self.f_table[row])
        self.eps_table, self.phi_table = eps, phi
        for arr in (self.weights, self.e_table, self.f_table, eps, phi):
            arr.flags.writeable = False

    @classmethod
    def from_rules(cls, n: int, elements: Iterable[Hashable],
                   wt: Callable[[Any], Sequence[int]],
                   e: Callable[[Any, int], Any], f: Callable[[Any, int], Any],
                   render: Callable[[Any], str] = str) -> "Crystal":
        """Materialize a crystal from element-level rules (None = absent)."""
        elements = list(elements)
        index = {a: i for i, a in enumerate(elements)}
        size = len(elements)
        weights = np.array([tuple(wt(a)) for a in elements], dtype=np.int64).reshape(size, n)
        e_tab = np.full((n - 1, size), ABSENT, dtype=np.int64)
        f_tab = np.full((n - 1, size), ABSENT, dtype=np.int64)
        for i, a in enumerate(elements):
            for k in range(1, n):
                for tab, op in ((e_tab, e), (f_tab, f)):
                    b = op(a, k)
                    if b is not None:
                        if b not in index:
                            raise CrystalError(f"operator {k} maps {a!r} outside the crystal")
                        tab[k - 1, i] = index[b]
        return cls(n, elements, weights, e_tab, f_tab, render)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, a) -> bool:
        return a in self._index

    def __repr__(self) -> str:
        return f"<Crystal gl_{self.n}, {len(self)} elements>"

    def index(self, a) -> int:
        try:
            return self._index[a]
        except KeyError:
            raise KeyError(f"{a!r} is not an element of this crystal") from None

    def _color(self, k: int) -> int:
        if not 1 <= k <= self.n - 1:
            raise ValueError(f"color {k} out of range 1..{self.n - 1}")
        return k - 1

    def wt(self, a) -> Weight:
        return tuple(int(x) for x in self.weights[self.index(a)])

    def e(self, a, k: int):
        j = self.e_table[self._color(k), self.index(a)]
        return None if j == ABSENT else self.elements[j]

    def f(self, a, k: int):
        j = self.f_table[self._color(k), self.index(a)]
        return None if j == ABSENT else self.elements[j]

    def eps(self, a, k: int) -> int:
        return int(self.eps_table[self._color(k), self.index(a)])

    def phi(self, a, k: int) -> int:
        return int(self.phi_table[self._color(k), self.index(a)])


def eps(c: Crystal, a, k: int) -> int:
    return c.eps(a, k)


def phi(c: Crystal, a, k: int) -> int:
    return c.phi(a, k)


def check_axioms(c: Crystal) -> list[str]:
    """Return a list of violated axioms (empty when ``c`` is a normal crystal).

    Normality itself holds by construction; this checks the weight shifts,
    the e/f inverse relation and <alpha_k^vee, wt> = phi_k - eps_k.
    """
    problems = []
    size = len(c)
    idx = np.arange(size)
    for row in range(c.n - 1):
        k = row + 1
        alpha = np.zeros(c.n, dtype=np.int64)
        alpha[row], alpha[row + 1] = 1, -1
        e, f = c.e_table[row], c.f_table[row]
        has_e, has_f = e != ABSENT, f != ABSENT
        if not (c.weights[e[has_e]] == c.weights[has_e] + alpha).all():
            problems.append(f"wt(e_{k} a) != wt(a) + alpha_{k}")
        if not (c.weights[f[has_f]] == c.weights[has_f] - alpha).all():
            problems.append(f"wt(f_{k} a) != wt(a) - alpha_{k}")
        if not (f[e[has_e]] == idx[has_e]).all() or not (e[f[has_f]] == idx[has_f]).all():
            problems.append(f"f_{k} and e_{k} are not mutually inverse")
        pairing = c.weights[:, row] - c.weights[:, row + 1]
        if not (pairing == c.phi_table[row] - c.eps_table[row]).all():
            problems.append(f"<alpha_{k}^vee, wt> != phi_{k} - eps_{k}")
        if not (c.eps_table[row][e[has_e]] == c.eps_table[row][has_e] - 1).all():
            problems.append(f"eps_{k}(e_{k} a) != eps_{k}(a) - 1")
    return problems


def tensor(A: Crystal, B: Crystal) -> Crystal:
    """The tensor product A (x) B on pairs (a, b).

    e_k acts on the left factor iff phi_k(a) >= eps_k(b), f_k acts on the
    left factor iff phi_k(a) > eps_k(b).
    """
    if A.n != B.n:
        raise CrystalError(f"cannot tensor gl_{A.n} with gl_{B.n}")
    na, nb = len(A), len(B)
    ia = np.repeat(np.arange(na), nb)
    ib = np.tile(np.arange(nb), na)
    e_tab = np.full((A.n - 1, na * nb), ABSENT, dtype=np.int64)
    f_tab = np.full((A.n - 1, na * nb), ABSENT, dtype=np.int64)
    for row in range(A.n - 1):
        phi_a = A.phi_table[row][ia]
        eps_b = B.eps_table[row][ib]
        for tab, ta, tb, left in ((e_tab, A.e_table[row], B.e_table[row], phi_a >= eps_b),
                                  (f_tab, A.f_table[row], B.f_table[row], phi_a > eps_b)):
            new_a = np.where(left, ta[ia], ia)
            new_b = np.where(left, ib, tb[ib])
            ok = (new_a != ABSENT) & (new_b != ABSENT)
            tab[row] = np.where(ok, new_a * nb + new_b, ABSENT)
    elements = [(a, b) for a in A.elements for b in B.elements]
    weights = A.weights[ia] + B.weights[ib]

    def render(x):
        return f"{A.render(x[0])} (x) {B.render(x[1])}"

    return Crystal(A.n, elements, weights, e_tab, f_tab, render)


def tensor_string_formula(A: Crystal, B: Crystal) -> tuple[np.ndarray, np.ndarray]:
    """eps/phi tables of A (x) B from the max-formulas, in tensor index order."""
    nb = len(B)
    ia = np.repeat(np.arange(len(A)), nb)
    ib = np.tile(np.arange(nb), len(A))
    ea, pa = A.eps_table[:, ia], A.phi_table[:, ia]
    eb, pb = B.eps_table[:, ib], B.phi_table[:, ib]
    return np.maximum(ea, ea + eb - pa), np.maximum(pb, pa + pb - eb)


def tensor_all(crystals: Sequence[Crystal]) -> Crystal:
    """Left-associated product ((C1 (x) C2) (x) C3) ..."""
    if not crystals:
        raise ValueError("need at least one factor")
    out = crystals[0]
    for c in crystals[1:]:
        out = tensor(out, c)
    return out


def trivial_crystal(S: Iterable[Hashable], N: int) -> Crystal:
    elements = list(S)
    size = len(elements)
    return Crystal(N, elements, np.zeros((size, N), dtype=np.int64),
                   np.full((N - 1, size), ABSENT), np.full((N - 1, size), ABSENT))


def direct_sum(A: Crystal, B: Crystal) -> Crystal:
    """Disjoint union; elements are tagged (0, a) and (1, b)."""
    if A.n != B.n:
        raise CrystalError(f"cannot add gl_{A.n} and gl_{B.n}")
    shift = len(A)
    b_e = np.where(B.e_table == ABSENT, ABSENT, B.e_table + shift)
    b_f = np.where(B.f_table == ABSENT, ABSENT, B.f_table + shift)
    elements = [(0, a) for a in A.elements] + [(1, b) for b in B.elements]

    def render(x):
        return (A if x[0] == 0 else B).render(x[1])

    return Crystal(A.n, elements, np.vstack([A.weights, B.weights]),
                   np.hstack([A.e_table, b_e]), np.hstack([A.f_table, b_f]), render)


def highest_indices(c: Crystal) -> np.ndarray:
    if c.n == 1:
        return np.arange(len(c))
    return np.flatnonzero((c.e_table == ABSENT).all(axis=0))


def highest_elements(c: Crystal) -> list[tuple[Any, Weight]]:
    """Elements killed by every e_k, in enumeration order, with weights."""
    return [(c.elements[i], tuple(int(x) for x in c.weights[i])) for i in highest_indices(c)]


def raise_index(c: Crystal, i: int) -> tuple[int, list[int]]:
    """Index version of :func:`raise_to_highest`."""
    path = []
    for _ in range(len(c) + 1):
        for row in range(c.n - 1):
            j = c.e_table[row, i]
            if j != ABSENT:
                path.append(row + 1)
                i = int(j)
                break
        else:
            path.reverse()
            return i, path
    raise CrystalError("raising did not terminate; not a crystal of the closed family")


def raise_to_highest(c: Crystal, a) -> tuple[Any, list[int]]:
    """Raise greedily (smallest color first) until every e_k vanishes.

    Returns the highest element h and the colors [k_1, ..., k_m] such that
    a = f_{k_m} ... f_{k_1} h, i.e. applying f along the path from h
    (first color first) recovers a.
    """
    h, path = raise_index(c, c.index(a))
    return c.elements[h], path


def lower_along(c: Crystal, a, path: Sequence[int]):
    """Apply f_{path[0]}, then f_{path[1]}, ...; None once a step is absent."""
    for k in path:
        if a is None:
            return None
        a = c.f(a, k)
    return a


def components(c: Crystal, colors: Iterable[int] | None = None) -> list[list[int]]:
    """Connected components (index lists, BFS order) using only `colors`."""
    rows = [k - 1 for k in (range(1, c.n) if colors is None else colors)]
    seen = np.zeros(len(c), dtype=bool)
    out = []
    for start in range(len(c)):
        if seen[start]:
            continue
        seen[start] = True
        comp, queue = [], deque([start])
        while queue:
            i = queue.popleft()
            comp.append(i)
            for row in rows:
                for j in (c.e_table[row, i], c.f_table[row, i]):
                    if j != ABSENT and not seen[j]:
                        seen[j] = True
                        queue.append(int(j))
        out.append(comp)
    return out


def decompose(c: Crystal) -> list[tuple[Weight, list[Any], Any]]:
    """Split ``c`` into highest-weight components.

    Returns (head weight, member elements, head) triples sorted by head
    weight, lexicographically largest first, ties kept in discovery order.
    """
    found = []
    for comp in components(c):
        heads = [i for i in comp if (c.e_table[:, i] == ABSENT).all()]
        if len(heads) != 1:
            raise CrystalError(f"component with {len(heads)} highest elements")
        h = heads[0]
        found.append((tuple(int(x) for x in c.weights[h]), [c.elements[i] for i in comp],
                      c.elements[h]))
    found.sort(key=lambda item: item[0], reverse=True)
    return found


def canonical_signature(c: Crystal, root) -> tuple:
    """Deterministic isomorphism invariant of the component of ``root``.

    Breadth-first from the root, children in color order; each visited node
    contributes, per color, the discovery index of f_k(node) or None.  The
    root weight is included so that weight-shifted copies differ.
    """
    r = c.index(root)
    if (c.e_table[:, r] != ABSENT).any():
        raise CrystalError(f"{root!r} is not a highest element")
    order = {r: 0}
    queue = deque([r])
    rows = []
    while queue:
        i = queue.popleft()
        row = []
        for kk in range(c.n - 1):
            j = int(c.f_table[kk, i])
            if j == ABSENT:
                row.append(None)
                continue
            if j not in order:
                order[j] = len(order)
                queue.append(j)
            row.append(order[j])
        rows.append(tuple(row))
    return (tuple(int(x) for x in c.weights[r]), tuple(rows))


def character(c: Crystal) -> Counter:
    """Multiplicity of each weight."""
    return Counter(tuple(int(x) for x in w) for w in c.weights)


def to_dot(c: Crystal, name: str = "crystal") -> str:
    lines = [f"digraph {name} {{"]
    for i, a in enumerate(c.elements):
        label = f"{c.render(a)}\\nwt={format_weight(c.weights[i])}"
        lines.append(f'  n{i} [label="{label}"];')
    for row in range(c.n - 1):
        for i, j in enumerate(c.f_table[row]):
            if j != ABSENT:
                lines.append(f'  n{i} -> n{int(j)} [label="f_{row + 1}"];')
    lines.append("}")
    return "\n".join(lines)


def to_json(c: Crystal) -> str:
    def table(t):
        return {str(row + 1): [None if j == ABSENT else int(j) for j in t[row]]
                for row in range(c.n - 1)}

    return json.dumps({
        "n": c.n,
        "elements": [c.render(a) for a in c.elements],
        "weights": [format_weight(w) for w in c.weights],
        "e": table(c.e_table),
        "f": table(c.f_table),
    })
