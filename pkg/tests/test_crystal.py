import json
import random

import numpy as np
import pytest

from crystalbench.crystal import (Crystal, CrystalError, canonical_signature, character,
                                  check_axioms, decompose, direct_sum, highest_elements,
                                  raise_to_highest, tensor, tensor_string_formula, to_dot,
                                  to_json, trivial_crystal)
from crystalbench.gl2 import Gl2Elem, gl2_crystal
from crystalbench.tableaux import crystal_of, highest_tableau


def M(v, w, r):
    return Gl2Elem(v, w, r)


def test_eps_phi_gl2():
    c = gl2_crystal(3, 1)
    a = M(1, 3, 1)
    assert c.eps(a, 1) == 1 and c.phi(a, 1) == 0


def test_eps_phi_highest_and_letter():
    c = crystal_of((2, 1, 0), 3)
    h = highest_tableau((2, 1), 3)
    assert all(c.eps(h, k) == 0 for k in (1, 2))
    letters = crystal_of((1, 0, 0), 3)
    one = letters.elements[0]
    assert letters.phi(one, 1) == 1 and letters.eps(one, 1) == 0


def test_tensor_rule_examples():
    A = gl2_crystal(1, 0)
    T = tensor(A, A)
    assert T.e((M(1, 1, 0), M(0, 1, 0)), 1) is None
    assert T.e((M(0, 1, 0), M(0, 1, 0)), 1) == (M(0, 1, 0), M(1, 1, 0))
    assert T.f((M(1, 1, 0), M(0, 1, 0)), 1) is None


def test_tensor_requires_same_rank():
    with pytest.raises(CrystalError):
        tensor(gl2_crystal(1, 0), crystal_of((1, 0, 0), 3))


def test_tensor_string_formula_matches_normality():
    for A, B in [(gl2_crystal(3, 0), gl2_crystal(2, 1)),
                 (crystal_of((2, 1, 0), 3), crystal_of((1, 1, 0), 3))]:
        T = tensor(A, B)
        eps, phi = tensor_string_formula(A, B)
        assert (eps == T.eps_table).all() and (phi == T.phi_table).all()


def test_trivial_crystal():
    S = trivial_crystal(["s", "t"], 3)
    assert S.e("s", 1) is None and S.f("t", 2) is None
    assert S.wt("s") == (0, 0, 0)
    assert [a for a, _ in highest_elements(S)] == ["s", "t"]
    assert [lam for lam, _, _ in decompose(S)] == [(0, 0, 0)] * 2


def test_trivial_tensor_is_direct_sum():
    A = crystal_of((2, 0), 2)
    left = tensor(trivial_crystal(["s", "t"], 2), A)
    right = direct_sum(A, A)
    sigs = sorted(canonical_signature(left, h) for _, _, h in decompose(left))
    assert sigs == sorted(canonical_signature(right, h) for _, _, h in decompose(right))


def test_direct_sum():
    A, B = gl2_crystal(3, 0), gl2_crystal(2, 1)
    S = direct_sum(A, B)
    assert len(S) == len(A) + len(B)
    assert len(highest_elements(S)) == 2
    assert character(S) == character(A) + character(B)


def test_highest_elements():
    for w in range(6):
        for r in range(w // 2 + 1):
            [(h, wt)] = highest_elements(gl2_crystal(w, r))
            assert h.v == w - r and wt == (w - r, r)
    letters = crystal_of((1, 0), 2)
    assert sorted(wt for _, wt in highest_elements(tensor(letters, letters))) == [(1, 1), (2, 0)]


def test_raise_to_highest():
    c = gl2_crystal(5, 1)
    top = M(4, 5, 1)
    assert raise_to_highest(c, top) == (top, [])
    assert raise_to_highest(c, M(1, 5, 1)) == (top, [1, 1, 1])
    A = gl2_crystal(1, 0)
    T = tensor(A, A)
    head, path = raise_to_highest(T, (M(0, 1, 0), M(0, 1, 0)))
    assert head == (M(1, 1, 0), M(1, 1, 0)) and path == [1, 1]
    # the intermediate element is not highest
    assert T.e((M(1, 1, 0), M(0, 1, 0)), 1) is None
    assert T.e((M(0, 1, 0), M(1, 1, 0)), 1) == (M(1, 1, 0), M(1, 1, 0))


def test_raise_path_replays():
    c = tensor(crystal_of((2, 1, 0), 3), crystal_of((1, 0, 0), 3))
    for a in c.elements:
        h, path = raise_to_highest(c, a)
        x = h
        for k in path:
            x = c.f(x, k)
        assert x == a


def test_decompose_examples():
    c = crystal_of((2, 1, 0), 3)
    [(lam, members, head)] = decompose(c)
    assert lam == (2, 1, 0) and len(members) == 8 and head == highest_tableau((2, 1), 3)
    letters = crystal_of((1, 0), 2)
    assert [lam for lam, _, _ in decompose(tensor(letters, letters))] == [(2, 0), (1, 1)]


def test_rejects_raising_cycle():
    with pytest.raises(CrystalError):
        Crystal(2, ["a", "b"], [(1, 1), (1, 1)], [[1, 0]], [[1, 0]])


def test_decompose_rejects_two_heads():
    # a and b are both highest and both lower to c
    e = [[-1, -1, 0], [-1, -1, 1]]
    f = [[2, -1, -1], [-1, 2, -1]]
    bad = Crystal(3, ["a", "b", "c"], [(1, 1, 0), (0, 1, 1), (0, 2, 0)], e, f)
    with pytest.raises(CrystalError):
        decompose(bad)


def test_canonical_signature():
    a = gl2_crystal(2, 0)
    b = crystal_of((2, 0), 2)
    assert canonical_signature(a, M(2, 2, 0)) == canonical_signature(b, highest_tableau((2,)))
    assert canonical_signature(gl2_crystal(2, 1), M(1, 2, 1)) != canonical_signature(a, M(2, 2, 0))
    c = crystal_of((3, 1, 0), 3)
    h = highest_tableau((3, 1), 3)
    assert canonical_signature(c, h) == canonical_signature(c, h)
    with pytest.raises(CrystalError):
        canonical_signature(a, M(1, 2, 0))


def test_character_examples():
    assert character(gl2_crystal(3, 1)) == {(1, 2): 1, (2, 1): 1}
    assert character(crystal_of((2, 0), 2)) == {(2, 0): 1, (1, 1): 1, (0, 2): 1}


@pytest.mark.parametrize("seed", range(6))
def test_tensor_associativity(seed):
    rng = random.Random(seed)
    shapes = [(1, 0, 0), (2, 0, 0), (1, 1, 0), (2, 1, 0)]
    A, B, C = (crystal_of(rng.choice(shapes), 3) for _ in range(3))
    left = tensor(tensor(A, B), C)
    right = tensor(A, tensor(B, C))

    def regroup(x):
        (a, b), c = x
        return (a, (b, c))

    for lam, _, head in decompose(left):
        assert canonical_signature(left, head) == canonical_signature(right, regroup(head))


def test_tensor_not_commutative_somewhere():
    A, B = gl2_crystal(1, 0), gl2_crystal(2, 0)
    AB, BA = tensor(A, B), tensor(B, A)
    # swapping factors must change the f-graph for at least one element
    differs = any(
        (AB.f((x, y), 1) is None) != (BA.f((y, x), 1) is None)
        or (AB.f((x, y), 1) is not None
            and AB.f((x, y), 1) != tuple(reversed(BA.f((y, x), 1))))
        for x in A.elements for y in B.elements)
    assert differs


def test_axioms_on_small_instances():
    for c in [gl2_crystal(4, 1), crystal_of((2, 1, 0), 3),
              tensor(crystal_of((1, 1, 0), 3), crystal_of((2, 0, 0), 3))]:
        assert check_axioms(c) == []


def test_exports():
    c = crystal_of((1, 0), 2)
    dot = to_dot(c)
    assert dot.count("->") == 1 and 'label="f_1"' in dot
    data = json.loads(to_json(c))
    assert data["n"] == 2 and data["weights"] == ["1,0", "0,1"]
    assert data["f"]["1"] == [1, None]


def test_tables_are_read_only():
    c = gl2_crystal(2, 0)
    with pytest.raises(ValueError):
        c.e_table[0, 0] = 5
    assert isinstance(c.weights, np.ndarray)
