import pytest

from crystalbench.crystal import decompose, tensor
from crystalbench.ffgeom import count_spaltenstein
from crystalbench.gl2 import (Gl2Elem, S2Label, gl2_crystal, s2_dim, s2_labels, s2_nonempty,
                              tau2, tau2_element)
from crystalbench.weights import orbit_dim


def test_elem_validation():
    assert str(Gl2Elem(1, 3, 1)) == "M_2(1,3,1)"
    for bad in [(0, 3, 1), (3, 3, 1), (0, 1, 1)]:
        with pytest.raises(ValueError):
            Gl2Elem(*bad)


def test_crystal_shape():
    for w in range(7):
        for r in range(w // 2 + 1):
            c = gl2_crystal(w, r)
            assert len(c) == w - 2 * r + 1
            lowest = Gl2Elem(r, w, r)
            assert c.f(lowest, 1) is None and c.eps(lowest, 1) == w - 2 * r
    assert len(gl2_crystal(3, 2)) == 0


def test_component_dimension_formula():
    # (w-r-v)(v-r) = dim of the component of M_2(v,w,r); zero exactly at both ends
    for w in range(6):
        for r in range(w // 2 + 1):
            ends = {(w - r - v) * (v - r) for v in (r, w - r)}
            assert ends == {0}


def test_s2_nonempty_examples():
    assert s2_nonempty(S2Label(1, 0, 1, 0, 1))
    assert not s2_nonempty(S2Label(1, 0, 1, 0, 2))
    for w1 in range(5):
        for w2 in range(5):
            for r1 in range(w1 // 2 + 1):
                for r2 in range(w2 // 2 + 1):
                    assert s2_nonempty(S2Label(w1, r1, w2, r2, r1 + r2))


def test_s2_dim_examples():
    assert s2_dim(S2Label(1, 0, 1, 0, 0)) == 1
    assert s2_dim(S2Label(1, 0, 1, 0, 1)) == 0
    assert s2_dim(S2Label(2, 1, 2, 1, 2)) == 2
    with pytest.raises(ValueError):
        s2_dim(S2Label(1, 0, 1, 0, 2))


@pytest.mark.parametrize("q", [2, 3])
def test_s2_dim_matches_point_count(q):
    # S_2(((1,1),(1,1)),(2,2)) has q^2 + q points
    assert count_spaltenstein(((1, 1), (1, 1)), (2, 2), q) == q * q + q
    assert count_spaltenstein(((1, 0), (1, 0)), (2, 0), q) == q + 1
    assert count_spaltenstein(((1, 0), (1, 0)), (1, 1), q) == 1


def test_s2_str():
    assert str(S2Label(1, 0, 1, 0, 1)) == "S_2(((1,0),(1,0)),(1,1))"


def test_tau2_examples():
    assert tau2(1, 1, 0, 0, 1, 0) == (1, 1)
    assert tau2(1, 1, 0, 1, 1, 0) == (0, 2)
    assert tau2(0, 1, 0, 0, 1, 0) == (0, 0)
    with pytest.raises(ValueError):
        tau2(2, 1, 0, 0, 1, 0)


def test_s2_labels_count_matches_multiplicities():
    for w1, r1, w2, r2 in [(2, 0, 1, 0), (3, 1, 2, 0), (4, 0, 4, 0)]:
        labels = s2_labels(w1, r1, w2, r2)
        heads = [lam for lam, _, _ in decompose(tensor(gl2_crystal(w1, r1), gl2_crystal(w2, r2)))]
        assert sorted(lbl.r for lbl in labels) == sorted(lam[1] for lam in heads)


@pytest.mark.parametrize("w1", range(5))
@pytest.mark.parametrize("w2", range(5))
def test_tau2_is_crystal_morphism(w1, w2):
    for r1 in range(w1 // 2 + 1):
        for r2 in range(w2 // 2 + 1):
            T = tensor(gl2_crystal(w1, r1), gl2_crystal(w2, r2))
            images = {}
            for x in T.elements:
                lbl, y = tau2_element(x)
                assert T.wt(x) == (y.v, y.w - y.v)
                assert (lbl, y) not in images
                images[(lbl, y)] = x
                for op, step in ((T.e, 1), (T.f, -1)):
                    z = op(x, 1)
                    target = y.v + step
                    if z is None:
                        assert not y.r <= target <= y.w - y.r
                    else:
                        assert tau2_element(z) == (lbl, Gl2Elem(target, y.w, y.r))
            expected = sum(len(gl2_crystal(w1 + w2, lbl.r)) for lbl in s2_labels(w1, r1, w2, r2))
            assert len(images) == expected == len(T)


def test_orbit_dim_gl2():
    for w in range(7):
        for r in range(w // 2 + 1):
            assert orbit_dim((w - r, r)) == 2 * r * (w - r)
