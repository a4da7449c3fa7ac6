import pytest
from hypothesis import given, strategies as st

from crystalbench.weights import (conjugate, enumerate_partitions, enumerate_weights,
                                  format_weight, is_partition, m_dim, orbit_dim, pad,
                                  parse_partition, parse_weight, rho, spaltenstein_dim,
                                  spaltenstein_dim_alt, t_dim)


@st.composite
def partitions(draw, max_size=8, max_len=5):
    n = draw(st.integers(0, max_size))
    length = draw(st.integers(1, max_len))
    choices = enumerate_partitions(length, n)
    return draw(st.sampled_from(choices)) if choices else (0,) * length


def test_is_partition():
    assert is_partition((2, 1, 0))
    assert not is_partition((1, 2, 0))
    assert is_partition((0, 0))


def test_conjugate_examples():
    assert conjugate((2, 1)) == (2, 1)
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate((4,)) == (1, 1, 1, 1)
    assert conjugate((2, 0), length=3) == (1, 1, 0)


@given(partitions())
def test_conjugate_involution(p):
    assert pad(conjugate(conjugate(p)), len(p)) == p


def test_orbit_dim_examples():
    assert orbit_dim((1, 1)) == 2
    assert orbit_dim((5, 0)) == 0
    assert orbit_dim((2, 1, 1)) == 10


@given(partitions())
def test_orbit_dim_bounds(lam):
    n = sum(lam)
    d = orbit_dim(lam)
    assert d % 2 == 0
    assert 0 <= d <= n * n - n


@pytest.mark.parametrize("w", range(8))
def test_orbit_dim_gl2(w):
    for r in range(w // 2 + 1):
        assert orbit_dim((w - r, r)) == 2 * r * (w - r)


def test_rho():
    assert rho(3, 1, (1, 2, 3)) == (3, 3)
    assert rho(3, 2, (1, 2, 3)) == (1, 5)
    assert rho(2, 1, (4, 7)) == (11,)
    with pytest.raises(ValueError):
        rho(3, 3, (1, 2, 3))
    with pytest.raises(ValueError):
        rho(3, 1, (1, 2))


def test_spaltenstein_dim_examples():
    # J(t) = (1,1) is the regular nilpotent on C^2: only ker t is invariant
    assert spaltenstein_dim(((1,), (1,)), (1, 1)) == 0
    # J(t) = (2,0) is t = 0: every line
    assert spaltenstein_dim(((1,), (1,)), (2, 0)) == 1
    for lam in [(1,), (2, 1), (3, 1, 1)]:
        assert spaltenstein_dim((lam,), lam) == 0
    with pytest.raises(ValueError):
        spaltenstein_dim(((1,), (1,)), (3,))


@given(st.lists(partitions(max_size=3, max_len=3), min_size=1, max_size=3), st.data())
def test_spaltenstein_forms_agree(parts, data):
    n = sum(sum(p) for p in parts)
    mu = data.draw(st.sampled_from(enumerate_partitions(max(n, 1), n)))
    assert spaltenstein_dim(parts, mu) == spaltenstein_dim_alt(parts, mu)


def test_m_dim_examples():
    assert m_dim((1, 1), (1, 1)) == 0
    assert m_dim((1, 1), (2, 0)) == 1
    assert m_dim((3, 0, 0), (3, 0, 0)) == 0


def test_m_dim_is_spaltenstein_of_one_row_parts():
    for n in range(1, 7):
        for N in (2, 3):
            for lam in enumerate_partitions(n, n):
                for v in enumerate_weights(N, n):
                    parts = [(x,) for x in v]
                    assert m_dim(v, lam) == spaltenstein_dim(parts, lam)


def test_t_dim_examples():
    assert t_dim((1, 1), (1,), (1,)) == 2
    assert t_dim((2, 0), (1,), (1,)) == 1


def test_t_dim_gl2_closed_form():
    for w1 in range(5):
        for w2 in range(5):
            for r1 in range(w1 // 2 + 1):
                for r2 in range(w2 // 2 + 1):
                    for v in range(w1 + w2 + 1):
                        mu1, mu2 = (w1 - r1, r1), (w2 - r2, r2)
                        closed = (w1 * w2 + v * (w1 + w2 - v)
                                  + (orbit_dim(mu1) + orbit_dim(mu2)) // 2)
                        assert t_dim((v, w1 + w2 - v), mu1, mu2) == closed


def test_enumerations():
    assert enumerate_weights(2, 2) == [(0, 2), (1, 1), (2, 0)]
    assert enumerate_partitions(2, 2) == [(1, 1), (2, 0)]
    assert enumerate_weights(1, 3) == [(3,)]
    assert enumerate_partitions(1, 3) == [(3,)]
    assert len(enumerate_weights(3, 4)) == 15


def test_serialization_round_trip():
    assert format_weight((2, 1, 0)) == "2,1,0"
    assert parse_weight("2,1,0") == (2, 1, 0)
    assert parse_partition(" 3,1 ") == (3, 1)
    for bad in ["", "1,-1", "a,b"]:
        with pytest.raises(ValueError):
            parse_weight(bad)
    with pytest.raises(ValueError):
        parse_partition("1,2")
