import pytest
from hypothesis import given, strategies as st

from weylverma.rootspace import build_root_datum
from weylverma.weyl import (
    act, compose, element_from_word, element_sending, enumerate_group, identity, inverse,
    is_regular, length, orbit, signed_sum, to_dominant,
)

from conftest import F

ORDERS = {"A1": 2, "A2": 6, "A3": 24, "B2": 8, "B3": 48, "C3": 48, "G2": 12, "D4": 192,
          "F4": 1152}


@pytest.mark.parametrize("name,order", ORDERS.items())
def test_group_orders_and_signs(name, order):
    d = build_root_datum(name)
    group = enumerate_group(d)
    assert len(group) == order
    assert len(set(group)) == order
    assert signed_sum(d) == 0


@pytest.mark.parametrize("name", ["A3", "B3", "G2"])
def test_word_length_equals_inversions(name):
    d = build_root_datum(name)
    for w in enumerate_group(d):
        assert length(d, w) == w.length
        assert w.sign == (-1) ** w.length


def test_longest_element_of_b2():
    d = build_root_datum("B2")
    top = max(enumerate_group(d), key=lambda w: w.length)
    assert top.length == 4
    assert act(d, top, d.rho) == tuple(-x for x in d.rho)


def test_to_dominant_minimal_length():
    d = build_root_datum("B2")
    dom, w, sign = to_dominant(d, F(-1, 0))
    assert dom == F(1, 0)
    assert act(d, w, F(-1, 0)) == dom
    assert w.length == 3 and sign == -1


def test_orbit_of_b2_short_weight():
    d = build_root_datum("B2")
    assert orbit(d, F(1, 0)) == {F(1, 0), F(-1, 0), F(0, 1), F(0, -1)}
    assert not is_regular(d, F(1, 0))
    assert is_regular(d, d.rho)


@given(st.sampled_from(["A2", "B2", "G2", "A3", "B3", "C3"]), st.data())
def test_action_is_isometric_and_composes(name, data):
    d = build_root_datum(name)
    group = enumerate_group(d)
    u = data.draw(st.sampled_from(group))
    v = data.draw(st.sampled_from(group))
    x = d.from_labels([data.draw(st.integers(-3, 3)) for _ in range(d.rank)])
    y = act(d, u, x)
    assert d.inner(y, y) == d.inner(x, x)
    assert act(d, compose(d, u, v), x) == act(d, u, act(d, v, x))
    assert act(d, inverse(d, u), y) == x
    assert element_from_word(d, u.word) == u
    assert compose(d, u, identity(d)) == u


@given(st.sampled_from(["B2", "G2", "B3"]), st.data())
def test_element_sending_recovers_u(name, data):
    d = build_root_datum(name)
    u = data.draw(st.sampled_from(enumerate_group(d)))
    top = d.from_labels([data.draw(st.integers(1, 3)) for _ in range(d.rank)])
    assert element_sending(d, top, act(d, u, top)) == u


def test_bad_reflection_index():
    d = build_root_datum("A2")
    with pytest.raises(IndexError):
        element_from_word(d, (0, 5))
