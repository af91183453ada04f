import pytest
from hypothesis import given, strategies as st

from weylverma.formal import FormalElement

keys = st.tuples(st.integers(-3, 3), st.integers(-3, 3))
polys = st.dictionaries(keys, st.integers(-3, 3), max_size=6).map(FormalElement)
nonzero_step = keys.filter(any)


def test_zero_coefficients_dropped():
    f = FormalElement({(0, 0): 0, (1, 0): 2})
    assert len(f) == 1 and f[(1, 0)] == 2 and f[(5, 5)] == 0


def test_arithmetic():
    a = FormalElement({(0,): 1, (1,): 1})
    assert a * a == FormalElement({(0,): 1, (1,): 2, (2,): 1})
    assert a - a == FormalElement()
    assert 3 * a == a + a + a


@given(polys, nonzero_step)
def test_division_inverts_multiplication(p, g):
    factor = FormalElement({(0, 0): 1, g: -1})
    assert (p * factor).divide_one_minus(g) == p


def test_division_rejects_non_multiples():
    with pytest.raises(ArithmeticError):
        FormalElement({(0,): 1}).divide_one_minus((1,))
    with pytest.raises(ZeroDivisionError):
        FormalElement({(0,): 1}).divide_one_minus((0,))


def test_truncated_geometric_series():
    one = FormalElement.one(1)
    s = one.times_geometric((-1,), lambda k: -k[0] <= 4, lambda k: -k[0])
    assert s == FormalElement({(-n,): 1 for n in range(5)})


@given(polys, polys, st.tuples(st.integers(-2, 2), st.integers(-2, 2)))
def test_shift_and_restrict(p, q, v):
    assert (p + q).shift(v) == p.shift(v) + q.shift(v)
    keep = lambda k: k[0] >= 0
    assert (p + q).restrict(keep) == p.restrict(keep) + q.restrict(keep)
