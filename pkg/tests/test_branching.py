import pytest
from hypothesis import given, strategies as st

from weylverma.branching import (
    DepthError, branch, compute_fan, fan_round_trip, k_from_branching, perp_dimension,
)
from weylverma.embedding import build_embedding
from weylverma.formal import FormalElement
from weylverma.oracle import brute_force_branch
from weylverma.matrix import specs
from weylverma.singular import compute_U

from conftest import F

SMALL_SPECS = specs(["A2", "B2", "G2", "A3"])


def _by_a_labels(spec, b):
    return {spec.a_datum.labels(nu): m for nu, m in b.items()}


def test_b2_theta_fan(b2_theta):
    fan = compute_fan(b2_theta, 8)
    assert fan.gamma0 == F(0, 0) and fan.s0 == -1
    assert fan.shifts == {F("1/2", "1/2"): 2, F(1, 1): -1}
    assert fan_round_trip(b2_theta, fan) == FormalElement.one(2)


def test_nonstandard_partner_has_shifted_lowest_vector(b2):
    fan = compute_fan(build_embedding(b2, [[1, 0]]), 8)
    assert fan.gamma0 == F("-1/2", "1/2") and fan.s0 == 1


# values frozen from the brute-force oracle
@pytest.mark.parametrize("alg,roots,labels,expected", [
    ("B2", [[1, 2]], (1, 0), {(1,): 2, (0,): 1}),
    ("B2", [[1, 2]], (0, 1), {(1,): 1, (0,): 2}),
    ("G2", [[0, 1]], (1, 0), {(1,): 2, (0,): 3}),
    ("G2", [[1, 0]], (1, 0), {(1,): 2, (2,): 1}),
    ("B3", [[0, 1, 0], [0, 0, 1]], (1, 0, 0), {(0, 0): 2, (1, 0): 1}),
    ("C3", [[2, 2, 1]], (1, 0, 0), {(0,): 4, (1,): 1}),
])
def test_branching_tables(alg, roots, labels, expected):
    s = build_embedding(alg, roots)
    res = branch(s, s.ambient.from_labels(labels))
    assert _by_a_labels(s, res.b) == expected
    assert res.sum_rule(s) == s.ambient.weyl_dimension(s.ambient.from_labels(labels))


def test_h_perp_charge_is_kept():
    s = build_embedding("A3", [[1, 0, 0], [0, 0, 1]])
    b = branch(s, s.ambient.from_labels((0, 1, 0))).b
    assert b == {F("-1/2", "-1/2", "1/2", "1/2"): 1, F("1/2", "-1/2", "1/2", "-1/2"): 1,
                 F("1/2", "1/2", "-1/2", "-1/2"): 1}


def test_identity_branching(b2):
    s = build_embedding(b2, [[1, 0], [0, 1]])
    mu = b2.from_labels((2, 1))
    assert branch(s, mu).b == {mu: 1}


def test_depth_too_small_raises(b2_theta):
    with pytest.raises(DepthError):
        branch(b2_theta, b2_theta.ambient.from_labels((2, 2)), depth=1)


def test_perp_dimension(b2_theta):
    g = b2_theta.ambient
    mu = g.from_labels((1, 0))
    assert sorted(perp_dimension(b2_theta, u, mu) for u in compute_U(b2_theta, mu)) == [2, 2, 3, 3]


@given(st.sampled_from(SMALL_SPECS), st.data())
def test_branching_matches_oracle(spec, data):
    g = spec.ambient
    mu = g.from_labels([data.draw(st.integers(0, 2)) for _ in range(g.rank)])
    res = branch(spec, mu)
    assert res.b == brute_force_branch(spec, mu)
    # k is the signed W_a-orbit expansion of b
    assert k_from_branching(spec, res.b) == res.k_table
