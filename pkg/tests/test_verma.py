import pytest
from hypothesis import given, strategies as st

from weylverma.embedding import build_embedding
from weylverma.matrix import specs
from weylverma.oracle import character_by_division
from weylverma.rootspace import build_root_datum
from weylverma.verma import (
    euler_matches, gv_character, gv_to_ordinary, parabolic_data, standard_weyl_verma,
    weyl_verma_decompose,
)

from conftest import F


def test_parabolic_data_b2_theta(b2_theta):
    pd = parabolic_data(b2_theta)
    assert pd.I == (0,)
    assert pd.witness.is_identity()
    assert set(pd.nilradical_roots) == {F(0, 1), F(1, 0), F(1, 1)}


def test_parabolic_data_theta_partner_is_rotated(b2):
    pd = parabolic_data(build_embedding(b2, [[1, 0]]))
    assert pd.I == (0,)  # the long simple root
    assert pd.witness.word == (1,)


def test_parabolic_data_trivial_partner(b2):
    pd = parabolic_data(build_embedding(b2, [[1, 0], [0, 1]]))
    assert pd.I == () and len(pd.nilradical_roots) == 4


def test_gv_character_layers(b2_theta):
    pd = parabolic_data(b2_theta)
    lam = F("1/2", "-1/2")  # perp highest weight for u = e, mu = omega1
    gv = gv_character(pd, lam, 8)
    rel = gv.relative
    # top layer is the 2-dim a_perp module, next layer adds one nilradical root
    assert rel[(0, 0)] == 1 and rel[(-1, 0)] == 1
    assert rel[(0, -1)] == 1 and rel[(-1, -1)] == 2
    assert all(c > 0 for _, c in rel.items())
    assert gv_to_ordinary(pd, lam, 8) == gv.terms


def test_gv_rejects_non_dominant(b2_theta):
    with pytest.raises(ValueError):
        gv_character(parabolic_data(b2_theta), F("-1/2", "1/2"), 8)


def test_b2_theta_decomposition(b2_theta):
    g = b2_theta.ambient
    mu = g.from_labels((1, 0))
    terms = weyl_verma_decompose(b2_theta, mu, 8)
    assert [t.sign for t in terms] == [1, -1, 1, -1]
    assert euler_matches(b2_theta, mu, [(t.sign, t.carrier, t.gv.highest_weight) for t in terms], 8)


def test_b3_levi_partner_euler_identity():
    s = build_embedding("B3", [[1, 0, 0]])
    mu = s.ambient.from_labels((1, 0, 0))
    terms = weyl_verma_decompose(s, mu, 8)
    assert euler_matches(s, mu, [(t.sign, t.carrier, t.gv.highest_weight) for t in terms], 8)


@pytest.mark.parametrize("name,labels,depth", [("A1", (0,), 8), ("B2", (1, 0), 8),
                                               ("G2", (1, 0), 6)])
def test_standard_weyl_verma(name, labels, depth):
    d = build_root_datum(name)
    mu = d.from_labels(labels)
    assert standard_weyl_verma(d, mu, depth) == character_by_division(d, mu, depth)


@given(st.sampled_from(specs(["A2", "B2", "G2", "A3", "B3", "C3"])), st.data())
def test_gv_equals_ordinary_sum(spec, data):
    g = spec.ambient
    mu = g.from_labels([data.draw(st.integers(0, 2)) for _ in range(g.rank)])
    depth = data.draw(st.sampled_from([3, 5]))
    pd = parabolic_data(spec)
    for t in weyl_verma_decompose(spec, mu, depth):
        assert gv_to_ordinary(pd, t.gv.highest_weight, depth) == t.gv.terms
