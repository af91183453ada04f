import json

import pytest
from hypothesis import given, strategies as st

from weylverma.embedding import (
    EmbeddingError, EmbeddingSpec, build_embedding, orthogonal_weyl_subgroup,
    parse_root_list, project_a, project_a_tilde, project_perp,
)
from weylverma.matrix import specs

from conftest import F


def test_b2_theta_partner_and_defects(b2_theta):
    assert b2_theta.a_simple_roots == (F(1, 1),)
    assert b2_theta.perp_datum.simple_roots == (F(1, -1),)
    assert b2_theta.dim_h_perp == 0
    assert b2_theta.defect_a == F("-1/2", "-1/2")
    assert b2_theta.defect_perp == F(0, 0)
    assert project_a(b2_theta, F(1, 0)) == F("1/2", "1/2")
    assert project_perp(b2_theta, F(1, 0)) == F("1/2", "-1/2")
    assert project_a_tilde(b2_theta, F(1, 0)) == F("1/2", "1/2")
    assert len(orthogonal_weyl_subgroup(b2_theta)) == 2


def test_b3_short_root_partner():
    s = build_embedding("B3", [[1, 0, 0]])
    assert s.perp_datum.rank == 2
    assert len(orthogonal_weyl_subgroup(s)) == 4


def test_h_perp_for_levi_a1_in_a2():
    s = build_embedding("A2", [[1, 0]])
    assert s.perp_datum.rank == 0
    assert s.dim_h_perp == 1


@pytest.mark.parametrize("alg,roots,msg", [
    ("B2", [[1, 1], [0, 1]], "closed"),
    ("B2", [[2, 1]], "not a root"),
    ("B2", [[-1, 0]], "negative"),
    ("B2", [[1, 0], [1, 0]], "repeated"),
    ("A2", [[1, 0], [1, 1]], "simple system"),
    ("B2", [[1]], "coefficients"),
])
def test_rejections(alg, roots, msg):
    with pytest.raises(EmbeddingError, match=msg):
        build_embedding(alg, roots)


def test_descriptor_round_trip(b2_theta):
    desc = b2_theta.descriptor()
    assert desc == {"ambient": "B2", "a_roots": [[1, 2]]}
    assert EmbeddingSpec.from_descriptor(json.dumps(desc)) == b2_theta


def test_parse_root_list():
    assert parse_root_list("1,2;0,1") == [(1, 2), (0, 1)]
    assert parse_root_list("") == []


@given(st.sampled_from(specs(["A2", "B2", "G2", "A3", "B3", "C3"])), st.data())
def test_projections_are_orthogonal_and_complete(spec, data):
    g = spec.ambient
    x = g.from_labels([data.draw(st.integers(-3, 3)) for _ in range(g.rank)])
    pa, pp, ph = spec.project_a(x), spec.project_perp(x), spec.project_h_perp(x)
    assert tuple(a + b + c for a, b, c in zip(pa, pp, ph)) == x
    assert g.inner(pa, pp) == g.inner(pa, ph) == g.inner(pp, ph) == 0
    assert spec.project_a_tilde(x) == tuple(a + c for a, c in zip(pa, ph))
