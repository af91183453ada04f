import dataclasses

import pytest
from hypothesis import given, strategies as st

from weylverma.embedding import EmbeddingError, build_embedding
from weylverma.matrix import specs
from weylverma.resolution import bgg_resolution, resolution_from_branching, verify_euler
from weylverma.singular import decompose
from weylverma.verma import standard_weyl_verma
from weylverma.weyl import enumerate_group

from conftest import F

RANK1_PERP = [s for s in specs(["A2", "B2", "G2", "A3", "B3", "C3"]) if s.perp_datum.rank == 1]


def test_classical_a1():
    s = build_embedding("A1", [[1]])
    seq = bgg_resolution(s, s.ambient.zero())
    assert seq.grade_sizes() == [1, 1]
    assert seq.grades[1][0].u.word == (0,)
    assert verify_euler(seq, s, 6)


def test_b2_theta_resolution(b2_theta):
    g = b2_theta.ambient
    seq = bgg_resolution(b2_theta, g.from_labels((1, 0)))
    assert seq.grade_sizes() == [1, 1, 1, 1]
    top = seq.grades[0][0]
    # carrier pi_a~[mu] + D_perp and perp hw pi_perp[omega1] - D_perp
    assert top.carrier == F("1/2", "1/2")
    assert top.perp_hw == F("1/2", "-1/2")
    assert top.highest_weight == g.from_labels((1, 0))
    for depth in (4, 6, 8):
        assert verify_euler(seq, b2_theta, depth)


def test_flipped_sign_fails(b2_theta):
    seq = bgg_resolution(b2_theta, b2_theta.ambient.from_labels((1, 0)))
    e = seq.grades[1][0]
    seq.grades[1][0] = dataclasses.replace(e, sign=-e.sign)
    assert not verify_euler(seq, b2_theta, 6)


def test_classical_grades_follow_length_distribution(b2):
    s = build_embedding(b2, [[1, 0], [0, 1]])
    seq = bgg_resolution(s, b2.from_labels((1, 1)))
    counts = [0] * 5
    for w in enumerate_group(b2):
        counts[w.length] += 1
    assert seq.grade_sizes() == counts
    assert verify_euler(seq, s, 8)


def test_entries_match_decomposition(b2_theta):
    mu = b2_theta.ambient.from_labels((0, 1))
    seq = bgg_resolution(b2_theta, mu)
    assert {(e.u, e.sign, e.carrier, e.perp_hw) for e in seq.entries} == {
        (e.u, e.sign, e.carrier, e.perp_hw) for e in decompose(b2_theta, mu).entries}


@pytest.mark.parametrize("labels", [(1, 0), (0, 1)])
def test_resolution_from_branching_b2_theta(b2_theta, labels):
    mu = b2_theta.ambient.from_labels(labels)
    assert resolution_from_branching(b2_theta, mu).grades == bgg_resolution(b2_theta, mu).grades


def test_resolution_from_branching_needs_rank_one():
    s = build_embedding("B3", [[1, 0, 0]])
    with pytest.raises(EmbeddingError):
        resolution_from_branching(s, s.ambient.from_labels((1, 0, 0)))


@given(st.sampled_from(RANK1_PERP), st.data())
def test_resolution_from_branching_property(spec, data):
    g = spec.ambient
    mu = g.from_labels([data.draw(st.integers(0, 2)) for _ in range(g.rank)])
    assert resolution_from_branching(spec, mu).grades == bgg_resolution(spec, mu).grades


def test_trivial_partner_reduces_to_standard(b2):
    s = build_embedding(b2, [[1, 0], [0, 1]])
    mu = b2.from_labels((1, 0))
    assert verify_euler(bgg_resolution(s, mu), s, 6)
    assert standard_weyl_verma(b2, mu, 6)[mu] == 1
