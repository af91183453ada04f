import pytest

from weylverma.characters import kostant_series, weyl_character
from weylverma.oracle import freudenthal
from weylverma.rootspace import build_root_datum


@pytest.mark.parametrize("name,labels", [("A2", (1, 1)), ("B2", (2, 1)), ("G2", (1, 1)),
                                         ("B3", (1, 0, 1)), ("C3", (0, 1, 1))])
def test_weyl_character_matches_freudenthal(name, labels):
    d = build_root_datum(name)
    mu = d.from_labels(labels)
    assert dict(weyl_character(d, mu).items()) == freudenthal(d, mu).multiplicities


def test_kostant_partition_function_a2():
    # P(n a1 + m a2) for A2 is min(n, m) + 1
    d = build_root_datum("A2")
    k = kostant_series(d.positive_root_coords, 6)
    for (a, b), c in k.items():
        assert c == min(-a, -b) + 1
    assert len(k) == sum(n + 1 for n in range(7))
