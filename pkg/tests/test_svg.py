import re
import xml.dom.minidom

import pytest

from weylverma.rootspace import build_root_datum
from weylverma.svg import draw


def test_b2_theta_contours(b2_theta):
    d = b2_theta.ambient
    svg = draw(d, d.from_labels((1, 0)), b2_theta)
    doc = xml.dom.minidom.parseString(svg.encode())
    polys = doc.getElementsByTagName("polygon")
    classes = [p.getAttribute("class") for p in polys]
    assert len(polys) == 4
    assert classes.count("contour positive") == 2 and classes.count("contour negative") == 2
    for p in polys:
        dash = p.getAttribute("stroke-dasharray")
        assert dash == ("6,3" if "positive" in p.getAttribute("class") else "1,3")
    assert len(re.findall(r'class="simple-root"', svg)) == 2
    assert len(re.findall(r'class="a-root"', svg)) == 1
    assert len(re.findall(r'class="weight"', svg)) == 5


def test_a2_adjoint_hexagon():
    d = build_root_datum("A2")
    svg = draw(d, d.from_labels((1, 1)))
    mults = re.findall(r'class="weight" data-mult="(\d)"', svg)
    assert sorted(mults) == ["1"] * 6 + ["2"]
    assert svg.count('class="mult-marker"') == 1


def test_rank_check():
    d = build_root_datum("A1")
    with pytest.raises(ValueError):
        draw(d, d.from_labels((1,)))


def test_deterministic(b2_theta):
    d = b2_theta.ambient
    assert draw(d, d.from_labels((1, 1)), b2_theta) == draw(d, d.from_labels((1, 1)), b2_theta)
