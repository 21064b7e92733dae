import re

import pytest

from hkcones.chambers import stability_chambers_rank2
from hkcones.errors import RankUnsupported
from hkcones.fixtures import builtin
from hkcones.svg import fan_svg, format_class


def render(name):
    model = builtin(name)
    return fan_svg(model, stability_chambers_rank2(model))


def test_hilb2_s1_figure():
    svg = render("hilb2-s1")
    assert svg.count("<path") == 3
    labels = re.findall(r'text-anchor="\w+">([^<]+)</text>', svg)
    assert sorted(labels) == sorted(["delta", "H", "3H-2delta", "H-delta"])


def test_ht_figure_has_six_legend_entries():
    svg = render("fano-cubic-scroll")
    legend = svg.split('<g id="legend"')[1]
    assert legend.count("<rect") == 6
    assert svg.count('data-chamber="SC{P,Pv,S}"') == 2
    assert "sqrt(6)" in svg


def test_empty_report_draws_axes_only():
    svg = fan_svg(builtin("hilb2-s1"), [])
    assert "<path" not in svg and "<line" in svg
    assert svg.count("<line") == 2


def test_byte_identical():
    assert render("fano-cubic-scroll") == render("fano-cubic-scroll")


def test_rank3_refused():
    with pytest.raises(RankUnsupported):
        fan_svg(builtin("k3n-mixed"), [])


def test_format_class():
    from hkcones.lattice import DivisorClass
    from hkcones.scalar import QuadScalar

    assert format_class(("H", "delta"), DivisorClass.of(3, -2)) == "3H-2delta"
    assert format_class(("H", "delta"), DivisorClass.of(0, 0)) == "0"
    assert format_class(("g", "tau"), DivisorClass.of(1, QuadScalar(-3, 1, 6))) == "g+(-3 + sqrt(6))tau"
