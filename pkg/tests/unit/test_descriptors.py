"""
Tests for descriptor and gauge text syntax.
"""

from fractions import Fraction

import pytest

from probmetric.descriptors import format_descriptor, format_gauge, parse_descriptor, parse_gauge
from probmetric.errors import DescriptorSyntaxError
from probmetric.gauges import Gauge
from probmetric.metrics import (
    Indicator,
    KyFan,
    LInf,
    Lp,
    Prokhorov,
    SupOf,
    TotalVariation,
)
from probmetric.minimal import MinimalMetric


class TestParseDescriptor:
    @pytest.mark.parametrize(
        "text,expected",
        [
            ("kyfan:1/2", KyFan(Fraction(1, 2))),
            ("lp:2", Lp(2)),
            ("linf", LInf()),
            ("ind", Indicator()),
            ("prok:1", Prokhorov(1)),
            ("tv", TotalVariation()),
            ("sup(ind,tv)", SupOf((Indicator(), TotalVariation()))),
            ("hat(lp:1)", MinimalMetric(Lp(1))),
        ],
    )
    def test_known(self, text, expected):
        assert parse_descriptor(text) == expected

    def test_nested(self):
        desc = parse_descriptor("sup(hat(lp:1), kyfan:2)")
        assert desc == SupOf((MinimalMetric(Lp(1)), KyFan(2)))
        assert format_descriptor(desc) == "sup(hat(lp:1),kyfan:2)"

    def test_whitespace_and_case(self):
        assert parse_descriptor("  KyFan:1 ") == KyFan(1)

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "foo",
            "kyfan",
            "kyfan:0",
            "kyfan:x",
            "lp:1/2",
            "linf:1",
            "sup(ind,",
            "sup(ind,)",
            "hat(ind,tv)",
            "sup(ind))",
        ],
    )
    def test_rejected(self, text):
        with pytest.raises(DescriptorSyntaxError):
            parse_descriptor(text)


class TestParseGauge:
    def test_families(self):
        assert parse_gauge("family:kyfan") == Gauge.ky_fan()
        assert parse_gauge("family:prok") == Gauge.prokhorov()
        assert parse_gauge("family:prokhorov") == Gauge.prokhorov()

    def test_basis(self):
        g = parse_gauge("basis(ind, tv)")
        assert g == Gauge.finite(Indicator(), TotalVariation())
        assert format_gauge(g) == "basis(ind,tv)"

    def test_bare_descriptor(self):
        assert parse_gauge("lp:1") == Gauge.finite(Lp(1))

    def test_unknown_family(self):
        with pytest.raises(DescriptorSyntaxError):
            parse_gauge("family:wasserstein")
