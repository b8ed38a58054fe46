from fractions import Fraction

import pytest

from torsionrank import TorsionGroup, UnsupportedGroupError
from torsionrank.torsion import ALL_GROUPS, LARGE_GROUPS, SMALL_GROUPS


class TestTorsionGroup:
    @pytest.mark.parametrize(
        "text, label",
        [
            ("0", "0"),
            ("1", "0"),
            ("trivial", "0"),
            (5, "5"),
            ("Z/5", "5"),
            ("2x4", "2x4"),
            ("4x2", "2x4"),
            ("2×8", "2x8"),
            ("Z/2xZ/6", "2x6"),
            (" 2 x 2 ", "2x2"),
        ],
    )
    def test_parse(self, text, label: str) -> None:
        assert TorsionGroup.parse(text).label == label

    @pytest.mark.parametrize("text", ["11", "2x3", "3x3", "Z/16", ""])
    def test_parse_unsupported(self, text) -> None:
        with pytest.raises(UnsupportedGroupError):
            TorsionGroup.parse(text)

    def test_parse_passthrough(self) -> None:
        G = ALL_GROUPS[3]
        assert TorsionGroup.parse(G) is G

    def test_registry(self) -> None:
        assert len(ALL_GROUPS) == 15
        assert [G.label for G in SMALL_GROUPS] == ["2", "3", "4", "2x2"]
        assert len(LARGE_GROUPS) == 10
        assert ALL_GROUPS[0].is_trivial

    @pytest.mark.parametrize(
        "label, d",
        [
            ("0", Fraction(6, 5)),
            ("2", 2),
            ("3", 3),
            ("4", 4),
            ("5", 6),
            ("6", 6),
            ("7", 12),
            ("8", 12),
            ("9", 18),
            ("10", 18),
            ("12", 24),
            ("2x2", 3),
            ("2x4", 6),
            ("2x6", 12),
            ("2x8", 24),
        ],
    )
    def test_growth(self, label: str, d) -> None:
        G = TorsionGroup.parse(label)
        assert G.d == d
        assert G.growth_exponent == 1 / Fraction(d)

    def test_properties(self) -> None:
        G = TorsionGroup.parse("2x4")
        assert (G.n1, G.n2, G.order) == (4, 2, 8)
        assert not G.is_cyclic and G.is_large and not G.is_small
        assert TorsionGroup.parse("2x2").delta == 1
        assert TorsionGroup.parse("4").delta == 0

    def test_weights(self) -> None:
        for G in ALL_GROUPS:
            assert G.total_weight * G.d == 12
        assert TorsionGroup.parse("2").weights == (4, 2)
        assert TorsionGroup.parse("7").weights == (Fraction(1, 2), Fraction(1, 2))

    def test_known_multiplicities(self) -> None:
        r = {G.label: G.r for G in ALL_GROUPS if G.r is not None}
        assert r == {"0": 1, "2": 1, "3": 2, "4": 2, "2x2": 6}

    def test_str(self) -> None:
        assert str(TorsionGroup.parse("0")) == "trivial"
        assert str(TorsionGroup.parse("5")) == "Z/5"
        assert str(TorsionGroup.parse("2x6")) == "Z/2xZ/6"
