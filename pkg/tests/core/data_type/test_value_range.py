import pytest

from torsionrank.core import PrimeRange, ValueRange


class TestValueRange:
    def test_valid_range(self) -> None:
        ValueRange(0, 1)
        ValueRange(0.5, 1, True)
        ValueRange(0, 0)

        with pytest.raises(ValueError):
            ValueRange(-1.5, -2)

    def test_incomparable(self) -> None:
        with pytest.raises(TypeError):
            ValueRange(0, "a")

    def test_contains(self) -> None:
        assert 0 in ValueRange(0, 1)
        assert 0 in ValueRange(0, 0)
        assert 2 not in ValueRange(0, 1)

    def test_contains_strict(self) -> None:
        hasse = ValueRange(-4, 4, strict=True)
        assert 3 in hasse
        assert 4 not in hasse
        assert -4 not in hasse

    def test_iter(self) -> None:
        assert list(ValueRange(0, 1)) == [0, 1]
        assert list(PrimeRange(5, 13)) == [5, 13]

    def test_contain_all(self) -> None:
        limits = ValueRange(5, 10**4)
        assert limits.contain_all([5, 7, 10**4])
        assert limits.contain_all([])
        assert limits.contain_all(PrimeRange(11, 97))
        assert not limits.contain_all(PrimeRange(2, 97))
        assert not ValueRange(0, 1, strict=True).contain_all([0, 0.5])

    def test_equality(self) -> None:
        assert ValueRange(0, 1) == ValueRange(0, 1)
        assert ValueRange(0, 1) != ValueRange(0, 1, strict=True)
        assert ValueRange(0, 1) != (0, 1)
        assert PrimeRange(5, 7) != ValueRange(5, 7)
