import pytest

from torsionrank.core import PrimeRange


class TestPrimeRange:
    def test_parse_range(self) -> None:
        primes = PrimeRange.parse("5..20")
        assert (primes.lower, primes.upper) == (5, 20)
        assert primes.primes() == [5, 7, 11, 13, 17, 19]

    def test_parse_single(self) -> None:
        assert PrimeRange.parse("7").primes() == [7]
        assert PrimeRange.parse(11).primes() == [11]

    def test_parse_whitespace(self) -> None:
        assert PrimeRange.parse(" 5 .. 11 ").primes() == [5, 7, 11]

    def test_parse_passthrough(self) -> None:
        primes = PrimeRange(5, 9)
        assert PrimeRange.parse(primes) is primes

    @pytest.mark.parametrize("text", ["", "a..b", "5..", "-5..7", "5-7"])
    def test_invalid(self, text: str) -> None:
        with pytest.raises(ValueError):
            PrimeRange.parse(text)

    def test_reversed_bounds(self) -> None:
        with pytest.raises(ValueError):
            PrimeRange.parse("20..5")

    def test_minimum(self) -> None:
        assert PrimeRange(2, 12).primes() == [5, 7, 11]
        assert PrimeRange(2, 12).primes(minimum=2) == [2, 3, 5, 7, 11]

    def test_empty(self) -> None:
        assert PrimeRange(24, 28).primes() == []

    def test_str(self) -> None:
        assert str(PrimeRange.parse("5..60")) == "5..60"
