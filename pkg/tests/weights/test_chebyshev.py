import pytest

from torsionrank.weights import chebyshev_coeff, chebyshev_U, power_from_chebyshev


class TestChebyshevU:
    def test_recurrence(self) -> None:
        assert [chebyshev_U(k, 5, 7) for k in range(4)] == [1, 5, 18, 55]

    def test_negative_degree(self) -> None:
        with pytest.raises(ValueError):
            chebyshev_U(-1, 1, 1)


class TestChebyshevCoeff:
    def test_values(self) -> None:
        assert [chebyshev_coeff(4, j) for j in range(3)] == [1, 3, 2]
        assert chebyshev_coeff(3, 1) == 2
        assert chebyshev_coeff(0, 0) == 1

    def test_out_of_range(self) -> None:
        with pytest.raises(ValueError):
            chebyshev_coeff(3, 2)
        with pytest.raises(ValueError):
            chebyshev_coeff(3, -1)

    @pytest.mark.parametrize("R", range(9))
    def test_power_expansion(self, R) -> None:
        for t in range(-5, 6):
            for q in range(1, 7):
                assert power_from_chebyshev(R, t, q) == t**R
