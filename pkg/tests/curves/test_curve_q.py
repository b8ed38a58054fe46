import pytest

from torsionrank import SingularCurveError
from torsionrank.curves import (
    CurveQ,
    GroupShape,
    Reduction,
    is_minimal,
    minimal_twist,
    naive_height,
    reduction_type,
)


class TestMinimality:
    def test_height(self) -> None:
        assert naive_height(-3, 2) == 27
        assert naive_height(2, -10) == 100

    @pytest.mark.parametrize(
        "model, minimal",
        [
            ((16, 64), (1, 1)),
            ((0, 64), (0, 1)),
            ((81, 0), (1, 0)),
            ((16 * 81, -729 * 64 * 5), (1, -5)),
            ((2, 1), (2, 1)),
            ((16, 32), (16, 32)),
        ],
    )
    def test_minimal_twist(self, model, minimal) -> None:
        assert minimal_twist(*model) == minimal
        assert is_minimal(*minimal)

    def test_is_minimal(self) -> None:
        assert not is_minimal(16, 64)
        assert is_minimal(16, 32)
        assert not is_minimal(0, -64)

    def test_zero(self) -> None:
        with pytest.raises(SingularCurveError):
            minimal_twist(0, 0)


class TestCurveQ:
    def test_singular(self) -> None:
        with pytest.raises(SingularCurveError):
            CurveQ(-3, 2)

    def test_not_minimal(self) -> None:
        with pytest.raises(ValueError):
            CurveQ(16, 64)
        assert CurveQ(16, 64, check=False).height == 4096

    def test_discriminant(self) -> None:
        assert CurveQ(2, 1).discriminant == 4 * 8 + 27

    def test_reduce(self) -> None:
        c = CurveQ(12, -4).reduce(5)
        assert (c.A, c.B) == (2, 1)


class TestReductionType:
    def test_good(self) -> None:
        ld = reduction_type(CurveQ(2, 1), 5)
        assert (ld.p, ld.a_p, ld.reduction) == (5, -1, Reduction.GOOD)
        assert ld.shape == GroupShape(7, 1)

    def test_nonsplit(self) -> None:
        ld = reduction_type(CurveQ(2, 2), 5)
        assert (ld.a_p, ld.reduction) == (-1, Reduction.NONSPLIT)
        assert ld.reduction.is_multiplicative
        assert ld.shape is None

    def test_split(self) -> None:
        # node at x = 1 mod 11 with 3 a square mod 11
        ld = reduction_type(CurveQ(-3 + 11, 2), 11)
        assert (ld.a_p, ld.reduction) == (1, Reduction.SPLIT)

    def test_additive(self) -> None:
        ld = reduction_type(CurveQ(5, 5), 5)
        assert (ld.a_p, ld.reduction) == (0, Reduction.ADDITIVE)
        assert not ld.reduction.is_multiplicative

    @pytest.mark.parametrize("p", [2, 3])
    def test_small_primes(self, p: int) -> None:
        with pytest.raises(ValueError):
            reduction_type(CurveQ(2, 1), p)

    def test_codes(self) -> None:
        assert [r.code for r in Reduction] == ["g", "s", "n", "a"]
        assert all(Reduction.from_code(r.code) is r for r in Reduction)
