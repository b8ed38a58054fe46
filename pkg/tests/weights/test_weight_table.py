import numpy as np
import pytest

from torsionrank.arithmetic import QuadExtElement, is_cube
from torsionrank.torsion import ALL_GROUPS
from torsionrank.verification.criteria import expected_split_bias
from torsionrank.weights import (
    admissible_primes,
    build_weight_table,
    expected_singular_weight_sum,
    singular_mask,
    singular_weight_sum,
    split_bias_sum,
)
from torsionrank.weights.weight_table import GAMMA_7, GAMMA_9

groups = pytest.mark.parametrize("G", ALL_GROUPS, ids=lambda G: G.label)


class TestWeightTable:
    @groups
    def test_total(self, G) -> None:
        for p in (5, 7, 11):
            assert build_weight_table(G, p).total == p * p

    def test_f5_example(self) -> None:
        table = build_weight_table("7", 5)
        assert table[2, 1] == 0
        assert table[2, 4] == 12
        assert table[2, -1] == 12

    def test_identity_map(self) -> None:
        table = build_weight_table("0", 7)
        assert np.all(table.w == 1)
        assert table.support.all()

    def test_rows(self) -> None:
        table = build_weight_table("2", 7)
        rows = list(table.rows())
        assert rows == sorted(rows)
        assert sum(w for _, _, w in rows) == 49
        assert all(w > 0 for _, _, w in rows)

    def test_workers(self) -> None:
        single = build_weight_table("5", 11, workers=1)
        pooled = build_weight_table("5", 11, workers=2)
        np.testing.assert_array_equal(single.w, pooled.w)

    def test_read_only(self) -> None:
        table = build_weight_table("2", 5)
        with pytest.raises(ValueError):
            table.w[0, 0] = 3

    def test_not_a_prime(self) -> None:
        with pytest.raises(ValueError):
            build_weight_table("2", 9)


class TestSingularSums:
    def test_mask(self) -> None:
        for p in (5, 7, 11):
            assert singular_mask(p).sum() == p
            assert singular_mask(p)[0, 0]

    def test_examples(self) -> None:
        assert singular_weight_sum("2", 7) == 13
        assert expected_singular_weight_sum("8", 7) == 37

    @groups
    def test_closed_form(self, G) -> None:
        for p in admissible_primes(G, [5, 7, 11, 13]):
            assert singular_weight_sum(G, p) == expected_singular_weight_sum(G, p)

    def test_admissible(self) -> None:
        assert admissible_primes("2x8", [5, 7, 11, 13]) == [11, 13]
        assert admissible_primes("10", [3, 5, 7]) == [7]
        assert admissible_primes("6", [5, 7]) == [5, 7]

    def test_inadmissible(self) -> None:
        with pytest.raises(ValueError):
            expected_singular_weight_sum("5", 5)


class TestCubeConditions:
    @pytest.mark.parametrize("gamma", [GAMMA_7, GAMMA_9], ids=["gamma_7", "gamma_9"])
    @pytest.mark.parametrize("p", [5, 11, 13, 17, 19, 23, 29, 31, 37, 43])
    def test_either_root_of_minus_three(self, gamma, p) -> None:
        u, v = gamma
        assert is_cube(QuadExtElement(u, v, p), p) == is_cube(
            QuadExtElement(u, -v, p), p
        )


class TestSplitBias:
    @pytest.mark.parametrize("p", [5, 7, 11, 13, 17, 19, 23, 37])
    def test_residue_classes(self, p) -> None:
        assert split_bias_sum(p) == expected_split_bias(p)

    def test_values(self) -> None:
        assert expected_split_bias(13) == 24
        assert expected_split_bias(19) == 0
        assert expected_split_bias(17) == 16
