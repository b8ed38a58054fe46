import logging
import math

import numpy as np
import pytest

from torsionrank import (
    InvalidExponentPatternError,
    MissingLocalDataError,
    UnsupportedGroupError,
)
from torsionrank.census import enumerate_census
from torsionrank.curves import CurveQ, Reduction, TraceCache, reduction_type
from torsionrank.rank_bounds import (
    empirical_S1_S2,
    hat_a,
    hat_a_census,
    predicted_trace_constant,
    prime_window,
    trace_formula_check,
    validate_pattern,
)


@pytest.fixture(scope="module")
def z2_census():
    return enumerate_census("2", 10**4)


class TestHatA:
    def test_good(self) -> None:
        ld = reduction_type(CurveQ(2, 1), 5)
        assert hat_a(ld, 2) == pytest.approx(-1.8)
        assert hat_a(ld, 1) == pytest.approx(-1 / math.sqrt(5))

    def test_multiplicative(self) -> None:
        split = reduction_type(CurveQ(8, 2), 11)
        assert hat_a(split, 1) == pytest.approx(1 / math.sqrt(11))
        assert hat_a(split, 2) == pytest.approx(1 / 11)
        nonsplit = reduction_type(CurveQ(2, 2), 5)
        assert hat_a(nonsplit, 1) == pytest.approx(-1 / math.sqrt(5))
        assert hat_a(nonsplit, 2) == pytest.approx(1 / 5)

    def test_additive(self) -> None:
        ld = reduction_type(CurveQ(5, 5), 5)
        assert hat_a(ld, 1) == hat_a(ld, 2) == 0.0

    def test_good_reduction_relations(self, z2_census) -> None:
        checked = 0
        for A, B in list(z2_census)[:200]:
            ld = reduction_type(CurveQ(A, B), 11)
            if ld.reduction is not Reduction.GOOD:
                continue
            checked += 1
            assert abs(hat_a(ld, 1)) <= 2
            assert hat_a(ld, 2) == pytest.approx(hat_a(ld, 1) ** 2 - 2)
        assert checked > 0

    def test_unsupported_power(self) -> None:
        with pytest.raises(ValueError):
            hat_a(reduction_type(CurveQ(2, 1), 5), 3)

    def test_census(self, z2_census) -> None:
        values = hat_a_census(z2_census, 7, 2)
        assert values.shape == (len(z2_census),)
        for (A, B), value in list(zip(z2_census, values))[:50]:
            ld = reduction_type(CurveQ(A, B), 7)
            assert value == pytest.approx(hat_a(ld, 2))


class TestPattern:
    def test_valid(self) -> None:
        assert validate_pattern([(5, 1, 3), (7, 1, 2), (11, 2, 1)]) == [
            (5, 1, 3),
            (7, 1, 2),
            (11, 2, 1),
        ]

    @pytest.mark.parametrize(
        "pattern",
        [
            [],
            [(5, 1, 1), (5, 2, 1)],
            [(3, 1, 1)],
            [(9, 1, 1)],
            [(5, 1, 4)],
            [(5, 2, 2)],
            [(5, 1, 0)],
            [(5, 3, 1)],
        ],
    )
    def test_invalid(self, pattern) -> None:
        with pytest.raises(InvalidExponentPatternError):
            validate_pattern(pattern)

    @pytest.mark.parametrize(
        "pattern, expected",
        [
            ([(5, 1, 2), (7, 2, 1)], -1),
            ([(5, 1, 1)], 0),
            ([(5, 1, 2), (7, 1, 3)], 0),
            ([(5, 2, 1), (7, 2, 1)], 1),
            ([(5, 1, 2)], 1),
        ],
    )
    def test_constant(self, pattern, expected) -> None:
        assert predicted_trace_constant(pattern) == expected


class TestExplicitSums:
    def test_prime_window(self) -> None:
        assert prime_window(10**4, 0.25) == (5, 7)
        assert prime_window(10**4, 0.1) == ()

    def test_vacuous(self, z2_census, caplog) -> None:
        with caplog.at_level(logging.WARNING):
            sums = empirical_S1_S2(z2_census, 1 / 9)
        assert sums.vacuous
        assert sums.S1 == sums.S2 == 0.0
        assert sums.target_S2 == pytest.approx(-1 / 648)
        assert sums.deviation_S2 == pytest.approx(1 / 648)
        assert sums.deviation_S1 == 0.0
        assert "No prime" in caplog.text

    def test_windows(self, z2_census) -> None:
        sums = empirical_S1_S2(z2_census, 0.5)
        assert sums.primes_S1[0] == 5 and sums.primes_S1[-1] == 97
        assert len(sums.primes_S1) == 23
        assert sums.primes_S2 == (5, 7)
        assert not sums.vacuous
        assert math.isfinite(sums.S1) and math.isfinite(sums.S2)

    def test_cache(self, z2_census, tmp_path) -> None:
        cache = TraceCache()
        cache.fill(z2_census.curves, [5, 7])
        path = cache.save(tmp_path / "traces.txt")
        direct = empirical_S1_S2(z2_census, 0.25)
        cached = empirical_S1_S2(z2_census, 0.25, cache=TraceCache.load(path))
        assert cached.S1 == pytest.approx(direct.S1)

    def test_incomplete_cache(self, z2_census) -> None:
        cache = TraceCache()
        cache.fill(list(z2_census.curves)[:5], [5, 7])
        with pytest.raises(MissingLocalDataError):
            empirical_S1_S2(z2_census, 0.25, cache=cache)


class TestTraceFormula:
    def test_result(self, z2_census) -> None:
        result = trace_formula_check("2", z2_census, [(5, 2, 1)])
        assert result.predicted == -1
        assert result.count == len(z2_census)
        expected = float(np.mean(hat_a_census(z2_census, 5, 2)))
        assert result.lhs == pytest.approx(expected)
        assert result.deviation == pytest.approx(abs(result.lhs + 1))
        assert math.isfinite(result.local_limit)

    def test_local_limit_of_empty_pattern_product(self, z2_census) -> None:
        single = trace_formula_check("2", z2_census, [(5, 1, 2)])
        assert single.predicted == 1
        assert single.local_limit > 0

    def test_unsupported_group(self) -> None:
        census = enumerate_census("3", 1000)
        with pytest.raises(UnsupportedGroupError):
            trace_formula_check("3", census, [(5, 1, 1)])

    def test_mismatched_census(self) -> None:
        census = enumerate_census("3", 1000)
        with pytest.raises(ValueError):
            trace_formula_check("2", census, [(5, 1, 1)])
