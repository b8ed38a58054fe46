from fractions import Fraction

import numpy as np
import pytest
import sympy

from torsionrank import SingularCurveError
from torsionrank.curves import (
    ADDITIVE,
    GOOD,
    NONSPLIT,
    SINGULAR_TRACE,
    SPLIT,
    CurveModP,
    GroupShape,
    aut_weight,
    count_embeddings,
    count_points,
    group_structure,
    local_tables,
    smooth_point_count,
    torsion_embeds,
    trace_table,
)

primes = pytest.mark.parametrize("p", [5, 7, 11, 13])


def _brute_count(A: int, B: int, p: int) -> int:
    return 1 + sum(
        1 for x in range(p) for y in range(p) if (y * y - x**3 - A * x - B) % p == 0
    )


def _cubic_roots(A: int, B: int, p: int) -> int:
    return sum(1 for x in range(p) if (x**3 + A * x + B) % p == 0)


class TestCurveModP:
    def test_reduction(self) -> None:
        c = CurveModP(12, -4, 5)
        assert (c.A, c.B, c.p) == (2, 1, 5)

    def test_discriminant(self) -> None:
        assert CurveModP(2, 1, 5).discriminant() == (32 + 27) % 5
        assert CurveModP(0, 0, 7).is_singular
        assert CurveModP(2, 2, 5).is_singular

    def test_j_invariant(self) -> None:
        assert CurveModP(0, 1, 7).j_invariant() == 0
        assert CurveModP(1, 0, 7).j_invariant() == 1728 % 7
        assert CurveModP(0, 0, 7).j_invariant() is None

    @primes
    def test_twist_preserves_trace(self, p: int) -> None:
        c = CurveModP(1, 3, p)
        if c.is_singular:
            pytest.skip("singular model")
        for u in range(1, p):
            assert count_points(c.twist(u)) == count_points(c)
        with pytest.raises(ZeroDivisionError):
            c.twist(p)


class TestCountPoints:
    def test_example(self) -> None:
        assert count_points(CurveModP(2, 1, 5)) == (7, -1)

    @primes
    def test_brute_force(self, p: int) -> None:
        for A in range(p):
            for B in range(p):
                c = CurveModP(A, B, p)
                if c.is_singular:
                    continue
                N, a = count_points(c)
                assert N == _brute_count(A, B, p)
                assert a * a <= 4 * p

    def test_singular(self) -> None:
        with pytest.raises(SingularCurveError):
            count_points(CurveModP(0, 0, 5))

    @primes
    def test_smooth_points_of_singular_models(self, p: int) -> None:
        local = local_tables(p)
        for A, B in zip(*np.nonzero(local.singular)):
            c = CurveModP(int(A), int(B), p)
            assert smooth_point_count(c) == p - local.traces[A, B]


class TestGroupStructure:
    def test_example(self) -> None:
        assert group_structure(CurveModP(2, 1, 5)) == GroupShape(7, 1)

    @primes
    def test_shape(self, p: int) -> None:
        for A in range(p):
            for B in range(p):
                c = CurveModP(A, B, p)
                if c.is_singular:
                    continue
                shape = group_structure(c)
                assert shape.order == count_points(c)[0]
                assert shape.n1 % shape.n2 == 0
                assert (p - 1) % shape.n2 == 0
                roots = _cubic_roots(A, B, p)
                assert shape.torsion_count(2) == 1 + roots

    def test_exact_order_count(self) -> None:
        shape = GroupShape(4, 2)
        assert shape.exact_order_count(1) == 1
        assert shape.exact_order_count(2) == 3
        assert shape.exact_order_count(4) == 4
        assert shape.exact_order_count(8) == 0


class TestAutWeight:
    def test_values(self) -> None:
        assert aut_weight(CurveModP(0, 1, 7)) == Fraction(1, 6)
        assert aut_weight(CurveModP(1, 0, 5)) == Fraction(1, 4)
        assert aut_weight(CurveModP(0, 1, 5)) == Fraction(1, 2)
        assert aut_weight(CurveModP(2, 1, 5)) == Fraction(1, 2)

    @primes
    def test_stabilizer(self, p: int) -> None:
        for A in range(p):
            for B in range(p):
                c = CurveModP(A, B, p)
                if c.is_singular:
                    continue
                stabilizer = sum(1 for u in range(1, p) if c.twist(u) == c)
                assert aut_weight(c) == Fraction(1, stabilizer)


class TestEmbeddings:
    @primes
    def test_two_torsion(self, p: int) -> None:
        for A in range(p):
            for B in range(p):
                c = CurveModP(A, B, p)
                if c.is_singular:
                    continue
                roots = _cubic_roots(A, B, p)
                assert count_embeddings(c, "2") == roots
                assert count_embeddings(c, "2x2") == (6 if roots == 3 else 0)
                assert torsion_embeds(c, "2") == (roots > 0)
                assert torsion_embeds(c, "0")

    def test_example(self) -> None:
        assert torsion_embeds(CurveModP(2, 1, 5), "7")
        assert count_embeddings(CurveModP(2, 1, 5), "7") == 6

    def test_order_divisible_by_p(self) -> None:
        with pytest.raises(ValueError):
            torsion_embeds(CurveModP(2, 1, 5), "5")


class TestLocalTables:
    @primes
    def test_codes(self, p: int) -> None:
        local = local_tables(p)
        assert int(local.singular.sum()) == p
        assert int((local.codes == ADDITIVE).sum()) == 1
        assert local.codes[0, 0] == ADDITIVE
        assert int((local.codes == SPLIT).sum()) == (p - 1) // 2
        assert int((local.codes == NONSPLIT).sum()) == (p - 1) // 2
        assert int((local.codes == GOOD).sum()) == p * p - p

    @primes
    def test_traces(self, p: int) -> None:
        local = local_tables(p)
        for A in range(p):
            for B in range(p):
                if local.codes[A, B] == GOOD:
                    assert local.traces[A, B] == count_points(CurveModP(A, B, p))[1]

    def test_small_chunks(self) -> None:
        assert np.array_equal(
            local_tables(11, chunk=50).traces, local_tables(11).traces
        )

    def test_trace_table(self) -> None:
        table = trace_table(5)
        assert table[2, 1] == -1
        assert table[0, 0] == SINGULAR_TRACE
        assert not table.flags.writeable


def _isomorphism_classes(p: int):
    seen = set()
    for A in range(p):
        for B in range(p):
            c = CurveModP(A, B, p)
            if c.is_singular or (A, B) in seen:
                continue
            seen.update((t.A, t.B) for t in (c.twist(u) for u in range(1, p)))
            yield c


small_primes = [5, 7, 11, 13, 17, 19, 23, 29]
larger_primes = [31, 37, 41, 43, 47, 53, 59]
mass_primes = small_primes + [
    pytest.param(p, marks=pytest.mark.slow) for p in larger_primes
]


class TestMassFormula:
    @pytest.mark.parametrize("p", mass_primes)
    def test_weighted_class_count(self, p: int) -> None:
        classes = list(_isomorphism_classes(p))
        assert sum(aut_weight(c) for c in classes) == p
        assert len(classes) in (2 * p + 2, 2 * p + 4, 2 * p + 6)


class TestWeilBound:
    @pytest.mark.parametrize("p", small_primes)
    def test_small_primes(self, p: int) -> None:
        table = trace_table(p)
        traces = table[table != SINGULAR_TRACE]
        assert traces.size == p * (p - 1)
        assert np.all(traces.astype(np.int64) ** 2 <= 4 * p)

    @pytest.mark.slow
    def test_primes_below_500(self) -> None:
        for p in sympy.primerange(5, 501):
            local = local_tables(int(p))
            traces = local.traces[~local.singular].astype(np.int64)
            assert np.all(traces**2 <= 4 * p), p
