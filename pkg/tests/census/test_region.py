import pytest

from torsionrank.census import extents, region_area, scaled_extents


class TestRegionArea:
    def test_square(self) -> None:
        area = region_area("0", 1e-6)
        assert area.area == pytest.approx(4.0, abs=1e-4)
        assert float(area) == area.area
        assert area.lattice_estimate(2**12) == pytest.approx(area.area * 2**10)

    def test_symmetry(self) -> None:
        half = region_area("2", 1e-6).area
        full = region_area("2", 1e-6, use_symmetry=False).area
        assert half == pytest.approx(full, rel=1e-4)

    def test_invalid_tolerance(self) -> None:
        with pytest.raises(ValueError):
            region_area("2", 0)


class TestExtents:
    def test_square(self) -> None:
        a, b = extents("0")
        assert a == pytest.approx(1.0, abs=1e-6)
        assert b == pytest.approx(1.0, abs=1e-6)

    def test_scaled(self) -> None:
        a, b = scaled_extents("0", 10**6)
        assert 102 <= a <= 103
        assert 1020 <= b <= 1021
        assert scaled_extents("0", 10**6, slack=1.5)[0] > a
