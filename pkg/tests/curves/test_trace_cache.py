from pathlib import Path

import pytest

from torsionrank import CacheIntegrityError
from torsionrank.curves import CurveQ, Reduction, TraceCache, resolve_cache_path

from ..conftest import tmp_environ

curves = [CurveQ(2, 1), CurveQ(2, 2), CurveQ(5, 5), CurveQ(-1, 1)]


@pytest.fixture
def cache() -> TraceCache:
    cache = TraceCache()
    cache.fill(curves, [5, 7, 11])
    return cache


class TestTraceCache:
    def test_fill(self, cache: TraceCache) -> None:
        assert len(cache) == 12
        assert cache.fill(curves, [5, 7, 11, 13]) == 4

    def test_get(self, cache: TraceCache) -> None:
        ld = cache.get(2, 1, 5)
        assert (ld.a_p, ld.reduction) == (-1, Reduction.GOOD)
        assert cache.get(2, 1, 13) is None
        assert (5, 2, 1) in cache

    def test_local_data(self) -> None:
        cache = TraceCache()
        assert cache.local_data(CurveQ(2, 2), 5).reduction is Reduction.NONSPLIT
        assert len(cache) == 1
        assert cache.local_data(CurveQ(2, 2), 5).a_p == -1
        assert len(cache) == 1

    def test_sorted_iteration(self, cache: TraceCache) -> None:
        keys = list(cache)
        assert keys == sorted(keys)
        assert keys[0][0] == 5

    def test_save_load(self, cache: TraceCache, tmp_path: Path) -> None:
        path = cache.save(tmp_path / "sub" / "traces.txt")
        lines = path.read_text().splitlines()
        assert lines[0] == TraceCache.header()
        assert len(lines) == 13
        loaded = TraceCache.load(path)
        assert list(loaded) == list(cache)
        assert all(loaded.get(A, B, p) == cache.get(A, B, p) for p, A, B in cache)

    def test_merge(self, cache: TraceCache) -> None:
        other = TraceCache()
        other.fill(curves, [13])
        merged = cache.merge(other)
        assert len(merged) == len(cache) + len(other)
        assert len(cache.merge(cache)) == len(cache)

    def test_merge_conflict(self, cache: TraceCache) -> None:
        other = TraceCache()
        other.add(2, 1, 5, 3, Reduction.GOOD)
        with pytest.raises(CacheIntegrityError):
            cache.merge(other)

    def test_open(self, cache: TraceCache, tmp_path: Path) -> None:
        assert len(TraceCache.open(None)) == 0
        assert len(TraceCache.open(tmp_path / "missing.txt")) == 0
        cache.save(tmp_path / "traces.txt")
        assert len(TraceCache.open(tmp_path / "traces.txt")) == len(cache)


class TestIntegrity:
    def write(self, tmp_path: Path, *records: str, header=None) -> Path:
        path = tmp_path / "traces.txt"
        header = TraceCache.header() if header is None else header
        path.write_text("\n".join([header, *records]) + "\n")
        return path

    def test_stale_header(self, tmp_path: Path) -> None:
        path = self.write(
            tmp_path, "2 1 5 -1 g", header="# torsionrank-cache version=0 polys=0"
        )
        with pytest.raises(CacheIntegrityError) as e:
            TraceCache.load(path)
        assert e.value.line == 1
        assert e.value.path == str(path)

    @pytest.mark.parametrize(
        "record", ["2 1 5 -1", "2 1 5 -1 x", "2 1 five -1 g", "2 1 5 -1 g extra"]
    )
    def test_malformed(self, tmp_path: Path, record: str) -> None:
        path = self.write(tmp_path, "2 2 5 -1 n", record)
        with pytest.raises(CacheIntegrityError) as e:
            TraceCache.load(path)
        assert e.value.line == 3

    def test_unsorted(self, tmp_path: Path) -> None:
        path = self.write(tmp_path, "2 1 7 -1 g", "2 1 5 -1 g")
        with pytest.raises(CacheIntegrityError) as e:
            TraceCache.load(path)
        assert e.value.line == 3
        assert "sorted" in e.value.reason

    def test_blank_lines(self, tmp_path: Path) -> None:
        path = self.write(tmp_path, "2 1 5 -1 g", "", "2 2 5 -1 n")
        assert len(TraceCache.load(path)) == 2


class TestResolveCachePath:
    def test_explicit(self, tmp_path: Path) -> None:
        with tmp_environ(TORSIONRANK_CACHE_DIR=str(tmp_path / "env")):
            assert resolve_cache_path(tmp_path / "a.txt") == tmp_path / "a.txt"

    def test_environment(self, tmp_path: Path) -> None:
        with tmp_environ(TORSIONRANK_CACHE_DIR=str(tmp_path)):
            assert resolve_cache_path() == tmp_path / "traces.txt"

    def test_none(self) -> None:
        with tmp_environ(TORSIONRANK_CACHE_DIR=""):
            assert resolve_cache_path() is None
