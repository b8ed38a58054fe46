import pytest

from torsionrank.core.security import LoadChecker


class TestLoadChecker:
    def test_cpu_count(self) -> None:
        assert isinstance(LoadChecker.cpu_count, int)
        assert LoadChecker().cpu_count > 0

    def test_default_workers(self) -> None:
        workers = LoadChecker().default_workers()
        assert workers == max(1, LoadChecker.cpu_count - 1)

    def test_requested_workers(self) -> None:
        assert LoadChecker().default_workers(3) == 3

    @pytest.mark.parametrize("requested", [0, -2])
    def test_invalid_workers(self, requested: int) -> None:
        with pytest.raises(ValueError):
            LoadChecker().default_workers(requested)
