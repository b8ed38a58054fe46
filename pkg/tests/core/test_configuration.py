import shutil
from pathlib import Path
from unittest.mock import patch

import pytest

from torsionrank import PrimeRange, TorsionRankConfigurationError, config, configure
from torsionrank.core import TorsionRankParameterNameError

from ..conftest import tmp_environ


@pytest.fixture
def mock_home_dir(tmp_path_factory):
    home = tmp_path_factory.mktemp("username")
    default_root = "torsionrank.core.configuration.DefaultTorsionRankRoot"
    with patch("pathlib.Path.home", return_value=home), patch(
        default_root, home / ".torsionrank"
    ):
        yield
    config.reload()


@pytest.fixture
def dot_torsionrank_dir(mock_home_dir) -> Path:
    path = Path.home() / ".torsionrank"
    path.mkdir()
    return path


@pytest.fixture
def custom_root_dir(tmp_path_factory) -> Path:
    return tmp_path_factory.mktemp("root")


@pytest.mark.usefixtures("mock_home_dir")
class TestConfigure:

    expected_default_config = {
        "workers": 0,
        "output_digits": 12,
        "weights_primes": PrimeRange(5, 60),
        "census_tol": 1e-4,
        "census_local_primes": PrimeRange(5, 13),
        "rank_bounds_moments": [1, 2, 3, 4],
        "rank_bounds_tail": [23.0, 25.0],
        "verify_quick_lemma_primes": PrimeRange(5, 13),
    }
    expected_custom_config = {
        "workers": 3,
        "output_digits": 6,
        "weights_primes": PrimeRange(7, 29),
        "census_tol": 1e-3,
        "census_growth": 1.5,
        "census_x": {"2": 1000, "3": 2000},
        "rank_bounds_tail": [30.0],
    }

    def check(self, expected) -> None:
        for k, v in expected.items():
            assert config[k] == v, k

    def test_no_config(self, dot_torsionrank_dir: Path) -> None:
        with tmp_environ(TORSIONRANK_ROOT=""):
            config.reload()
            self.check(self.expected_default_config)
        assert not (dot_torsionrank_dir / "config.toml").exists()
        assert Path(config.path).parent.name == "defaults"

    def test_configure_no_config(self, dot_torsionrank_dir: Path) -> None:
        with tmp_environ(TORSIONRANK_ROOT=""):
            configure()
            self.check(self.expected_default_config)
        assert (dot_torsionrank_dir / "config.toml").exists()

    def test_configure_does_not_overwrite(
        self, data_dir: Path, dot_torsionrank_dir: Path
    ) -> None:
        shutil.copyfile(
            data_dir / "config_custom" / "config.toml",
            dot_torsionrank_dir / "config.toml",
        )
        with tmp_environ(TORSIONRANK_ROOT=""):
            configure()
            self.check(self.expected_custom_config)

    def test_config_in_home(self, data_dir: Path, dot_torsionrank_dir: Path) -> None:
        shutil.copyfile(
            data_dir / "config_custom" / "config.toml",
            dot_torsionrank_dir / "config.toml",
        )
        with tmp_environ(TORSIONRANK_ROOT=""):
            config.reload()
            self.check(self.expected_custom_config)

    def test_env_without_config_falls_back_to_home(
        self, data_dir: Path, dot_torsionrank_dir: Path, custom_root_dir: Path
    ) -> None:
        shutil.copyfile(
            data_dir / "config_custom" / "config.toml",
            dot_torsionrank_dir / "config.toml",
        )
        with tmp_environ(TORSIONRANK_ROOT=str(custom_root_dir)):
            config.reload()
            self.check(self.expected_custom_config)

    def test_env_wins(
        self, data_dir: Path, dot_torsionrank_dir: Path, custom_root_dir: Path
    ) -> None:
        shutil.copyfile(
            data_dir / "config_custom" / "config.toml",
            custom_root_dir / "config.toml",
        )
        shutil.copyfile(
            data_dir / "config_small" / "config.toml",
            dot_torsionrank_dir / "config.toml",
        )
        with tmp_environ(TORSIONRANK_ROOT=str(custom_root_dir)):
            config.reload()
            self.check(self.expected_custom_config)
            assert config.path == str(custom_root_dir / "config.toml")

    def test_invalid_prime_range(
        self, data_dir: Path, dot_torsionrank_dir: Path
    ) -> None:
        shutil.copyfile(
            data_dir / "invalid" / "config_bad_primes.toml",
            dot_torsionrank_dir / "config.toml",
        )
        with tmp_environ(TORSIONRANK_ROOT=""):
            with pytest.raises(TorsionRankConfigurationError):
                config.reload()

    def test_unparsable(self, data_dir: Path, dot_torsionrank_dir: Path) -> None:
        shutil.copyfile(
            data_dir / "invalid" / "config_unparsable.toml",
            dot_torsionrank_dir / "config.toml",
        )
        with tmp_environ(TORSIONRANK_ROOT=""):
            with pytest.raises(TorsionRankConfigurationError):
                config.reload()


class TestLookup:
    def test_flexible_lookup(self) -> None:
        assert config.census.tol == config.census_tol == config["census_tol"]
        assert config.verify.quick.lemma_primes == config.verify_quick_lemma_primes

    def test_inline_table_is_kept(self) -> None:
        assert isinstance(config.census.x, dict)
        assert int(config.census.x["2"]) > 0

    def test_view_reflects_reload(self) -> None:
        view = config.census
        config.reload()
        assert view.tol == config.census_tol

    def test_missing_parameter(self) -> None:
        with pytest.raises(TorsionRankParameterNameError):
            config.no_such_parameter
        with pytest.raises(KeyError):
            config["no_such_parameter"]
        assert config.get("no_such_parameter", 42) == 42

    def test_private_names_are_not_parameters(self) -> None:
        with pytest.raises(AttributeError):
            config._no_such_attribute

    def test_keys_and_items(self) -> None:
        assert len(config.keys()) > 0
        for k, v in config.items():
            assert config[k] == v
            assert k in config
