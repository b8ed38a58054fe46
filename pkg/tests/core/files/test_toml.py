from pathlib import Path

from tomlkit import parse

from torsionrank.core import toml


def test_read(data_dir: Path) -> None:
    from_path = toml.read(data_dir / "sample_toml_file.toml")
    from_str = toml.read(str(data_dir / "sample_toml_file.toml"))
    with (data_dir / "sample_toml_file.toml").open("r") as f:
        from_file = toml.read(f)
    assert from_path == from_str
    assert from_path == from_file


class TestFlatten:
    def test_flatten(self, data_dir: Path) -> None:
        flattened = toml.flatten(toml.read(data_dir / "sample_toml_file.toml"))
        assert flattened["workers"] == 2
        assert flattened["group"] == "2x4"
        assert flattened["moments"] == [1, 2, 3]
        assert flattened["weights_primes"] == "5..13"
        assert flattened["weights_digits"] == 6

    def test_nested(self) -> None:
        doc = parse(
            """
            [verify.quick]
            local_x = 1000
            [verify.full]
            local_x = 100000
            """
        )
        flattened = toml.flatten(doc)
        assert flattened == {
            "verify_quick_local_x": 1000,
            "verify_full_local_x": 100000,
        }

    def test_keep_inline_table(self, data_dir: Path) -> None:
        flattened = toml.flatten(toml.read(data_dir / "sample_toml_file.toml"))
        assert flattened["census_x"] == {"2": 1000, "3": 2000}

    def test_plain_dict(self) -> None:
        flattened = toml.flatten({"census": {"x": 1, "tol": 2}, "w": 3})
        assert flattened == {"census_x": 1, "census_tol": 2, "w": 3}

    def test_separator(self) -> None:
        assert toml.flatten({"a": {"b": 1}}, sep=".") == {"a.b": 1}

