from fractions import Fraction
from pathlib import Path

import numpy as np
import pandas as pd

from torsionrank.recorders import TableWriter, format_value


class TestFormatValue:
    def test_values(self) -> None:
        assert format_value(Fraction(7, 300)) == "7/300"
        assert format_value(1 / 3) == "0.333333333333"
        assert format_value(1 / 3, digits=3) == "0.333"
        assert format_value(np.int64(5)) == "5"
        assert format_value(np.bool_(True)) == "True"
        assert format_value("2x2") == "2x2"


class TestTableWriter:
    def test_rows(self, data_root: Path) -> None:
        writer = TableWriter()
        writer.start_recording(data_root)
        rows = [{"p": 5, "density": 0.5}, {"p": 7, "density": Fraction(1, 3)}]
        assert writer.append("densities.tsv", rows)
        writer.stop_recording()

        text = (data_root / "densities.tsv").read_text()
        assert text.splitlines() == ["p\tdensity", "5\t0.5", "7\t1/3"]

    def test_frame(self, data_root: Path) -> None:
        writer = TableWriter()
        writer.start_recording(data_root)
        assert writer.append("frame.tsv", pd.DataFrame({"a": [1, 2]}))
        writer.stop_recording()
        assert (data_root / "frame.tsv").read_text().splitlines() == ["a", "1", "2"]

    def test_name_collision(self, data_root: Path) -> None:
        writer = TableWriter()
        writer.start_recording(data_root)
        writer.append("t.tsv", [{"x": 1}])
        writer.append("t.tsv", [{"x": 2}])
        written = list(writer.written)
        writer.stop_recording()
        assert written == [data_root / "t.tsv", data_root / "t(1).tsv"]

    def test_rejects_other_data(self, data_root: Path) -> None:
        writer = TableWriter()
        writer.start_recording(data_root)
        assert not writer.append("summary.json", [{"x": 1}])
        assert not writer.append("t.tsv", {"x": 1})
        writer.stop_recording()
        assert not writer.append("t.tsv", [{"x": 1}])

    def test_rerun_overwrites(self, data_root: Path) -> None:
        writer = TableWriter()
        writer.start_recording(data_root)
        writer.append("t.tsv", [{"x": 1}])
        writer.stop_recording()
        writer.start_recording(data_root)
        writer.append("t.tsv", [{"x": 2}])
        written = list(writer.written)
        writer.stop_recording()
        assert written == [data_root / "t.tsv"]
        assert (data_root / "t.tsv").read_text().splitlines() == ["x", "2"]
        assert not (data_root / "t(1).tsv").exists()
