"""Deterministic 12-significant-digit JSON emission."""

import math

import pytest

from entgram.serialize import dump_json, dumps_json, format_float


class TestFormatFloat:
    def test_integers_stay_short(self):
        assert format_float(0.0) == "0"
        assert format_float(-0.0) == "0"
        assert format_float(1.0) == "1"
        assert format_float(0.25) == "0.25"

    def test_twelve_significant_digits(self):
        assert format_float(math.log(2.0)) == "0.69314718056"
        assert format_float(1.0 / 3.0) == "0.333333333333"

    def test_round_trips_to_tolerance(self):
        x = 0.5232864164263098
        assert float(format_float(x)) == pytest.approx(x, abs=1e-12)

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            format_float(float("nan"))
        with pytest.raises(ValueError):
            format_float(float("inf"))


class TestDumps:
    def test_nested_document(self):
        doc = {"b": [1, 2.5], "a": {"x": True, "y": None}, "s": "t"}
        text = dumps_json(doc)
        assert text == dumps_json(doc)
        assert '"b": [1, 2.5]' in text

    def test_preserves_key_order(self):
        assert dumps_json({"z": 1, "a": 2}).index('"z"') < dumps_json(
            {"z": 1, "a": 2}
        ).index('"a"')

    def test_file_has_trailing_newline(self, tmp_path):
        path = tmp_path / "x.json"
        dump_json({"k": 1}, path)
        text = path.read_text()
        assert text.endswith("\n") and not text.endswith("\n\n")
