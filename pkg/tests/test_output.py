"""Lossless JSON/CSV serialization and the display format."""

import json
from fractions import Fraction

import pytest

from dualtriad.output import OutputDocument, format_exact, parse_exact
from dualtriad.sequences import RootSequence
from dualtriad.triads import generate_named, lah_from_roots


def named_triangles():
    yield generate_named("pascal", 16)
    yield generate_named("q-gaussian", 16, q=2)
    yield generate_named("q-gaussian", 16, q=Fraction(1, 2))
    yield generate_named("catalan-shifted", 16)
    yield generate_named("catalan-triad", 16)
    yield generate_named("fibonomial", 16)
    yield generate_named("stirling1", 16)
    yield generate_named("eulerian", 16)
    yield lah_from_roots(RootSequence.arithmetic(), 16, params=(("roots", "0,1,2,…"),))


class TestExactStrings:
    def test_integers_and_fractions(self):
        assert format_exact(Fraction(40)) == "40"
        assert format_exact(Fraction(-3, 4)) == "-3/4"
        assert format_exact(7) == "7"
        assert parse_exact("40") == 40
        assert parse_exact("-3/4") == Fraction(-3, 4)

    def test_round_trip_is_identity(self):
        for v in (Fraction(0), Fraction(10**40), Fraction(-7, 13), Fraction(255, 256)):
            assert parse_exact(format_exact(v)) == v

    def test_rejects_inexact_text(self):
        for bad in ("1.5", "1e3", "", "x", "1/0", "--3", "3 / 4"):
            with pytest.raises(ValueError):
                parse_exact(bad)


class TestJsonDocuments:
    def test_schema_shape(self):
        tri = generate_named("q-gaussian", 2, q=2)
        doc = OutputDocument.from_values(tri.family, tri.params_dict(), tri.rows)
        data = json.loads(doc.to_json())
        assert list(data.keys()) == ["family", "params", "rows", "report"]
        assert data["family"] == "q-gaussian"
        assert data["params"] == {"q": "2"}
        assert data["rows"] == [["1"], ["1", "1"], ["1", "3", "1"]]
        assert data["report"] is None
        # every value is a string, never a native number
        assert all(isinstance(s, str) for row in data["rows"] for s in row)

    def test_round_trip_all_named_families(self):
        for tri in named_triangles():
            doc = OutputDocument.from_values(tri.family, tri.params_dict(), tri.rows)
            back = OutputDocument.from_json(doc.to_json())
            assert back == doc
            assert [tuple(row) for row in back.value_rows()] == list(tri.rows)

    def test_report_preserved(self):
        doc = OutputDocument(
            family="x", params={}, rows=[["1"]], report={"holds": "true"}
        )
        assert OutputDocument.from_json(doc.to_json()) == doc

    def test_malformed_rejected(self):
        with pytest.raises(ValueError):
            OutputDocument.from_json("[]")
        with pytest.raises(ValueError):
            OutputDocument.from_json('{"family": "f", "params": {}, "rows": [[1]], "report": null}')


class TestCsv:
    def test_round_trip_all_named_families(self):
        for tri in named_triangles():
            doc = OutputDocument.from_values(tri.family, tri.params_dict(), tri.rows)
            back = OutputDocument.rows_from_csv(doc.to_csv())
            assert [tuple(row) for row in back] == list(tri.rows)

    def test_no_padding(self):
        tri = generate_named("pascal", 2)
        doc = OutputDocument.from_values(tri.family, {}, tri.rows)
        assert doc.to_csv() == "1\n1,1\n1,2,1\n"


class TestPretty:
    def test_rows_are_centered(self):
        tri = generate_named("pascal", 3)
        doc = OutputDocument.from_values(tri.family, {}, tri.rows)
        lines = doc.to_pretty().splitlines()
        assert lines[-1] == "1 3 3 1"
        assert lines[0].strip() == "1"
        # centered: leading space on the narrow rows, none on the widest
        assert lines[0].startswith(" ") and not lines[-1].startswith(" ")

    def test_empty(self):
        assert OutputDocument(family="", params={}, rows=[]).to_pretty() == ""
