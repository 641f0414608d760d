import pytest
from hypothesis import given, strategies as st

from tricross import tcd
from tricross.drawing import validate
from tricross.graph import build_complete_multipartite
from tricross.search import search

EXPECTED = {"k22": 0, "petersen": 1, "k33": 1, "k43": 1, "k63": 2, "k64": 4, "k3111": 1, "k4111": 1, "k6111": 2,
            "k331": 1, "k321": 1, "k421": 1, "k621": 2}


def test_bundle_is_complete(data_dir):
    assert {f.stem for f in data_dir.glob("*.tcd")} == set(EXPECTED)


def test_bundled_round_trip_byte_identical(data_dir):
    for f in sorted(data_dir.glob("*.tcd")):
        text = f.read_text()
        dr = tcd.parse(text)
        assert tcd.serialize(dr) == text, f.name
        assert tcd.parse(tcd.serialize(dr)) == dr


def test_bundled_record_provenance(bundled):
    for name, dr in bundled.items():
        meta = dict(dr.meta)
        assert "search" in meta and meta["found_k"] == str(EXPECTED[name]), name


def test_docstring_example_parses():
    block = tcd.__doc__.split("::")[1].split("``graph``")[0]
    text = "\n".join(line.strip() for line in block.strip().splitlines()) + "\n"
    dr = tcd.parse(text)
    assert dr.k == 1 and validate(dr).accepted


def test_comments_and_blank_lines_ignored(bundled):
    text = tcd.serialize(bundled["k33"])
    noisy = "# a comment\n\n" + text.replace("\ncross", "\n# note\ncross")
    assert tcd.parse(noisy) == bundled["k33"]


@pytest.mark.parametrize("text,msg", [
    ("", "header"),
    ("tcd 2\nend\n", "header"),
    ("tcd 1\ngraph parts 3 3\n", "truncated"),
    ("tcd 1\nend\n", "no graph"),
    ("tcd 1\ngraph parts 3 3\ngraph parts 2 2\nend\n", "twice"),
    ("tcd 1\ngraph parts 3 3\nbogus 1\nend\n", "unknown declaration"),
    ("tcd 1\ngraph parts 3 3\ncross 1 0 4 8\nend\n", "crossing ids"),
    ("tcd 1\ngraph parts 3 3\nrot v9 0.3\nend\n", "unknown vertex"),
    ("tcd 1\ngraph parts 3 3\nrot v0 0:3\nend\n", "bad dart"),
    ("tcd 1\ngraph parts 3 3\npath 40 0\nend\n", "unknown edge"),
    ("tcd 1\ngraph parts 3 3\ncross zero 1\nend\n", "malformed"),
    ("tcd 1\ngraph shape 3\nend\n", "unknown graph kind"),
    ("tcd 1\ngraph parts 3 3\nedge 0 0 3\nend\n", "only allowed"),
])
def test_parse_errors(text, msg):
    with pytest.raises(tcd.TcdError, match=msg):
        tcd.parse(text)


def test_named_graph_round_trip(bundled):
    dr = bundled["petersen"]
    text = tcd.serialize(dr)
    assert "graph edges petersen 10" in text
    assert tcd.parse(text) == dr


def test_parts_are_normalized():
    text = "tcd 1\ngraph parts 1 2 2\nend\n"
    dr = tcd.parse(text)
    assert dr.base.spec.parts == (2, 2, 1)
    assert "graph parts 2 2 1" in tcd.serialize(dr)


@given(st.sampled_from([(3, 3), (4, 3), (3, 2, 1), (2, 2, 2), (3, 1, 1, 1), (4, 2, 1)]))
def test_search_output_round_trips(parts):
    out = search(build_complete_multipartite(parts), 0, 1)
    text = tcd.serialize(out.certificate)
    assert tcd.serialize(tcd.parse(text)) == text
    assert validate(tcd.parse(text)) == validate(out.certificate)


def test_dump_and_load(tmp_path, bundled):
    path = tmp_path / "x.tcd"
    tcd.dump(bundled["k63"], path)
    assert tcd.load(path) == bundled["k63"]
