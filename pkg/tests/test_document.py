import pytest

from cli_cases import FIXTURES, VALID
from linkednets import document as doc
from linkednets import fixtures as fx
from linkednets.smoothing import construct_monomial_smoothing


@pytest.mark.parametrize("name", VALID + ["circuit_violating"])
def test_round_trip(name):
    text = (FIXTURES / f"{name}.json").read_text()
    d = doc.loads(text)
    assert d.dumps() == text
    assert doc.loads(d.dumps()).dumps() == text


def test_round_trip_rational_functions(seg2):
    smooth, _ = construct_monomial_smoothing(seg2, fx.SEG2_H)
    text = doc.window_document(smooth, polygon=[(0, 0), (1, 0)]).dumps()
    d = doc.loads(text)
    assert d.dumps() == text
    assert d.net.arrows == smooth.arrows


def test_hull_document_expands_to_fixture(seg2):
    d = doc.load(FIXTURES / "seg2.json")
    N = d.window_net(radius=seg2.window.radius)
    assert N.vertices == seg2.vertices
    assert N.arrows == seg2.arrows


def test_window_document_needs_polygon_for_H():
    d = doc.loads(doc.window_document(fx.seg2()).dumps())
    with pytest.raises(doc.DocumentError):
        d.H


@pytest.mark.parametrize("text", [
    "[]",
    '{"format_version": 2}',
    '{"format_version": 1, "field": {"kind": "rationals"}, "n": 0, "mode": "hull"}',
    '{"format_version": 1, "field": {"kind": "rationals"}, "n": 1, "mode": "other"}',
    '{"format_version": 1, "field": {"kind": "rationals"}, "n": 1, "mode": "hull",'
    ' "hull": {"H": [[0, 0, 0]], "dims": [1], "cross_maps": []}}',
    '{"format_version": 1, "field": {"kind": "rationals"}, "n": 1, "mode": "hull",'
    ' "hull": {"H": [[0, 0], [1, 0]], "dims": [1, 1], "cross_maps": ['
    '{"source": [0, 0], "target": [1, 0], "matrix": [["x"]]}]}}',
])
def test_rejects_bad_documents(text):
    with pytest.raises(doc.DocumentError):
        doc.loads(text)


def test_canonical_dump_inlines_short_lists():
    text = doc.dumps({"b": [1, 2], "a": [[0, 0], [1, 0]]})
    assert text == '{\n "a": [[0, 0], [1, 0]],\n "b": [1, 2]\n}\n'
