import io
import json
import xml.etree.ElementTree as ET

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diact import from_coefficients
from diact.csvio import (
    ORIENTATION_NOTE,
    format_number,
    parse_matrix_csv,
    read_vector_csv,
    write_matrix_csv,
    write_vector_csv,
)
from diact.errors import CsvFormatError
from diact.heatmap import colour, render_heatmap
from diact.report import dumps, new_report, normalise

SVG = "{http://www.w3.org/2000/svg}"


@settings(max_examples=50, deadline=None)
@given(st.lists(st.floats(-1e6, 1e6, allow_nan=False), min_size=4, max_size=4))
def test_csv_round_trip_at_twelve_digits(vals):
    m = np.array(vals).reshape(2, 2)
    back = parse_matrix_csv(write_matrix_csv(m, ["a", "b"], ["a", "b"])).values
    assert np.array_equal(back, np.array([[float(format_number(v)) for v in row] for row in m]))
    assert np.allclose(back, m, rtol=1e-11, atol=0)


def test_header_comment_and_quoted_labels():
    text = write_matrix_csv(np.eye(2), ["x, y", "z"], ["x, y", "z"])
    assert text.startswith(f"# {ORIENTATION_NOTE}\n")
    m = parse_matrix_csv(text)
    assert m.row_labels == ("x, y", "z")


def test_negative_zero_written_as_zero():
    assert format_number(-0.0) == "0"


@pytest.mark.parametrize("text", [
    ",a,b\na,1\nb,1,2\n",
    ",a\na,one\n",
    ",a\na,nan\n",
    "# only a comment\n",
    ",a\n",
])
def test_malformed_csv(text):
    with pytest.raises(CsvFormatError):
        parse_matrix_csv(text)


def test_vectors_either_orientation():
    col = write_vector_csv([1.0, 2.0], ["a", "b"])
    assert read_vector_csv(io.StringIO(col))[0].tolist() == [1.0, 2.0]
    row = ",a,b\nv,3,4\n"
    assert read_vector_csv(io.StringIO(row))[0].tolist() == [3.0, 4.0]
    with pytest.raises(CsvFormatError):
        read_vector_csv(io.StringIO(",a,b\na,1,2\nb,3,4\n"))


def test_report_is_deterministic_and_rounded():
    s = from_coefficients([[0.1, 0.2], [0.3, 0.1]], [1.0, 2.0])
    r1, r2 = dumps(new_report(s, extra=np.array([1 / 3]))), dumps(new_report(s, extra=np.array([1 / 3])))
    assert r1 == r2
    data = json.loads(r1)
    assert data["extra"] == [0.333333333333]
    assert data["system"]["viability"]["hawkins_simon_minors_positive"] is True
    assert normalise(-1e-20) == -1e-20 and normalise(np.float64(0.0)) == 0.0


def test_heatmap_structure():
    vals = np.array([[0.0, 1.0, 0.5], [0.2, 0.0, 0.0], [0.0, 0.0, 2.0]])
    names = ["A & B", "<c>", "d"]
    root = ET.fromstring(render_heatmap(vals, names, names, title="t"))
    cells = [e for e in root.iter(f"{SVG}rect") if e.get("class") == "cell"]
    labels = [e for e in root.iter(f"{SVG}text") if e.get("class") == "label"]
    assert len(cells) == 9 and len(labels) == 6
    assert {e.text for e in labels} == set(names)
    meta = json.loads(root.find(f"{SVG}metadata").text)
    assert meta["domain"] == [0.0, 2.0]


def test_colour_ramp_is_linear():
    assert colour(0, 1) == "#ffffff"
    assert colour(1, 1) == "#08306b"
    assert colour(-5, 1) == "#ffffff"
    assert colour(0.5, 1) == "#8498b5"
    assert colour(1, 0) == "#ffffff"
