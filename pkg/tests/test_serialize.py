import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monotri import (
    InvalidInputError,
    ParseError,
    SignMatrix,
    TriangularArray,
    VerificationReport,
    deserialize,
    serialize,
)

from golden import TWOASM_5


def test_triangle_json_golden():
    t = TriangularArray(((4,),))
    assert serialize(t) == b'{"type": "triangle", "rows": [[4]]}'
    assert deserialize(serialize(t), "triangle") == t


def test_matrix_json_roundtrip():
    m = SignMatrix(TWOASM_5)
    assert deserialize(serialize(m), "matrix") == m


def test_matrix_csv():
    m = SignMatrix(((0, 1), (1, -1)))
    assert serialize(m, "csv") == b"0,1\n1,-1\n"
    assert deserialize(b"0,1\n1,-1\n", "matrix") == m


def test_matrix_text():
    m = SignMatrix(((0, 1), (1, -1)))
    assert serialize(m, "text") == b" 0  1\n 1 -1\n"


def test_triangle_text_shape():
    t = TriangularArray(((4,), (4, 5)))
    lines = serialize(t, "text").decode().splitlines()
    assert lines[-1].strip() == "4 5"
    assert lines[0].endswith("4")


def test_report_roundtrip():
    r = VerificationReport(
        identity_id="table",
        parameters={"n_max": 9},
        status="Verified",
        details=(("alpha at n=3", -1, -1), ("alpha at n=5", 3, 3)),
        elapsed_ms=1.25,
    )
    back = deserialize(serialize(r), "report")
    assert back == r
    csv_bytes = serialize(r, "csv")
    assert b"alpha at n=3,-1,-1" in csv_bytes
    text = serialize(r, "text").decode()
    assert "status: Verified" in text


def test_big_integers_survive():
    r = VerificationReport("x", {}, "Verified", (("big", 10**40, 10**40),), 0.0)
    back = deserialize(serialize(r), "report")
    assert back.details[0][1] == 10**40


def test_csv_rejected_for_triangles():
    with pytest.raises(InvalidInputError):
        serialize(TriangularArray(((1,),)), "csv")


def test_parse_errors_carry_location():
    with pytest.raises(ParseError, match="line 1"):
        deserialize(b"{not json", "triangle")
    with pytest.raises(ParseError, match="rows"):
        deserialize(b'{"type": "triangle"}', "triangle")
    with pytest.raises(ParseError, match="row 2 column 2"):
        deserialize(b"0,1\n1,x\n", "matrix")
    with pytest.raises(ParseError, match="expected type"):
        deserialize(b'{"type": "matrix", "entries": [[1]]}', "triangle")
    with pytest.raises(ParseError):
        deserialize(b'{"type": "triangle", "rows": [[1], [2]]}', "triangle")


def test_unknown_kind_and_format():
    with pytest.raises(InvalidInputError):
        deserialize(b"{}", "widget")
    with pytest.raises(InvalidInputError):
        serialize(TriangularArray(((1,),)), "yaml")


@st.composite
def triangles(draw):
    n = draw(st.integers(1, 6))
    rows = tuple(
        tuple(draw(st.integers(-99, 99)) for _ in range(i)) for i in range(1, n + 1)
    )
    return TriangularArray(rows)


@st.composite
def matrices(draw):
    r = draw(st.integers(1, 6))
    c = draw(st.integers(0, 5))
    entries = tuple(
        tuple(draw(st.sampled_from((-1, 0, 1))) for _ in range(c)) for _ in range(r)
    )
    return SignMatrix(entries)


@st.composite
def reports(draw):
    details = tuple(
        (draw(st.text(max_size=12)), draw(st.integers()), draw(st.integers()))
        for _ in range(draw(st.integers(0, 4)))
    )
    return VerificationReport(
        identity_id=draw(st.text(min_size=1, max_size=8)),
        parameters={"n": draw(st.integers(0, 99))},
        status=draw(st.sampled_from(("Verified", "Failed", "Skipped"))),
        details=details,
        elapsed_ms=draw(st.floats(0, 1e6, allow_nan=False)),
    )


@settings(max_examples=50)
@given(triangles())
def test_triangle_roundtrip_random(t):
    assert deserialize(serialize(t), "triangle") == t


@settings(max_examples=50)
@given(matrices())
def test_matrix_roundtrip_random(m):
    assert deserialize(serialize(m), "matrix") == m
    if m.cols > 0:
        assert deserialize(serialize(m, "csv"), "matrix") == m


@settings(max_examples=50)
@given(reports())
def test_report_roundtrip_random(r):
    assert deserialize(serialize(r), "report") == r


def test_json_is_plain_decimal():
    m = SignMatrix(((1, -1, 0), (0, 1, 0), (0, 0, 1)))
    payload = json.loads(serialize(m))
    assert payload == {"type": "matrix", "entries": [[1, -1, 0], [0, 1, 0], [0, 0, 1]]}
