import pytest

from cameral.lib.errors import InvalidCurveError, InvalidRootDatumError, UsageError
from cameral.lib.models import (
    CoverInput,
    CurveInput,
    ErrorReport,
    RunReport,
    cover_input,
    datum_input,
    parse_input,
)


def test_cover_length_is_validated():
    with pytest.raises(UsageError):
        parse_input(CoverInput, {"n": 2, "a": [1]})
    with pytest.raises(UsageError):
        parse_input(CoverInput, {"n": 0, "a": []})


def test_cover_input_accepts_rational_strings():
    spectral = cover_input({"n": 2, "a": ["1/2", -3]})
    assert spectral.n == 2


def test_datum_input():
    datum = datum_input({"rank": 1, "simple_roots": [[2]], "simple_coroots": [[1]]}, 100)
    assert datum.type_tag == "custom"
    with pytest.raises(InvalidRootDatumError):
        datum_input({"rank": 0}, 100)
    with pytest.raises(InvalidRootDatumError):
        datum_input({"rank": 2, "simple_roots": [[1, -1]], "simple_coroots": [[1, -1]], "type_tag": "SL", "n": 2}, 100)


def test_curve_input():
    curve = CurveInput(q=3, expression="x**5 + 2*x + 1").to_curve()
    assert curve.genus == 2
    assert CurveInput(q=5, f=[1, 0, 1, 1]).to_curve().genus == 1
    with pytest.raises(InvalidCurveError):
        CurveInput(q=3).to_curve()


def test_run_report_drops_empty_optionals():
    report = RunReport(command="rootdata", passed=True)
    assert "error" not in report.to_json()
    assert "duration_seconds" not in report.to_json()

    failed = RunReport(command="rank1", error=ErrorReport(kind="InvalidCurveError", message="q", exit_code=2))
    assert failed.to_json()["error"]["exit_code"] == 2
