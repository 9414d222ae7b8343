import json

from records import CheckResult, OutputRecord, all_passed, canonical_json


def test_canonical_json_sorts_and_compacts():
    assert canonical_json({"b": 1, "a": [1, "ℓ"]}) == '{"a":[1,"ℓ"],"b":1}'


def test_output_record_round_trip_is_byte_identical():
    record = OutputRecord(
        "volume",
        {"d": "3", "ell": "2", "a": "1"},
        "4",
        4.0,
        {"vertices": ["(1,0,0)", "(-1,0,0)"], "verdict": True},
    )
    text = record.to_canonical_json()
    restored = OutputRecord.from_canonical_json(text)
    assert restored == record
    assert restored.to_canonical_json() == text


def test_output_record_decimal_uses_shortest_repr():
    text = OutputRecord("dual-volume", {"d": "3"}, "10/3", 10 / 3).to_canonical_json()
    assert json.loads(text)["decimal"] == 3.3333333333333335
    assert '"decimal":3.3333333333333335' in text


def test_output_record_text():
    record = OutputRecord("volume", {"ell": "2", "d": "3"}, "4", 4.0, {"note": ["x", "y"]})
    assert record.to_text() == "volume d=3 ell=2\n  exact   = 4\n  decimal = 4.0\n  note = x, y"
    assert OutputRecord("fvector", {}, "12,24,14").to_text() == "fvector\n  exact   = 12,24,14"


def test_check_results():
    checks = [CheckResult("Bose determinant", True, "det = 4"), CheckResult("LP vertices", False)]
    assert checks[0].to_text().startswith("PASS  Bose determinant")
    assert checks[1].to_text() == "FAIL  LP vertices"
    assert not all_passed(checks)
    assert all_passed(checks[:1])
    assert CheckResult.from_dict(checks[0].to_dict()) == checks[0]
