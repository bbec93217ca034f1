import pytest

import grasspi


def test_power_identity_is_member():
    r = grasspi.check_identity("x1^9 - x1^3", 3)
    assert r["verdict"] == "member"
    assert r["witness"] is None


def test_variable_is_not_central():
    r = grasspi.check_central("x1", 3)
    assert r["verdict"] == "nonmember"
    assert r["witness"]["images"]["x1"] == [{"coeff": "1", "code": 1, "basis": [1]}]
    assert grasspi.reverify(r, "x1", 3)


def test_identity_witness_reverifies():
    r = grasspi.check_identity("x1^3 - x1", 3)
    assert r["verdict"] == "nonmember"
    assert grasspi.reverify(r, "x1^3 - x1", 3)


def test_canonical_form():
    assert grasspi.canonicalize("x2*x1^2", 3) == "x1^2*x2 + [x1,x2]*x1"


def test_extension_field_scalars():
    r = grasspi.check_identity("t*x1^8 - t*x1^2", 4)
    assert r["verdict"] == "member"
    assert r["params"]["modulus"] == [1, 1, 1]


def test_one_variable_division():
    r = grasspi.one_variable("x1^10 - x1^4", 3)
    assert r["verdict"] == "member"
    assert r["quotient"] == "x1"


def test_parse_error():
    with pytest.raises(grasspi.ParseError):
        grasspi.check_identity("x1 +", 3)


def test_quick_criterion():
    r = grasspi.run_criterion(2)
    assert r["passed"], r["failure"]
