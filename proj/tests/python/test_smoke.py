import pytest

import charcount


def test_so5_multiplicative():
    c = charcount.count("SO5", 0, 3)
    assert c.polynomial.coefficients == (2, 12, 48, 12, 2)
    assert c.dimension == 4
    assert c.palindromic and not c.monic
    assert c.validity_modulus == 4
    assert str(c.polynomial) == "2q^4+12q^3+48q^2+12q+2"


def test_gl2_hand_results():
    assert charcount.count("GL2", 0, 4).polynomial.coefficients == (1, 4, 1)
    assert charcount.count("GL2", 1, 1, "add").polynomial.coefficients == (0, 0, 0, 1, 1)


def test_euler_matches_value_at_one():
    c = charcount.count("G2", 0, 3)
    assert charcount.euler("G2", 0, 3) == c.polynomial(1) == 350


def test_type_tables():
    assert len(charcount.g_types("SO5")) == 14
    assert len(charcount.g_types("G2")) == 18
    rows = charcount.lie_types("G2")
    assert len(rows) == 12
    assert all(r["weyl_order"] > 0 for r in rows)


def test_errors_carry_kind():
    with pytest.raises(charcount.CharcountError) as exc:
        charcount.count("GL2", 0, 2)
    assert exc.value.kind == "EmptyVariety"
    with pytest.raises(charcount.CharcountError):
        charcount.count("nonsense", 0, 3)


def test_check_and_reproduce():
    rep = charcount.check("SO5", 1, 3)
    assert rep["rows"]
    assert 9 in charcount.figures()
    fig = charcount.reproduce(9)
    assert fig["mismatched"] == 0
