import pytest
from hypothesis import given

from conftest import ideals
from shiftlab.errors import ParseError
from shiftlab.monomial import MonomialIdeal
from shiftlab.syntax import format_ideal, format_monomial, parse_ideal, parse_monomial


def test_running_example():
    I = parse_ideal("(x^2, y^2, x*y*z)")
    assert I == MonomialIdeal(3, ((2, 0, 0), (0, 2, 0), (1, 1, 1)))
    assert format_ideal(I) == "(x^2, y^2, x*y*z)"


def test_indexed_variables_and_ambient():
    I = parse_ideal("(x1*x4^2)")
    assert I.n == 4 and I.gens == ((1, 0, 0, 2),)
    assert format_ideal(I) == "(x1*x4^2)"
    assert parse_ideal("(x)", 3).n == 3
    with pytest.raises(ParseError):
        parse_ideal("(x5)", 3)


def test_wrappers():
    assert len(parse_ideal("B(x1*x2*x5, x3^3)")) == 14
    assert parse_ideal("E(3; 1-2, 2-3)").gens == ((1, 1, 0), (0, 1, 1))
    assert parse_ideal("C(3; 1-2, 2-3)").gens == ((0, 1, 0), (1, 0, 1))
    assert parse_ideal("Bc(x2*x3; 1, 1, 1)").gens == ((1, 1, 0), (1, 0, 1), (0, 1, 1))


def test_zero_and_unit():
    assert parse_ideal("()").is_zero()
    assert parse_ideal("(0)", 2).is_zero()
    assert parse_ideal("(1, x)").is_unit()


def test_errors_carry_position():
    with pytest.raises(ParseError) as exc:
        parse_ideal("(x^2, y^)")
    assert exc.value.position == 8
    with pytest.raises(ParseError):
        parse_ideal("Bc(x1^2; 1, 1)")
    with pytest.raises(ParseError):
        parse_ideal("(x) junk")
    with pytest.raises(ParseError):
        parse_ideal("E(3; 1-4)")


def test_monomials():
    assert parse_monomial("x*y^3", 3) == (1, 3, 0)
    assert format_monomial((0, 0)) == "1"


@given(ideals(n_max=6))
def test_round_trip(I):
    assert parse_ideal(format_ideal(I), I.n) == I
