from fractions import Fraction

import pytest
from hypothesis import given

from intdiff.algebra import H, Operator, d, e, integral, mul, x
from intdiff.errors import ParseError
from intdiff.syntax import (
    Generator,
    MatrixUnit,
    Power,
    Product,
    Scalar,
    Sum,
    ast_to_dict,
    parse,
    parse_operator,
    parse_polynomial,
    print_canonical,
)

from strategies import operators


def test_parse_examples():
    assert parse(1, "d1 int1") == Product((Generator("d", 1), Generator("int", 1)))
    assert parse(1, "H1^2 - 3/2 e1[0,0]") == Sum(
        (Power(Generator("H", 1), 2), Product((Scalar(Fraction(-3, 2)), MatrixUnit(1, 0, 0))))
    )
    assert parse_operator(1, "e1[2,5] e1[5,1]") == e(1, 1, 2, 1)


def test_ast_json():
    assert ast_to_dict(parse(1, "2 x1^3")) == {"Product": [{"Scalar": "2"}, {"Power": [{"Generator": ["x", 1]}, 3]}]}


@pytest.mark.parametrize(
    "n, text, expected",
    [
        (1, "d1*int1", lambda: Operator.scalar(1)),
        (1, "int1 d1", lambda: 1 - e(1, 1, 0, 0)),
        (1, "d1 int1^2", lambda: integral(1, 1)),
        (1, "(d1 int1)^2", lambda: Operator.scalar(1)),
        (1, "-d1", lambda: -d(1, 1)),
        (1, "-1/2 H1 + 1/2", lambda: Fraction(1, 2) * (1 - H(1, 1))),
        (1, "  x1   d1 ", lambda: H(1, 1) - 1),
        (1, "d1 - -1", lambda: d(1, 1) + 1),
        (1, "x1^0", lambda: Operator.scalar(1)),
        (1, "2 (d1 + int1) 3", lambda: 6 * (d(1, 1) + integral(1, 1))),
        (2, "x1 x2 - x2 x1", lambda: Operator.zero(2)),
        (2, "d2 int2 H1", lambda: H(2, 1)),
    ],
)
def test_evaluation(n, text, expected):
    assert parse_operator(n, text) == expected()


@pytest.mark.parametrize(
    "text, pos",
    [
        ("d1 +", 4),
        ("d1 )", 3),
        ("d2", 0),
        ("e1[0 0]", 5),
        ("q1", 0),
        ("1/0", 2),
        ("d", 0),
        ("H1^", 3),
        ("(d1", 3),
        ("e3[0,0]", 0),
    ],
)
def test_parse_errors_report_positions(text, pos):
    with pytest.raises(ParseError) as info:
        parse(1, text)
    assert info.value.position == pos


def test_print_examples():
    assert print_canonical(mul(integral(1, 1), d(1, 1))) == "1 - e1[0,0]"
    assert print_canonical(Operator.zero(2)) == "0"
    assert print_canonical(mul(integral(1, 1) ** 2, d(1, 1) ** 2)) == "1 - e1[0,0] - e1[1,1]"
    assert print_canonical(x(1, 1)) == "int1 H1"
    assert print_canonical(mul(H(1, 1), d(1, 1))) == "-d1 + d1 H1"
    assert print_canonical(-Fraction(3, 2) * mul(x(2, 1), d(2, 2))) == "-3/2 int1 H1 d2"


@given(operators(n=1, bound=3, max_terms=5))
def test_round_trip_n1(a):
    assert parse_operator(1, print_canonical(a)) == a


@given(operators(n=2, bound=3, max_terms=5))
def test_round_trip_n2(a):
    assert parse_operator(2, print_canonical(a)) == a


def test_polynomials():
    p = parse_polynomial(2, "x1^2 x2 - 1/3")
    assert str(p) == "-1/3 + x1^2 x2"
    with pytest.raises(ParseError):
        parse_polynomial(1, "d1")
    with pytest.raises(ParseError):
        parse_polynomial(1, "e1[0,0]")
