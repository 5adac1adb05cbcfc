from fractions import Fraction as F

import gmpy2
import pytest
from hypothesis import given, strategies as st

from psbv.errors import ExactArithmeticError, ValidationError
from psbv.exact import (
    GAMMA,
    LinearForm,
    floor_power,
    form_eval,
    format_rational,
    int_nth_root_ceil,
    int_nth_root_floor,
    parse_rational,
    rat_arith,
)

rationals = st.fractions(max_denominator=10**6).filter(lambda x: abs(x) < 10**9)
nonzero = rationals.filter(lambda x: x != 0)


def test_rat_arith_examples():
    assert rat_arith(rat_arith(F(443, 55), 1, "mul"), F(173, 22), "sub") == F(21, 110)
    assert rat_arith(F(7, 3), 0, "add") == F(7, 3)
    assert rat_arith(F(13, 84), F(55, 84), "add") == F(17, 21)
    assert rat_arith(F(1, 2), F(1, 3), "cmp") == 1
    assert rat_arith(F(1, 3), F(2, 6), "cmp") == 0


def test_division_by_zero_is_reported():
    with pytest.raises(ExactArithmeticError):
        rat_arith(1, 0, "div")
    with pytest.raises(ValidationError):
        rat_arith(1, 1, "pow")


@given(rationals, nonzero)
def test_field_identities(x, y):
    assert rat_arith(rat_arith(x, y, "add"), y, "sub") == x
    assert rat_arith(rat_arith(x, y, "mul"), y, "div") == x
    r = rat_arith(x, y, "div")
    assert r.denominator >= 1


@given(rationals, rationals, rationals)
def test_cmp_is_total_order(x, y, z):
    c = lambda a, b: rat_arith(a, b, "cmp")
    assert c(x, y) == -c(y, x)
    if c(x, y) <= 0 and c(y, z) <= 0:
        assert c(x, z) <= 0


def test_parse_and_format():
    assert parse_rational("99/100") == F(99, 100)
    assert parse_rational("1.5") == F(3, 2)
    assert parse_rational(" 7 ") == 7
    assert format_rational(3) == "3/1"
    assert format_rational(F(-2, 4)) == "-1/2"
    for bad in ("x/y", "1/0", "", "nan"):
        with pytest.raises(ValidationError):
            parse_rational(bad)


def test_int_nth_root_examples():
    assert int_nth_root_ceil(8, 3) == 2
    assert int_nth_root_ceil(9, 3) == 3
    n = 1025**9
    assert 512**10 < n <= 513**10
    assert int_nth_root_ceil(n, 10) == 513
    assert int_nth_root_ceil(0, 5) == 0
    assert int_nth_root_ceil(1, 5) == 1
    assert int_nth_root_ceil(12345, 1) == 12345


@given(st.integers(min_value=1, max_value=10**400), st.integers(min_value=1, max_value=120))
def test_int_nth_root_bracket(n, v):
    m = int_nth_root_ceil(n, v)
    assert (m - 1) ** v < n <= m**v
    # independent route: GMP's integer root
    root, exact = gmpy2.iroot(n, v)
    assert int_nth_root_floor(n, v) == int(root)
    assert m == int(root) + (0 if exact else 1)


def test_floor_power_exact():
    assert floor_power(10**6, F(607, 5500)) == 4
    assert floor_power(1024, F(9, 10)) == 512
    assert floor_power(1023, F(9, 10)) == 511


def test_form_eval_examples():
    assert form_eval(LinearForm(), F(3, 7), 5, -2) == 0
    eq2 = F(443, 55) * GAMMA - F(173, 22)
    assert form_eval(eq2, F(99, 100), 0, 0) == F(607, 5500)
    assert form_eval(3 - 2 * GAMMA, F(49, 50), 0, 0) == F(26, 25)


forms = st.builds(LinearForm, rationals, rationals, rationals, rationals)


@given(forms, rationals, rationals, rationals, rationals, rationals, rationals)
def test_form_eval_is_affine(f, g1, t1, m1, g2, t2, m2):
    mid = f((g1 + g2) / 2, (t1 + t2) / 2, (m1 + m2) / 2)
    assert mid == (f(g1, t1, m1) + f(g2, t2, m2)) / 2


def test_form_equality_is_coefficientwise():
    assert LinearForm(1, 2, 3, 4) == LinearForm(F(2, 2), 2, 3, 4)
    assert LinearForm(1, 2, 3, 4) != LinearForm(1, 2, 3, 5)
